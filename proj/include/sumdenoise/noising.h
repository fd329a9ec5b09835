// Copyright 2026 The sumdenoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUMDENOISE_NOISING_H_
#define SUMDENOISE_NOISING_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumdenoise/random.h"
#include "sumdenoise/text.h"

namespace sumdenoise {

// Probability of noising exactly k sentences, for k = 0..N.
class NoiseDistribution {
 public:
  // Throws Error(kInvalidDistribution) unless probs is non-empty,
  // non-negative and sums to 1 within 1e-9.
  explicit NoiseDistribution(std::vector<double> probs);

  // [0.15, 0.85]: ~15% of summaries untouched, ~85% with one noisy sentence.
  static NoiseDistribution Default();

  const std::vector<double>& probs() const { return probs_; }
  std::size_t max_count() const { return probs_.size() - 1; }

 private:
  std::vector<double> probs_;
};

enum class NoiseType { kRepeat, kReplace, kExtra, kMixture };

std::string_view NoiseTypeName(NoiseType type);
std::optional<NoiseType> ParseNoiseType(std::string_view name);

// Single-sentence rewrite applied to sentences inserted by Extra noise.
class Paraphraser {
 public:
  virtual ~Paraphraser() = default;
  virtual TokenizedSentence Paraphrase(const TokenizedSentence& sentence,
                                       Rng& rng) const = 0;
};

class IdentityParaphraser final : public Paraphraser {
 public:
  TokenizedSentence Paraphrase(const TokenizedSentence& sentence,
                               Rng& rng) const override;
};

// Drops one whitespace unit, never the first or the last. Sentences with
// fewer than three units are returned unchanged.
class LexicalDropParaphraser final : public Paraphraser {
 public:
  TokenizedSentence Paraphrase(const TokenizedSentence& sentence,
                               Rng& rng) const override;
};

// "identity" or "lexical"; nullptr for anything else.
std::unique_ptr<Paraphraser> MakeParaphraser(std::string_view name);

struct NoisedDoc {
  SummaryDoc doc;
  // Positions in `doc` holding noise.
  std::vector<std::size_t> noised_indices;
};

struct NoisyRecord {
  std::string source_id;
  SummaryDoc noisy;
  SummaryDoc clean;
  NoiseType noise_type = NoiseType::kRepeat;  // never kMixture
  std::vector<std::size_t> noised_indices;
  std::size_t variant_index = 0;
  std::uint64_t seed = 0;
};

struct ArticleSummaryPair {
  SummaryDoc article;
  SummaryDoc summary;
  std::string source_id;
};

struct GenerationDiagnostic {
  std::string source_id;
  std::size_t variant_index = 0;
  std::string message;
};

struct GenerationResult {
  std::vector<NoisyRecord> records;
  std::vector<GenerationDiagnostic> skipped;
};

struct GenerationOptions {
  std::size_t variants_per_summary = 3;
  std::size_t workers = 1;
};

std::size_t sample_noise_count(const NoiseDistribution& dist, Rng& rng);

// Appends k sentences of `clean`, drawn without replacement while k <= |clean|
// and with replacement beyond that.
NoisedDoc apply_repeat(const SummaryDoc& clean, std::size_t k, Rng& rng);

// Index of the article sentence most similar to `sentence`; lowest index wins
// ties.
std::size_t closest_sentence(const TokenizedSentence& sentence,
                             const SummaryDoc& article);

// Replaces k distinct summary sentences in place by their closest article
// sentence.
NoisedDoc apply_replace(const SummaryDoc& clean, const SummaryDoc& article,
                        std::size_t k, Rng& rng);

// Inserts k paraphrased article sentences that are not the closest match of
// any summary sentence, each placed before the first summary sentence aligned
// to a later article position.
NoisedDoc apply_extra(const SummaryDoc& clean, const SummaryDoc& article,
                      std::size_t k, Rng& rng, const Paraphraser& paraphraser);

// Samples k from dist and applies one concrete noise type, all from `seed`.
NoisedDoc apply_noise(NoiseType type, const SummaryDoc& clean,
                      const SummaryDoc& article, const NoiseDistribution& dist,
                      std::uint64_t seed, const Paraphraser& paraphraser);

// Concrete type used for a Mixture record with the given seed.
NoiseType mixture_component(std::uint64_t seed);

// Emits variants_per_summary records per pair, in input order. Per-record
// failures are collected in `skipped` instead of aborting the run. Output is
// identical for any worker count.
GenerationResult generate_noisy_dataset(
    const std::vector<ArticleSummaryPair>& pairs, NoiseType type,
    const NoiseDistribution& dist, std::uint64_t base_seed,
    const Paraphraser& paraphraser, const GenerationOptions& options = {});

}  // namespace sumdenoise

#endif  // SUMDENOISE_NOISING_H_
