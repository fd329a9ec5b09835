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

#include "sumdenoise/noising.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sumdenoise/errors.h"
#include "sumdenoise/parallel.h"

namespace sumdenoise {
namespace {

constexpr double kDistributionTolerance = 1e-9;

// Salt separating the Mixture type draw from the record's noise stream.
constexpr std::uint64_t kMixtureSalt = 0x6d69787475726521ULL;

void RequireNonEmpty(const SummaryDoc& doc, std::string_view what) {
  if (doc.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                std::string(what) + " '" + doc.source_id + "' is empty");
  }
}

}  // namespace

NoiseDistribution::NoiseDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "no probabilities given");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "probability " + std::to_string(p) + " is not >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDistributionTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << sum << ", expected 1";
    throw Error(ErrorCode::kInvalidDistribution, msg.str());
  }
}

NoiseDistribution NoiseDistribution::Default() {
  return NoiseDistribution({0.15, 0.85});
}

std::string_view NoiseTypeName(NoiseType type) {
  switch (type) {
    case NoiseType::kRepeat: return "repeat";
    case NoiseType::kReplace: return "replace";
    case NoiseType::kExtra: return "extra";
    case NoiseType::kMixture: return "mixture";
  }
  return "unknown";
}

std::optional<NoiseType> ParseNoiseType(std::string_view name) {
  for (NoiseType t : {NoiseType::kRepeat, NoiseType::kReplace,
                      NoiseType::kExtra, NoiseType::kMixture}) {
    if (NoiseTypeName(t) == name) return t;
  }
  return std::nullopt;
}

TokenizedSentence IdentityParaphraser::Paraphrase(
    const TokenizedSentence& sentence, Rng& /*rng*/) const {
  return sentence;
}

TokenizedSentence LexicalDropParaphraser::Paraphrase(
    const TokenizedSentence& sentence, Rng& rng) const {
  std::istringstream in(sentence.raw());
  std::vector<std::string> units;
  for (std::string unit; in >> unit;) units.push_back(std::move(unit));
  if (units.size() < 3) return sentence;
  const std::size_t drop = 1 + uniform_index(rng, units.size() - 2);
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i == drop) continue;
    if (!out.empty()) out.push_back(' ');
    out += units[i];
  }
  try {
    return tokenize(out);
  } catch (const Error&) {
    // Only punctuation survived the drop.
    return sentence;
  }
}

std::unique_ptr<Paraphraser> MakeParaphraser(std::string_view name) {
  if (name == "identity") return std::make_unique<IdentityParaphraser>();
  if (name == "lexical") return std::make_unique<LexicalDropParaphraser>();
  return nullptr;
}

std::size_t sample_noise_count(const NoiseDistribution& dist, Rng& rng) {
  const double u = uniform01(rng);
  double cumulative = 0.0;
  const auto& probs = dist.probs();
  for (std::size_t k = 0; k < probs.size(); ++k) {
    cumulative += probs[k];
    if (u < cumulative) return k;
  }
  // Rounding left u above the running sum; return the last non-zero mass.
  for (std::size_t k = probs.size(); k-- > 0;) {
    if (probs[k] > 0.0) return k;
  }
  return 0;
}

NoisedDoc apply_repeat(const SummaryDoc& clean, std::size_t k, Rng& rng) {
  RequireNonEmpty(clean, "summary");
  NoisedDoc out{clean, {}};
  std::vector<std::size_t> picks;
  if (k <= clean.size()) {
    picks = sample_without_replacement(rng, clean.size(), k);
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      picks.push_back(uniform_index(rng, clean.size()));
    }
  }
  for (std::size_t pick : picks) {
    out.noised_indices.push_back(out.doc.size());
    out.doc.sentences.push_back(clean.sentences[pick]);
  }
  return out;
}

std::size_t closest_sentence(const TokenizedSentence& sentence,
                             const SummaryDoc& article) {
  RequireNonEmpty(article, "article");
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t i = 0; i < article.size(); ++i) {
    const double score = sentence_similarity(sentence, article.sentences[i]);
    if (score > best_score) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

NoisedDoc apply_replace(const SummaryDoc& clean, const SummaryDoc& article,
                        std::size_t k, Rng& rng) {
  RequireNonEmpty(clean, "summary");
  RequireNonEmpty(article, "article");
  if (k > clean.size()) {
    throw Error(ErrorCode::kInvalidNoiseCount,
                "cannot replace " + std::to_string(k) + " of " +
                    std::to_string(clean.size()) + " sentences");
  }
  NoisedDoc out{clean, sample_without_replacement(rng, clean.size(), k)};
  std::sort(out.noised_indices.begin(), out.noised_indices.end());
  for (std::size_t pos : out.noised_indices) {
    out.doc.sentences[pos] =
        article.sentences[closest_sentence(clean.sentences[pos], article)];
  }
  return out;
}

NoisedDoc apply_extra(const SummaryDoc& clean, const SummaryDoc& article,
                      std::size_t k, Rng& rng, const Paraphraser& paraphraser) {
  RequireNonEmpty(clean, "summary");
  RequireNonEmpty(article, "article");
  if (k == 0) return NoisedDoc{clean, {}};

  std::vector<std::size_t> aligned(clean.size());
  std::vector<bool> matched(article.size(), false);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    aligned[i] = closest_sentence(clean.sentences[i], article);
    matched[aligned[i]] = true;
  }
  std::vector<std::size_t> candidates;
  for (std::size_t e = 0; e < article.size(); ++e) {
    if (!matched[e]) candidates.push_back(e);
  }
  if (k > candidates.size()) {
    throw Error(ErrorCode::kInsufficientArticle,
                "need " + std::to_string(k) + " unmatched article sentences, " +
                    "have " + std::to_string(candidates.size()));
  }
  std::vector<std::size_t> extras;
  for (std::size_t c : sample_without_replacement(rng, candidates.size(), k)) {
    extras.push_back(candidates[c]);
  }
  // Paraphrase in draw order so the rng stream does not depend on sorting.
  std::vector<std::pair<std::size_t, TokenizedSentence>> inserts;
  for (std::size_t e : extras) {
    inserts.emplace_back(e, paraphraser.Paraphrase(article.sentences[e], rng));
  }
  std::sort(inserts.begin(), inserts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  NoisedDoc out;
  out.doc.source_id = clean.source_id;
  auto next = inserts.begin();
  for (std::size_t i = 0; i < clean.size(); ++i) {
    while (next != inserts.end() && aligned[i] > next->first) {
      out.noised_indices.push_back(out.doc.size());
      out.doc.sentences.push_back(next->second);
      ++next;
    }
    out.doc.sentences.push_back(clean.sentences[i]);
  }
  for (; next != inserts.end(); ++next) {
    out.noised_indices.push_back(out.doc.size());
    out.doc.sentences.push_back(next->second);
  }
  return out;
}

NoiseType mixture_component(std::uint64_t seed) {
  Rng rng(splitmix64(seed ^ kMixtureSalt));
  constexpr NoiseType kComponents[] = {NoiseType::kRepeat, NoiseType::kReplace,
                                       NoiseType::kExtra};
  return kComponents[uniform_index(rng, 3)];
}

NoisedDoc apply_noise(NoiseType type, const SummaryDoc& clean,
                      const SummaryDoc& article, const NoiseDistribution& dist,
                      std::uint64_t seed, const Paraphraser& paraphraser) {
  if (type == NoiseType::kMixture) type = mixture_component(seed);
  Rng rng(seed);
  const std::size_t k = sample_noise_count(dist, rng);
  switch (type) {
    case NoiseType::kRepeat:
      return apply_repeat(clean, k, rng);
    case NoiseType::kReplace:
      return apply_replace(clean, article, k, rng);
    case NoiseType::kExtra:
      return apply_extra(clean, article, k, rng, paraphraser);
    case NoiseType::kMixture:
      break;
  }
  return NoisedDoc{clean, {}};
}

GenerationResult generate_noisy_dataset(
    const std::vector<ArticleSummaryPair>& pairs, NoiseType type,
    const NoiseDistribution& dist, std::uint64_t base_seed,
    const Paraphraser& paraphraser, const GenerationOptions& options) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no article/summary pairs");
  }
  const std::size_t variants = options.variants_per_summary;
  const std::size_t total = pairs.size() * variants;
  std::vector<std::optional<NoisyRecord>> slots(total);
  std::vector<std::optional<GenerationDiagnostic>> failures(total);

  parallel_for(total, options.workers, [&](std::size_t slot) {
    const ArticleSummaryPair& pair = pairs[slot / variants];
    NoisyRecord record;
    record.source_id = pair.source_id;
    record.variant_index = slot % variants;
    record.seed =
        derive_record_seed(base_seed, pair.source_id, record.variant_index);
    record.noise_type =
        type == NoiseType::kMixture ? mixture_component(record.seed) : type;
    try {
      NoisedDoc noised = apply_noise(record.noise_type, pair.summary,
                                     pair.article, dist, record.seed,
                                     paraphraser);
      record.noisy = std::move(noised.doc);
      record.noisy.source_id = pair.source_id;
      record.noised_indices = std::move(noised.noised_indices);
      record.clean = pair.summary;
      slots[slot] = std::move(record);
    } catch (const Error& e) {
      failures[slot] =
          GenerationDiagnostic{pair.source_id, record.variant_index, e.what()};
    }
  });

  GenerationResult result;
  result.records.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    if (slots[i]) result.records.push_back(std::move(*slots[i]));
    if (failures[i]) result.skipped.push_back(std::move(*failures[i]));
  }
  return result;
}

}  // namespace sumdenoise
