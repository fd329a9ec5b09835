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

#include "sumdenoise/metrics.h"

#include <algorithm>
#include <map>
#include <string_view>
#include <unordered_map>

#include "sumdenoise/errors.h"

namespace sumdenoise {
namespace {

using Ngram = std::vector<std::string_view>;
using NgramCounts = std::map<Ngram, std::size_t>;

NgramCounts CountNgrams(const std::vector<std::string>& tokens, std::size_t n,
                        std::size_t* total) {
  NgramCounts counts;
  *total = 0;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
    ++*total;
  }
  return counts;
}

void RequireNonEmpty(const SummaryDoc& doc, std::string_view what) {
  if (doc.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                std::string(what) + " document '" + doc.source_id +
                    "' has no sentences");
  }
}

}  // namespace

RougeScore RougeScore::FromCounts(std::size_t matches,
                                  std::size_t candidate_total,
                                  std::size_t reference_total) {
  RougeScore score;
  if (candidate_total > 0) {
    score.precision = static_cast<double>(matches) / candidate_total;
  }
  if (reference_total > 0) {
    score.recall = static_cast<double>(matches) / reference_total;
  }
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall /
               (score.precision + score.recall);
  }
  return score;
}

void validate_threshold(double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidThreshold,
                "threshold " + std::to_string(threshold) +
                    " is outside [0, 1]");
  }
}

std::vector<std::string> flatten_tokens(const SummaryDoc& doc) {
  std::vector<std::string> out;
  for (const auto& s : doc.sentences) {
    out.insert(out.end(), s.tokens().begin(), s.tokens().end());
  }
  return out;
}

double repeat_rate(const SummaryDoc& doc) {
  RequireNonEmpty(doc, "repeat_rate");
  // A type lies in the complement of sentence i iff some other sentence
  // contains it, i.e. its sentence frequency is at least 2.
  std::unordered_map<std::string_view, std::size_t> sentence_freq;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.types()) ++sentence_freq[t];
  }
  double total = 0.0;
  for (const auto& s : doc.sentences) {
    std::size_t shared = 0;
    for (const auto& t : s.types()) {
      if (sentence_freq[t] >= 2) ++shared;
    }
    total += static_cast<double>(shared) / s.types().size();
  }
  return 100.0 * total / doc.size();
}

RougeScore rouge_n(const SummaryDoc& candidate, const SummaryDoc& reference,
                   std::size_t n) {
  RequireNonEmpty(candidate, "candidate");
  RequireNonEmpty(reference, "reference");
  if (n == 0) throw Error(ErrorCode::kZeroNgrams, "n must be positive");
  std::size_t cand_total = 0;
  std::size_t ref_total = 0;
  const auto cand_tokens = flatten_tokens(candidate);
  const auto ref_tokens = flatten_tokens(reference);
  const NgramCounts cand = CountNgrams(cand_tokens, n, &cand_total);
  const NgramCounts ref = CountNgrams(ref_tokens, n, &ref_total);
  if (cand_total == 0 && ref_total == 0) {
    throw Error(ErrorCode::kZeroNgrams,
                "neither document has " + std::to_string(n) + "-grams");
  }
  std::size_t matches = 0;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) matches += std::min(count, it->second);
  }
  return RougeScore::FromCounts(matches, cand_total, ref_total);
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  // Two-row DP; the row tracks prefixes of b.
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

RougeScore rouge_l(const SummaryDoc& candidate, const SummaryDoc& reference) {
  RequireNonEmpty(candidate, "candidate");
  RequireNonEmpty(reference, "reference");
  const auto cand = flatten_tokens(candidate);
  const auto ref = flatten_tokens(reference);
  return RougeScore::FromCounts(lcs_length(cand, ref), cand.size(),
                                ref.size());
}

std::size_t repetition_count(const SummaryDoc& doc, double threshold) {
  validate_threshold(threshold);
  RequireNonEmpty(doc, "repetition_count");
  std::size_t count = 0;
  for (std::size_t i = 1; i < doc.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (unigram_overlap(doc.sentences[i], doc.sentences[j]) > threshold) {
        ++count;
        break;
      }
    }
  }
  return count;
}

SummaryStats summary_stats(const SummaryDoc& doc) {
  SummaryStats stats;
  stats.sentence_count = doc.size();
  for (const auto& s : doc.sentences) stats.token_count += s.tokens().size();
  return stats;
}

RedundancyReport redundancy_report(const SummaryDoc& doc, double threshold) {
  RedundancyReport report;
  report.repeat_rate = repeat_rate(doc);
  report.repetition_count = repetition_count(doc, threshold);
  const SummaryStats stats = summary_stats(doc);
  report.sentence_count = stats.sentence_count;
  report.token_count = stats.token_count;
  return report;
}

}  // namespace sumdenoise
