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

#ifndef SUMDENOISE_METRICS_H_
#define SUMDENOISE_METRICS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "sumdenoise/text.h"

namespace sumdenoise {

inline constexpr double kDefaultOverlapThreshold = 0.8;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static RougeScore FromCounts(std::size_t matches, std::size_t candidate_total,
                               std::size_t reference_total);
};

struct SummaryStats {
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
};

struct RedundancyReport {
  double repeat_rate = 0.0;  // percent
  std::size_t repetition_count = 0;
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
};

// Mean, over sentences, of the fraction of each sentence's distinct unigrams
// found anywhere else in the document; scaled to [0, 100].
// Throws Error(kEmptyDocument) for an empty document.
double repeat_rate(const SummaryDoc& doc);

// Clipped n-gram precision/recall/F1 over each document's flattened tokens.
// Throws Error(kZeroNgrams) when neither document has an n-gram.
RougeScore rouge_n(const SummaryDoc& candidate, const SummaryDoc& reference,
                   std::size_t n);

// LCS-based precision/recall/F1 over each document's flattened tokens.
RougeScore rouge_l(const SummaryDoc& candidate, const SummaryDoc& reference);

// Length of the longest common subsequence of two token sequences.
std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b);

// Number of sentences whose overlap with some earlier sentence is strictly
// greater than `threshold`. Later duplicates count; the first occurrence of a
// group does not.
std::size_t repetition_count(const SummaryDoc& doc,
                             double threshold = kDefaultOverlapThreshold);

SummaryStats summary_stats(const SummaryDoc& doc);

RedundancyReport redundancy_report(const SummaryDoc& doc,
                                   double threshold = kDefaultOverlapThreshold);

// All tokens of the document in sentence order.
std::vector<std::string> flatten_tokens(const SummaryDoc& doc);

// Throws Error(kInvalidThreshold) unless 0 <= threshold <= 1.
void validate_threshold(double threshold);

}  // namespace sumdenoise

#endif  // SUMDENOISE_METRICS_H_
