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

#ifndef SUMDENOISE_ANALYSIS_H_
#define SUMDENOISE_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumdenoise/metrics.h"
#include "sumdenoise/text.h"

namespace sumdenoise {

inline constexpr double kDefaultMatchThreshold = 0.5;

enum class EditKind { kNoChange, kDeleted, kModified, kDeletedAndModified };
inline constexpr std::size_t kEditKindCount = 4;

std::string_view EditKindName(EditKind kind);

struct EditClassification {
  EditKind kind = EditKind::kNoChange;
  std::size_t deleted_count = 0;
  std::size_t modified_count = 0;
};

struct OperationDistribution {
  std::array<double, kEditKindCount> fractions{};
  std::size_t sample_count = 0;

  double fraction(EditKind kind) const {
    return fractions[static_cast<std::size_t>(kind)];
  }
};

// Aligns each after-sentence, in order, to the most similar unmatched
// before-sentence (lowest index on ties); a pair is accepted when its
// similarity is at least `match_threshold`. Unmatched before-sentences are
// deletions; accepted non-verbatim pairs and unmatched after-sentences are
// modifications.
EditClassification classify_edit(
    const SummaryDoc& before, const SummaryDoc& after,
    double match_threshold = kDefaultMatchThreshold);

using DocPair = std::pair<SummaryDoc, SummaryDoc>;

// Throws Error(kEmptyCorpus) for an empty input.
OperationDistribution aggregate_operations(
    const std::vector<DocPair>& pairs,
    double match_threshold = kDefaultMatchThreshold);

// One system row: corpus means, plus the total repetition count.
struct EvalRow {
  std::string label;
  std::optional<RougeScore> rouge1;
  std::optional<RougeScore> rouge2;
  std::optional<RougeScore> rouge_l;
  double repeat_rate = 0.0;
  double mean_sentences = 0.0;
  double mean_tokens = 0.0;
  std::size_t repetitions = 0;
  std::size_t count = 0;
};

struct EvalReport {
  EvalRow before;
  EvalRow after;
};

struct EvalOptions {
  double threshold = kDefaultOverlapThreshold;
  std::size_t workers = 1;
};

// Streams must be aligned by source_id; a mismatch raises kAlignmentError
// naming the first offending id. ROUGE columns are filled only when
// references are supplied.
EvalReport eval_report(const std::vector<SummaryDoc>& before,
                       const std::vector<SummaryDoc>& after,
                       const std::vector<SummaryDoc>* references,
                       const EvalOptions& options = {});

void write_report_tsv(const EvalReport& report, std::ostream& out);
std::string report_json(const EvalReport& report);

void write_operations_tsv(const OperationDistribution& dist, std::ostream& out);
std::string operations_json(const OperationDistribution& dist);

}  // namespace sumdenoise

#endif  // SUMDENOISE_ANALYSIS_H_
