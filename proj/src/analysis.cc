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

#include "sumdenoise/analysis.h"

#include <iomanip>
#include <limits>

#include "json.hpp"
#include "sumdenoise/errors.h"
#include "sumdenoise/parallel.h"

namespace sumdenoise {
namespace {

using Json = nlohmann::ordered_json;

struct DocMetrics {
  RedundancyReport redundancy;
  RougeScore r1, r2, rl;
};

RougeScore RougeNOrZero(const SummaryDoc& cand, const SummaryDoc& ref,
                        std::size_t n) {
  try {
    return rouge_n(cand, ref, n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroNgrams) throw;
    return RougeScore{};
  }
}

void CheckAligned(const std::vector<SummaryDoc>& a,
                  const std::vector<SummaryDoc>& b, std::string_view what) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].source_id != b[i].source_id) {
      throw Error(ErrorCode::kAlignmentError,
                  std::string(what) + ": id '" + b[i].source_id +
                      "' at position " + std::to_string(i) + ", expected '" +
                      a[i].source_id + "'");
    }
  }
  if (a.size() != b.size()) {
    const auto& longer = a.size() > b.size() ? a : b;
    throw Error(ErrorCode::kAlignmentError,
                std::string(what) + ": stream lengths differ (" +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + "); first unpaired id '" +
                    longer[n].source_id + "'");
  }
}

EvalRow Summarize(std::string label, const std::vector<SummaryDoc>& docs,
                  const std::vector<SummaryDoc>* references,
                  const EvalOptions& options) {
  std::vector<DocMetrics> per_doc(docs.size());
  parallel_for(docs.size(), options.workers, [&](std::size_t i) {
    per_doc[i].redundancy = redundancy_report(docs[i], options.threshold);
    if (references != nullptr) {
      const SummaryDoc& ref = (*references)[i];
      per_doc[i].r1 = RougeNOrZero(docs[i], ref, 1);
      per_doc[i].r2 = RougeNOrZero(docs[i], ref, 2);
      per_doc[i].rl = rouge_l(docs[i], ref);
    }
  });

  EvalRow row;
  row.label = std::move(label);
  row.count = docs.size();
  RougeScore r1, r2, rl;
  auto add = [](RougeScore& acc, const RougeScore& s) {
    acc.precision += s.precision;
    acc.recall += s.recall;
    acc.f1 += s.f1;
  };
  for (const DocMetrics& m : per_doc) {
    row.repeat_rate += m.redundancy.repeat_rate;
    row.mean_sentences += static_cast<double>(m.redundancy.sentence_count);
    row.mean_tokens += static_cast<double>(m.redundancy.token_count);
    row.repetitions += m.redundancy.repetition_count;
    add(r1, m.r1);
    add(r2, m.r2);
    add(rl, m.rl);
  }
  const double n = static_cast<double>(docs.size());
  row.repeat_rate /= n;
  row.mean_sentences /= n;
  row.mean_tokens /= n;
  if (references != nullptr) {
    auto mean = [n](RougeScore s) {
      return RougeScore{s.precision / n, s.recall / n, s.f1 / n};
    };
    row.rouge1 = mean(r1);
    row.rouge2 = mean(r2);
    row.rouge_l = mean(rl);
  }
  return row;
}

Json RougeJson(const std::optional<RougeScore>& s) {
  if (!s) return nullptr;
  return Json{{"precision", s->precision}, {"recall", s->recall},
              {"f1", s->f1}};
}

Json RowJson(const EvalRow& row) {
  return Json{{"system", row.label},
              {"count", row.count},
              {"rouge1", RougeJson(row.rouge1)},
              {"rouge2", RougeJson(row.rouge2)},
              {"rougeL", RougeJson(row.rouge_l)},
              {"repeat_rate", row.repeat_rate},
              {"mean_sentences", row.mean_sentences},
              {"mean_tokens", row.mean_tokens},
              {"repetitions", row.repetitions}};
}

void WriteRowTsv(const EvalRow& row, std::ostream& out) {
  auto rouge = [&out](const std::optional<RougeScore>& s) {
    if (s) {
      out << '\t' << 100.0 * s->f1;
    } else {
      out << "\t-";
    }
  };
  out << row.label << '\t' << row.count;
  rouge(row.rouge1);
  rouge(row.rouge2);
  rouge(row.rouge_l);
  out << '\t' << row.repeat_rate << '\t' << row.mean_sentences << '\t'
      << row.mean_tokens << '\t' << row.repetitions << '\n';
}

}  // namespace

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kNoChange: return "no_change";
    case EditKind::kDeleted: return "deleted";
    case EditKind::kModified: return "modified";
    case EditKind::kDeletedAndModified: return "deleted_and_modified";
  }
  return "unknown";
}

EditClassification classify_edit(const SummaryDoc& before,
                                  const SummaryDoc& after,
                                  double match_threshold) {
  if (before.empty() || after.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "classify_edit needs non-empty documents ('" +
                    before.source_id + "')");
  }
  EditClassification result;
  std::vector<bool> used(before.size(), false);
  for (const TokenizedSentence& sentence : after.sentences) {
    std::size_t best = before.size();
    double best_score = -1.0;
    for (std::size_t j = 0; j < before.size(); ++j) {
      if (used[j]) continue;
      const double score = sentence_similarity(sentence, before.sentences[j]);
      if (score > best_score) {
        best = j;
        best_score = score;
      }
    }
    if (best < before.size() && best_score >= match_threshold) {
      used[best] = true;
      if (best_score < 1.0) ++result.modified_count;
    } else {
      ++result.modified_count;  // inserted content
    }
  }
  for (bool u : used) {
    if (!u) ++result.deleted_count;
  }
  if (result.deleted_count > 0 && result.modified_count > 0) {
    result.kind = EditKind::kDeletedAndModified;
  } else if (result.deleted_count > 0) {
    result.kind = EditKind::kDeleted;
  } else if (result.modified_count > 0) {
    result.kind = EditKind::kModified;
  }
  return result;
}

OperationDistribution aggregate_operations(const std::vector<DocPair>& pairs,
                                           double match_threshold) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no before/after pairs");
  }
  std::array<std::size_t, kEditKindCount> counts{};
  for (const auto& [before, after] : pairs) {
    ++counts[static_cast<std::size_t>(
        classify_edit(before, after, match_threshold).kind)];
  }
  OperationDistribution dist;
  dist.sample_count = pairs.size();
  for (std::size_t k = 0; k < kEditKindCount; ++k) {
    dist.fractions[k] =
        static_cast<double>(counts[k]) / static_cast<double>(pairs.size());
  }
  return dist;
}

EvalReport eval_report(const std::vector<SummaryDoc>& before,
                       const std::vector<SummaryDoc>& after,
                       const std::vector<SummaryDoc>* references,
                       const EvalOptions& options) {
  validate_threshold(options.threshold);
  CheckAligned(before, after, "after");
  if (references != nullptr) CheckAligned(before, *references, "references");
  if (before.empty()) throw Error(ErrorCode::kEmptyCorpus, "no records");
  return EvalReport{Summarize("before", before, references, options),
                    Summarize("after", after, references, options)};
}

void write_report_tsv(const EvalReport& report, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(2);
  out << "system\tcount\tROUGE-1\tROUGE-2\tROUGE-L\tRepeat\t#Sent\t#Tok\t"
         "Repetitions\n";
  WriteRowTsv(report.before, out);
  WriteRowTsv(report.after, out);
  out.flags(flags);
  out.precision(precision);
}

std::string report_json(const EvalReport& report) {
  return Json{{"rows", Json::array({RowJson(report.before),
                                    RowJson(report.after)})}}
      .dump(2);
}

void write_operations_tsv(const OperationDistribution& dist,
                          std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(4);
  out << "operation\tfraction\n";
  for (std::size_t k = 0; k < kEditKindCount; ++k) {
    out << EditKindName(static_cast<EditKind>(k)) << '\t' << dist.fractions[k]
        << '\n';
  }
  out << "samples\t" << dist.sample_count << '\n';
  out.flags(flags);
  out.precision(precision);
}

std::string operations_json(const OperationDistribution& dist) {
  Json fractions = Json::object();
  for (std::size_t k = 0; k < kEditKindCount; ++k) {
    fractions[std::string(EditKindName(static_cast<EditKind>(k)))] =
        dist.fractions[k];
  }
  return Json{{"sample_count", dist.sample_count}, {"fractions", fractions}}
      .dump(2);
}

}  // namespace sumdenoise
