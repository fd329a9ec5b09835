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

#include "sumdenoise/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumdenoise/analysis.h"
#include "sumdenoise/corpus.h"
#include "sumdenoise/denoise.h"
#include "sumdenoise/errors.h"
#include "sumdenoise/metrics.h"
#include "sumdenoise/noising.h"
#include "sumdenoise/parallel.h"

namespace sumdenoise {
namespace {

struct CommonFlags {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

struct NoiseFlags {
  std::string input, output;
  std::string type = "repeat";
  std::string p_noise = "0.15,0.85";
  std::size_t variants = 3;
  std::string paraphraser = "identity";
  bool raw_text = false;
};

struct DenoiseFlags {
  std::string input, output;
  std::string method = "overlap";
  std::string command;
  std::string field = "auto";
  double threshold = kDefaultOverlapThreshold;
};

struct EvalFlags {
  std::string input, before, after, references;
  std::string before_field = "noisy";
  std::string after_field = "denoised";
  std::string reference_field = "summary";
  bool no_references = false;
  double threshold = kDefaultOverlapThreshold;
  std::string output, json;
};

struct AnalyzeFlags {
  std::string input;
  std::string before_field = "noisy";
  std::string after_field = "denoised";
  double match_threshold = kDefaultMatchThreshold;
  std::string output, json;
};

struct StatsFlags {
  std::string input;
  std::string field = "summary";
  double threshold = kDefaultOverlapThreshold;
  bool raw_text = false;
  std::string output, json;
};

std::vector<double> ParseProbabilities(const std::string& text) {
  std::vector<double> probs;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      probs.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "cannot parse probability '" + item + "'");
    }
  }
  return probs;
}

// Writes to `path`, or to `fallback` when path is empty.
void Emit(const std::string& path, const std::string& text,
          std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed on '" + path + "'");
}

std::vector<SummaryDoc> FieldDocs(const std::vector<CorpusRecord>& records,
                                  const std::string& field,
                                  std::size_t workers) {
  std::vector<SummaryDoc> docs(records.size());
  parallel_for(records.size(), workers, [&](std::size_t i) {
    docs[i] = record_doc(records[i], field);
  });
  return docs;
}

int RunNoise(const NoiseFlags& flags, const CommonFlags& common,
             std::ostream& err) {
  const auto type = ParseNoiseType(flags.type);
  if (!type) {
    err << "error: unknown noise type '" << flags.type << "'\n";
    return kExitUsage;
  }
  const auto paraphraser = MakeParaphraser(flags.paraphraser);
  if (!paraphraser) {
    err << "error: unknown paraphraser '" << flags.paraphraser << "'\n";
    return kExitUsage;
  }
  if (flags.variants == 0) {
    err << "error: --variants must be positive\n";
    return kExitUsage;
  }
  const NoiseDistribution dist(ParseProbabilities(flags.p_noise));

  const auto records = read_corpus(flags.input, {flags.raw_text});
  std::vector<ArticleSummaryPair> pairs(records.size());
  parallel_for(records.size(), common.workers, [&](std::size_t i) {
    pairs[i].source_id = records[i].id;
    pairs[i].summary = make_doc(records[i].summary, records[i].id);
    pairs[i].article = make_doc(records[i].article, records[i].id);
  });
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < records.size(); ++i) by_id[records[i].id] = i;

  GenerationOptions options;
  options.variants_per_summary = flags.variants;
  options.workers = common.workers;
  const GenerationResult result = generate_noisy_dataset(
      pairs, *type, dist, common.seed, *paraphraser, options);

  std::vector<CorpusRecord> out;
  out.reserve(result.records.size());
  for (const NoisyRecord& r : result.records) {
    out.push_back(record_from_noisy(r, records[by_id.at(r.source_id)].article));
  }
  write_corpus(out, flags.output);
  for (const auto& d : result.skipped) {
    err << "skipped " << d.source_id << " variant " << d.variant_index << ": "
        << d.message << '\n';
  }
  err << "noise: " << records.size() << " summaries, " << out.size()
      << " records written, " << result.skipped.size() << " skipped\n";
  return kExitOk;
}

int RunDenoise(const DenoiseFlags& flags, const CommonFlags& common,
               std::ostream& err) {
  if (flags.method != "overlap" && flags.method != "external") {
    err << "error: unknown method '" << flags.method << "'\n";
    return kExitUsage;
  }
  if (flags.method == "external" && flags.command.empty()) {
    err << "error: --method external requires --command\n";
    return kExitUsage;
  }
  validate_threshold(flags.threshold);
  auto records = read_corpus(flags.input);
  std::vector<SummaryDoc> inputs(records.size());
  parallel_for(records.size(), common.workers, [&](std::size_t i) {
    std::string field = flags.field;
    if (field == "auto") field = records[i].noisy ? "noisy" : "summary";
    inputs[i] = record_doc(records[i], field);
  });

  std::size_t deleted = 0;
  if (flags.method == "overlap") {
    std::vector<DenoiseResult> results(records.size());
    parallel_for(records.size(), common.workers, [&](std::size_t i) {
      results[i] = overlap_denoise(inputs[i], flags.threshold);
    });
    for (std::size_t i = 0; i < records.size(); ++i) {
      records[i].denoised = results[i].output.raw_sentences();
      records[i].extra["deleted_indices"] = results[i].deleted_indices;
      deleted += results[i].deleted_indices.size();
    }
  } else {
    const auto outputs = external_denoise(inputs, command_channel(flags.command));
    for (std::size_t i = 0; i < records.size(); ++i) {
      records[i].denoised = outputs[i].raw_sentences();
    }
  }
  write_corpus(records, flags.output);
  err << "denoise: " << records.size() << " records";
  if (flags.method == "overlap") err << ", " << deleted << " sentences deleted";
  err << '\n';
  return kExitOk;
}

int RunEval(const EvalFlags& flags, const CommonFlags& common,
            std::ostream& out) {
  const std::string before_path = flags.before.empty() ? flags.input
                                                       : flags.before;
  const std::string after_path = flags.after.empty() ? before_path
                                                     : flags.after;
  std::string reference_path = flags.references;
  if (reference_path.empty() && !flags.input.empty()) {
    reference_path = flags.input;
  }
  if (flags.no_references) reference_path.clear();
  if (before_path.empty()) {
    throw CLI::RequiredError("--input or --before");
  }

  const auto before_records = read_corpus(before_path);
  const auto after_records =
      after_path == before_path ? before_records : read_corpus(after_path);
  const auto before = FieldDocs(before_records, flags.before_field,
                                common.workers);
  const auto after = FieldDocs(after_records, flags.after_field,
                               common.workers);
  std::vector<SummaryDoc> references;
  if (!reference_path.empty()) {
    const auto ref_records = reference_path == before_path
                                 ? before_records
                                 : read_corpus(reference_path);
    references = FieldDocs(ref_records, flags.reference_field, common.workers);
  }
  EvalOptions options;
  options.threshold = flags.threshold;
  options.workers = common.workers;
  const EvalReport report = eval_report(
      before, after, reference_path.empty() ? nullptr : &references, options);
  std::ostringstream tsv;
  write_report_tsv(report, tsv);
  Emit(flags.output, tsv.str(), out);
  if (!flags.json.empty()) Emit(flags.json, report_json(report) + "\n", out);
  return kExitOk;
}

int RunAnalyze(const AnalyzeFlags& flags, const CommonFlags& common,
               std::ostream& out) {
  const auto records = read_corpus(flags.input);
  std::vector<DocPair> pairs(records.size());
  parallel_for(records.size(), common.workers, [&](std::size_t i) {
    pairs[i] = {record_doc(records[i], flags.before_field),
                record_doc(records[i], flags.after_field)};
  });
  const OperationDistribution dist =
      aggregate_operations(pairs, flags.match_threshold);
  std::ostringstream tsv;
  write_operations_tsv(dist, tsv);
  Emit(flags.output, tsv.str(), out);
  if (!flags.json.empty()) Emit(flags.json, operations_json(dist) + "\n", out);
  return kExitOk;
}

int RunStats(const StatsFlags& flags, const CommonFlags& common,
             std::ostream& out) {
  validate_threshold(flags.threshold);
  const auto records = read_corpus(flags.input, {flags.raw_text});
  if (records.empty()) throw Error(ErrorCode::kEmptyCorpus, flags.input);
  std::vector<RedundancyReport> reports(records.size());
  parallel_for(records.size(), common.workers, [&](std::size_t i) {
    reports[i] =
        redundancy_report(record_doc(records[i], flags.field), flags.threshold);
  });
  double repeat = 0.0, sentences = 0.0, tokens = 0.0;
  std::size_t repetitions = 0;
  for (const auto& r : reports) {
    repeat += r.repeat_rate;
    sentences += static_cast<double>(r.sentence_count);
    tokens += static_cast<double>(r.token_count);
    repetitions += r.repetition_count;
  }
  const double n = static_cast<double>(records.size());
  std::ostringstream tsv;
  tsv << std::fixed << std::setprecision(2)
      << "field\tcount\tRepeat\t#Sent\t#Tok\tRepetitions\n"
      << flags.field << '\t' << records.size() << '\t' << repeat / n << '\t'
      << sentences / n << '\t' << tokens / n << '\t' << repetitions << '\n';
  Emit(flags.output, tsv.str(), out);
  if (!flags.json.empty()) {
    nlohmann::ordered_json j{{"field", flags.field},
                             {"count", records.size()},
                             {"repeat_rate", repeat / n},
                             {"mean_sentences", sentences / n},
                             {"mean_tokens", tokens / n},
                             {"repetitions", repetitions}};
    Emit(flags.json, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

void AddCommon(CLI::App* app, CommonFlags& common) {
  app->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  app->add_option("--workers", common.workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Summary noising, overlap denoising and redundancy metrics",
               "sumdenoise"};
  app.require_subcommand(1);
  CommonFlags common;
  NoiseFlags noise;
  DenoiseFlags denoise;
  EvalFlags eval;
  AnalyzeFlags analyze;
  StatsFlags stats;

  auto* noise_cmd = app.add_subcommand("noise", "Generate noisy summaries");
  AddCommon(noise_cmd, common);
  noise_cmd->add_option("-i,--input", noise.input, "Input corpus (JSONL)")
      ->required();
  noise_cmd->add_option("-o,--output", noise.output, "Output corpus (JSONL)")
      ->required();
  noise_cmd->add_option("--type", noise.type, "repeat|replace|extra|mixture")
      ->capture_default_str();
  noise_cmd->add_option("--p-noise", noise.p_noise,
                        "Comma-separated noisy-sentence count distribution")
      ->capture_default_str();
  noise_cmd->add_option("--variants", noise.variants,
                        "Noisy variants per summary")
      ->capture_default_str();
  noise_cmd->add_option("--paraphraser", noise.paraphraser,
                        "identity|lexical (Extra noise)")
      ->capture_default_str();
  noise_cmd->add_flag("--raw-text", noise.raw_text,
                      "Article and summary are unsplit strings");

  auto* denoise_cmd = app.add_subcommand("denoise", "Denoise summaries");
  AddCommon(denoise_cmd, common);
  denoise_cmd->add_option("-i,--input", denoise.input, "Input corpus")
      ->required();
  denoise_cmd->add_option("-o,--output", denoise.output, "Output corpus")
      ->required();
  denoise_cmd->add_option("--method", denoise.method, "overlap|external")
      ->capture_default_str();
  denoise_cmd->add_option("--command", denoise.command,
                          "External denoiser command (line protocol)");
  denoise_cmd->add_option("--field", denoise.field,
                          "Field to denoise: auto|noisy|summary|article")
      ->capture_default_str();
  denoise_cmd->add_option("--threshold", denoise.threshold,
                          "Overlap deletion threshold")
      ->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "ROUGE and redundancy report");
  AddCommon(eval_cmd, common);
  eval_cmd->add_option("-i,--input", eval.input,
                       "Corpus holding before, after and reference fields");
  eval_cmd->add_option("--before", eval.before, "Corpus for the before side");
  eval_cmd->add_option("--after", eval.after, "Corpus for the after side");
  eval_cmd->add_option("--references", eval.references, "Reference corpus");
  eval_cmd->add_option("--before-field", eval.before_field)
      ->capture_default_str();
  eval_cmd->add_option("--after-field", eval.after_field)
      ->capture_default_str();
  eval_cmd->add_option("--reference-field", eval.reference_field)
      ->capture_default_str();
  eval_cmd->add_flag("--no-references", eval.no_references,
                     "Skip ROUGE columns");
  eval_cmd->add_option("--threshold", eval.threshold,
                       "Repetition overlap threshold")
      ->capture_default_str();
  eval_cmd->add_option("-o,--output", eval.output, "TSV report path");
  eval_cmd->add_option("--json", eval.json, "JSON report path");

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Classify denoising operations");
  AddCommon(analyze_cmd, common);
  analyze_cmd->add_option("-i,--input", analyze.input, "Corpus")->required();
  analyze_cmd->add_option("--before-field", analyze.before_field)
      ->capture_default_str();
  analyze_cmd->add_option("--after-field", analyze.after_field)
      ->capture_default_str();
  analyze_cmd->add_option("--match-threshold", analyze.match_threshold,
                          "Minimum similarity for aligning two sentences")
      ->capture_default_str();
  analyze_cmd->add_option("-o,--output", analyze.output, "TSV report path");
  analyze_cmd->add_option("--json", analyze.json, "JSON report path");

  auto* stats_cmd =
      app.add_subcommand("stats", "Repeat rate and length statistics");
  AddCommon(stats_cmd, common);
  stats_cmd->add_option("-i,--input", stats.input, "Corpus")->required();
  stats_cmd->add_option("--field", stats.field)->capture_default_str();
  stats_cmd->add_option("--threshold", stats.threshold,
                        "Repetition overlap threshold")
      ->capture_default_str();
  stats_cmd->add_flag("--raw-text", stats.raw_text,
                      "Article and summary are unsplit strings");
  stats_cmd->add_option("-o,--output", stats.output, "TSV report path");
  stats_cmd->add_option("--json", stats.json, "JSON report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (noise_cmd->parsed()) return RunNoise(noise, common, err);
    if (denoise_cmd->parsed()) return RunDenoise(denoise, common, err);
    if (eval_cmd->parsed()) return RunEval(eval, common, out);
    if (analyze_cmd->parsed()) return RunAnalyze(analyze, common, out);
    if (stats_cmd->parsed()) return RunStats(stats, common, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitProcessing;
  }
  return kExitUsage;
}

}  // namespace sumdenoise
