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

#ifndef SUMDENOISE_CORPUS_H_
#define SUMDENOISE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "sumdenoise/noising.h"
#include "sumdenoise/text.h"

namespace sumdenoise {

struct Provenance {
  std::string source_id;
  std::string noise_type;
  std::vector<std::size_t> noised_indices;
  std::size_t variant_index = 0;
  std::uint64_t seed = 0;

  bool operator==(const Provenance&) const = default;
};

// One JSON line. `article` may be empty when the file carries summaries
// only; every list that is present holds at least one sentence.
struct CorpusRecord {
  std::string id;
  std::vector<std::string> article;
  std::vector<std::string> summary;
  std::optional<std::vector<std::string>> noisy;
  std::optional<std::vector<std::string>> denoised;
  std::optional<Provenance> provenance;
  // Keys this library does not interpret, carried through unchanged.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  bool operator==(const CorpusRecord&) const = default;
};

struct ReadOptions {
  // Article and summary are plain strings to be sentence-split.
  bool raw_text = false;
};

// Streaming reader; memory use is independent of file size apart from the
// set of ids seen so far.
class CorpusReader {
 public:
  explicit CorpusReader(const std::string& path, ReadOptions options = {});

  // Next record, or nullopt at end of file. Throws kMalformedRecord or
  // kDuplicateId with the 1-based line number.
  std::optional<CorpusRecord> next();

  std::size_t line_number() const { return line_number_; }

 private:
  std::string path_;
  std::ifstream in_;
  ReadOptions options_;
  std::size_t line_number_ = 0;
  std::unordered_set<std::string> seen_ids_;
};

std::vector<CorpusRecord> read_corpus(const std::string& path,
                                      ReadOptions options = {});

CorpusRecord parse_record(const std::string& line, ReadOptions options = {});
std::string serialize_record(const CorpusRecord& record);

// One record per line, fixed key order. Throws kIoError with the path.
void write_corpus(const std::vector<CorpusRecord>& records,
                  const std::string& path);

// Named sentence list of a record: "article", "summary", "noisy" or
// "denoised". Throws kMalformedRecord when the field is absent.
const std::vector<std::string>& record_field(const CorpusRecord& record,
                                             const std::string& field);

SummaryDoc record_doc(const CorpusRecord& record, const std::string& field);

CorpusRecord record_from_noisy(const NoisyRecord& noisy,
                               const std::vector<std::string>& article);

}  // namespace sumdenoise

#endif  // SUMDENOISE_CORPUS_H_
