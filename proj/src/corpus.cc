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

#include "sumdenoise/corpus.h"

#include "sumdenoise/errors.h"

namespace sumdenoise {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kKnownKeys[] = {"id",       "article",   "summary",
                                      "noisy",    "denoised",  "provenance"};

bool IsKnownKey(const std::string& key) {
  for (const char* k : kKnownKeys) {
    if (key == k) return true;
  }
  return false;
}

[[noreturn]] void Malformed(const std::string& reason) {
  throw Error(ErrorCode::kMalformedRecord, reason);
}

std::vector<std::string> SentenceList(const Json& value,
                                      const std::string& key,
                                      bool raw_text) {
  std::vector<std::string> out;
  if (raw_text && value.is_string()) {
    try {
      for (const auto& s : split_sentences(value.get<std::string>())) {
        out.push_back(s.raw());
      }
    } catch (const Error&) {
      Malformed("'" + key + "' has no sentences");
    }
    return out;
  }
  if (!value.is_array()) Malformed("'" + key + "' must be an array");
  if (value.empty()) Malformed("'" + key + "' is empty");
  for (const auto& item : value) {
    if (!item.is_string()) Malformed("'" + key + "' holds a non-string");
    std::string sentence = item.get<std::string>();
    try {
      tokenize(sentence);
    } catch (const Error&) {
      Malformed("'" + key + "' holds a sentence with no tokens");
    }
    out.push_back(std::move(sentence));
  }
  return out;
}

Provenance ParseProvenance(const Json& value) {
  if (!value.is_object()) Malformed("'provenance' must be an object");
  try {
    Provenance p;
    p.source_id = value.at("source_id").get<std::string>();
    p.noise_type = value.at("noise_type").get<std::string>();
    p.noised_indices =
        value.at("noised_indices").get<std::vector<std::size_t>>();
    p.variant_index = value.at("variant_index").get<std::size_t>();
    p.seed = value.at("seed").get<std::uint64_t>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    Malformed(std::string("bad provenance: ") + e.what());
  }
}

}  // namespace

CorpusRecord parse_record(const std::string& line, ReadOptions options) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) Malformed("record is not a JSON object");
  CorpusRecord record;
  if (!j.contains("id") || !j["id"].is_string() ||
      j["id"].get<std::string>().empty()) {
    Malformed("missing or empty string 'id'");
  }
  record.id = j["id"].get<std::string>();
  if (!j.contains("summary")) Malformed("missing 'summary'");
  record.summary = SentenceList(j["summary"], "summary", options.raw_text);
  if (j.contains("article")) {
    record.article = SentenceList(j["article"], "article", options.raw_text);
  }
  if (j.contains("noisy")) {
    record.noisy = SentenceList(j["noisy"], "noisy", false);
  }
  if (j.contains("denoised")) {
    record.denoised = SentenceList(j["denoised"], "denoised", false);
  }
  if (j.contains("provenance")) {
    record.provenance = ParseProvenance(j["provenance"]);
  }
  for (const auto& [key, value] : j.items()) {
    if (!IsKnownKey(key)) record.extra[key] = value;
  }
  return record;
}

std::string serialize_record(const CorpusRecord& record) {
  Json j;
  j["id"] = record.id;
  if (!record.article.empty()) j["article"] = record.article;
  j["summary"] = record.summary;
  if (record.noisy) j["noisy"] = *record.noisy;
  if (record.denoised) j["denoised"] = *record.denoised;
  if (record.provenance) {
    const Provenance& p = *record.provenance;
    j["provenance"] = Json{{"source_id", p.source_id},
                           {"noise_type", p.noise_type},
                           {"noised_indices", p.noised_indices},
                           {"variant_index", p.variant_index},
                           {"seed", p.seed}};
  }
  for (const auto& [key, value] : record.extra.items()) j[key] = value;
  return j.dump();
}

CorpusReader::CorpusReader(const std::string& path, ReadOptions options)
    : path_(path), in_(path), options_(options) {
  if (!in_) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
}

std::optional<CorpusRecord> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CorpusRecord record;
    try {
      record = parse_record(line, options_);
    } catch (const Error& e) {
      throw Error(e.code(), path_ + ":" + std::to_string(line_number_) + ": " +
                                e.what());
    }
    if (!seen_ids_.insert(record.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  path_ + ":" + std::to_string(line_number_) +
                      ": duplicate id '" + record.id + "'");
    }
    return record;
  }
  if (in_.bad()) {
    throw Error(ErrorCode::kIoError, "read failed on '" + path_ + "'");
  }
  return std::nullopt;
}

std::vector<CorpusRecord> read_corpus(const std::string& path,
                                      ReadOptions options) {
  CorpusReader reader(path, options);
  std::vector<CorpusRecord> out;
  while (auto record = reader.next()) out.push_back(std::move(*record));
  return out;
}

void write_corpus(const std::vector<CorpusRecord>& records,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  for (const auto& record : records) out << serialize_record(record) << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed on '" + path + "'");
}

const std::vector<std::string>& record_field(const CorpusRecord& record,
                                             const std::string& field) {
  if (field == "summary") return record.summary;
  if (field == "article") {
    if (record.article.empty()) {
      Malformed("record '" + record.id + "' has no article");
    }
    return record.article;
  }
  if (field == "noisy" && record.noisy) return *record.noisy;
  if (field == "denoised" && record.denoised) return *record.denoised;
  Malformed("record '" + record.id + "' has no field '" + field + "'");
}

SummaryDoc record_doc(const CorpusRecord& record, const std::string& field) {
  return make_doc(record_field(record, field), record.id);
}

CorpusRecord record_from_noisy(const NoisyRecord& noisy,
                               const std::vector<std::string>& article) {
  CorpusRecord record;
  record.id = noisy.source_id + "#" + std::to_string(noisy.variant_index);
  record.article = article;
  record.summary = noisy.clean.raw_sentences();
  record.noisy = noisy.noisy.raw_sentences();
  record.provenance =
      Provenance{noisy.source_id, std::string(NoiseTypeName(noisy.noise_type)),
                 noisy.noised_indices, noisy.variant_index, noisy.seed};
  return record;
}

}  // namespace sumdenoise
