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

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sumdenoise/corpus.h"
#include "sumdenoise/errors.h"
#include "synthetic.h"

namespace sumdenoise {
namespace {

namespace fs = std::filesystem;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

class CorpusTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sumdenoise_corpus_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  fs::path dir_;
};

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIoError;
}

TEST_F(CorpusTest, ReadsValidFile) {
  const auto path = Write("ok.jsonl",
                          R"({"id":"a","article":["x y ."],"summary":["x ."]})"
                          "\n\n"
                          R"({"id":"b","summary":["p q .","r s ."]})"
                          "\n");
  const auto records = read_corpus(path);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].id, "a");
  EXPECT_THAT(records[0].article, ElementsAre("x y ."));
  EXPECT_TRUE(records[1].article.empty());
  EXPECT_THAT(records[1].summary, ElementsAre("p q .", "r s ."));
}

TEST_F(CorpusTest, EmptySummaryIsMalformedWithLineNumber) {
  const auto path = Write("bad.jsonl",
                          R"({"id":"a","summary":["x"]})"
                          "\n"
                          R"({"id":"b","summary":[]})"
                          "\n");
  try {
    read_corpus(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord);
    EXPECT_THAT(e.what(), HasSubstr(":2:"));
  }
}

TEST_F(CorpusTest, MalformedVariants) {
  const char* bad[] = {
      "not json",
      R"(["array"])",
      R"({"summary":["x"]})",
      R"({"id":"","summary":["x"]})",
      R"({"id":"a"})",
      R"({"id":"a","summary":"x"})",
      R"({"id":"a","summary":[1]})",
      R"({"id":"a","summary":[" . "]})",
      R"({"id":"a","summary":["x"],"article":[]})",
      R"({"id":"a","summary":["x"],"provenance":{"seed":1}})",
  };
  for (const char* line : bad) {
    EXPECT_EQ(CodeOf([&] { parse_record(line); }), ErrorCode::kMalformedRecord)
        << line;
  }
}

TEST_F(CorpusTest, DuplicateId) {
  const auto path = Write("dup.jsonl",
                          R"({"id":"a","summary":["x"]})"
                          "\n"
                          R"({"id":"a","summary":["y"]})"
                          "\n");
  EXPECT_EQ(CodeOf([&] { read_corpus(path); }), ErrorCode::kDuplicateId);
}

TEST_F(CorpusTest, MissingFile) {
  EXPECT_EQ(CodeOf([&] { read_corpus((dir_ / "nope.jsonl").string()); }),
            ErrorCode::kIoError);
  EXPECT_EQ(CodeOf([&] { write_corpus({}, (dir_ / "no/such/dir").string()); }),
            ErrorCode::kIoError);
}

TEST_F(CorpusTest, RawTextIsSplit) {
  const auto path = Write(
      "raw.jsonl",
      R"({"id":"a","article":"Mr. Smith ran. He won.","summary":"He won. Again!"})"
      "\n");
  const auto records = read_corpus(path, {.raw_text = true});
  EXPECT_THAT(records[0].article, ElementsAre("Mr. Smith ran.", "He won."));
  EXPECT_THAT(records[0].summary, ElementsAre("He won.", "Again!"));
}

TEST_F(CorpusTest, UnknownKeysArePreserved) {
  const std::string line =
      R"({"id":"a","summary":["x"],"extra_field":{"k":[1,2]},"z":true})";
  const CorpusRecord r = parse_record(line);
  EXPECT_EQ(serialize_record(r), line);
}

TEST_F(CorpusTest, RoundTripOnGeneratedCorpora) {
  synthetic::Generator gen(51);
  std::mt19937_64 rng(52);
  std::vector<CorpusRecord> records;
  for (int i = 0; i < 200; ++i) {
    const auto pair = gen.Next("g" + std::to_string(i));
    CorpusRecord r;
    r.id = pair.source_id;
    r.article = pair.article.raw_sentences();
    r.summary = pair.summary.raw_sentences();
    if (rng() % 2) r.noisy = r.summary;
    if (rng() % 3 == 0) r.denoised = std::vector<std::string>{r.summary[0]};
    if (rng() % 2) {
      r.provenance = Provenance{r.id, "extra", {1, 2}, 2, rng()};
    }
    records.push_back(std::move(r));
  }
  const std::string first = (dir_ / "first.jsonl").string();
  const std::string second = (dir_ / "second.jsonl").string();
  write_corpus(records, first);
  const auto back = read_corpus(first);
  EXPECT_EQ(back, records);
  write_corpus(back, second);
  EXPECT_EQ(Slurp(first), Slurp(second));
}

TEST_F(CorpusTest, StreamingReaderTracksLines) {
  const auto path = Write("s.jsonl",
                          R"({"id":"a","summary":["x"]})"
                          "\n"
                          R"({"id":"b","summary":["y"]})"
                          "\n");
  CorpusReader reader(path);
  EXPECT_EQ(reader.next()->id, "a");
  EXPECT_EQ(reader.line_number(), 1u);
  EXPECT_EQ(reader.next()->id, "b");
  EXPECT_FALSE(reader.next().has_value());
}

TEST_F(CorpusTest, RecordFieldLookup) {
  CorpusRecord r = parse_record(R"({"id":"a","summary":["x y"]})");
  EXPECT_EQ(record_doc(r, "summary").source_id, "a");
  EXPECT_EQ(CodeOf([&] { record_field(r, "noisy"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(CodeOf([&] { record_field(r, "article"); }),
            ErrorCode::kMalformedRecord);
}

}  // namespace
}  // namespace sumdenoise
