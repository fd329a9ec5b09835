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

#include <algorithm>
#include <map>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sumdenoise/errors.h"
#include "sumdenoise/metrics.h"
#include "sumdenoise/noising.h"
#include "synthetic.h"

namespace sumdenoise {
namespace {

using ::testing::ElementsAre;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIoError;
}

std::vector<std::string> Raw(const SummaryDoc& doc) {
  return doc.raw_sentences();
}

bool SameRecord(const NoisyRecord& a, const NoisyRecord& b) {
  return a.source_id == b.source_id && a.noisy == b.noisy &&
         a.clean == b.clean && a.noise_type == b.noise_type &&
         a.noised_indices == b.noised_indices &&
         a.variant_index == b.variant_index && a.seed == b.seed;
}

TEST(NoiseDistribution, Validation) {
  EXPECT_EQ(CodeOf([] { NoiseDistribution({}); }),
            ErrorCode::kInvalidDistribution);
  EXPECT_EQ(CodeOf([] { NoiseDistribution({0.5, 0.4}); }),
            ErrorCode::kInvalidDistribution);
  EXPECT_EQ(CodeOf([] { NoiseDistribution({1.2, -0.2}); }),
            ErrorCode::kInvalidDistribution);
  EXPECT_NO_THROW(NoiseDistribution({0.1, 0.2, 0.7 + 5e-10}));
  EXPECT_THAT(NoiseDistribution::Default().probs(), ElementsAre(0.15, 0.85));
  EXPECT_EQ(NoiseDistribution::Default().max_count(), 1u);
}

TEST(SampleNoiseCount, PointMasses) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(sample_noise_count(NoiseDistribution({1.0}), rng), 0u);
    EXPECT_EQ(sample_noise_count(NoiseDistribution({0.0, 0.0, 1.0}), rng), 2u);
  }
}

TEST(SampleNoiseCount, DefaultDistributionFrequency) {
  // sd = sqrt(0.15 * 0.85 / 10000) ~= 0.00357; 3 sd ~= 0.0107, inside
  // [0.13, 0.17].
  Rng rng(2024);
  const auto dist = NoiseDistribution::Default();
  int zeros = 0;
  for (int i = 0; i < 10000; ++i) zeros += sample_noise_count(dist, rng) == 0;
  EXPECT_GE(zeros / 10000.0, 0.13);
  EXPECT_LE(zeros / 10000.0, 0.17);
}

TEST(ApplyRepeat, AppendsChosenSentence) {
  const SummaryDoc clean = make_doc({"s1", "s2"});
  bool saw_first = false;
  bool saw_second = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng(seed);
    const NoisedDoc out = apply_repeat(clean, 1, rng);
    ASSERT_EQ(out.doc.size(), 3u);
    EXPECT_THAT(out.noised_indices, ElementsAre(2u));
    if (out.doc.sentences[2].raw() == "s1") {
      saw_first = true;
      EXPECT_THAT(Raw(out.doc), ElementsAre("s1", "s2", "s1"));
    } else {
      saw_second = true;
      EXPECT_THAT(Raw(out.doc), ElementsAre("s1", "s2", "s2"));
    }
  }
  EXPECT_TRUE(saw_first);
  EXPECT_TRUE(saw_second);
}

TEST(ApplyRepeat, ZeroIsIdentity) {
  Rng rng(3);
  const SummaryDoc clean = make_doc({"a b", "c d"});
  const NoisedDoc out = apply_repeat(clean, 0, rng);
  EXPECT_EQ(out.doc, clean);
  EXPECT_TRUE(out.noised_indices.empty());
}

TEST(ApplyRepeat, EmptySummaryIsAnError) {
  Rng rng(3);
  EXPECT_EQ(CodeOf([&] { apply_repeat(SummaryDoc{}, 1, rng); }),
            ErrorCode::kEmptyDocument);
}

TEST(ApplyRepeat, LengthAndPrefixProperty) {
  std::mt19937_64 gen(9);
  Rng rng(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const SummaryDoc clean = synthetic::RandomDoc(gen, 5, 4, 20);
    const std::size_t k = gen() % 8;  // exceeds |clean| sometimes
    const NoisedDoc out = apply_repeat(clean, k, rng);
    ASSERT_EQ(out.doc.size(), clean.size() + k);
    EXPECT_TRUE(std::equal(clean.sentences.begin(), clean.sentences.end(),
                           out.doc.sentences.begin()));
    if (k <= clean.size()) {
      // Without replacement: appended sentences are distinct positions.
      std::vector<std::string> tail;
      for (std::size_t i = clean.size(); i < out.doc.size(); ++i) {
        tail.push_back(out.doc.sentences[i].raw());
      }
      for (const auto& t : tail) {
        EXPECT_NE(std::find(clean.sentences.begin(), clean.sentences.end(),
                            tokenize(t)),
                  clean.sentences.end());
      }
    }
  }
}

TEST(ClosestSentence, TiesGoToLowestIndex) {
  const SummaryDoc article = make_doc({"x y", "a b", "a b"});
  EXPECT_EQ(closest_sentence(tokenize("a b"), article), 1u);
  EXPECT_EQ(closest_sentence(tokenize("q"), article), 0u);  // all zero
}

TEST(ApplyReplace, HandComputedExample) {
  // "a b c" vs "x y": 0. vs "a b d": both directions 2/3 -> 2/3.
  Rng rng(5);
  const NoisedDoc out =
      apply_replace(make_doc({"a b c"}), make_doc({"x y", "a b d"}), 1, rng);
  EXPECT_THAT(Raw(out.doc), ElementsAre("a b d"));
  EXPECT_THAT(out.noised_indices, ElementsAre(0u));
}

TEST(ApplyReplace, VerbatimArticleCopyLeavesSentence) {
  Rng rng(6);
  const SummaryDoc clean = make_doc({"a b c", "d e f"});
  const SummaryDoc article = make_doc({"a b", "a b c", "d e", "d e f"});
  const NoisedDoc out = apply_replace(clean, article, 2, rng);
  EXPECT_EQ(out.doc, clean);
  EXPECT_THAT(out.noised_indices, ElementsAre(0u, 1u));
}

TEST(ApplyReplace, ZeroAndErrors) {
  Rng rng(7);
  const SummaryDoc clean = make_doc({"a b c"});
  EXPECT_EQ(apply_replace(clean, make_doc({"x"}), 0, rng).doc, clean);
  EXPECT_EQ(CodeOf([&] { apply_replace(clean, SummaryDoc{}, 1, rng); }),
            ErrorCode::kEmptyDocument);
  EXPECT_EQ(CodeOf([&] { apply_replace(clean, make_doc({"x"}), 2, rng); }),
            ErrorCode::kInvalidNoiseCount);
}

TEST(ApplyReplace, OnlyChosenPositionsChange) {
  synthetic::Generator gen(12);
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pair = gen.Next("r");
    const std::size_t k = 1 + rng() % pair.summary.size();
    const NoisedDoc out = apply_replace(pair.summary, pair.article, k, rng);
    ASSERT_EQ(out.doc.size(), pair.summary.size());
    ASSERT_EQ(out.noised_indices.size(), k);
    for (std::size_t i = 0; i < out.doc.size(); ++i) {
      const bool chosen = std::find(out.noised_indices.begin(),
                                    out.noised_indices.end(),
                                    i) != out.noised_indices.end();
      if (!chosen) EXPECT_EQ(out.doc.sentences[i], pair.summary.sentences[i]);
      else {
        EXPECT_EQ(out.doc.sentences[i],
                  pair.article.sentences[closest_sentence(
                      pair.summary.sentences[i], pair.article)]);
      }
    }
  }
}

class ExtraTest : public ::testing::Test {
 protected:
  // Summary sentences align to article indices 0 and 3.
  SummaryDoc clean_ = make_doc({"a b c", "d e f"});
  SummaryDoc article_ =
      make_doc({"a b c", "m n", "x y z", "d e f", "p q", "r s t"});
  IdentityParaphraser identity_;
};

TEST_F(ExtraTest, InsertsBetweenAlignedSentences) {
  // Index 2 lies between aligned indices 0 and 3.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const NoisedDoc out = apply_extra(clean_, article_, 1, rng, identity_);
    ASSERT_EQ(out.doc.size(), 3u);
    const std::string inserted = out.doc.sentences[out.noised_indices[0]].raw();
    if (inserted == "x y z" || inserted == "m n") {
      EXPECT_THAT(Raw(out.doc), ElementsAre("a b c", inserted, "d e f"));
      EXPECT_THAT(out.noised_indices, ElementsAre(1u));
    } else {
      // Indices 4 and 5 exceed every aligned index.
      EXPECT_THAT(Raw(out.doc), ElementsAre("a b c", "d e f", inserted));
      EXPECT_THAT(out.noised_indices, ElementsAre(2u));
    }
  }
}

TEST_F(ExtraTest, AllUnmatchedSentencesKeepArticleOrder) {
  Rng rng(4);
  const NoisedDoc out = apply_extra(clean_, article_, 4, rng, identity_);
  EXPECT_THAT(Raw(out.doc), ElementsAre("a b c", "m n", "x y z", "d e f",
                                        "p q", "r s t"));
  EXPECT_THAT(out.noised_indices, ElementsAre(1u, 2u, 4u, 5u));
}

TEST_F(ExtraTest, InsufficientArticle) {
  Rng rng(4);
  EXPECT_EQ(CodeOf([&] { apply_extra(clean_, article_, 5, rng, identity_); }),
            ErrorCode::kInsufficientArticle);
}

TEST_F(ExtraTest, LexicalParaphraserDropsInteriorUnit) {
  LexicalDropParaphraser lexical;
  Rng rng(8);
  const TokenizedSentence s = tokenize("one two three four");
  for (int i = 0; i < 100; ++i) {
    const TokenizedSentence p = lexical.Paraphrase(s, rng);
    ASSERT_EQ(p.tokens().size(), 3u);
    EXPECT_EQ(p.tokens().front(), "one");
    EXPECT_EQ(p.tokens().back(), "four");
  }
  EXPECT_EQ(lexical.Paraphrase(tokenize("two words"), rng).raw(), "two words");
}

TEST(ApplyExtra, IdentityMultisetProperty) {
  synthetic::Generator gen(15);
  IdentityParaphraser identity;
  Rng rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pair = gen.Next("x");
    const std::size_t k = 1 + rng() % 3;
    const NoisedDoc out = apply_extra(pair.summary, pair.article, k, rng,
                                      identity);
    ASSERT_EQ(out.doc.size(), pair.summary.size() + k);
    std::multiset<std::string> expected;
    for (const auto& s : pair.summary.sentences) expected.insert(s.raw());
    for (std::size_t idx : out.noised_indices) {
      const auto& s = out.doc.sentences[idx];
      EXPECT_NE(std::find(pair.article.sentences.begin(),
                          pair.article.sentences.end(), s),
                pair.article.sentences.end());
      expected.insert(s.raw());
    }
    std::multiset<std::string> actual;
    for (const auto& s : out.doc.sentences) actual.insert(s.raw());
    EXPECT_EQ(actual, expected);
    // Clean sentences keep their relative order.
    std::vector<std::string> survivors;
    for (std::size_t i = 0; i < out.doc.size(); ++i) {
      if (std::find(out.noised_indices.begin(), out.noised_indices.end(), i) ==
          out.noised_indices.end()) {
        survivors.push_back(out.doc.sentences[i].raw());
      }
    }
    EXPECT_EQ(survivors, pair.summary.raw_sentences());
  }
}

TEST(GenerateNoisyDataset, ThreeVariantsPerSummaryForEveryType) {
  synthetic::Generator gen(20);
  const auto pairs = gen.Corpus(100, "doc");
  IdentityParaphraser identity;
  for (NoiseType type : {NoiseType::kRepeat, NoiseType::kReplace,
                         NoiseType::kExtra, NoiseType::kMixture}) {
    const auto result = generate_noisy_dataset(
        pairs, type, NoiseDistribution::Default(), 7, identity);
    EXPECT_EQ(result.records.size(), 300u) << NoiseTypeName(type);
    EXPECT_TRUE(result.skipped.empty());
    for (std::size_t i = 0; i < result.records.size(); ++i) {
      EXPECT_EQ(result.records[i].source_id, pairs[i / 3].source_id);
      EXPECT_EQ(result.records[i].variant_index, i % 3);
      EXPECT_NE(result.records[i].noise_type, NoiseType::kMixture);
    }
  }
}

TEST(GenerateNoisyDataset, DeterministicAcrossRunsAndWorkers) {
  synthetic::Generator gen(21);
  const auto pairs = gen.Corpus(60, "doc");
  LexicalDropParaphraser lexical;
  const auto dist = NoiseDistribution({0.2, 0.5, 0.3});
  GenerationOptions serial;
  GenerationOptions threaded;
  threaded.workers = 4;
  const auto a = generate_noisy_dataset(pairs, NoiseType::kMixture, dist, 99,
                                        lexical, serial);
  const auto b = generate_noisy_dataset(pairs, NoiseType::kMixture, dist, 99,
                                        lexical, threaded);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_TRUE(SameRecord(a.records[i], b.records[i])) << i;
  }
  const auto c = generate_noisy_dataset(pairs, NoiseType::kMixture, dist, 100,
                                        lexical, serial);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    differing += a.records[i].seed != c.records[i].seed;
  }
  EXPECT_EQ(differing, a.records.size());
}

TEST(GenerateNoisyDataset, RecordsReplayFromSeed) {
  synthetic::Generator gen(22);
  const auto pairs = gen.Corpus(50, "doc");
  LexicalDropParaphraser lexical;
  const auto dist = NoiseDistribution({0.1, 0.6, 0.3});
  const auto result = generate_noisy_dataset(pairs, NoiseType::kMixture, dist,
                                             5, lexical);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const NoisyRecord& r = result.records[i];
    const auto& pair = pairs[i / 3];
    const NoisedDoc replay = apply_noise(r.noise_type, pair.summary,
                                         pair.article, dist, r.seed, lexical);
    EXPECT_EQ(replay.doc, r.noisy);
    EXPECT_EQ(replay.noised_indices, r.noised_indices);
    EXPECT_EQ(r.seed, derive_record_seed(5, r.source_id, r.variant_index));
  }
}

TEST(GenerateNoisyDataset, FailuresAreSkippedWithDiagnostics) {
  synthetic::Generator gen(23);
  auto pairs = gen.Corpus(4, "doc");
  pairs[1].article = SummaryDoc{};
  IdentityParaphraser identity;
  const auto result =
      generate_noisy_dataset(pairs, NoiseType::kReplace,
                             NoiseDistribution({0.0, 1.0}), 1, identity);
  EXPECT_EQ(result.records.size(), 9u);
  ASSERT_EQ(result.skipped.size(), 3u);
  EXPECT_EQ(result.skipped[0].source_id, "doc1");
  EXPECT_THAT(result.skipped[0].message, ::testing::HasSubstr("EmptyDocument"));
}

TEST(GenerateNoisyDataset, EmptyInput) {
  IdentityParaphraser identity;
  EXPECT_EQ(CodeOf([&] {
              generate_noisy_dataset({}, NoiseType::kRepeat,
                                     NoiseDistribution::Default(), 1, identity);
            }),
            ErrorCode::kEmptyCorpus);
}

TEST(GenerateNoisyDataset, NoiseRaisesMeanRepeatRate) {
  synthetic::Generator gen(24);
  const auto pairs = gen.Corpus(100, "doc");
  IdentityParaphraser identity;
  double clean_mean = 0.0;
  for (const auto& p : pairs) clean_mean += repeat_rate(p.summary);
  clean_mean /= pairs.size();
  for (NoiseType type : {NoiseType::kRepeat, NoiseType::kReplace,
                         NoiseType::kExtra, NoiseType::kMixture}) {
    const auto result = generate_noisy_dataset(
        pairs, type, NoiseDistribution::Default(), 3, identity);
    double noisy_mean = 0.0;
    for (const auto& r : result.records) noisy_mean += repeat_rate(r.noisy);
    noisy_mean /= result.records.size();
    EXPECT_GT(noisy_mean, clean_mean) << NoiseTypeName(type);
  }
}

TEST(NoiseType, NamesRoundTrip) {
  for (NoiseType t : {NoiseType::kRepeat, NoiseType::kReplace,
                      NoiseType::kExtra, NoiseType::kMixture}) {
    EXPECT_EQ(ParseNoiseType(NoiseTypeName(t)), t);
  }
  EXPECT_FALSE(ParseNoiseType("shuffle").has_value());
}

}  // namespace
}  // namespace sumdenoise
