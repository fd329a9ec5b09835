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

#ifndef SUMDENOISE_TEXT_H_
#define SUMDENOISE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace sumdenoise {

// One sentence: its surface form plus lowercased, punctuation-stripped
// unigrams. `types` is the sorted, deduplicated contents of `tokens`.
class TokenizedSentence {
 public:
  TokenizedSentence() = default;

  const std::string& raw() const { return raw_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<std::string>& types() const { return types_; }

  bool operator==(const TokenizedSentence& other) const {
    return raw_ == other.raw_;
  }

 private:
  friend TokenizedSentence tokenize(std::string_view raw);

  std::string raw_;
  std::vector<std::string> tokens_;
  std::vector<std::string> types_;
};

// Ordered sentence list for a summary or an article.
struct SummaryDoc {
  std::vector<TokenizedSentence> sentences;
  std::string source_id;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }

  // Raw sentence strings, in order.
  std::vector<std::string> raw_sentences() const;

  bool operator==(const SummaryDoc& other) const {
    return sentences == other.sentences;
  }
};

// Throws Error(kEmptySentence) when no token survives normalization.
TokenizedSentence tokenize(std::string_view raw);

// Splits on '.', '!' or '?' (optionally followed by closing quotes or
// brackets) when followed by whitespace, except after a known abbreviation
// or a single capital letter initial.
std::vector<TokenizedSentence> split_sentences(std::string_view raw_text);

SummaryDoc make_doc(const std::vector<std::string>& sentences,
                    std::string source_id = {});

// Fraction of a's distinct unigrams that also occur in b.
double unigram_overlap(const TokenizedSentence& a, const TokenizedSentence& b);

// Same containment, with b given as a sorted type set.
double containment(const std::vector<std::string>& a_types,
                   const std::vector<std::string>& b_types);

// Harmonic mean of the two directional overlaps; 0 when both are 0.
double sentence_similarity(const TokenizedSentence& a,
                           const TokenizedSentence& b);

}  // namespace sumdenoise

#endif  // SUMDENOISE_TEXT_H_
