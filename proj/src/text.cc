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

#include "sumdenoise/text.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "sumdenoise/errors.h"

namespace sumdenoise {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool IsPunct(char c) { return std::ispunct(static_cast<unsigned char>(c)); }

char ToLower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Lowercased abbreviations that never end a sentence.
constexpr std::array<std::string_view, 24> kAbbreviations = {
    "mr",  "mrs", "ms",   "dr",  "prof", "sr",  "jr",   "st",
    "vs",  "etc", "inc",  "ltd", "co",   "corp", "gen", "gov",
    "sen", "rep", "capt", "lt",  "col",  "sgt", "no",  "mt"};

bool IsAbbreviation(std::string_view word) {
  // Strip leading punctuation such as an opening quote.
  while (!word.empty() && IsPunct(word.front())) word.remove_prefix(1);
  if (word.size() == 1 && std::isupper(static_cast<unsigned char>(word[0]))) {
    return true;  // initial, e.g. "J. Smith"
  }
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(), ToLower);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool IsCloser(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool HasToken(std::string_view piece) {
  return std::any_of(piece.begin(), piece.end(),
                     [](char c) { return !IsSpace(c) && !IsPunct(c); });
}

}  // namespace

std::vector<std::string> SummaryDoc::raw_sentences() const {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) out.push_back(s.raw());
  return out;
}

TokenizedSentence tokenize(std::string_view raw) {
  TokenizedSentence sentence;
  sentence.raw_ = std::string(raw);
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && IsSpace(raw[i])) ++i;
    std::size_t j = i;
    while (j < raw.size() && !IsSpace(raw[j])) ++j;
    std::string_view unit = raw.substr(i, j - i);
    while (!unit.empty() && IsPunct(unit.front())) unit.remove_prefix(1);
    while (!unit.empty() && IsPunct(unit.back())) unit.remove_suffix(1);
    if (!unit.empty()) {
      std::string token(unit);
      std::transform(token.begin(), token.end(), token.begin(), ToLower);
      sentence.tokens_.push_back(std::move(token));
    }
    i = j;
  }
  if (sentence.tokens_.empty()) {
    throw Error(ErrorCode::kEmptySentence,
                "no tokens in \"" + std::string(raw) + "\"");
  }
  sentence.types_ = sentence.tokens_;
  std::sort(sentence.types_.begin(), sentence.types_.end());
  sentence.types_.erase(
      std::unique(sentence.types_.begin(), sentence.types_.end()),
      sentence.types_.end());
  return sentence;
}

std::vector<TokenizedSentence> split_sentences(std::string_view raw_text) {
  std::vector<TokenizedSentence> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = Trim(raw_text.substr(start, end - start));
    if (HasToken(piece)) out.push_back(tokenize(piece));
    start = end;
  };
  for (std::size_t i = 0; i < raw_text.size(); ++i) {
    if (!IsTerminator(raw_text[i])) continue;
    std::size_t end = i + 1;
    while (end < raw_text.size() &&
           (IsTerminator(raw_text[end]) || IsCloser(raw_text[end]))) {
      ++end;
    }
    if (end < raw_text.size() && !IsSpace(raw_text[end])) continue;
    if (raw_text[i] == '.') {
      std::size_t word_begin = i;
      while (word_begin > start && !IsSpace(raw_text[word_begin - 1])) {
        --word_begin;
      }
      if (IsAbbreviation(raw_text.substr(word_begin, i - word_begin))) {
        continue;
      }
    }
    emit(end);
    i = end - 1;
  }
  emit(raw_text.size());
  if (out.empty()) {
    throw Error(ErrorCode::kEmptySentence, "no sentences in input text");
  }
  return out;
}

SummaryDoc make_doc(const std::vector<std::string>& sentences,
                    std::string source_id) {
  SummaryDoc doc;
  doc.source_id = std::move(source_id);
  doc.sentences.reserve(sentences.size());
  for (const auto& s : sentences) doc.sentences.push_back(tokenize(s));
  return doc;
}

double containment(const std::vector<std::string>& a_types,
                   const std::vector<std::string>& b_types) {
  if (a_types.empty()) return 0.0;
  std::size_t shared = 0;
  auto a = a_types.begin();
  auto b = b_types.begin();
  while (a != a_types.end() && b != b_types.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++shared;
      ++a;
      ++b;
    }
  }
  return static_cast<double>(shared) / static_cast<double>(a_types.size());
}

double unigram_overlap(const TokenizedSentence& a, const TokenizedSentence& b) {
  return containment(a.types(), b.types());
}

double sentence_similarity(const TokenizedSentence& a,
                           const TokenizedSentence& b) {
  const double ab = unigram_overlap(a, b);
  const double ba = unigram_overlap(b, a);
  if (ab + ba == 0.0) return 0.0;
  return 2.0 * ab * ba / (ab + ba);
}

}  // namespace sumdenoise
