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

#ifndef SUMDENOISE_DENOISE_H_
#define SUMDENOISE_DENOISE_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sumdenoise/metrics.h"
#include "sumdenoise/text.h"

namespace sumdenoise {

struct DenoiseResult {
  SummaryDoc output;
  std::vector<std::size_t> deleted_indices;  // strictly increasing
};

// Deletes each sentence whose unigram overlap with an earlier retained
// sentence is strictly greater than `threshold`. The first sentence always
// survives.
DenoiseResult overlap_denoise(const SummaryDoc& doc,
                              double threshold = kDefaultOverlapThreshold);

// Line protocol for external denoisers: one summary per line, sentences
// joined by " <S> ".
inline constexpr std::string_view kSentenceSeparator = "<S>";

// Throws Error(kProtocolViolation) if a sentence contains the separator or a
// newline.
std::string encode_channel_line(const SummaryDoc& doc);

// Throws Error(kProtocolViolation) when the line holds no sentence.
SummaryDoc decode_channel_line(std::string_view line,
                               std::string source_id = {});

// Sends a batch of request lines and returns the response lines.
using LineChannel =
    std::function<std::vector<std::string>(const std::vector<std::string>&)>;

// Encodes docs, sends them through the channel and parses the replies. Each
// output keeps the source_id of its input. A reply count that differs from the
// request count raises kProtocolViolation naming the first unmatched record.
std::vector<SummaryDoc> external_denoise(const std::vector<SummaryDoc>& docs,
                                         const LineChannel& channel);

// Runs `command` through /bin/sh, writes every line to its stdin, and returns
// the lines it printed on stdout. Throws kProtocolViolation if the command
// exits non-zero.
std::vector<std::string> run_line_command(const std::string& command,
                                          const std::vector<std::string>& lines);

LineChannel command_channel(std::string command);

}  // namespace sumdenoise

#endif  // SUMDENOISE_DENOISE_H_
