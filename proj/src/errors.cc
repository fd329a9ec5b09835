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

#include "sumdenoise/errors.h"

namespace sumdenoise {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kZeroNgrams: return "ZeroNgrams";
    case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kInvalidNoiseCount: return "InvalidNoiseCount";
    case ErrorCode::kInsufficientArticle: return "InsufficientArticle";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kAlignmentError: return "AlignmentError";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sumdenoise
