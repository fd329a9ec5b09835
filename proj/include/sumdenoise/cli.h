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

#ifndef SUMDENOISE_CLI_H_
#define SUMDENOISE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sumdenoise {

enum ExitCode : int { kExitOk = 0, kExitProcessing = 1, kExitUsage = 2 };

// Subcommands: noise, denoise, eval, analyze, stats. args excludes the
// program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace sumdenoise

#endif  // SUMDENOISE_CLI_H_
