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

#ifndef SUMDENOISE_RANDOM_H_
#define SUMDENOISE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace sumdenoise {

// mt19937_64 output is fixed by the standard; the draws below are built on
// raw engine output so results do not depend on the standard library's
// distribution implementations.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a, 64 bit.
std::uint64_t stable_hash(std::string_view text);

// Seed for one generated record.
std::uint64_t derive_record_seed(std::uint64_t base_seed,
                                 std::string_view source_id,
                                 std::size_t variant_index);

// Uniform double in [0, 1) with 53 bits of precision.
double uniform01(Rng& rng);

// Uniform integer in [0, n). n must be positive.
std::size_t uniform_index(Rng& rng, std::size_t n);

// k distinct values from [0, n), in draw order (partial Fisher-Yates).
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n,
                                                    std::size_t k);

}  // namespace sumdenoise

#endif  // SUMDENOISE_RANDOM_H_
