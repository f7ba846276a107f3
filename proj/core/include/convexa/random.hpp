// Copyright 2026 The Convexa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVEXA_RANDOM_HPP_
#define CONVEXA_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace convexa {

inline constexpr std::uint64_t kDefaultSeed = 1;

// std::mt19937_64 is fully specified by the standard, unlike the std
// distributions, so all sampling goes through the helpers below to keep
// results identical across standard libraries.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream for sub-task `index` of a computation seeded with
// `master`.
Rng make_stream(std::uint64_t master, std::uint64_t index);

// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

// Uniform real in [0, 1) with 53 random bits.
double uniform_real(Rng& rng);

enum class TieBreak { kLexSmallest, kRandom };

// How to order equally scored candidates: by smallest identifier, or
// uniformly at random from `seed`.
struct TieRule {
  TieBreak kind = TieBreak::kLexSmallest;
  std::uint64_t seed = kDefaultSeed;
};

}  // namespace convexa

#endif  // CONVEXA_RANDOM_HPP_
