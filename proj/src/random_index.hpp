// Copyright 2026 The griddom Authors.
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

#ifndef GRIDDOM_SRC_RANDOM_INDEX_HPP_
#define GRIDDOM_SRC_RANDOM_INDEX_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace griddom::internal {

// Uniform index in [0, n) by rejection on the raw engine output.
// std::uniform_int_distribution is implementation-defined, which would make
// seeded runs differ between standard libraries.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

}  // namespace griddom::internal

#endif  // GRIDDOM_SRC_RANDOM_INDEX_HPP_
