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

// The classic black/gray/white greedy for ordinary (k = 1) domination, and
// the spacing-3 lattice that shows how badly it can do on grids.

#ifndef GRIDDOM_GREEDY_HPP_
#define GRIDDOM_GREEDY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "griddom/grid.hpp"

namespace griddom {

enum class TieBreak {
  kLex,
  kRandom,
  // Prefer the spacing-3 lattice anchored at the first pick, then the
  // pocket repairs of adversarial_pattern, then lexicographic order.
  kAdversarial,
};

std::string_view to_string(TieBreak t);
TieBreak tie_break_from_string(std::string_view name);

struct GreedyConfig {
  TieBreak tie_break = TieBreak::kLex;
  std::optional<std::uint64_t> seed;  // required for kRandom

  static GreedyConfig lex() { return {TieBreak::kLex, std::nullopt}; }
  static GreedyConfig random(std::uint64_t seed) {
    return {TieBreak::kRandom, seed};
  }
  static GreedyConfig adversarial() {
    return {TieBreak::kAdversarial, std::nullopt};
  }
};

// Repeatedly turns black the white vertex with the most white neighbours
// until nothing is white. Throws std::invalid_argument for kRandom without a
// seed.
VertexSet greedy_dominate(const GridSpec& g, const GreedyConfig& cfg);

// ceil(m/3) ceil(n/3) + 2 floor(m/3) floor(n/3).
std::int64_t greedy_worst_case_formula(int m, int n);

// Spacing-3 lattice through `anchor`, plus two vertices for every fully
// in-grid 2x2 pocket the lattice leaves undominated, plus a lexicographic
// greedy repair for whatever is still uncovered near the edges.
VertexSet adversarial_pattern(const GridSpec& g, Vertex anchor = {1, 1});

// The lattice part of adversarial_pattern alone.
VertexSet spacing3_lattice(const GridSpec& g, Vertex anchor);

}  // namespace griddom

#endif  // GRIDDOM_GREEDY_HPP_
