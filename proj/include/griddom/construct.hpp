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

// Centralized (k-distance) dominating-set construction on grids, the closed
// form bounds around it, and a domination checker.

#ifndef GRIDDOM_CONSTRUCT_HPP_
#define GRIDDOM_CONSTRUCT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "griddom/diagonal.hpp"
#include "griddom/grid.hpp"
#include "griddom/rational.hpp"

namespace griddom {

struct DominationReport {
  bool dominated = false;
  VertexSet uncovered;
  // coverage[g.index(v)] = |{u in s : d(u,v) <= k}|.
  std::vector<int> coverage;
  // multiplicity -> number of vertices covered that many times.
  std::map<int, std::int64_t> histogram;
};

// Throws std::out_of_range if a member of s lies outside g.
DominationReport verify_k_domination(const GridSpec& g, const VertexSet& s,
                                     int k);

struct ConstructionResult {
  VertexSet dominating_set;
  DiagonalParams params;
  // In-grid members of the super-grid diagonalization.
  VertexSet cluster_part;
  // Grid images of the out-of-grid members. For k == 1 this equals
  // orphans(g, params).
  VertexSet orphan_part;
  // Greedy additions for anything the projection left uncovered.
  VertexSet repaired;
};

// Diagonalizes super_grid(g, p.k) with p, projects it into g, then repairs
// any vertex still uncovered. `p.r` refers to super-grid coordinates.
ConstructionResult construct(const GridSpec& g, const DiagonalParams& p);

// Covers whatever `base` leaves uncovered: repeatedly takes the
// lexicographically first uncovered vertex and adds the vertex within distance
// k of it that covers the most uncovered vertices (ties to the smaller one).
VertexSet repair_uncovered(const GridSpec& g, const VertexSet& base, int k);

// Smallest construct() result over every residue and both orientations.
// Ties go to the smaller r, then to Orientation::kXY.
ConstructionResult construct_best(const GridSpec& g, int k);

class FormulaNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact domination number floor((m+2)(n+2)/5) - 4, valid for 16 <= m <= n
// (arguments are normalized so m <= n). Throws FormulaNotApplicable outside
// that range.
std::int64_t gamma_formula(int m, int n);

struct BoundsReport {
  // k == 1 and 16 <= min(m,n) only.
  std::optional<std::int64_t> gamma_exact_formula;
  // Size bound of construct(): ceil((m+2)(n+2)/5) for k == 1, and
  // ceil((m+2k)(n+2k)/N + N/4) with N = 2k^2+2k+1 otherwise.
  std::int64_t construction_upper = 0;
  // Size bound of a diagonalization of g itself: ceil(mn/5) for k == 1,
  // ceil(mn/N + N/4) otherwise.
  std::int64_t diag_cardinality_upper = 0;
  // Packing lower bound ceil(mn/N) on any k-distance dominating set.
  std::int64_t lower = 0;
  Rational ratio_upper;  // construction_upper / lower
};

BoundsReport bounds(const GridSpec& g, int k);

// construction_upper / lower for each square grid m = n in `sizes`, which
// must be strictly increasing.
std::vector<Rational> ratio_trend(int k, std::span<const int> sizes);

// ceil(a / b) for a >= 0, b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

// ceil(cells / N + N / 4), computed exactly as ceil((4 cells + N^2) / 4N).
std::int64_t diagonal_cardinality_bound(std::int64_t cells, int k);

}  // namespace griddom

#endif  // GRIDDOM_CONSTRUCT_HPP_
