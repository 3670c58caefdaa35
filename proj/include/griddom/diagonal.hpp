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

// k-diagonal patterns and the projection of a super-grid pattern back into
// the grid.
//
// A k-diagonal pattern is a subset of one residue class of
//   k*y - (k+1)*x  (mod 2k^2 + 2k + 1).
// Any two members are at distance >= 2k+1, and on an unbounded lattice every
// cell lies within distance k of exactly one member. Taking the whole class
// restricted to a grid is therefore a maximal pattern (a diagonalization).

#ifndef GRIDDOM_DIAGONAL_HPP_
#define GRIDDOM_DIAGONAL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "griddom/grid.hpp"

namespace griddom {

enum class Orientation {
  kXY,       // k*y - (k+1)*x
  kSwapped,  // k*x - (k+1)*y
};

std::string_view to_string(Orientation o);
// Throws std::invalid_argument on an unknown name.
Orientation orientation_from_string(std::string_view name);

struct DiagonalParams {
  int k = 1;
  int r = 0;
  Orientation orientation = Orientation::kXY;

  // Throws std::invalid_argument unless k >= 1 and 0 <= r < k_ball_size(k).
  void validate() const;

  friend bool operator==(const DiagonalParams&,
                         const DiagonalParams&) = default;
};

// (k*y - (k+1)*x) mod (2k^2+2k+1), reduced into [0, modulus). Swapped
// orientation exchanges x and y first.
int residue(Vertex v, int k, Orientation orientation = Orientation::kXY);

// The full residue class {v in g : residue(v) == p.r}, in g's coordinates.
VertexSet diagonalize(const GridSpec& g, const DiagonalParams& p);

// Vertices of g left uncovered by the in-grid part of the super-grid
// diagonalization. `p` is interpreted in the coordinates of
// super_grid(g, p.k); the result is in g's coordinates. For k == 1 these are
// exactly the grid vertices adjacent to out-of-grid pattern members.
VertexSet orphans(const GridSpec& g, const DiagonalParams& p);

// Nearest vertex of g to `outside` (given in g's coordinates, possibly out of
// bounds) if it lies within distance k. The nearest grid vertex under the
// Manhattan metric is the coordinate-wise clamp, which is unique, so no
// tie-break is ever needed.
std::optional<Vertex> nearest_in_grid(const GridSpec& g, Vertex outside,
                                      int k);

struct ProjectionResult {
  VertexSet projected;  // kept ∪ added, in g coordinates
  VertexSet kept;       // super_set ∩ V, in g coordinates
  VertexSet added;      // images of super_set \ V, in g coordinates
  VertexSet dropped;    // super_set \ V with no grid vertex within k,
                        // in super-grid coordinates
};

// Maps each member of super_set (coordinates of super_grid(g, k)) into g:
// in-grid members are kept, out-of-grid members move to their nearest grid
// vertex when one lies within distance k and are dropped otherwise.
// Throws std::out_of_range for members outside the super-grid.
ProjectionResult project(const GridSpec& g, const VertexSet& super_set, int k);

}  // namespace griddom

#endif  // GRIDDOM_DIAGONAL_HPP_
