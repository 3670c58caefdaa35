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

#include "griddom/diagonal.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace griddom {

std::string_view to_string(Orientation o) {
  return o == Orientation::kXY ? "xy" : "swapped";
}

Orientation orientation_from_string(std::string_view name) {
  if (name == "xy") return Orientation::kXY;
  if (name == "swapped") return Orientation::kSwapped;
  throw std::invalid_argument("unknown orientation '" + std::string(name) +
                              "'");
}

void DiagonalParams::validate() const {
  int modulus = k_ball_size(k);  // throws for k < 1
  if (r < 0 || r >= modulus) {
    throw std::invalid_argument("residue r=" + std::to_string(r) +
                                " outside [0," + std::to_string(modulus) +
                                ")");
  }
}

int residue(Vertex v, int k, Orientation orientation) {
  const int modulus = k_ball_size(k);
  if (orientation == Orientation::kSwapped) std::swap(v.x, v.y);
  long long value = static_cast<long long>(k) * v.y -
                    static_cast<long long>(k + 1) * v.x;
  long long reduced = value % modulus;
  if (reduced < 0) reduced += modulus;
  return static_cast<int>(reduced);
}

VertexSet diagonalize(const GridSpec& g, const DiagonalParams& p) {
  p.validate();
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (residue(v, p.k, p.orientation) == p.r) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet orphans(const GridSpec& g, const DiagonalParams& p) {
  p.validate();
  const SuperGrid sg = super_grid(g, p.k);
  std::vector<Vertex> inside;
  for (Vertex u : diagonalize(sg.grid, p)) {
    Vertex inner = sg.unembed(u);
    if (g.contains(inner)) inside.push_back(inner);
  }
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    bool covered = std::any_of(inside.begin(), inside.end(), [&](Vertex u) {
      return manhattan_distance(u, v) <= p.k;
    });
    if (!covered) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::optional<Vertex> nearest_in_grid(const GridSpec& g, Vertex outside,
                                      int k) {
  Vertex clamped{std::clamp(outside.x, 1, g.m()),
                 std::clamp(outside.y, 1, g.n())};
  if (manhattan_distance(clamped, outside) > k) return std::nullopt;
  return clamped;
}

ProjectionResult project(const GridSpec& g, const VertexSet& super_set,
                         int k) {
  const SuperGrid sg = super_grid(g, k);
  ProjectionResult result;
  for (Vertex u : super_set) {
    if (!sg.grid.contains(u)) {
      throw std::out_of_range("projection input outside the super-grid");
    }
    Vertex inner = sg.unembed(u);
    if (g.contains(inner)) {
      result.kept.insert(inner);
    } else if (auto image = nearest_in_grid(g, inner, k)) {
      result.added.insert(*image);
    } else {
      result.dropped.insert(u);
    }
  }
  result.projected = result.kept.united(result.added);
  return result;
}

}  // namespace griddom
