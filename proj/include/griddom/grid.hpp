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

// Lattice geometry for m x n grid graphs.
//
// Coordinates are 1-based: vertex (1,1) is the lower-left corner and (m,n)
// the upper-right one. x runs over columns [1,m], y over rows [1,n].

#ifndef GRIDDOM_GRID_HPP_
#define GRIDDOM_GRID_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

namespace griddom {

struct Vertex {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

class GridSpec {
 public:
  // Throws std::invalid_argument unless m >= 1 and n >= 1.
  GridSpec(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t vertex_count() const {
    return static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_);
  }

  bool contains(Vertex v) const {
    return v.x >= 1 && v.x <= m_ && v.y >= 1 && v.y <= n_;
  }

  // Row-major index in lexicographic (x, y) order. Requires contains(v).
  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>(v.x - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v.y - 1);
  }
  Vertex vertex_at(std::size_t index) const {
    return {static_cast<int>(index / static_cast<std::size_t>(n_)) + 1,
            static_cast<int>(index % static_cast<std::size_t>(n_)) + 1};
  }

  // All vertices in lexicographic order.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int m_;
  int n_;
};

// Sorted, duplicate-free set of lattice coordinates.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init);
  explicit VertexSet(std::vector<Vertex> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  const std::vector<Vertex>& elements() const { return elements_; }

  bool contains(Vertex v) const;
  // Returns true if v was not already present.
  bool insert(Vertex v);
  bool erase(Vertex v);

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> elements_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// The k-super-grid of a grid: the grid padded by a ring of width `offset`.
// Vertex (x,y) of the inner grid is (x+offset, y+offset) of the super-grid.
struct SuperGrid {
  GridSpec grid;
  int offset;

  Vertex embed(Vertex inner) const {
    return {inner.x + offset, inner.y + offset};
  }
  Vertex unembed(Vertex outer) const {
    return {outer.x - offset, outer.y - offset};
  }
};

int manhattan_distance(Vertex u, Vertex v);

// In-bounds vertices at distance exactly 1. Throws std::out_of_range if v is
// not in g.
VertexSet neighbors(const GridSpec& g, Vertex v);

// In-bounds u != v with d(u,v) <= k.
VertexSet k_neighbors(const GridSpec& g, Vertex v, int k);

// In-bounds u with d(u,v) <= k, including v itself.
VertexSet closed_ball(const GridSpec& g, Vertex v, int k);

// Vertices with fewer than four neighbours.
VertexSet boundary(const GridSpec& g);

SuperGrid super_grid(const GridSpec& g, int k);

// Cell count of a closed radius-k diamond: 2k^2 + 2k + 1. This is also the
// modulus of the k-diagonal residue classes.
int k_ball_size(int k);

// All unordered pairs {u,v} (u < v lexicographically) with 0 < d(u,v) <= k,
// sorted. These are the edges of the k-th power of the grid.
std::vector<std::pair<Vertex, Vertex>> power_graph_edges(const GridSpec& g,
                                                         int k);

}  // namespace griddom

#endif  // GRIDDOM_GRID_HPP_
