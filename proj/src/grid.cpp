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

#include "griddom/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>

namespace griddom {

namespace {

void require_in_bounds(const GridSpec& g, Vertex v) {
  if (!g.contains(v)) {
    throw std::out_of_range("vertex (" + std::to_string(v.x) + "," +
                            std::to_string(v.y) + ") outside " +
                            std::to_string(g.m()) + "x" +
                            std::to_string(g.n()) + " grid");
  }
}

void require_positive_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

GridSpec::GridSpec(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("grid dimensions must be positive, got " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
}

std::vector<Vertex> GridSpec::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (int x = 1; x <= m_; ++x) {
    for (int y = 1; y <= n_; ++y) out.push_back({x, y});
  }
  return out;
}

VertexSet::VertexSet(std::initializer_list<Vertex> init)
    : VertexSet(std::vector<Vertex>(init)) {}

VertexSet::VertexSet(std::vector<Vertex> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

bool VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it != elements_.end() && *it == v) return false;
  elements_.insert(it, v);
  return true;
}

bool VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v) return false;
  elements_.erase(it);
  return true;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out.elements_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(elements_.begin(), elements_.end(),
                      other.elements_.begin(), other.elements_.end(),
                      std::back_inserter(out.elements_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(out.elements_));
  return out;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

int manhattan_distance(Vertex u, Vertex v) {
  return std::abs(u.x - v.x) + std::abs(u.y - v.y);
}

VertexSet neighbors(const GridSpec& g, Vertex v) {
  return k_neighbors(g, v, 1);
}

VertexSet k_neighbors(const GridSpec& g, Vertex v, int k) {
  VertexSet ball = closed_ball(g, v, k);
  ball.erase(v);
  return ball;
}

VertexSet closed_ball(const GridSpec& g, Vertex v, int k) {
  require_in_bounds(g, v);
  require_positive_k(k);
  std::vector<Vertex> out;
  // Iterating x then y keeps the output already sorted.
  for (int x = std::max(1, v.x - k); x <= std::min(g.m(), v.x + k); ++x) {
    int reach = k - std::abs(x - v.x);
    for (int y = std::max(1, v.y - reach); y <= std::min(g.n(), v.y + reach);
         ++y) {
      out.push_back({x, y});
    }
  }
  return VertexSet(std::move(out));
}

VertexSet boundary(const GridSpec& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (v.x == 1 || v.x == g.m() || v.y == 1 || v.y == g.n()) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

SuperGrid super_grid(const GridSpec& g, int k) {
  require_positive_k(k);
  return SuperGrid{GridSpec(g.m() + 2 * k, g.n() + 2 * k), k};
}

int k_ball_size(int k) {
  require_positive_k(k);
  return 2 * k * k + 2 * k + 1;
}

std::vector<std::pair<Vertex, Vertex>> power_graph_edges(const GridSpec& g,
                                                         int k) {
  require_positive_k(k);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : g.vertices()) {
    for (Vertex v : k_neighbors(g, u, k)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace griddom
