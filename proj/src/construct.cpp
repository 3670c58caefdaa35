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

#include "griddom/construct.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace griddom {

DominationReport verify_k_domination(const GridSpec& g, const VertexSet& s,
                                     int k) {
  DominationReport report;
  report.coverage.assign(g.vertex_count(), 0);
  for (Vertex u : s) {
    for (Vertex v : closed_ball(g, u, k)) ++report.coverage[g.index(v)];
  }
  std::vector<Vertex> uncovered;
  for (std::size_t i = 0; i < report.coverage.size(); ++i) {
    ++report.histogram[report.coverage[i]];
    if (report.coverage[i] == 0) uncovered.push_back(g.vertex_at(i));
  }
  report.uncovered = VertexSet(std::move(uncovered));
  report.dominated = report.uncovered.empty();
  return report;
}

VertexSet repair_uncovered(const GridSpec& g, const VertexSet& base, int k) {
  std::vector<int> coverage = verify_k_domination(g, base, k).coverage;
  VertexSet added;
  std::size_t cursor = 0;
  while (true) {
    while (cursor < coverage.size() && coverage[cursor] > 0) ++cursor;
    if (cursor == coverage.size()) break;
    Vertex target = g.vertex_at(cursor);
    Vertex best{};
    int best_gain = -1;
    for (Vertex c : closed_ball(g, target, k)) {
      int gain = 0;
      for (Vertex v : closed_ball(g, c, k)) gain += coverage[g.index(v)] == 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    added.insert(best);
    for (Vertex v : closed_ball(g, best, k)) ++coverage[g.index(v)];
  }
  return added;
}

ConstructionResult construct(const GridSpec& g, const DiagonalParams& p) {
  p.validate();
  const SuperGrid sg = super_grid(g, p.k);
  ProjectionResult projection = project(g, diagonalize(sg.grid, p), p.k);

  ConstructionResult result;
  result.params = p;
  result.cluster_part = std::move(projection.kept);
  result.orphan_part = std::move(projection.added);
  VertexSet placed = result.cluster_part.united(result.orphan_part);
  result.repaired = repair_uncovered(g, placed, p.k);
  result.dominating_set = placed.united(result.repaired);
  return result;
}

ConstructionResult construct_best(const GridSpec& g, int k) {
  std::optional<ConstructionResult> best;
  const int modulus = k_ball_size(k);
  for (Orientation o : {Orientation::kXY, Orientation::kSwapped}) {
    for (int r = 0; r < modulus; ++r) {
      ConstructionResult candidate = construct(g, {k, r, o});
      if (!best) {
        best = std::move(candidate);
        continue;
      }
      const auto key = [](const ConstructionResult& c) {
        return std::tuple(c.dominating_set.size(), c.params.r,
                          c.params.orientation == Orientation::kXY ? 0 : 1);
      };
      if (key(candidate) < key(*best)) best = std::move(candidate);
    }
  }
  return *std::move(best);
}

std::int64_t gamma_formula(int m, int n) {
  if (m > n) std::swap(m, n);
  if (m < 16) {
    throw FormulaNotApplicable(
        "domination number formula requires 16 <= m <= n, got " +
        std::to_string(m) + "x" + std::to_string(n));
  }
  return static_cast<std::int64_t>(m + 2) * (n + 2) / 5 - 4;
}

std::int64_t diagonal_cardinality_bound(std::int64_t cells, int k) {
  const std::int64_t modulus = k_ball_size(k);
  return ceil_div(4 * cells + modulus * modulus, 4 * modulus);
}

BoundsReport bounds(const GridSpec& g, int k) {
  const std::int64_t modulus = k_ball_size(k);
  const std::int64_t m = g.m();
  const std::int64_t n = g.n();
  const std::int64_t super_cells = (m + 2 * k) * (n + 2 * k);

  BoundsReport report;
  report.lower = ceil_div(m * n, modulus);
  if (k == 1) {
    report.construction_upper = ceil_div(super_cells, 5);
    report.diag_cardinality_upper = ceil_div(m * n, 5);
    if (std::min(m, n) >= 16) {
      report.gamma_exact_formula = gamma_formula(g.m(), g.n());
    }
  } else {
    report.construction_upper = diagonal_cardinality_bound(super_cells, k);
    report.diag_cardinality_upper = diagonal_cardinality_bound(m * n, k);
  }
  report.ratio_upper = Rational(report.construction_upper, report.lower);
  return report;
}

std::vector<Rational> ratio_trend(int k, std::span<const int> sizes) {
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::greater_equal<>()) !=
      sizes.end()) {
    throw std::invalid_argument("sizes must be strictly increasing");
  }
  std::vector<Rational> out;
  out.reserve(sizes.size());
  for (int size : sizes) out.push_back(bounds(GridSpec(size, size), k).ratio_upper);
  return out;
}

}  // namespace griddom
