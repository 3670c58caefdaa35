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

// Exact minimum (k-distance) dominating sets for small grids and small
// general graphs.
//
// The search deepens the target size t from a packing lower bound. For each
// t it branches on the first uncovered vertex (in index order) over the
// vertices whose closed neighbourhood contains it, and prunes when the
// remaining picks times the largest closed neighbourhood cannot cover what
// is left. The first set found at the smallest feasible t is returned, so
// results depend only on the vertex order.

#ifndef GRIDDOM_ORACLE_HPP_
#define GRIDDOM_ORACLE_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "griddom/grid.hpp"

namespace griddom {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> time_limit;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(int best_upper_bound, std::vector<int> best_known,
                  int proven_lower_bound);

  // Size of the best dominating set known when the search stopped.
  int best_upper_bound() const { return best_upper_bound_; }
  // Vertex indices of that set.
  const std::vector<int>& best_known() const { return best_known_; }
  // Every size below this was exhausted without a solution.
  int proven_lower_bound() const { return proven_lower_bound_; }

 private:
  int best_upper_bound_;
  std::vector<int> best_known_;
  int proven_lower_bound_;
};

struct GraphDominationResult {
  std::vector<int> optimum;  // sorted vertex indices
  int gamma = 0;
  std::uint64_t nodes_explored = 0;
};

// Minimum dominating set of an undirected graph on vertices [0, vertex_count).
// The deepening starts at max(start_bound, ceil(V / (maxdeg+1))).
GraphDominationResult exact_min_dominating_graph(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    int start_bound = 0, const SearchBudget& budget = {});

struct OracleResult {
  VertexSet optimum;
  int gamma = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Minimum k-distance dominating set of g. Neighbourhoods are closed k-balls
// computed from coordinates; deepening starts at ceil(mn / (2k^2+2k+1)).
// Throws BudgetExhausted (vertex indices follow GridSpec::index) if the
// budget runs out first.
OracleResult exact_min_dominating(const GridSpec& g, int k,
                                  const SearchBudget& budget = {});

int exact_gamma_k(const GridSpec& g, int k, const SearchBudget& budget = {});

// Solves gamma^k(g) from coordinates and gamma(g^k) from power_graph_edges
// as a plain graph, and reports whether they agree.
bool cross_check_power(const GridSpec& g, int k,
                       const SearchBudget& budget = {});

}  // namespace griddom

#endif  // GRIDDOM_ORACLE_HPP_
