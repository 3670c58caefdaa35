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

#include "griddom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "griddom/construct.hpp"

namespace griddom {

BudgetExhausted::BudgetExhausted(int best_upper_bound,
                                 std::vector<int> best_known,
                                 int proven_lower_bound)
    : std::runtime_error("search budget exhausted; best known size " +
                         std::to_string(best_upper_bound) +
                         ", proven lower bound " +
                         std::to_string(proven_lower_bound)),
      best_upper_bound_(best_upper_bound),
      best_known_(std::move(best_known)),
      proven_lower_bound_(proven_lower_bound) {}

namespace {

class Bits {
 public:
  explicit Bits(int size = 0)
      : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64, 0) {}

  static Bits full(int size) {
    Bits b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  void set(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, or -1.
  int first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
      }
    }
    return -1;
  }

  Bits without(const Bits& other) const {
    Bits out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] &= ~other.words_[w];
    }
    return out;
  }

  int overlap(const Bits& other) const {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += std::popcount(words_[w] & other.words_[w]);
    }
    return c;
  }

 private:
  int size_;
  std::vector<std::uint64_t> words_;
};

class Search {
 public:
  Search(std::vector<Bits> closed, const SearchBudget& budget)
      : closed_(std::move(closed)),
        n_(static_cast<int>(closed_.size())),
        budget_(budget),
        start_(std::chrono::steady_clock::now()) {
    covers_.resize(n_);
    for (int c = 0; c < n_; ++c) {
      for (int v = 0; v < n_; ++v) {
        if (closed_[c].test(v)) covers_[v].push_back(c);
      }
      max_closed_ = std::max(max_closed_, closed_[c].count());
    }
  }

  int max_closed() const { return max_closed_; }
  std::uint64_t nodes() const { return nodes_; }

  // Lexicographic-tie greedy, used as the fallback upper bound.
  std::vector<int> greedy() const {
    Bits uncovered = Bits::full(n_);
    std::vector<int> picked;
    while (uncovered.count() > 0) {
      int best = -1;
      int best_gain = -1;
      for (int c = 0; c < n_; ++c) {
        int gain = uncovered.overlap(closed_[c]);
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      picked.push_back(best);
      uncovered = uncovered.without(closed_[best]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  GraphDominationResult solve(int start_bound) {
    std::vector<int> fallback = greedy();
    const int upper = static_cast<int>(fallback.size());
    int t = std::max({start_bound, ceil_div_int(n_, std::max(1, max_closed_)),
                      n_ == 0 ? 0 : 1});
    for (; t < upper; ++t) {
      chosen_.clear();
      bool found = false;
      try {
        found = dfs(Bits::full(n_), t);
      } catch (const Stop&) {
        throw BudgetExhausted(upper, fallback, t);
      }
      if (found) {
        std::vector<int> optimum = chosen_;
        std::sort(optimum.begin(), optimum.end());
        return {optimum, t, nodes_};
      }
    }
    // Every size below the greedy set failed, so the greedy set is optimal.
    return {fallback, upper, nodes_};
  }

 private:
  struct Stop {};

  static int ceil_div_int(int a, int b) { return (a + b - 1) / b; }

  void charge() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) throw Stop{};
    if (budget_.time_limit && (nodes_ & 0x3FF) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
      throw Stop{};
    }
  }

  bool dfs(const Bits& uncovered, int remaining) {
    charge();
    int target = uncovered.first();
    if (target < 0) return true;
    if (remaining == 0) return false;
    if (remaining * max_closed_ < uncovered.count()) return false;
    for (int c : covers_[target]) {
      chosen_.push_back(c);
      if (dfs(uncovered.without(closed_[c]), remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Bits> closed_;
  int n_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<int>> covers_;
  int max_closed_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<int> chosen_;
};

}  // namespace

GraphDominationResult exact_min_dominating_graph(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    int start_bound, const SearchBudget& budget) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Bits> closed(vertex_count, Bits(vertex_count));
  for (int v = 0; v < vertex_count; ++v) closed[v].set(v);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw std::out_of_range("edge endpoint outside the vertex range");
    }
    closed[a].set(b);
    closed[b].set(a);
  }
  Search search(std::move(closed), budget);
  return search.solve(start_bound);
}

OracleResult exact_min_dominating(const GridSpec& g, int k,
                                  const SearchBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const int n = static_cast<int>(g.vertex_count());
  std::vector<Bits> closed(n, Bits(n));
  for (int i = 0; i < n; ++i) {
    for (Vertex v : closed_ball(g, g.vertex_at(i), k)) {
      closed[i].set(static_cast<int>(g.index(v)));
    }
  }
  const int start_bound = static_cast<int>(
      ceil_div(static_cast<std::int64_t>(n), k_ball_size(k)));
  Search search(std::move(closed), budget);
  GraphDominationResult raw = search.solve(start_bound);

  OracleResult result;
  std::vector<Vertex> members;
  for (int i : raw.optimum) members.push_back(g.vertex_at(i));
  result.optimum = VertexSet(std::move(members));
  result.gamma = raw.gamma;
  result.nodes_explored = raw.nodes_explored;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

int exact_gamma_k(const GridSpec& g, int k, const SearchBudget& budget) {
  return exact_min_dominating(g, k, budget).gamma;
}

bool cross_check_power(const GridSpec& g, int k, const SearchBudget& budget) {
  const int direct = exact_gamma_k(g, k, budget);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : power_graph_edges(g, k)) {
    edges.emplace_back(static_cast<int>(g.index(u)),
                       static_cast<int>(g.index(v)));
  }
  const int via_power =
      exact_min_dominating_graph(static_cast<int>(g.vertex_count()), edges, 0,
                                 budget)
          .gamma;
  return direct == via_power;
}

}  // namespace griddom
