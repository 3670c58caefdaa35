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

#include "griddom/greedy.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "griddom/construct.hpp"
#include "random_index.hpp"

namespace griddom {

std::string_view to_string(TieBreak t) {
  switch (t) {
    case TieBreak::kLex:
      return "lex";
    case TieBreak::kRandom:
      return "random";
    case TieBreak::kAdversarial:
      return "adversarial";
  }
  return "lex";
}

TieBreak tie_break_from_string(std::string_view name) {
  if (name == "lex") return TieBreak::kLex;
  if (name == "random") return TieBreak::kRandom;
  if (name == "adversarial") return TieBreak::kAdversarial;
  throw std::invalid_argument("unknown tie-break '" + std::string(name) + "'");
}

namespace {

int floor_mod(int a, int b) { return ((a % b) + b) % b; }

// Lower-left corners of the 2x2 pockets between lattice points, restricted to
// pockets lying entirely inside g.
std::vector<Vertex> pocket_corners(const GridSpec& g, Vertex anchor) {
  std::vector<Vertex> corners;
  const int first_x = floor_mod(anchor.x, 3) + 1;
  const int first_y = floor_mod(anchor.y, 3) + 1;
  for (int x = first_x; x + 1 <= g.m(); x += 3) {
    for (int y = first_y; y + 1 <= g.n(); y += 3) corners.push_back({x, y});
  }
  return corners;
}

}  // namespace

VertexSet spacing3_lattice(const GridSpec& g, Vertex anchor) {
  std::vector<Vertex> points;
  for (int x = floor_mod(anchor.x - 1, 3) + 1; x <= g.m(); x += 3) {
    for (int y = floor_mod(anchor.y - 1, 3) + 1; y <= g.n(); y += 3) {
      points.push_back({x, y});
    }
  }
  return VertexSet(std::move(points));
}

VertexSet adversarial_pattern(const GridSpec& g, Vertex anchor) {
  VertexSet pattern = spacing3_lattice(g, anchor);
  for (Vertex c : pocket_corners(g, anchor)) {
    // The anti-diagonal pair of the pocket covers all four of its cells.
    pattern.insert({c.x, c.y + 1});
    pattern.insert({c.x + 1, c.y});
  }
  return pattern.united(repair_uncovered(g, pattern, 1));
}

VertexSet greedy_dominate(const GridSpec& g, const GreedyConfig& cfg) {
  if (cfg.tie_break == TieBreak::kRandom && !cfg.seed) {
    throw std::invalid_argument("random tie-break requires a seed");
  }
  std::mt19937_64 rng(cfg.seed.value_or(0));

  const std::size_t count = g.vertex_count();
  std::vector<char> white(count, 1);
  std::vector<std::vector<std::size_t>> adjacency(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (Vertex u : neighbors(g, g.vertex_at(i))) {
      adjacency[i].push_back(g.index(u));
    }
  }

  VertexSet lattice;
  VertexSet pattern;
  VertexSet black;
  std::size_t white_left = count;
  std::vector<std::size_t> best;
  while (white_left > 0) {
    best.clear();
    int best_gain = -1;
    for (std::size_t i = 0; i < count; ++i) {
      if (!white[i]) continue;
      int gain = 1;
      for (std::size_t j : adjacency[i]) gain += white[j];
      if (gain > best_gain) {
        best_gain = gain;
        best.clear();
      }
      if (gain == best_gain) best.push_back(i);
    }

    std::size_t pick = best.front();
    if (cfg.tie_break == TieBreak::kRandom) {
      pick = best[internal::uniform_index(rng, best.size())];
    } else if (cfg.tie_break == TieBreak::kAdversarial && !black.empty()) {
      auto rank = [&](std::size_t i) {
        Vertex v = g.vertex_at(i);
        if (lattice.contains(v)) return 0;
        if (pattern.contains(v)) return 1;
        return 2;
      };
      for (std::size_t i : best) {
        if (rank(i) < rank(pick)) pick = i;
      }
    }

    const Vertex chosen = g.vertex_at(pick);
    if (cfg.tie_break == TieBreak::kAdversarial && black.empty()) {
      lattice = spacing3_lattice(g, chosen);
      pattern = adversarial_pattern(g, chosen);
    }
    black.insert(chosen);
    white_left -= white[pick];
    white[pick] = 0;
    for (std::size_t j : adjacency[pick]) {
      white_left -= white[j];
      white[j] = 0;
    }
  }
  return black;
}

std::int64_t greedy_worst_case_formula(int m, int n) {
  const std::int64_t cm = (m + 2) / 3;
  const std::int64_t cn = (n + 2) / 3;
  const std::int64_t fm = m / 3;
  const std::int64_t fn = n / 3;
  return cm * cn + 2 * fm * fn;
}

}  // namespace griddom
