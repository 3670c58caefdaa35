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

#include <gtest/gtest.h>

#include <stdexcept>

#include "support/oracles.hpp"

namespace griddom {
namespace {

using testing::CaseRng;
using testing::l1;

constexpr Orientation kBoth[] = {Orientation::kXY, Orientation::kSwapped};

TEST(OrientationTest, NamesRoundTrip) {
  for (Orientation o : kBoth) {
    EXPECT_EQ(orientation_from_string(to_string(o)), o);
  }
  EXPECT_THROW(orientation_from_string("diagonal"), std::invalid_argument);
}

TEST(DiagonalParamsTest, Validate) {
  EXPECT_NO_THROW((DiagonalParams{1, 4, Orientation::kXY}.validate()));
  EXPECT_THROW((DiagonalParams{1, 5, Orientation::kXY}.validate()),
               std::invalid_argument);
  EXPECT_THROW((DiagonalParams{2, -1, Orientation::kXY}.validate()),
               std::invalid_argument);
  EXPECT_THROW((DiagonalParams{0, 0, Orientation::kXY}.validate()),
               std::invalid_argument);
  EXPECT_NO_THROW((DiagonalParams{3, 24, Orientation::kSwapped}.validate()));
}

TEST(ResidueTest, Examples) {
  EXPECT_EQ(residue({1, 2}, 1), 0);
  EXPECT_EQ(residue({3, 3}, 2), 10);
  EXPECT_EQ(residue({2, 4}, 1), 0);
}

TEST(ResidueTest, SwappedExchangesCoordinates) {
  CaseRng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Vertex v{rng.between(-30, 30), rng.between(-30, 30)};
    const int k = rng.between(1, 4);
    const int big_n = 2 * k * k + 2 * k + 1;
    const int r = residue(v, k);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, big_n);
    EXPECT_EQ(((k * v.y - (k + 1) * v.x) % big_n + big_n) % big_n, r);
    EXPECT_EQ(residue(v, k, Orientation::kSwapped), residue({v.y, v.x}, k));
  }
}

TEST(DiagonalizeTest, Examples) {
  EXPECT_EQ(diagonalize(GridSpec(5, 5), {1, 0, Orientation::kXY}),
            (VertexSet{{1, 2}, {2, 4}, {3, 1}, {4, 3}, {5, 5}}));
  const int r11 = residue({1, 1}, 1);
  EXPECT_EQ(diagonalize(GridSpec(1, 1), {1, r11, Orientation::kXY}),
            (VertexSet{{1, 1}}));
}

// The 12x12 super-grid of a 10x10 grid: exactly one residue class has 28
// members, the others 29.
TEST(DiagonalizeTest, TwelveByTwelveHasATwentyEightMemberClass) {
  const GridSpec g(12, 12);
  int count28 = 0;
  for (int r = 0; r < 5; ++r) {
    const auto size = diagonalize(g, {1, r, Orientation::kXY}).size();
    EXPECT_TRUE(size == 28 || size == 29) << "r=" << r << " size " << size;
    count28 += size == 28;
  }
  EXPECT_EQ(count28, 1);
  EXPECT_EQ(diagonalize(g, {1, 1, Orientation::kXY}).size(), 28u);
}

TEST(DiagonalizeTest, IsTheWholeResidueClassAndMaximal) {
  for (int k = 1; k <= 3; ++k) {
    const GridSpec g(9, 11);
    const int big_n = 2 * k * k + 2 * k + 1;
    for (Orientation o : kBoth) {
      for (int r = 0; r < big_n; ++r) {
        const VertexSet d = diagonalize(g, {k, r, o});
        // Every vertex of the class is already in, so nothing can be added
        // without leaving the congruence.
        for (Vertex v : g.vertices()) {
          EXPECT_EQ(d.contains(v), residue(v, k, o) == r);
        }
      }
    }
  }
}

TEST(DiagonalizeTest, ClassesPartitionTheGrid) {
  const GridSpec g(7, 13);
  for (int k = 1; k <= 4; ++k) {
    std::size_t total = 0;
    for (int r = 0; r < 2 * k * k + 2 * k + 1; ++r) {
      total += diagonalize(g, {k, r, Orientation::kSwapped}).size();
    }
    EXPECT_EQ(total, g.vertex_count());
  }
}

// Inside the grid, away from the boundary, a k=1 diagonalization dominates
// every non-member exactly once.
TEST(DiagonalizeTest, InteriorUniqueness) {
  const GridSpec g(14, 9);
  for (Orientation o : kBoth) {
    for (int r = 0; r < 5; ++r) {
      const VertexSet d = diagonalize(g, {1, r, o});
      for (Vertex v : g.vertices()) {
        if (v.x == 1 || v.y == 1 || v.x == g.m() || v.y == g.n()) continue;
        if (d.contains(v)) continue;
        int hits = 0;
        for (Vertex u : d) hits += l1(u, v) == 1;
        EXPECT_EQ(hits, 1) << v;
      }
    }
  }
}

TEST(NearestInGridTest, ClampsWithinK) {
  const GridSpec g(4, 4);
  EXPECT_EQ(nearest_in_grid(g, {0, 2}, 1), (Vertex{1, 2}));
  EXPECT_EQ(nearest_in_grid(g, {5, 4}, 1), (Vertex{4, 4}));
  EXPECT_EQ(nearest_in_grid(g, {0, 0}, 1), std::nullopt);
  EXPECT_EQ(nearest_in_grid(g, {0, 0}, 2), (Vertex{1, 1}));
  EXPECT_EQ(nearest_in_grid(g, {-1, 3}, 1), std::nullopt);
  EXPECT_EQ(nearest_in_grid(g, {-1, 3}, 2), (Vertex{1, 3}));
}

// The clamp is the unique closest grid vertex; check against a scan.
TEST(NearestInGridTest, MatchesBruteForceScan) {
  const GridSpec g(5, 3);
  for (int k = 1; k <= 3; ++k) {
    for (int x = 1 - k; x <= g.m() + k; ++x) {
      for (int y = 1 - k; y <= g.n() + k; ++y) {
        if (g.contains({x, y})) continue;
        int best = 1 << 30;
        std::vector<Vertex> argmin;
        for (Vertex u : g.vertices()) {
          const int d = l1(u, {x, y});
          if (d < best) {
            best = d;
            argmin.clear();
          }
          if (d == best) argmin.push_back(u);
        }
        ASSERT_EQ(argmin.size(), 1u);
        const auto got = nearest_in_grid(g, {x, y}, k);
        if (best <= k) {
          EXPECT_EQ(got, argmin.front());
        } else {
          EXPECT_EQ(got, std::nullopt);
        }
      }
    }
  }
}

TEST(ProjectTest, InGridSetIsIdentity) {
  const GridSpec g(6, 6);
  const VertexSet inner{{2, 2}, {4, 5}};
  // Super-grid coordinates: shift by k = 1.
  const ProjectionResult p = project(g, {{3, 3}, {5, 6}}, 1);
  EXPECT_EQ(p.projected, inner);
  EXPECT_EQ(p.kept, inner);
  EXPECT_TRUE(p.added.empty());
  EXPECT_TRUE(p.dropped.empty());
}

TEST(ProjectTest, SuperGridCornerIsDropped) {
  const ProjectionResult p = project(GridSpec(4, 4), {{1, 1}}, 1);
  EXPECT_EQ(p.dropped, (VertexSet{{1, 1}}));
  EXPECT_TRUE(p.projected.empty());
}

TEST(ProjectTest, RejectsInputOutsideSuperGrid) {
  EXPECT_THROW(project(GridSpec(4, 4), {{0, 1}}, 1), std::out_of_range);
  EXPECT_THROW(project(GridSpec(4, 4), {{7, 1}}, 1), std::out_of_range);
}

// |U'| - 4 <= |U''| <= |U'| for the 10x10 grid and every class.
TEST(ProjectTest, FigureOneSizesForTenByTen) {
  const GridSpec g(10, 10);
  const SuperGrid sg = super_grid(g, 1);
  for (Orientation o : kBoth) {
    for (int r = 0; r < 5; ++r) {
      const VertexSet u = diagonalize(sg.grid, {1, r, o});
      const ProjectionResult p = project(g, u, 1);
      EXPECT_LE(p.projected.size(), u.size());
      EXPECT_GE(p.projected.size() + 4, u.size());
      EXPECT_EQ(p.kept.size() + p.added.size() + p.dropped.size(), u.size());
    }
  }
  const VertexSet u28 = diagonalize(sg.grid, {1, 1, Orientation::kXY});
  const ProjectionResult p = project(g, u28, 1);
  EXPECT_GE(p.projected.size(), 24u);
  EXPECT_LE(p.projected.size(), 28u);
}

TEST(OrphansTest, SingletonWithCentreInPattern) {
  const int r = residue({2, 2}, 1);  // (1,1) embedded in the 3x3 super-grid
  EXPECT_TRUE(orphans(GridSpec(1, 1), {1, r, Orientation::kXY}).empty());
}

// Direct definition: uncovered by the in-grid part of the super-grid class.
VertexSet orphans_by_definition(const GridSpec& g, const DiagonalParams& p) {
  const int k = p.k;
  const int big_n = 2 * k * k + 2 * k + 1;
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    bool covered = false;
    for (Vertex u : g.vertices()) {
      // u in super-grid coordinates is (u.x + k, u.y + k).
      const int ux = (p.orientation == Orientation::kXY ? u.x : u.y) + k;
      const int uy = (p.orientation == Orientation::kXY ? u.y : u.x) + k;
      const int res = ((k * uy - (k + 1) * ux) % big_n + big_n) % big_n;
      if (res == p.r && l1(u, v) <= k) covered = true;
    }
    if (!covered) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

TEST(OrphansTest, SixBySixMatchesDefinition) {
  const GridSpec g(6, 6);
  const DiagonalParams p{1, 0, Orientation::kXY};
  const VertexSet expected = orphans_by_definition(g, p);
  EXPECT_EQ(orphans(g, p), expected);
  EXPECT_FALSE(expected.empty());
}

TEST(OrphansTest, TenByTenOrphansAreTheProjectedRingImages) {
  const GridSpec g(10, 10);
  const DiagonalParams p{1, 1, Orientation::kXY};
  const ProjectionResult proj =
      project(g, diagonalize(super_grid(g, 1).grid, p), 1);
  EXPECT_EQ(orphans(g, p), proj.added.minus(proj.kept));
}

TEST(OrphansTest, LocalityAndDefinitionSweep) {
  CaseRng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = rng.between(1, 3);
    const GridSpec g(rng.between(1, 14), rng.between(1, 14));
    const int big_n = 2 * k * k + 2 * k + 1;
    for (Orientation o : kBoth) {
      for (int r = 0; r < big_n; ++r) {
        const DiagonalParams p{k, r, o};
        const VertexSet orph = orphans(g, p);
        ASSERT_EQ(orph, orphans_by_definition(g, p));
        const VertexSet ring = boundary(g);
        for (Vertex v : orph) {
          int to_boundary = 1 << 30;
          for (Vertex b : ring) to_boundary = std::min(to_boundary, l1(b, v));
          EXPECT_LE(to_boundary, k - 1) << "orphan " << v << " too deep";
        }
        if (k == 1) {
          EXPECT_TRUE(orph.minus(ring).empty());
          EXPECT_LE(orph.size(),
                    static_cast<std::size_t>(std::max(2 * (g.m() + g.n()) - 4, 1)));
        }
      }
    }
  }
}

// Kept plus projected images k-dominate the grid; for k=1 the images are
// exactly the orphans that are not kept.
TEST(ProjectTest, ProjectionDominatesAndMatchesOrphansForKOne) {
  CaseRng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = rng.between(1, 4);
    const GridSpec g(rng.between(1, 18), rng.between(1, 18));
    for (Orientation o : kBoth) {
      for (int r = 0; r < 2 * k * k + 2 * k + 1; ++r) {
        const DiagonalParams p{k, r, o};
        const ProjectionResult proj =
            project(g, diagonalize(super_grid(g, k).grid, p), k);
        ASSERT_TRUE(testing::brute_dominates(g.m(), g.n(), k, proj.projected))
            << g.m() << "x" << g.n() << " k=" << k << " r=" << r;
        if (k == 1) {
          EXPECT_EQ(proj.added, orphans(g, p));
        }
      }
    }
  }
}

}  // namespace
}  // namespace griddom
