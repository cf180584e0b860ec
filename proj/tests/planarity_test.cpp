// Copyright 2026 The pdlab Authors.
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

#include "pdlab/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "pdlab/graphs.hpp"

namespace pdlab {
namespace {

using Edges = std::vector<std::pair<Index, Index>>;

bool BoostPlanar(std::size_t n, const Edges& edges) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G g(n);
  for (auto [u, v] : edges) boost::add_edge(u, v, g);
  return boost::boyer_myrvold_planarity_test(g);
}

Edges Complete(std::size_t n) {
  Edges e;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return e;
}

TEST(PlanarityTest, SmallKnownGraphs) {
  EXPECT_TRUE(IsPlanar(4, Complete(4)));
  EXPECT_FALSE(IsPlanar(5, Complete(5)));
  Edges k33;
  for (Index u = 0; u < 3; ++u) {
    for (Index v = 3; v < 6; ++v) k33.push_back({u, v});
  }
  EXPECT_FALSE(IsPlanar(6, k33));
  k33.pop_back();
  EXPECT_TRUE(IsPlanar(6, k33));
  EXPECT_TRUE(IsPlanar(0, {}));
  EXPECT_TRUE(IsPlanar(3, {}));
}

TEST(PlanarityTest, Petersen) {
  Edges e;
  for (Index i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Index>((i + 1) % 5)});
    e.push_back({i, static_cast<Index>(i + 5)});
    e.push_back({static_cast<Index>(i + 5), static_cast<Index>((i + 2) % 5 + 5)});
  }
  EXPECT_FALSE(IsPlanar(10, e));
  EXPECT_EQ(IsPlanar(10, e), BoostPlanar(10, e));
}

TEST(PlanarityTest, SubdividedK5) {
  // K5 with every edge split by a new vertex stays non-planar.
  Edges e;
  Index next = 5;
  for (auto [u, v] : Complete(5)) {
    e.push_back({u, next});
    e.push_back({v, next});
    ++next;
  }
  EXPECT_FALSE(IsPlanar(next, e));
}

TEST(PlanarityTest, AgreesWithBoyerMyrvoldOnRandomGraphs) {
  std::mt19937_64 g(31);
  std::size_t planar = 0, total = 0;
  for (int it = 0; it < 3000; ++it) {
    const std::size_t n = 4 + it % 17;
    // Densities straddling the planarity threshold.
    const double p = std::uniform_real_distribution<double>(1.0, 6.0)(g) / n;
    Edges e;
    for (Index u = 0; u < n; ++u) {
      for (Index v = u + 1; v < n; ++v) {
        if (std::uniform_real_distribution<double>(0, 1)(g) < p) e.push_back({u, v});
      }
    }
    const bool expect = BoostPlanar(n, e);
    EXPECT_EQ(IsPlanar(n, e), expect) << "iteration " << it;
    planar += expect;
    ++total;
  }
  EXPECT_GT(planar, total / 10);
  EXPECT_LT(planar, total * 9 / 10);
}

TEST(PlanarityTest, AgreesOnCubicGraphs) {
  Rng rng(12);
  for (int it = 0; it < 500; ++it) {
    const auto g = GenRandomRegular(10 + 2 * (it % 6), 3, rng);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(IsPlanar(g->n, g->edges), BoostPlanar(g->n, g->edges));
  }
}

}  // namespace
}  // namespace pdlab
