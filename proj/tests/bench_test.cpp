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

#include "pdlab/bench.hpp"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/exact.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {
namespace {

using Edges = std::vector<std::pair<Index, Index>>;

HittingSetInstance Triangle() {
  const Edges e{{0, 1}, {1, 2}, {2, 0}};
  return FromVertexCover(3, e, {1, 1, 1});
}

HittingSetInstance SingleEdge() {
  const Edges e{{0, 1}};
  return FromVertexCover(2, e, {1, 3});
}

TEST(GreedyCleanupTest, SingleEdgePicksLargestRatio) {
  const auto inst = SingleEdge();
  const std::vector<double> r{1, 3};
  const std::vector<Index> d{1, 1};
  const auto sol = GreedyCleanup(inst, Solution{}, r, d);
  EXPECT_EQ(sol.chosen, (std::vector<Index>{1}));
  EXPECT_TRUE(IsHittingSet(inst, sol));
}

TEST(GreedyCleanupTest, FeasiblePartialUnchanged) {
  const auto inst = Triangle();
  const auto partial = MakeSolution(inst, {0, 1});
  const std::vector<double> r{0, 0, 1};
  const std::vector<Index> d{0, 0, 0};
  EXPECT_EQ(GreedyCleanup(inst, partial, r, d), partial);
}

TEST(GreedyCleanupTest, TriangleAddsOne) {
  const auto inst = Triangle();
  const auto partial = MakeSolution(inst, {0});
  const std::vector<double> r{0, 1, 1};
  const std::vector<Index> d{0, 1, 1};
  const auto sol = GreedyCleanup(inst, partial, r, d);
  EXPECT_EQ(sol.chosen, (std::vector<Index>{0, 1}));
  EXPECT_EQ(sol.weight, 2.0);
}

TEST(GreedyCleanupTest, SupersetAndFeasible) {
  std::mt19937_64 g(51);
  for (int it = 0; it < 200; ++it) {
    const auto inst = oracle::RandomInstance(static_cast<Task>(it % 3), 12, g);
    std::vector<Index> part;
    for (Index e = 0; e < inst.n_elements; ++e) {
      if (g() % 4 == 0) part.push_back(e);
    }
    const auto partial = MakeSolution(inst, part);
    std::vector<double> r(inst.weights);
    std::vector<Index> d(inst.n_elements, 0);
    for (const auto& s : inst.sets) {
      bool hit = false;
      for (Index e : s) hit = hit || std::count(part.begin(), part.end(), e);
      if (!hit) {
        for (Index e : s) ++d[e];
      }
    }
    const auto sol = GreedyCleanup(inst, partial, r, d);
    EXPECT_TRUE(IsHittingSet(inst, sol));
    double added = 0;
    for (Index e : sol.chosen) {
      if (!std::count(part.begin(), part.end(), e)) added += inst.weights[e];
    }
    for (Index e : part) EXPECT_TRUE(std::count(sol.chosen.begin(), sol.chosen.end(), e));
    EXPECT_NEAR(sol.weight, partial.weight + added, 1e-12);
  }
}

TEST(RatioReportTest, IdenticalSolutionsGiveOne) {
  std::vector<EvalEntry> a;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int i = 0; i < 5; ++i) {
      a.push_back({"i" + std::to_string(seed) + "-" + std::to_string(i), 16, seed,
                   0.3 + i, true, false});
    }
  }
  const auto rep = MakeRatioReport(a, a);
  ASSERT_EQ(rep.groups.size(), 1u);
  EXPECT_EQ(rep.groups[0].mean, 1.0);
  EXPECT_EQ(rep.groups[0].stddev, 0.0);
  EXPECT_EQ(rep.groups[0].num_seeds, 10u);
  EXPECT_EQ(rep.groups[0].feasibility_rate, 1.0);
}

TEST(RatioReportTest, TriangleOptimumOverAlgorithm) {
  const auto inst = Triangle();
  const double algo = RunGeneral(inst, {}).final_solution.weight;
  const double opt = SolveOptimal(inst).weight;
  const std::vector<EvalEntry> model{{"tri", 3, 0, opt, true, false}};
  const std::vector<EvalEntry> alg{{"tri", 3, 0, algo, true, false}};
  const auto rep = MakeRatioReport(model, alg);
  EXPECT_NEAR(rep.groups[0].mean, 2.0 / 3.0, 1e-12);
}

TEST(RatioReportTest, SeedAggregation) {
  // Seed 0 ratios {1, 0.5} -> 0.75; seed 1 ratio {1} -> 1.
  const std::vector<EvalEntry> model{{"a", 16, 0, 1, true, false},
                                     {"b", 16, 0, 1, true, true},
                                     {"c", 16, 1, 2, false, false},
                                     {"d", 32, 0, 3, true, false}};
  const std::vector<EvalEntry> algo{{"a", 16, 0, 1, true, false},
                                    {"b", 16, 0, 2, true, false},
                                    {"c", 16, 1, 2, true, false},
                                    {"d", 32, 0, 3, true, false}};
  const auto rep = MakeRatioReport(model, algo);
  ASSERT_EQ(rep.groups.size(), 2u);
  EXPECT_EQ(rep.groups[0].size, 16u);
  EXPECT_DOUBLE_EQ(rep.groups[0].mean, 0.875);
  EXPECT_NEAR(rep.groups[0].stddev, std::sqrt(2 * 0.125 * 0.125), 1e-12);
  EXPECT_NEAR(rep.groups[0].feasibility_rate, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(rep.groups[0].cleanup_rate, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(rep.groups[1].mean, 1.0);
}

TEST(RatioReportTest, MismatchedIds) {
  const std::vector<EvalEntry> a{{"a", 16, 0, 1, true, false}};
  const std::vector<EvalEntry> b{{"b", 16, 0, 1, true, false}};
  EXPECT_THROW(MakeRatioReport(a, b), Error);
  const std::vector<EvalEntry> ab{{"a", 16, 0, 1, true, false}, {"b", 16, 0, 1, true, false}};
  EXPECT_THROW(MakeRatioReport(a, ab), Error);
  EXPECT_EQ(WeightRatio(0, 0), 1.0);
}

TEST(MstTest, SingleEdge) {
  const auto inst = SingleEdge();
  const auto text = ExportMst(inst, MakeSolution(inst, {0}));
  EXPECT_NE(text.find("\nx_0 1\n"), std::string::npos);
  EXPECT_NE(text.find("\nx_1 0\n"), std::string::npos);
  EXPECT_EQ(text[0], '#');
  EXPECT_EQ(ParseMst(text), (std::vector<Index>{0}));
}

TEST(MstTest, RoundTripCountsSelected) {
  std::mt19937_64 g(52);
  for (int it = 0; it < 50; ++it) {
    const auto inst = oracle::RandomInstance(static_cast<Task>(it % 3), 14, g);
    const auto sol = RunGeneral(inst, {}).final_solution;
    const auto text = ExportMst(inst, sol);
    const auto back = ParseMst(text);
    EXPECT_EQ(back, sol.chosen);
    std::size_t ones = 0, lines = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      ++lines;
      ones += line.back() == '1';
    }
    EXPECT_EQ(lines, inst.n_elements);
    EXPECT_EQ(ones, sol.chosen.size());
  }
  EXPECT_THROW(ParseMst("y_0 1\n"), Error);
  EXPECT_THROW(ParseMst("x_0 2\n"), Error);
}

TEST(LpTest, SingleElement) {
  const auto inst = MakeInstance("one", Task::kMhs, 1, {1}, {{0}});
  const auto text = ExportLp(inst);
  EXPECT_NE(text.find("obj: 1 x_0\n"), std::string::npos);
  EXPECT_NE(text.find("c0: x_0 >= 1\n"), std::string::npos);
  EXPECT_NE(text.find("Binary\n x_0\n"), std::string::npos);
  EXPECT_EQ(ParseLp(text), inst);
}

TEST(LpTest, TriangleRows) {
  const auto text = ExportLp(Triangle());
  EXPECT_NE(text.find("c0: x_0 + x_1 >= 1"), std::string::npos);
  EXPECT_NE(text.find("c1: x_1 + x_2 >= 1"), std::string::npos);
  EXPECT_NE(text.find("c2: x_0 + x_2 >= 1"), std::string::npos);
  EXPECT_EQ(text.find("c3:"), std::string::npos);
}

TEST(LpTest, RoundTripKeepsOptimum) {
  std::mt19937_64 g(53);
  for (int it = 0; it < 60; ++it) {
    auto inst = oracle::RandomInstance(static_cast<Task>(it % 3), 10 + it % 11, g);
    inst.id = "lp-" + std::to_string(it);
    const auto back = ParseLp(ExportLp(inst));
    EXPECT_EQ(back, inst);
    EXPECT_EQ(SolveBruteForce(back).weight, SolveBruteForce(inst).weight);
  }
}

TEST(LpTest, CoefficientsRoundTripExactly) {
  const auto inst = MakeInstance("", Task::kMhs, 3, {0.1, 1.0 / 3.0, 2.0 / 7.0}, {{0, 1, 2}});
  const auto back = ParseLp(ExportLp(inst));
  EXPECT_EQ(back.weights, inst.weights);
  EXPECT_NE(ExportLp(inst).find("0.33333333333333331"), std::string::npos);
}

TEST(LpTest, RejectsMalformed) {
  EXPECT_THROW(ParseLp("Minimize\n obj: 1 x_0\nSubject To\n c0: x_0 >= 1\n"), Error);
  EXPECT_THROW(ParseLp("Minimize\n obj: 1 x_0\nSubject To\n c0: x_0 >= 2\nBinary\n x_0\nEnd\n"),
               Error);
}

}  // namespace
}  // namespace pdlab
