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

#include "pdlab/exact.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/graphs.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {
namespace {

using Edges = std::vector<std::pair<Index, Index>>;

TEST(SolveOptimalTest, Triangle) {
  const Edges e{{0, 1}, {1, 2}, {2, 0}};
  const auto inst = FromVertexCover(3, e, {1, 1, 1});
  const auto opt = SolveOptimal(inst);
  EXPECT_EQ(opt.status, SolveStatus::kOptimal);
  EXPECT_EQ(opt.weight, 2.0);
  EXPECT_EQ(opt.chosen.size(), 2u);
  EXPECT_TRUE(IsHittingSet(inst, opt.chosen));
  EXPECT_EQ(oracle::NaiveOpt(inst), 2.0);
}

TEST(SolveOptimalTest, SingleEdge) {
  const Edges e{{0, 1}};
  const auto opt = SolveOptimal(FromVertexCover(2, e, {1, 3}));
  EXPECT_EQ(opt.chosen, (std::vector<Index>{0}));
  EXPECT_EQ(opt.weight, 1.0);
}

TEST(SolveOptimalTest, EmptyFamily) {
  const auto inst = MakeInstance("", Task::kMhs, 3, {1, 1, 1}, {});
  EXPECT_TRUE(SolveOptimal(inst).chosen.empty());
  const auto bf = SolveBruteForce(inst);
  EXPECT_TRUE(bf.chosen.empty());
  EXPECT_EQ(bf.weight, 0.0);
}

TEST(SolveOptimalTest, StarCenter) {
  const Edges e{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const auto inst = FromVertexCover(5, e, {0.1, 1, 1, 1, 1});
  EXPECT_EQ(SolveBruteForce(inst).chosen, (std::vector<Index>{0}));
  EXPECT_EQ(SolveOptimal(inst).chosen, (std::vector<Index>{0}));
}

TEST(SolveOptimalTest, ZeroWeights) {
  const auto inst =
      MakeInstance("", Task::kMhs, 4, {0, 0, 1, 1}, {{0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(SolveOptimal(inst).weight, 1.0);
  EXPECT_EQ(SolveBruteForce(inst).weight, 1.0);
}

TEST(SolveOptimalTest, EmptySetIsInfeasible) {
  HittingSetInstance inst;
  inst.n_elements = 1;
  inst.weights = {1};
  inst.sets = {{}};
  try {
    SolveOptimal(inst);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kInfeasibleInstance);
  }
}

TEST(SolveBruteForceTest, SizeLimit) {
  const auto inst = MakeInstance("", Task::kMhs, 26, std::vector<double>(26, 1.0), {{0}});
  EXPECT_THROW(SolveBruteForce(inst), Error);
}

TEST(SolveBruteForceTest, MatchesNaiveEnumeration) {
  std::mt19937_64 g(21);
  for (int it = 0; it < 90; ++it) {
    const auto inst = oracle::RandomInstance(static_cast<Task>(it % 3), 4 + it % 11, g);
    EXPECT_EQ(SolveBruteForce(inst).weight, oracle::NaiveOpt(inst));
  }
}

TEST(SolveOptimalTest, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 g(22);
  for (int it = 0; it < 240; ++it) {
    const auto task = static_cast<Task>(it % 3);
    const auto inst = oracle::RandomInstance(task, 8 + it % 13, g);
    const auto opt = SolveOptimal(inst);
    const auto bf = SolveBruteForce(inst);
    ASSERT_EQ(opt.status, SolveStatus::kOptimal);
    EXPECT_EQ(opt.weight, bf.weight) << TaskName(task) << " n=" << inst.n_elements;
    EXPECT_TRUE(IsHittingSet(inst, opt.chosen));
    EXPECT_LE(opt.weight, RunGeneral(inst, {}).final_solution.weight);
  }
}

TEST(SolveOptimalTest, MatchesBruteForceOnBaGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph gr = GenBa(16, 1, 10, seed);
    const auto inst = FromVertexCover(16, gr.edges, SampleWeights(16, seed + 1000));
    EXPECT_EQ(SolveOptimal(inst).weight, SolveBruteForce(inst).weight);
  }
}

TEST(SolveOptimalTest, TimeoutKeepsFeasibleIncumbent) {
  std::mt19937_64 g(23);
  const auto inst = oracle::RandomMhs(80, g, 6);
  const auto opt = SolveOptimal(inst, 0);
  EXPECT_TRUE(IsHittingSet(inst, opt.chosen));
  EXPECT_LE(opt.weight, RunGeneral(inst, {}).final_solution.weight + 1e-12);
  EXPECT_EQ(opt.status, SolveStatus::kTimeout);
}

TEST(SolveOptimalTest, Deterministic) {
  std::mt19937_64 g(24);
  const auto inst = oracle::RandomMhs(18, g);
  const auto a = SolveOptimal(inst);
  const auto b = SolveOptimal(inst);
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace pdlab
