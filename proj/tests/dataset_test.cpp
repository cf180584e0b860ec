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

#include "pdlab/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "pdlab/records.hpp"

namespace pdlab {
namespace {

namespace fs = std::filesystem;

DatasetConfig Config(Task task, Family family, std::size_t count, std::uint64_t seed) {
  DatasetConfig c;
  c.task = task;
  c.gen.family = family;
  c.gen.n = 16;
  c.gen.seed = seed;
  c.count = count;
  return c;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(BuildDatasetTest, MvcWithOptimalLabels) {
  auto c = Config(Task::kMvc, Family::kBa, 200, 0);
  c.with_optimal = true;
  const auto recs = BuildDataset(c);
  ASSERT_EQ(recs.size(), 200u);
  for (const auto& r : recs) {
    ASSERT_TRUE(r.optimal.has_value());
    EXPECT_EQ(r.optimal->status, SolveStatus::kOptimal);
    EXPECT_TRUE(IsHittingSet(r.instance, r.optimal->chosen));
    EXPECT_LE(r.optimal->weight, r.trajectory.final_solution.weight + 1e-12);
    EXPECT_EQ(r.trajectory.algo, Algo::kCoverMvc);
    EXPECT_EQ(r.trajectory.config.epsilon, 0.1);
    EXPECT_TRUE(ReplayVerify(r));
    EXPECT_EQ(r.instance.meta.at("family"), "ba");
  }
}

TEST(BuildDatasetTest, MhsUsesUniformRule) {
  auto c = Config(Task::kMhs, Family::kBaBipartite, 10, 1);
  const auto recs = BuildDataset(c);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.trajectory.config.uniform);
    EXPECT_EQ(r.trajectory.algo, Algo::kGeneral);
    for (const auto& s : r.trajectory.steps) EXPECT_TRUE(s.Delta.has_value());
    for (const auto& s : r.instance.sets) EXPECT_LE(s.size(), 5u);
    EXPECT_EQ(r.instance.meta.at("b"), "5");
  }
}

TEST(BuildDatasetTest, MscFromBipartite) {
  const auto recs = BuildDataset(Config(Task::kMsc, Family::kBaBipartite, 20, 2));
  for (const auto& r : recs) {
    EXPECT_EQ(r.instance.task, Task::kMsc);
    EXPECT_EQ(r.trajectory.algo, Algo::kCoverMsc);
    EXPECT_TRUE(ReplayVerify(r));
  }
}

TEST(BuildDatasetTest, EveryGraphFamily) {
  for (Family f : {Family::kBa, Family::kEr, Family::kStar, Family::kLobster,
                   Family::kTriconnPlanar}) {
    const auto recs = BuildDataset(Config(Task::kMvc, f, 20, 3));
    for (const auto& r : recs) EXPECT_TRUE(ReplayVerify(r)) << FamilyName(f);
  }
}

TEST(BuildDatasetTest, DefaultSplitIsNinetyTen) {
  const auto recs = BuildDataset(Config(Task::kMvc, Family::kLobster, 50, 4));
  std::size_t train = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].split == Split::kTrain) {
      ++train;
      EXPECT_LT(i, 45u);
    }
  }
  EXPECT_EQ(train, 45u);
  auto c = Config(Task::kMvc, Family::kLobster, 5, 4);
  c.split = Split::kTest;
  for (const auto& r : BuildDataset(c)) EXPECT_EQ(r.split, Split::kTest);
}

TEST(BuildDatasetTest, ThreadsDoNotChangeOutput) {
  auto c = Config(Task::kMvc, Family::kEr, 40, 5);
  const auto serial = BuildDataset(c);
  c.threads = 4;
  EXPECT_EQ(BuildDataset(c), serial);
}

TEST(BuildDatasetTest, RejectsBadConfig) {
  EXPECT_THROW(BuildDataset(Config(Task::kMvc, Family::kBaBipartite, 5, 0)), Error);
  EXPECT_THROW(BuildDataset(Config(Task::kMhs, Family::kBa, 5, 0)), Error);
  auto c = Config(Task::kMvc, Family::kBa, 5, 0);
  c.epsilon = 0;
  EXPECT_THROW(BuildDataset(c), Error);
  c = Config(Task::kMvc, Family::kBa, 0, 0);
  EXPECT_THROW(BuildDataset(c), Error);
}

TEST(ReplayVerifyTest, PerturbedRecordFails) {
  auto recs = BuildDataset(Config(Task::kMvc, Family::kBa, 5, 6));
  auto r = recs[0];
  ASSERT_TRUE(ReplayVerify(r));
  r.trajectory.steps[1].r[0] += 1e-6;
  EXPECT_FALSE(ReplayVerify(r));
  r = recs[1];
  r.trajectory.steps.back().delta[0] += 1e-3;
  r.trajectory.steps.back().set_active[0] = 1;
  EXPECT_FALSE(ReplayVerify(r));
  r = recs[2];
  r.trajectory.steps.pop_back();
  EXPECT_FALSE(ReplayVerify(r));
  r = recs[3];
  r.optimal = OptimalSolution{{}, 0.0, SolveStatus::kOptimal, 0};
  EXPECT_FALSE(ReplayVerify(r));
}

TEST(WriteDatasetTest, LayoutManifestAndDeterminism) {
  const fs::path a = fs::path(::testing::TempDir()) / "ds_a";
  const fs::path b = fs::path(::testing::TempDir()) / "ds_b";
  fs::remove_all(a);
  fs::remove_all(b);
  const auto c = Config(Task::kMvc, Family::kBa, 30, 0);
  const auto files = WriteDataset(a.string(), c, BuildDataset(c));
  WriteDataset(b.string(), c, BuildDataset(c));
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].name, "mvc_ba_16_train.jsonl");
  EXPECT_EQ(files[1].name, "mvc_ba_16_val.jsonl");
  EXPECT_EQ(files[0].records, 27u);
  for (const auto& f : files) {
    const auto body = Slurp(a / f.name);
    EXPECT_EQ(body, Slurp(b / f.name));
    EXPECT_EQ(Hex64(Fnv1a64(body)), f.digest);
  }
  const auto manifest = Slurp(a / "manifest.json");
  EXPECT_EQ(manifest, Slurp(b / "manifest.json"));
  const auto m = Json::parse(manifest);
  EXPECT_EQ(m["count"], 30);
  EXPECT_EQ(m["generator"]["family"], "ba");
  EXPECT_EQ(m["split_rule"], "first 90% train, rest val");
  EXPECT_EQ(m["files"][0]["fnv1a64"], files[0].digest);
  const auto back = ReadRecordsFile((a / files[0].name).string());
  EXPECT_EQ(back.size(), 27u);
  for (const auto& r : back) EXPECT_TRUE(ReplayVerify(r));
}

TEST(HashTest, KnownFnvValues) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace pdlab
