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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "pdlab/bench.hpp"
#include "pdlab/dataset.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/exact.hpp"
#include "pdlab/neural.hpp"

namespace pdlab {
namespace {

constexpr Task kTasks[] = {Task::kMvc, Task::kMsc, Task::kMhs};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<HittingSetInstance> RandomBatch(Task task, std::size_t count,
                                            std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<std::size_t> size(8, 20);
  std::vector<HittingSetInstance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::RandomInstance(task, size(g), g));
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Approximation bound with the plain and uniform rules at epsilon 0.
Outcome ApproxBound() {
  Outcome o;
  std::size_t n = 0, violations = 0, infeasible = 0;
  double worst = 0, algo_seconds = 0;
  const auto start = Clock::now();
  for (Task task : kTasks) {
    for (const auto& inst : RandomBatch(task, 500, 100 + static_cast<int>(task))) {
      const double opt = SolveBruteForce(inst).weight;
      for (bool uniform : {false, true}) {
        AlgoConfig cfg;
        cfg.uniform = uniform;
        const auto t0 = Clock::now();
        const auto traj = RunGeneral(inst, cfg);
        algo_seconds += Seconds(t0);
        ++n;
        const double alpha = static_cast<double>(inst.max_set_size());
        if (!IsHittingSet(inst, traj.final_solution)) ++infeasible;
        if (traj.final_solution.weight > alpha * opt + 1e-9) ++violations;
        if (opt > 0) worst = std::max(worst, traj.final_solution.weight / (alpha * opt));
      }
    }
  }
  const double total = Seconds(start);
  o.pass = violations == 0 && infeasible == 0 && total < 60.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu runs, %zu bound violations, %zu infeasible, max w/(alpha*opt)=%.4f, "
                "algo %.3fs, total %.2fs",
                n, violations, infeasible, worst, algo_seconds, total);
  o.detail = buf;
  return o;
}

Outcome CoverMvcBound() {
  Outcome o;
  const double eps = 0.1, factor = 2.0 / (1.0 - eps);
  std::size_t violations = 0;
  double worst = 0;
  const auto batch = RandomBatch(Task::kMvc, 500, 7);
  for (const auto& inst : batch) {
    const double opt = SolveBruteForce(inst).weight;
    const auto traj = RunCoverMvc(inst, eps);
    if (!IsHittingSet(inst, traj.final_solution) ||
        traj.final_solution.weight > factor * opt + 1e-9) {
      ++violations;
    }
    if (opt > 0) worst = std::max(worst, traj.final_solution.weight / opt);
  }
  o.pass = violations == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu instances, %zu violations, max ratio %.4f (bound %.4f)",
                batch.size(), violations, worst, factor);
  o.detail = buf;
  return o;
}

Outcome Replication() {
  Outcome o;
  double worst = 0;
  std::size_t failures = 0, runs = 0;
  for (Task task : kTasks) {
    DatasetConfig c;
    c.task = task;
    c.gen.family = task == Task::kMvc ? Family::kBa : Family::kBaBipartite;
    c.gen.n = 16;
    c.gen.seed = 0;
    c.count = 100;
    for (std::size_t i = 0; i < c.count; ++i) {
      const auto inst = BuildInstance(c, i);
      for (std::size_t h : {1, 32}) {
        const auto rep = VerifyReplication(inst, h);
        ++runs;
        worst = std::max(worst, rep.max_err());
        if (!rep.Passed(1e-6)) ++failures;
      }
    }
  }
  o.pass = failures == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu runs (H in {1,32}), %zu failures, max deviation %.3g",
                runs, failures, worst);
  o.detail = buf;
  return o;
}

Outcome Progress() {
  Outcome o;
  std::size_t runs = 0, stalls = 0, too_long = 0;
  for (Task task : kTasks) {
    for (const auto& inst : RandomBatch(task, 300, 300 + static_cast<int>(task))) {
      for (bool uniform : {false, true}) {
        AlgoConfig cfg;
        cfg.uniform = uniform;
        const auto traj = RunGeneral(inst, cfg);
        ++runs;
        if (traj.num_timesteps() > inst.n_elements) ++too_long;
        for (std::size_t k = 1; k < traj.steps.size(); ++k) {
          std::size_t before = 0, after = 0;
          for (auto v : traj.steps[k - 1].x) before += v;
          for (auto v : traj.steps[k].x) after += v;
          if (after <= before) ++stalls;
        }
      }
    }
  }
  o.pass = stalls == 0 && too_long == 0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(stalls) +
             " steps without a new element, " + std::to_string(too_long) +
             " runs over |E| steps";
  return o;
}

Outcome WeakDuality() {
  Outcome o;
  std::size_t runs = 0, bad = 0;
  for (Task task : kTasks) {
    for (const auto& inst : RandomBatch(task, 200, 500 + static_cast<int>(task))) {
      const double opt = SolveBruteForce(inst).weight;
      std::vector<Trajectory> trajs;
      for (bool uniform : {false, true}) {
        AlgoConfig cfg;
        cfg.uniform = uniform;
        trajs.push_back(RunGeneral(inst, cfg));
      }
      if (task == Task::kMvc) trajs.push_back(RunCoverMvc(inst, 0.1));
      if (task == Task::kMsc) trajs.push_back(RunCoverMsc(inst, 0.1));
      for (const auto& traj : trajs) {
        ++runs;
        const auto dual = VerifyDualFeasibility(inst, DualVariables(traj, inst));
        if (!dual.feasible || dual.dual_objective > opt + 1e-9 ||
            opt > traj.final_solution.weight + 1e-9) {
          ++bad;
        }
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(bad) + " violations";
  return o;
}

Outcome ExactAgreement() {
  Outcome o;
  std::size_t n = 0, mismatches = 0;
  for (Task task : kTasks) {
    const std::size_t count = task == Task::kMhs ? 66 : 67;
    for (const auto& inst : RandomBatch(task, count, 700 + static_cast<int>(task))) {
      ++n;
      const auto a = SolveOptimal(inst);
      const auto b = SolveBruteForce(inst);
      if (a.status != SolveStatus::kOptimal || a.weight != b.weight) ++mismatches;
    }
  }
  o.pass = n >= 200 && mismatches == 0;
  o.detail = std::to_string(n) + " instances, " + std::to_string(mismatches) + " mismatches";
  return o;
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome DatasetDeterminism() {
  Outcome o;
  namespace fs = std::filesystem;
  DatasetConfig c;
  c.task = Task::kMvc;
  c.gen.family = Family::kBa;
  c.gen.n = 16;
  c.gen.seed = 0;
  c.count = 1000;
  c.with_optimal = true;
  c.threads = std::max(1u, std::thread::hardware_concurrency());
  const fs::path root = fs::temp_directory_path() / "pdlab_acceptance";
  fs::remove_all(root);
  std::vector<std::string> names;
  const auto start = Clock::now();
  for (const char* d : {"a", "b"}) {
    const auto files = WriteDataset((root / d).string(), c, BuildDataset(c));
    names.clear();
    for (const auto& f : files) names.push_back(f.name);
    names.push_back("manifest.json");
  }
  std::size_t differ = 0, bytes = 0;
  for (const auto& name : names) {
    const auto a = Slurp(root / "a" / name);
    bytes += a.size();
    if (a.empty() || a != Slurp(root / "b" / name)) ++differ;
  }
  fs::remove_all(root);
  o.pass = differ == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu files, %zu bytes, %zu differ, %.2fs", names.size(),
                bytes, differ, Seconds(start));
  o.detail = buf;
  return o;
}

Outcome SolverFiles() {
  Outcome o;
  std::size_t n = 0, lp_bad = 0, mst_bad = 0;
  for (Task task : kTasks) {
    const std::size_t count = task == Task::kMhs ? 16 : 17;
    for (const auto& inst : RandomBatch(task, count, 900 + static_cast<int>(task))) {
      ++n;
      const auto opt = SolveBruteForce(inst);
      const auto parsed = ParseLp(ExportLp(inst));
      if (SolveBruteForce(parsed).weight != opt.weight) ++lp_bad;
      const auto sol = MakeSolution(inst, opt.chosen);
      if (ParseMst(ExportMst(inst, sol)) != sol.chosen) ++mst_bad;
    }
  }
  o.pass = n >= 50 && lp_bad == 0 && mst_bad == 0;
  o.detail = std::to_string(n) + " instances, " + std::to_string(lp_bad) +
             " LP mismatches, " + std::to_string(mst_bad) + " MST mismatches";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace pdlab

int main() {
  using pdlab::Criterion;
  const Criterion criteria[] = {
      {"approx-bound", pdlab::ApproxBound},
      {"cover-mvc-bound", pdlab::CoverMvcBound},
      {"replication", pdlab::Replication},
      {"progress", pdlab::Progress},
      {"weak-duality", pdlab::WeakDuality},
      {"exact-vs-brute-force", pdlab::ExactAgreement},
      {"dataset-determinism", pdlab::DatasetDeterminism},
      {"lp-mst-roundtrip", pdlab::SolverFiles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    pdlab::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
