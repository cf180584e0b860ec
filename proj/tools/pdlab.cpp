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

// Command-line driver. Each subcommand prints one JSON summary line on
// success; failures print {"error":{"code":...,"message":...}} to stderr and
// exit nonzero.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pdlab/bench.hpp"
#include "pdlab/dataset.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/exact.hpp"
#include "pdlab/instance.hpp"
#include "pdlab/neural.hpp"
#include "pdlab/records.hpp"
#include "pdlab/weights_io.hpp"

namespace {

using pdlab::ErrorKind;
using pdlab::Fail;
using pdlab::Json;

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return 2;
    case ErrorKind::kParse: return 3;
    case ErrorKind::kIo: return 4;
    case ErrorKind::kMismatch: return 5;
    default: return 1;
  }
}

void PrintError(std::string_view code, const std::string& message) {
  Json j{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << j.dump() << std::endl;
}

std::ofstream OpenOut(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  return out;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t MetaSize(const pdlab::HittingSetInstance& inst) {
  auto it = inst.meta.find("size");
  return it == inst.meta.end() ? inst.n_elements : std::stoull(it->second);
}

std::uint64_t MetaSeed(const pdlab::HittingSetInstance& inst) {
  auto it = inst.meta.find("seed");
  return it == inst.meta.end() ? 0 : std::stoull(it->second);
}

Json EvalFields(const pdlab::HittingSetInstance& inst, const pdlab::Solution& sol) {
  return Json{{"id", inst.id},
              {"size", MetaSize(inst)},
              {"seed", MetaSeed(inst)},
              {"weight", sol.weight},
              {"feasible", pdlab::IsHittingSet(inst, sol)},
              {"chosen", sol.chosen}};
}

void Summary(const Json& j) { std::cout << pdlab::DumpJson(j) << std::endl; }

// generate

struct GenerateArgs {
  std::string task = "mvc";
  std::string family = "ba";
  std::size_t size = 16;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  bool with_optimal = false;
  std::string out;
  double epsilon = 0.1;
  std::size_t b = 5;
  std::int64_t budget_ms = pdlab::kDefaultBudgetMs;
  std::string split;
  std::size_t threads = 0;
};

void RunGenerate(const GenerateArgs& a) {
  pdlab::DatasetConfig c;
  c.task = pdlab::ParseTask(a.task);
  c.gen.family = pdlab::ParseFamily(a.family);
  c.gen.n = a.size;
  c.gen.seed = a.seed;
  c.gen.b = a.b;
  c.count = a.count;
  c.with_optimal = a.with_optimal;
  c.epsilon = a.epsilon;
  c.budget_ms = a.budget_ms;
  if (!a.split.empty()) c.split = pdlab::ParseSplit(a.split);
  c.threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto records = pdlab::BuildDataset(c);
  const auto files = pdlab::WriteDataset(a.out, c, records);
  std::size_t timeouts = 0;
  for (const auto& r : records) {
    if (r.optimal && r.optimal->status == pdlab::SolveStatus::kTimeout) ++timeouts;
  }
  Json fs = Json::array();
  for (const auto& f : files) fs.push_back(f.name);
  Summary(Json{{"command", "generate"},
               {"records", records.size()},
               {"optimal_timeouts", timeouts},
               {"files", fs}});
}

// solve

void RunSolve(const std::string& algo, double epsilon, const std::string& in,
              const std::string& out_path) {
  if (algo != "pd" && algo != "pd-uniform" && algo != "cover") {
    Fail(ErrorKind::kInvalidArgument, "unknown algo '" + algo + "'");
  }
  const auto instances = pdlab::ReadInstancesFile(in);
  auto out = OpenOut(out_path);
  double total = 0.0;
  for (const auto& inst : instances) {
    pdlab::Trajectory t;
    if (algo == "cover") {
      if (inst.task == pdlab::Task::kMvc) {
        t = pdlab::RunCoverMvc(inst, epsilon);
      } else if (inst.task == pdlab::Task::kMsc) {
        t = pdlab::RunCoverMsc(inst, epsilon);
      } else {
        Fail(ErrorKind::kInvalidArgument, "cover applies to mvc and msc only");
      }
    } else {
      pdlab::AlgoConfig cfg;
      cfg.uniform = algo == "pd-uniform";
      cfg.epsilon = epsilon;
      t = pdlab::RunGeneral(inst, cfg);
    }
    const auto dual = pdlab::VerifyDualFeasibility(inst, pdlab::DualVariables(t, inst));
    pdlab::DatasetRecord rec{inst, t, std::nullopt, pdlab::Split::kTest};
    Json j = pdlab::ToJson(rec);
    j.update(EvalFields(inst, t.final_solution));
    j["num_timesteps"] = t.num_timesteps();
    j["dual_objective"] = dual.dual_objective;
    j["dual_feasible"] = dual.feasible;
    out << pdlab::DumpJson(j) << '\n';
    total += t.final_solution.weight;
  }
  Summary(Json{{"command", "solve"}, {"instances", instances.size()}, {"total_weight", total}});
}

// exact

void RunExact(std::int64_t budget_ms, const std::string& in, const std::string& out_path) {
  if (budget_ms < 0) Fail(ErrorKind::kInvalidArgument, "budget must be >= 0");
  const auto instances = pdlab::ReadInstancesFile(in);
  auto out = OpenOut(out_path);
  std::size_t timeouts = 0;
  for (const auto& inst : instances) {
    const auto opt = pdlab::SolveOptimal(inst, budget_ms);
    if (opt.status == pdlab::SolveStatus::kTimeout) ++timeouts;
    Json j = EvalFields(inst, pdlab::Solution{opt.chosen, opt.weight});
    j["status"] = pdlab::SolveStatusName(opt.status);
    j["nodes_explored"] = opt.nodes_explored;
    out << pdlab::DumpJson(j) << '\n';
  }
  Summary(Json{{"command", "exact"}, {"instances", instances.size()}, {"timeouts", timeouts}});
}

// verify-replication

void RunVerifyReplication(const std::string& task, std::size_t count, double tol,
                          std::uint64_t seed, std::vector<std::size_t> dims) {
  pdlab::DatasetConfig c;
  c.task = pdlab::ParseTask(task);
  c.gen.family = c.task == pdlab::Task::kMvc ? pdlab::Family::kBa
                                             : pdlab::Family::kBaBipartite;
  c.gen.n = 16;
  c.gen.seed = seed;
  c.count = count;
  c.Validate();
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto inst = pdlab::BuildInstance(c, i);
    for (std::size_t h : dims) {
      const auto rep = pdlab::VerifyReplication(inst, h);
      worst = std::max(worst, rep.max_err());
      if (!rep.Passed(tol)) ++failures;
    }
  }
  Summary(Json{{"command", "verify-replication"},
               {"task", task},
               {"instances", count},
               {"hidden_dims", dims},
               {"max_deviation", worst},
               {"failures", failures},
               {"passed", failures == 0}});
  if (failures) {
    Fail(ErrorKind::kMismatch,
         std::to_string(failures) + " replication runs exceeded tolerance");
  }
}

// infer

void RunInfer(const std::string& weights_path, const std::string& in,
              const std::string& out_path, bool teacher_forced,
              const std::string& decode) {
  const auto w = pdlab::ReadWeightsFile(weights_path);
  pdlab::RolloutConfig cfg;
  if (decode == "threshold") cfg.rule = pdlab::DecodeRule::kThreshold;
  if (decode == "argmax") cfg.rule = pdlab::DecodeRule::kArgmax;
  auto out = OpenOut(out_path);
  std::size_t n = 0;
  std::size_t cleaned = 0;
  auto emit = [&](const pdlab::HittingSetInstance& inst, const pdlab::PredictedTrajectory& p) {
    Json j = EvalFields(inst, p.final_solution);
    j["cleanup_used"] = p.cleanup_used;
    j["num_timesteps"] = p.steps.size() - 1;
    out << pdlab::DumpJson(j) << '\n';
    ++n;
    cleaned += p.cleanup_used ? 1 : 0;
  };
  if (teacher_forced) {
    for (const auto& r : pdlab::ReadRecordsFile(in)) {
      emit(r.instance, pdlab::Rollout(w, r.instance, pdlab::TeacherForced{&r.trajectory}, cfg));
    }
  } else {
    for (const auto& inst : pdlab::ReadInstancesFile(in)) {
      emit(inst, pdlab::Rollout(w, inst, pdlab::FreeRun{}, cfg));
    }
  }
  Summary(Json{{"command", "infer"},
               {"mode", teacher_forced ? "teacher-forced" : "free-run"},
               {"instances", n},
               {"cleanup_used", cleaned}});
}

// bench

std::vector<pdlab::EvalEntry> ReadEntries(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  return pdlab::ReadJsonLines<pdlab::EvalEntry>(in, path, [](const Json& j) {
    using pdlab::internal::Get;
    pdlab::EvalEntry e;
    if (j.contains("weight")) {
      e.id = Get<std::string>(j, "id");
      e.size = Get<std::size_t>(j, "size");
      e.seed = Get<std::uint64_t>(j, "seed");
      e.weight = Get<double>(j, "weight");
      e.feasible = Get<bool>(j, "feasible");
      e.cleanup_used = j.value("cleanup_used", false);
    } else {
      const auto r = pdlab::RecordFromJson(j);
      e.id = r.instance.id;
      e.size = MetaSize(r.instance);
      e.seed = MetaSeed(r.instance);
      e.weight = r.trajectory.final_solution.weight;
      e.feasible = pdlab::IsHittingSet(r.instance, r.trajectory.final_solution);
    }
    return e;
  });
}

void RunBench(const std::string& model, const std::string& algo, const std::string& report_path) {
  const auto m = ReadEntries(model);
  const auto a = ReadEntries(algo);
  const auto report = pdlab::MakeRatioReport(m, a);
  Json groups = Json::array();
  for (const auto& g : report.groups) {
    groups.push_back(Json{{"size", g.size},
                          {"mean", g.mean},
                          {"stddev", g.stddev},
                          {"num_seeds", g.num_seeds},
                          {"num_instances", g.num_instances},
                          {"feasibility_rate", g.feasibility_rate},
                          {"cleanup_rate", g.cleanup_rate}});
  }
  auto out = OpenOut(report_path);
  out << pdlab::DumpJson(Json{{"groups", groups}}) << '\n';
  Summary(Json{{"command", "bench"}, {"groups", groups}});
}

// export

std::map<std::string, std::vector<pdlab::Index>> ReadSolutions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  using Entry = std::pair<std::string, std::vector<pdlab::Index>>;
  std::map<std::string, std::vector<pdlab::Index>> out;
  for (auto& [id, chosen] : pdlab::ReadJsonLines<Entry>(in, path, [](const Json& j) {
         using pdlab::internal::Field;
         using pdlab::internal::Get;
         if (j.contains("chosen")) {
           return Entry{Get<std::string>(j, "id"), Get<std::vector<pdlab::Index>>(j, "chosen")};
         }
         const auto r = pdlab::RecordFromJson(j);
         return Entry{r.instance.id, r.trajectory.final_solution.chosen};
       })) {
    out[id] = std::move(chosen);
  }
  return out;
}

std::string SafeName(const std::string& id, std::size_t index) {
  if (id.empty()) return "instance-" + std::to_string(index);
  std::string s = id;
  for (char& ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.') {
      ch = '_';
    }
  }
  return s;
}

void RunExport(const std::string& format, const std::string& in, const std::string& solution,
               const std::string& dir) {
  if (format != "mst" && format != "lp") {
    Fail(ErrorKind::kInvalidArgument, "unknown format '" + format + "'");
  }
  if (format == "mst" && solution.empty()) {
    Fail(ErrorKind::kInvalidArgument, "mst export needs --solution");
  }
  const auto instances = pdlab::ReadInstancesFile(in);
  std::map<std::string, std::vector<pdlab::Index>> sols;
  if (!solution.empty()) sols = ReadSolutions(solution);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) Fail(ErrorKind::kIo, "cannot create '" + dir + "'");
  std::size_t written = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const std::string base = (std::filesystem::path(dir) / SafeName(inst.id, i)).string();
    if (format == "lp") {
      auto out = OpenOut(base + ".lp");
      out << pdlab::ExportLp(inst);
      ++written;
      continue;
    }
    auto it = sols.find(inst.id);
    if (it == sols.end()) Fail(ErrorKind::kMismatch, "no solution for instance '" + inst.id + "'");
    const auto sol = pdlab::MakeSolution(inst, it->second);
    auto out = OpenOut(base + ".mst");
    out << pdlab::ExportMst(inst, sol);
    ++written;
  }
  Summary(Json{{"command", "export"}, {"format", format}, {"files", written}});
}

// make-weights

void RunMakeWeights(const std::string& kind, std::size_t hidden_dim, bool uniform,
                    std::uint64_t seed, const std::string& out) {
  pdlab::ModelWeights w;
  if (kind == "analytic") {
    w = pdlab::AnalyticWeights(hidden_dim, uniform);
  } else if (kind == "random") {
    w = pdlab::RandomWeights(hidden_dim, uniform, seed);
  } else if (kind == "zero") {
    w = pdlab::ZeroWeights(hidden_dim, uniform);
  } else {
    Fail(ErrorKind::kInvalidArgument, "unknown weights kind '" + kind + "'");
  }
  pdlab::WriteWeightsFile(out, w);
  Summary(Json{{"command", "make-weights"}, {"kind", kind}, {"hidden_dim", hidden_dim}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pdlab: primal-dual hitting-set laboratory"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build a dataset directory");
  g->add_option("--task", gen.task)->required()->check(CLI::IsMember({"mvc", "msc", "mhs"}));
  g->add_option("--family", gen.family)->required();
  g->add_option("--size", gen.size)->required();
  g->add_option("--count", gen.count)->required();
  g->add_option("--seed", gen.seed)->required();
  g->add_flag("--with-optimal", gen.with_optimal);
  g->add_option("--out", gen.out)->required();
  g->add_option("--epsilon", gen.epsilon, "COVER relaxation for mvc/msc");
  g->add_option("--b", gen.b, "RHS degree for ba_bipartite");
  g->add_option("--budget-ms", gen.budget_ms);
  g->add_option("--split", gen.split)->check(CLI::IsMember({"train", "val", "test"}));
  g->add_option("--threads", gen.threads);

  std::string algo, in, out, solution, format, weights, task, decode = "default";
  double epsilon = 0.0;
  auto* s = app.add_subcommand("solve", "Run a primal-dual algorithm");
  s->add_option("--algo", algo)->required()->check(CLI::IsMember({"pd", "pd-uniform", "cover"}));
  s->add_option("--epsilon", epsilon);
  s->add_option("--in", in)->required();
  s->add_option("--out", out)->required();

  std::int64_t budget_ms = pdlab::kDefaultBudgetMs;
  auto* e = app.add_subcommand("exact", "Solve to optimality by branch-and-bound");
  e->add_option("--budget-ms", budget_ms);
  e->add_option("--in", in)->required();
  e->add_option("--out", out)->required();

  std::size_t count = 100;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims{1, 32};
  auto* v = app.add_subcommand("verify-replication", "Check the analytic network against the engine");
  v->add_option("--task", task)->required()->check(CLI::IsMember({"mvc", "msc", "mhs"}));
  v->add_option("--count", count);
  v->add_option("--tol", tol);
  v->add_option("--seed", seed);
  v->add_option("--hidden-dim", dims)->delimiter(',');

  bool free_run = false, teacher_forced = false;
  auto* i = app.add_subcommand("infer", "Roll out a weights file");
  i->add_option("--weights", weights)->required();
  i->add_option("--in", in)->required();
  i->add_option("--out", out)->required();
  auto* fr = i->add_flag("--free-run", free_run);
  i->add_flag("--teacher-forced", teacher_forced)->excludes(fr);
  i->add_option("--decode", decode)->check(CLI::IsMember({"default", "threshold", "argmax"}));

  std::string model, report;
  auto* b = app.add_subcommand("bench", "Model-to-algorithm weight ratios");
  b->add_option("--model", model)->required();
  b->add_option("--algo", algo)->required();
  b->add_option("--report", report)->required();

  auto* x = app.add_subcommand("export", "Write MIP start or LP files");
  x->add_option("--format", format)->required()->check(CLI::IsMember({"mst", "lp"}));
  x->add_option("--in", in)->required();
  x->add_option("--solution", solution);
  x->add_option("--out", out)->required();

  std::string kind = "analytic";
  std::size_t hidden_dim = 32;
  bool uniform = false;
  auto* mw = app.add_subcommand("make-weights", "Write analytic, random or zero weights");
  mw->add_option("--kind", kind)->check(CLI::IsMember({"analytic", "random", "zero"}));
  mw->add_option("--hidden-dim", hidden_dim);
  mw->add_flag("--uniform", uniform);
  mw->add_option("--seed", seed);
  mw->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    PrintError("usage", err.what());
    return 2;
  }

  try {
    if (*g) RunGenerate(gen);
    if (*s) RunSolve(algo, epsilon, in, out);
    if (*e) RunExact(budget_ms, in, out);
    if (*v) RunVerifyReplication(task, count, tol, seed, dims);
    if (*i) RunInfer(weights, in, out, teacher_forced, decode);
    if (*b) RunBench(model, algo, report);
    if (*x) RunExport(format, in, solution, out);
    if (*mw) RunMakeWeights(kind, hidden_dim, uniform, seed, out);
  } catch (const pdlab::Error& err) {
    PrintError(pdlab::ErrorKindName(err.kind()), err.what());
    return ExitCode(err.kind());
  } catch (const std::exception& err) {
    PrintError("internal", err.what());
    return 1;
  }
  return 0;
}
