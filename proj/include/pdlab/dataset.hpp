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

// Dataset construction: instances from graph-forge families, the matching
// primal-dual trajectory, and optional exact labels. Files land in
//
//   DIR/<task>_<family>_<size>_<split>.jsonl
//   DIR/manifest.json

#ifndef PDLAB_DATASET_HPP_
#define PDLAB_DATASET_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pdlab/common.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/exact.hpp"
#include "pdlab/graphs.hpp"
#include "pdlab/instance.hpp"
#include "pdlab/records.hpp"

namespace pdlab {

struct DatasetConfig {
  Task task = Task::kMvc;
  GenSpec gen;  // gen.seed is the base seed
  std::size_t count = 1000;
  bool with_optimal = false;
  double epsilon = 0.1;  // COVER relaxation for mvc / msc
  std::int64_t budget_ms = kDefaultBudgetMs;
  std::size_t max_optimal_elements = 64;
  std::optional<Split> split;  // unset: first 90% train, rest val
  std::size_t threads = 1;
  std::size_t planar_streams = 20;

  void Validate() const {
    gen.Validate();
    if (count == 0) Fail(ErrorKind::kInvalidArgument, "count must be >= 1");
    const bool bipartite = gen.family == Family::kBaBipartite;
    if (task == Task::kMvc && bipartite) {
      Fail(ErrorKind::kInvalidArgument, "mvc needs a graph family, not ba_bipartite");
    }
    if (task != Task::kMvc && !bipartite) {
      Fail(ErrorKind::kInvalidArgument,
           std::string(TaskName(task)) + " needs family ba_bipartite");
    }
    if (task != Task::kMhs && !(epsilon > 0.0 && epsilon < 1.0)) {
      Fail(ErrorKind::kInvalidArgument, "epsilon must lie in (0, 1)");
    }
    if (budget_ms < 0) Fail(ErrorKind::kInvalidArgument, "budget must be >= 0");
  }
};

inline constexpr std::size_t kTrainPercent = 90;

inline Split DefaultSplit(std::size_t index, std::size_t count) {
  const std::size_t n_train = (count * kTrainPercent + 99) / 100;
  return index < n_train ? Split::kTrain : Split::kVal;
}

// Graph for one record. Seeds: stream 1 graph, stream 2 weights; planar
// draws move to further substreams when one is exhausted.
inline Graph GenerateGraph(const DatasetConfig& c, std::uint64_t record_seed) {
  const GenSpec& g = c.gen;
  const std::uint64_t s = DeriveSeed(record_seed, 1);
  switch (g.family) {
    case Family::kBa: {
      const std::size_t hi = std::min(g.attach_hi, g.n - 1);
      return GenBa(g.n, std::min(g.attach_lo, hi), hi, s);
    }
    case Family::kEr: return GenEr(g.n, g.p_lo, g.p_hi, s);
    case Family::kStar: return GenStar(g.n, s);
    case Family::kLobster: return GenLobster(g.n, s);
    case Family::kTriconnPlanar:
      for (std::size_t k = 0; k < c.planar_streams; ++k) {
        if (auto out = Gen3ConPlanar(g.n, DeriveSeed(s, k))) return *out;
      }
      Fail(ErrorKind::kInvalidArgument,
           "no 3-connected planar cubic graph found for n=" + std::to_string(g.n));
    case Family::kBaBipartite: break;
  }
  Fail(ErrorKind::kInvalidArgument, "family is not a plain graph");
}

inline std::string RecordId(const DatasetConfig& c, std::size_t index) {
  return std::string(TaskName(c.task)) + "-" + std::string(FamilyName(c.gen.family)) +
         "-" + std::to_string(c.gen.n) + "-s" + std::to_string(c.gen.seed) + "-" +
         std::to_string(index);
}

inline HittingSetInstance BuildInstance(const DatasetConfig& c, std::size_t index) {
  const std::uint64_t rs = DeriveSeed(c.gen.seed, index);
  const std::size_t n = c.gen.n;
  std::vector<double> w = SampleWeights(n, DeriveSeed(rs, 2));
  std::string id = RecordId(c, index);
  HittingSetInstance inst;
  if (c.task == Task::kMvc) {
    const Graph g = GenerateGraph(c, rs);
    inst = FromVertexCover(n, g.edges, std::move(w), std::move(id));
  } else {
    const BipartiteGraph bg =
        GenBaBipartite(n, n, std::min(c.gen.b, n), DeriveSeed(rs, 1));
    if (c.task == Task::kMsc) {
      std::vector<std::vector<Index>> family(n);
      for (Index j = 0; j < bg.rhs_adj.size(); ++j) {
        for (Index s : bg.rhs_adj[j]) family[s].push_back(j);
      }
      inst = FromSetCover(n, family, std::move(w), std::move(id));
    } else {
      inst = MakeInstance(std::move(id), Task::kMhs, n, std::move(w), bg.rhs_adj);
    }
    inst.meta["b"] = std::to_string(c.gen.b);
  }
  inst.meta["family"] = std::string(FamilyName(c.gen.family));
  inst.meta["size"] = std::to_string(n);
  inst.meta["seed"] = std::to_string(c.gen.seed);
  inst.meta["index"] = std::to_string(index);
  return inst;
}

inline Trajectory RunDatasetAlgorithm(const DatasetConfig& c,
                                      const HittingSetInstance& inst) {
  switch (c.task) {
    case Task::kMvc: return RunCoverMvc(inst, c.epsilon);
    case Task::kMsc: return RunCoverMsc(inst, c.epsilon);
    case Task::kMhs: {
      AlgoConfig cfg;
      cfg.uniform = true;
      return RunGeneral(inst, cfg);
    }
  }
  Fail(ErrorKind::kInvalidArgument, "unknown task");
}

inline DatasetRecord BuildRecord(const DatasetConfig& c, std::size_t index) {
  DatasetRecord r;
  r.instance = BuildInstance(c, index);
  r.trajectory = RunDatasetAlgorithm(c, r.instance);
  if (c.with_optimal && r.instance.n_elements <= c.max_optimal_elements) {
    r.optimal = SolveOptimal(r.instance, c.budget_ms);
  }
  r.split = c.split ? *c.split : DefaultSplit(index, c.count);
  return r;
}

inline std::vector<DatasetRecord> BuildDataset(const DatasetConfig& c) {
  c.Validate();
  std::vector<DatasetRecord> out(c.count);
  const std::size_t workers = std::max<std::size_t>(1, std::min(c.threads, c.count));
  if (workers == 1) {
    for (std::size_t i = 0; i < c.count; ++i) out[i] = BuildRecord(c, i);
    return out;
  }
  std::vector<std::optional<Error>> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < c.count; i += workers) out[i] = BuildRecord(c, i);
      } catch (const Error& e) {
        errors[t] = e;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) throw *e;
  }
  return out;
}

// Field-wise comparison against a fresh run of the recorded configuration.
inline bool ReplayVerify(const DatasetRecord& r, double tol = 1e-9) {
  Trajectory fresh;
  try {
    fresh = Rerun(r.instance, r.trajectory);
  } catch (const Error&) {
    return false;
  }
  const Trajectory& t = r.trajectory;
  if (fresh.steps.size() != t.steps.size()) return false;
  auto close = [tol](const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(std::abs(a[i] - b[i]) <= tol)) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const StepRecord& a = fresh.steps[k];
    const StepRecord& b = t.steps[k];
    if (a.x != b.x || a.set_active != b.set_active) return false;
    if (!close(a.r, b.r) || !close(a.delta, b.delta)) return false;
    if (a.Delta.has_value() != b.Delta.has_value()) return false;
    if (a.Delta && !(std::abs(*a.Delta - *b.Delta) <= tol)) return false;
  }
  if (fresh.final_solution.chosen != t.final_solution.chosen) return false;
  if (!(std::abs(fresh.final_solution.weight - t.final_solution.weight) <= tol)) {
    return false;
  }
  if (r.optimal) {
    if (!IsHittingSet(r.instance, r.optimal->chosen)) return false;
    if (r.optimal->weight > t.final_solution.weight + tol) return false;
  }
  return true;
}

// FNV-1a, 64-bit.
inline std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::string DatasetFileName(const DatasetConfig& c, Split split) {
  return std::string(TaskName(c.task)) + "_" + std::string(FamilyName(c.gen.family)) +
         "_" + std::to_string(c.gen.n) + "_" + std::string(SplitName(split)) + ".jsonl";
}

struct WrittenFile {
  std::string name;
  std::size_t records = 0;
  std::string digest;
};

inline std::string ManifestText(const DatasetConfig& c,
                                const std::vector<WrittenFile>& files) {
  Json gen{{"family", FamilyName(c.gen.family)}, {"n", c.gen.n}, {"seed", c.gen.seed}};
  if (c.gen.family == Family::kBaBipartite) gen["b"] = c.gen.b;
  if (c.gen.family == Family::kEr) {
    gen["p_lo"] = c.gen.p_lo;
    gen["p_hi"] = c.gen.p_hi;
  }
  if (c.gen.family == Family::kBa) {
    gen["attach_lo"] = c.gen.attach_lo;
    gen["attach_hi"] = c.gen.attach_hi;
  }
  Json algo{{"task", TaskName(c.task)}};
  if (c.task == Task::kMhs) {
    algo["algo"] = AlgoName(Algo::kGeneral);
    algo["uniform"] = true;
  } else {
    algo["algo"] = AlgoName(c.task == Task::kMvc ? Algo::kCoverMvc : Algo::kCoverMsc);
    algo["epsilon"] = c.epsilon;
  }
  Json fs = Json::array();
  for (const auto& f : files) {
    fs.push_back(Json{{"name", f.name}, {"records", f.records}, {"fnv1a64", f.digest}});
  }
  Json m{{"schema", kRecordSchemaVersion},
         {"count", c.count},
         {"generator", gen},
         {"algorithm", algo},
         {"with_optimal", c.with_optimal},
         {"budget_ms", c.budget_ms},
         {"split_rule", c.split ? "all " + std::string(SplitName(*c.split))
                                : std::string("first 90% train, rest val")},
         {"files", fs}};
  return DumpJson(m) + "\n";
}

// One file per split present, plus manifest.json.
inline std::vector<WrittenFile> WriteDataset(const std::string& dir,
                                             const DatasetConfig& c,
                                             const std::vector<DatasetRecord>& records) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) Fail(ErrorKind::kIo, "cannot create '" + dir + "': " + ec.message());
  std::map<Split, std::string> text;
  std::map<Split, std::size_t> counts;
  for (const auto& r : records) {
    text[r.split] += SerializeRecord(r);
    text[r.split] += '\n';
    ++counts[r.split];
  }
  std::vector<WrittenFile> files;
  for (const auto& [split, body] : text) {
    WrittenFile f{DatasetFileName(c, split), counts[split], Hex64(Fnv1a64(body))};
    const std::string path = (fs::path(dir) / f.name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) Fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
    out << body;
    if (!out) Fail(ErrorKind::kIo, "write to '" + path + "' failed");
    files.push_back(std::move(f));
  }
  const std::string mpath = (fs::path(dir) / "manifest.json").string();
  std::ofstream out(mpath, std::ios::binary);
  if (!out) Fail(ErrorKind::kIo, "cannot open '" + mpath + "' for writing");
  out << ManifestText(c, files);
  return files;
}

}  // namespace pdlab

#endif  // PDLAB_DATASET_HPP_
