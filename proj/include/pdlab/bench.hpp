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

#ifndef PDLAB_BENCH_HPP_
#define PDLAB_BENCH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "pdlab/common.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {

// Completes a partial solution: while some set is unhit, add the element of
// an unhit set with the largest r_e / d_e (lowest index on ties). d is kept
// current by decrementing as sets become hit.
inline Solution GreedyCleanup(const HittingSetInstance& inst,
                              const Solution& partial, std::span<const double> r,
                              std::span<const Index> d) {
  if (r.size() != inst.n_elements || d.size() != inst.n_elements) {
    Fail(ErrorKind::kMismatch, "cleanup needs r and d over all elements");
  }
  std::vector<std::uint8_t> chosen(inst.n_elements, 0);
  for (Index e : partial.chosen) chosen[e] = 1;
  std::vector<std::uint8_t> hit(inst.num_sets(), 0);
  for (std::size_t t = 0; t < inst.num_sets(); ++t) {
    for (Index e : inst.sets[t]) {
      if (chosen[e]) {
        hit[t] = 1;
        break;
      }
    }
  }
  const auto elem_sets = inst.element_to_sets();
  std::vector<Index> degree(d.begin(), d.end());
  std::vector<Index> out = partial.chosen;
  while (true) {
    std::vector<std::uint8_t> candidate(inst.n_elements, 0);
    bool any = false;
    for (std::size_t t = 0; t < inst.num_sets(); ++t) {
      if (hit[t]) continue;
      any = true;
      for (Index e : inst.sets[t]) candidate[e] = 1;
    }
    if (!any) break;
    Index pick = 0;
    double best = -std::numeric_limits<double>::infinity();
    bool found = false;
    for (Index e = 0; e < inst.n_elements; ++e) {
      if (!candidate[e] || chosen[e]) continue;
      const double score =
          degree[e] > 0 ? r[e] / static_cast<double>(degree[e])
                        : std::numeric_limits<double>::infinity();
      if (!found || score > best) {
        best = score;
        pick = e;
        found = true;
      }
    }
    if (!found) {
      Fail(ErrorKind::kInfeasibleInstance, "unhit set with no free element");
    }
    chosen[pick] = 1;
    out.push_back(pick);
    for (Index t : elem_sets[pick]) {
      if (hit[t]) continue;
      hit[t] = 1;
      for (Index e : inst.sets[t]) {
        if (degree[e] > 0) --degree[e];
      }
    }
  }
  return MakeSolution(inst, std::move(out));
}

// One solved instance as seen by the ratio report.
struct EvalEntry {
  std::string id;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  double weight = 0.0;
  bool feasible = true;
  bool cleanup_used = false;
};

struct RatioGroup {
  std::size_t size = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t num_seeds = 0;
  std::size_t num_instances = 0;
  double feasibility_rate = 0.0;
  double cleanup_rate = 0.0;
};

struct RatioReport {
  std::vector<RatioGroup> groups;  // increasing size
};

inline double WeightRatio(double model, double algo) {
  if (algo == 0.0) {
    return model == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return model / algo;
}

// Per size: per-instance ratios averaged within each seed, then mean and
// sample standard deviation across seeds.
inline RatioReport MakeRatioReport(std::span<const EvalEntry> model,
                                   std::span<const EvalEntry> algo) {
  std::map<std::string, const EvalEntry*> by_id;
  for (const auto& a : algo) by_id[a.id] = &a;
  if (by_id.size() != algo.size()) {
    Fail(ErrorKind::kMismatch, "duplicate instance id in algorithm results");
  }
  struct Acc {
    std::map<std::uint64_t, std::pair<double, std::size_t>> per_seed;
    std::size_t count = 0;
    std::size_t feasible = 0;
    std::size_t cleanup = 0;
  };
  std::map<std::size_t, Acc> groups;
  std::set<std::string> used;
  for (const auto& m : model) {
    auto it = by_id.find(m.id);
    if (it == by_id.end()) {
      Fail(ErrorKind::kMismatch, "no algorithm result for instance '" + m.id + "'");
    }
    if (!used.insert(m.id).second) {
      Fail(ErrorKind::kMismatch, "duplicate instance id '" + m.id + "'");
    }
    Acc& acc = groups[m.size];
    auto& [sum, n] = acc.per_seed[m.seed];
    sum += WeightRatio(m.weight, it->second->weight);
    ++n;
    ++acc.count;
    acc.feasible += m.feasible ? 1 : 0;
    acc.cleanup += m.cleanup_used ? 1 : 0;
  }
  if (used.size() != by_id.size()) {
    Fail(ErrorKind::kMismatch, "algorithm results contain unmatched instances");
  }
  RatioReport report;
  for (const auto& [size, acc] : groups) {
    RatioGroup g;
    g.size = size;
    g.num_instances = acc.count;
    g.num_seeds = acc.per_seed.size();
    std::vector<double> seed_means;
    for (const auto& [seed, sn] : acc.per_seed) {
      seed_means.push_back(sn.first / static_cast<double>(sn.second));
    }
    double total = 0.0;
    for (double v : seed_means) total += v;
    g.mean = total / static_cast<double>(seed_means.size());
    if (seed_means.size() > 1) {
      double ss = 0.0;
      for (double v : seed_means) ss += (v - g.mean) * (v - g.mean);
      g.stddev = std::sqrt(ss / static_cast<double>(seed_means.size() - 1));
    }
    g.feasibility_rate = static_cast<double>(acc.feasible) / acc.count;
    g.cleanup_rate = static_cast<double>(acc.cleanup) / acc.count;
    report.groups.push_back(g);
  }
  return report;
}

inline std::string VarName(Index e) { return "x_" + std::to_string(e); }

inline std::string FormatCoefficient(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Warm-start file: '#' header lines, then "x_<i> <0|1>" for every element.
inline std::string ExportMst(const HittingSetInstance& inst,
                             const Solution& solution) {
  std::vector<std::uint8_t> value(inst.n_elements, 0);
  for (Index e : solution.chosen) {
    if (e >= inst.n_elements) {
      Fail(ErrorKind::kInvalidArgument, "solution element out of range");
    }
    value[e] = 1;
  }
  std::ostringstream os;
  os << "# MIP start\n";
  os << "# instance " << (inst.id.empty() ? "-" : inst.id) << "\n";
  for (Index e = 0; e < inst.n_elements; ++e) {
    os << VarName(e) << ' ' << static_cast<int>(value[e]) << '\n';
  }
  return os.str();
}

inline Index ParseVarName(const std::string& token) {
  if (token.size() < 3 || token.compare(0, 2, "x_") != 0) {
    Fail(ErrorKind::kParse, "bad variable name '" + token + "'");
  }
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(token.substr(2), &pos);
  } catch (const std::exception&) {
    Fail(ErrorKind::kParse, "bad variable name '" + token + "'");
  }
  if (pos != token.size() - 2) {
    Fail(ErrorKind::kParse, "bad variable name '" + token + "'");
  }
  return static_cast<Index>(v);
}

// Returns the indices assigned 1, increasing.
inline std::vector<Index> ParseMst(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Index> chosen;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    std::string value;
    if (!(ls >> name >> value)) {
      Fail(ErrorKind::kParse, "mst line " + std::to_string(lineno) + ": expected '<var> <value>'");
    }
    const Index e = ParseVarName(name);
    if (value == "1") {
      chosen.push_back(e);
    } else if (value != "0") {
      Fail(ErrorKind::kParse, "mst line " + std::to_string(lineno) + ": value must be 0 or 1");
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// CPLEX LP text for min sum w_e x_e s.t. sum_{e in T} x_e >= 1, x binary.
inline std::string ExportLp(const HittingSetInstance& inst) {
  constexpr std::size_t kTermsPerLine = 8;
  std::ostringstream os;
  os << "\\ id " << (inst.id.empty() ? "-" : inst.id) << "\n";
  os << "\\ task " << TaskName(inst.task) << "\n";
  os << "Minimize\n obj:";
  for (Index e = 0; e < inst.n_elements; ++e) {
    if (e > 0 && e % kTermsPerLine == 0) os << "\n     ";
    os << (e == 0 ? " " : " + ") << FormatCoefficient(inst.weights[e]) << ' '
       << VarName(e);
  }
  os << "\nSubject To\n";
  for (std::size_t t = 0; t < inst.num_sets(); ++t) {
    os << " c" << t << ":";
    const auto& s = inst.sets[t];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0 && i % kTermsPerLine == 0) os << "\n     ";
      os << (i == 0 ? " " : " + ") << VarName(s[i]);
    }
    os << " >= 1\n";
  }
  os << "Binary\n";
  for (Index e = 0; e < inst.n_elements; ++e) {
    os << (e % kTermsPerLine == 0 ? (e == 0 ? " " : "\n ") : " ") << VarName(e);
  }
  os << "\nEnd\n";
  return os.str();
}

// Reads back the subset of LP syntax ExportLp emits.
inline HittingSetInstance ParseLp(const std::string& text) {
  enum class Section { kNone, kObjective, kConstraints, kBinary, kEnd };
  std::istringstream in(text);
  std::string line;
  std::string id;
  Task task = Task::kMhs;
  std::map<Index, double> objective;
  std::vector<std::vector<Index>> rows;
  std::vector<Index> binaries;
  Section section = Section::kNone;
  std::vector<std::string> row_tokens;
  auto flush_row = [&]() {
    if (row_tokens.empty()) return;
    std::vector<Index> members;
    std::size_t i = 0;
    if (!row_tokens.empty() && row_tokens[0].back() == ':') ++i;
    for (; i < row_tokens.size(); ++i) {
      const std::string& tok = row_tokens[i];
      if (tok == "+") continue;
      if (tok == ">=") {
        if (i + 2 != row_tokens.size() || row_tokens[i + 1] != "1") {
          Fail(ErrorKind::kParse, "constraint must end with '>= 1'");
        }
        break;
      }
      members.push_back(ParseVarName(tok));
    }
    rows.push_back(std::move(members));
    row_tokens.clear();
  };
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '\\') {
      std::istringstream cs(line.substr(1));
      std::string key;
      std::string value;
      if (cs >> key >> value) {
        if (key == "id") id = value == "-" ? "" : value;
        if (key == "task") task = ParseTask(value);
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head == "Minimize") {
      section = Section::kObjective;
      continue;
    }
    if (head == "Subject") {
      section = Section::kConstraints;
      continue;
    }
    if (head == "Binary" || head == "Binaries") {
      flush_row();
      section = Section::kBinary;
      continue;
    }
    if (head == "End") {
      flush_row();
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kObjective: {
        double coef = 1.0;
        bool have_coef = false;
        for (const auto& tok : tokens) {
          if (tok.back() == ':' || tok == "+") continue;
          if (tok.rfind("x_", 0) == 0) {
            objective[ParseVarName(tok)] = have_coef ? coef : 1.0;
            have_coef = false;
          } else {
            try {
              coef = std::stod(tok);
            } catch (const std::exception&) {
              Fail(ErrorKind::kParse, "lp line " + std::to_string(lineno) +
                                          ": bad coefficient '" + tok + "'");
            }
            have_coef = true;
          }
        }
        break;
      }
      case Section::kConstraints:
        if (head.back() == ':') flush_row();
        row_tokens.insert(row_tokens.end(), tokens.begin(), tokens.end());
        break;
      case Section::kBinary:
        for (const auto& tok : tokens) binaries.push_back(ParseVarName(tok));
        break;
      default:
        Fail(ErrorKind::kParse,
             "lp line " + std::to_string(lineno) + ": content outside a section");
    }
  }
  if (section != Section::kEnd) Fail(ErrorKind::kParse, "lp text missing 'End'");
  const std::size_t n = binaries.size();
  std::vector<double> weights(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (binaries[i] != i) Fail(ErrorKind::kParse, "binary variables not x_0..x_{n-1}");
  }
  for (const auto& [e, w] : objective) {
    if (e >= n) Fail(ErrorKind::kParse, "objective variable not declared binary");
    weights[e] = w;
  }
  return MakeInstance(id, task, n, std::move(weights), std::move(rows));
}

}  // namespace pdlab

#endif  // PDLAB_BENCH_HPP_
