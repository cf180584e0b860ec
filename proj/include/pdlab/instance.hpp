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

#ifndef PDLAB_INSTANCE_HPP_
#define PDLAB_INSTANCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdlab/common.hpp"

namespace pdlab {

// Which source problem an instance was reduced from.
enum class Task { kMvc, kMsc, kMhs };

inline std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kMvc: return "mvc";
    case Task::kMsc: return "msc";
    case Task::kMhs: return "mhs";
  }
  return "mhs";
}

inline Task ParseTask(std::string_view name) {
  if (name == "mvc") return Task::kMvc;
  if (name == "msc") return Task::kMsc;
  if (name == "mhs") return Task::kMhs;
  Fail(ErrorKind::kInvalidArgument, "unknown task '" + std::string(name) + "'");
}

// A weighted ground set E and a family of subsets to hit. Sets are stored in
// canonical form: members strictly increasing, no two sets equal. Sets keep
// the order in which they were first seen.
struct HittingSetInstance {
  std::string id;
  Task task = Task::kMhs;
  std::size_t n_elements = 0;
  std::vector<double> weights;
  std::vector<std::vector<Index>> sets;
  std::map<std::string, std::string> meta;

  std::size_t num_sets() const { return sets.size(); }

  // Largest set cardinality; the approximation factor of the primal-dual rule.
  std::size_t max_set_size() const {
    std::size_t best = 0;
    for (const auto& s : sets) best = std::max(best, s.size());
    return best;
  }

  // element -> sets containing it, in increasing set order.
  std::vector<std::vector<Index>> element_to_sets() const {
    std::vector<std::vector<Index>> out(n_elements);
    for (Index t = 0; t < sets.size(); ++t) {
      for (Index e : sets[t]) out[e].push_back(t);
    }
    return out;
  }

  friend bool operator==(const HittingSetInstance&,
                         const HittingSetInstance&) = default;
};

struct Solution {
  std::vector<Index> chosen;  // sorted, distinct
  double weight = 0.0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Validates and canonicalizes raw data into an instance. Throws
// kInvalidInstance on out-of-range members, empty sets, or bad weights.
inline HittingSetInstance MakeInstance(std::string id, Task task,
                                       std::size_t n_elements,
                                       std::vector<double> weights,
                                       std::vector<std::vector<Index>> sets) {
  if (weights.size() != n_elements) {
    Fail(ErrorKind::kInvalidInstance,
         "weights length " + std::to_string(weights.size()) +
             " != n_elements " + std::to_string(n_elements));
  }
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (!std::isfinite(weights[e]) || weights[e] < 0.0) {
      Fail(ErrorKind::kInvalidInstance,
           "weight of element " + std::to_string(e) +
               " is negative or not finite");
    }
  }
  HittingSetInstance inst;
  inst.id = std::move(id);
  inst.task = task;
  inst.n_elements = n_elements;
  inst.weights = std::move(weights);
  std::set<std::vector<Index>> seen;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    auto& s = sets[t];
    if (s.empty()) {
      Fail(ErrorKind::kInvalidInstance,
           "set " + std::to_string(t) + " is empty");
    }
    for (Index e : s) {
      if (e >= n_elements) {
        Fail(ErrorKind::kInvalidInstance,
             "set " + std::to_string(t) + " references element " +
                 std::to_string(e) + " outside [0, " +
                 std::to_string(n_elements) + ")");
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (seen.insert(s).second) inst.sets.push_back(std::move(s));
  }
  return inst;
}

// Checks the invariants MakeInstance establishes. Used on deserialized data.
inline void ValidateInstance(const HittingSetInstance& inst) {
  if (inst.weights.size() != inst.n_elements) {
    Fail(ErrorKind::kInvalidInstance, "weights length mismatch");
  }
  for (double w : inst.weights) {
    if (!std::isfinite(w) || w < 0.0) {
      Fail(ErrorKind::kInvalidInstance, "negative or non-finite weight");
    }
  }
  std::set<std::vector<Index>> seen;
  for (const auto& s : inst.sets) {
    if (s.empty()) Fail(ErrorKind::kInvalidInstance, "empty set");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= inst.n_elements) {
        Fail(ErrorKind::kInvalidInstance, "set member out of range");
      }
      if (i > 0 && s[i] <= s[i - 1]) {
        Fail(ErrorKind::kInvalidInstance, "set members not strictly increasing");
      }
    }
    if (!seen.insert(s).second) {
      Fail(ErrorKind::kInvalidInstance, "duplicate set");
    }
  }
}

// One element per vertex, one two-element set per (deduplicated) edge.
inline HittingSetInstance FromVertexCover(
    std::size_t n_vertices, std::span<const std::pair<Index, Index>> edges,
    std::vector<double> weights, std::string id = {}) {
  std::vector<std::vector<Index>> sets;
  sets.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n_vertices || v >= n_vertices) {
      Fail(ErrorKind::kInvalidInstance,
           "edge endpoint out of range: (" + std::to_string(u) + ", " +
               std::to_string(v) + ")");
    }
    if (u == v) {
      Fail(ErrorKind::kInvalidInstance,
           "self-loop on vertex " + std::to_string(u));
    }
    sets.push_back({std::min(u, v), std::max(u, v)});
  }
  return MakeInstance(std::move(id), Task::kMvc, n_vertices,
                      std::move(weights), std::move(sets));
}

// Ground elements are the candidate sets of the family; each universe item
// becomes the constraint "pick at least one family member containing me".
inline HittingSetInstance FromSetCover(
    std::size_t n_universe, std::span<const std::vector<Index>> family,
    std::vector<double> weights, std::string id = {}) {
  if (weights.size() != family.size()) {
    Fail(ErrorKind::kInvalidInstance, "weights length must equal family size");
  }
  std::vector<std::vector<Index>> covering(n_universe);
  for (Index s = 0; s < family.size(); ++s) {
    for (Index u : family[s]) {
      if (u >= n_universe) {
        Fail(ErrorKind::kInvalidInstance,
             "family member " + std::to_string(s) +
                 " contains out-of-range item " + std::to_string(u));
      }
      if (covering[u].empty() || covering[u].back() != s) {
        covering[u].push_back(s);
      }
    }
  }
  for (std::size_t u = 0; u < n_universe; ++u) {
    if (covering[u].empty()) {
      Fail(ErrorKind::kInfeasibleInstance,
           "universe item " + std::to_string(u) + " is not covered by any set");
    }
  }
  return MakeInstance(std::move(id), Task::kMsc, family.size(),
                      std::move(weights), std::move(covering));
}

inline bool IsHittingSet(const HittingSetInstance& inst,
                         std::span<const Index> chosen) {
  std::vector<char> in(inst.n_elements, 0);
  for (Index e : chosen) {
    if (e >= inst.n_elements) {
      Fail(ErrorKind::kInvalidArgument,
           "chosen element " + std::to_string(e) + " out of range");
    }
    in[e] = 1;
  }
  for (const auto& s : inst.sets) {
    bool hit = false;
    for (Index e : s) {
      if (in[e]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

inline bool IsHittingSet(const HittingSetInstance& inst, const Solution& sol) {
  return IsHittingSet(inst, std::span<const Index>(sol.chosen));
}

inline double SolutionWeight(const HittingSetInstance& inst,
                             std::span<const Index> chosen) {
  std::vector<char> seen(inst.n_elements, 0);
  double total = 0.0;
  for (Index e : chosen) {
    if (e >= inst.n_elements) {
      Fail(ErrorKind::kInvalidArgument,
           "chosen element " + std::to_string(e) + " out of range");
    }
    if (seen[e]) {
      Fail(ErrorKind::kInvalidArgument,
           "duplicate chosen element " + std::to_string(e));
    }
    seen[e] = 1;
    total += inst.weights[e];
  }
  return total;
}

// Builds a Solution from an unordered index list.
inline Solution MakeSolution(const HittingSetInstance& inst,
                             std::vector<Index> chosen) {
  std::sort(chosen.begin(), chosen.end());
  Solution sol;
  sol.weight = SolutionWeight(inst, chosen);
  sol.chosen = std::move(chosen);
  return sol;
}

}  // namespace pdlab

#endif  // PDLAB_INSTANCE_HPP_
