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

#ifndef PDLAB_EXACT_HPP_
#define PDLAB_EXACT_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pdlab/common.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {

enum class SolveStatus { kOptimal, kTimeout };

inline std::string_view SolveStatusName(SolveStatus s) {
  return s == SolveStatus::kOptimal ? "optimal" : "timeout";
}

inline SolveStatus ParseSolveStatus(std::string_view name) {
  if (name == "optimal") return SolveStatus::kOptimal;
  if (name == "timeout") return SolveStatus::kTimeout;
  Fail(ErrorKind::kParse, "unknown solve status '" + std::string(name) + "'");
}

struct OptimalSolution {
  std::vector<Index> chosen;
  double weight = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  std::uint64_t nodes_explored = 0;

  friend bool operator==(const OptimalSolution&,
                         const OptimalSolution&) = default;
};

inline constexpr std::int64_t kDefaultBudgetMs = 10'000;

namespace internal {

// Depth-first branch-and-bound over include/exclude decisions.
class BranchAndBound {
 public:
  BranchAndBound(const HittingSetInstance& inst, std::int64_t budget_ms)
      : inst_(inst),
        elem_sets_(inst.element_to_sets()),
        status_(inst.n_elements, kFree),
        hits_(inst.num_sets(), 0),
        degree_(inst.n_elements, 0),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(budget_ms)) {}

  void SetIncumbent(std::vector<Index> chosen, double weight) {
    best_ = std::move(chosen);
    best_weight_ = weight;
  }

  OptimalSolution Solve() {
    Search(0.0);
    OptimalSolution out;
    out.chosen = best_;
    std::sort(out.chosen.begin(), out.chosen.end());
    out.weight = SolutionWeight(inst_, out.chosen);
    out.status = timed_out_ ? SolveStatus::kTimeout : SolveStatus::kOptimal;
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  enum : std::uint8_t { kFree, kIn, kOut };

  void Include(Index e, std::vector<Index>& trail, double& weight) {
    status_[e] = kIn;
    for (Index t : elem_sets_[e]) ++hits_[t];
    trail.push_back(e);
    weight += inst_.weights[e];
  }

  void Undo(const std::vector<Index>& trail, std::size_t mark) {
    for (std::size_t i = trail.size(); i > mark; --i) {
      const Index e = trail[i - 1];
      if (status_[e] == kIn) {
        for (Index t : elem_sets_[e]) --hits_[t];
      }
      status_[e] = kFree;
    }
  }

  bool OutOfTime() {
    if ((nodes_ & 255) == 0 &&
        std::chrono::steady_clock::now() >= deadline_) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  // Includes forced elements: sole free member of an unhit set, or free
  // zero-weight members of unhit sets. Returns false if some unhit set has no
  // free element left.
  bool Propagate(std::vector<Index>& trail, double& weight) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t < inst_.num_sets(); ++t) {
        if (hits_[t] > 0) continue;
        Index sole = 0;
        int free_count = 0;
        for (Index e : inst_.sets[t]) {
          if (status_[e] != kFree) continue;
          if (inst_.weights[e] == 0.0) {
            sole = e;
            free_count = 1;
            break;
          }
          sole = e;
          ++free_count;
        }
        if (free_count == 0) return false;
        if (free_count == 1) {
          Include(sole, trail, weight);
          changed = true;
        }
      }
    }
    return true;
  }

  void Search(double weight) {
    ++nodes_;
    if (OutOfTime()) return;
    std::vector<Index> trail;
    if (!Propagate(trail, weight) || weight >= best_weight_) {
      Undo(trail, 0);
      return;
    }
    // Degrees over unhit sets, restricted to free elements.
    std::fill(degree_.begin(), degree_.end(), 0);
    bool any_unhit = false;
    for (std::size_t t = 0; t < inst_.num_sets(); ++t) {
      if (hits_[t] > 0) continue;
      any_unhit = true;
      for (Index e : inst_.sets[t]) {
        if (status_[e] == kFree) ++degree_[e];
      }
    }
    if (!any_unhit) {
      best_weight_ = weight;
      best_.clear();
      for (Index e = 0; e < inst_.n_elements; ++e) {
        if (status_[e] == kIn) best_.push_back(e);
      }
      Undo(trail, 0);
      return;
    }
    // One round of dual raises is a feasible dual of the residual problem, so
    // its objective is an admissible bound.
    double bound = 0.0;
    for (std::size_t t = 0; t < inst_.num_sets(); ++t) {
      if (hits_[t] > 0) continue;
      double best = std::numeric_limits<double>::infinity();
      for (Index e : inst_.sets[t]) {
        if (status_[e] == kFree) {
          best = std::min(best, inst_.weights[e] / degree_[e]);
        }
      }
      bound += best;
    }
    if (weight + bound >= best_weight_) {
      Undo(trail, 0);
      return;
    }
    // Branch on the free element with the largest degree per unit weight.
    Index pick = 0;
    double pick_score = -1.0;
    for (Index e = 0; e < inst_.n_elements; ++e) {
      if (status_[e] != kFree || degree_[e] == 0) continue;
      const double score = degree_[e] / inst_.weights[e];
      if (score > pick_score) {
        pick_score = score;
        pick = e;
      }
    }
    const std::size_t mark = trail.size();
    double w_in = weight;
    Include(pick, trail, w_in);
    Search(w_in);
    Undo(trail, mark);
    if (!timed_out_) {
      status_[pick] = kOut;
      trail.push_back(pick);
      Search(weight);
    }
    Undo(trail, 0);
  }

  const HittingSetInstance& inst_;
  std::vector<std::vector<Index>> elem_sets_;
  std::vector<std::uint8_t> status_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::uint32_t> degree_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Index> best_;
  double best_weight_ = std::numeric_limits<double>::infinity();
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace internal

// Minimum-weight hitting set by branch-and-bound, seeded with the primal-dual
// solution. Returns the best incumbent with status kTimeout if the budget
// runs out.
inline OptimalSolution SolveOptimal(const HittingSetInstance& inst,
                                    std::int64_t budget_ms = kDefaultBudgetMs) {
  for (const auto& s : inst.sets) {
    if (s.empty()) Fail(ErrorKind::kInfeasibleInstance, "empty set");
  }
  internal::BranchAndBound bnb(inst, budget_ms);
  const Trajectory seed = RunGeneral(inst, AlgoConfig{});
  bnb.SetIncumbent(seed.final_solution.chosen, seed.final_solution.weight);
  return bnb.Solve();
}

inline constexpr std::size_t kBruteForceMaxElements = 25;

// Exhaustive enumeration of all 2^n subsets. Independent of SolveOptimal.
inline OptimalSolution SolveBruteForce(const HittingSetInstance& inst) {
  const std::size_t n = inst.n_elements;
  if (n > kBruteForceMaxElements) {
    Fail(ErrorKind::kInvalidArgument,
         "brute force limited to " + std::to_string(kBruteForceMaxElements) +
             " elements, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> masks;
  for (const auto& s : inst.sets) {
    if (s.empty()) Fail(ErrorKind::kInfeasibleInstance, "empty set");
    std::uint32_t m = 0;
    for (Index e : s) m |= 1u << e;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  // Subset weights from two half tables.
  const std::size_t lo_bits = n / 2;
  const std::size_t hi_bits = n - lo_bits;
  auto table = [&](std::size_t offset, std::size_t bits) {
    std::vector<double> w(std::size_t{1} << bits, 0.0);
    for (std::size_t m = 1; m < w.size(); ++m) {
      const int low = __builtin_ctzll(m);
      w[m] = w[m & (m - 1)] + inst.weights[offset + low];
    }
    return w;
  };
  const std::vector<double> lo = table(0, lo_bits);
  const std::vector<double> hi = table(lo_bits, hi_bits);
  const std::uint32_t lo_mask = (1u << lo_bits) - 1;

  OptimalSolution out;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m64 = 0; m64 < total; ++m64) {
    const auto m = static_cast<std::uint32_t>(m64);
    ++out.nodes_explored;
    const double w = lo[m & lo_mask] + hi[m >> lo_bits];
    if (w >= best) continue;
    bool ok = true;
    for (std::uint32_t s : masks) {
      if ((s & m) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = w;
      best_mask = m;
    }
  }
  for (Index e = 0; e < n; ++e) {
    if (best_mask & (1u << e)) out.chosen.push_back(e);
  }
  out.weight = SolutionWeight(inst, out.chosen);
  out.status = SolveStatus::kOptimal;
  return out;
}

}  // namespace pdlab

#endif  // PDLAB_EXACT_HPP_
