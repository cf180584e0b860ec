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

// Primal-dual approximation for weighted hitting set.
//
// Each timestep raises the dual variable of every still-violated set T by
//   delta_T = min_{e in T} r_e / d_e
// where r_e is the residual weight and d_e counts the violated sets that
// contain e. Residuals drop by the sum of the raises of their sets (or by
// d_e * Delta with Delta = min_T delta_T under the uniform rule). Elements
// whose residual reaches zero (or eps * w_e for the relaxed variant) join the
// solution and their sets stop being violated.

#ifndef PDLAB_ENGINE_HPP_
#define PDLAB_ENGINE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/common.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {

enum class Algo {
  kGeneral,   // plain or uniform-increase rule, any task
  kCoverMvc,  // relaxed COVER on graphs
  kCoverMsc,  // relaxed COVER on hypergraphs
};

inline std::string_view AlgoName(Algo algo) {
  switch (algo) {
    case Algo::kGeneral: return "general";
    case Algo::kCoverMvc: return "cover-mvc";
    case Algo::kCoverMsc: return "cover-msc";
  }
  return "general";
}

inline Algo ParseAlgo(std::string_view name) {
  if (name == "general") return Algo::kGeneral;
  if (name == "cover-mvc") return Algo::kCoverMvc;
  if (name == "cover-msc") return Algo::kCoverMsc;
  Fail(ErrorKind::kParse, "unknown algorithm '" + std::string(name) + "'");
}

struct AlgoConfig {
  bool uniform = false;
  double epsilon = 0.0;     // 0 means exact tightness
  double tight_tol = 1e-9;  // absolute slack for r_e == 0
  std::size_t max_steps = 0;  // 0 means |E|

  void Validate() const {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
      Fail(ErrorKind::kInvalidArgument, "epsilon must lie in [0, 1)");
    }
    if (!(tight_tol > 0.0)) {
      Fail(ErrorKind::kInvalidArgument, "tight_tol must be positive");
    }
  }

  friend bool operator==(const AlgoConfig&, const AlgoConfig&) = default;
};

// State after one timestep. x is cumulative: once an element is chosen it
// stays 1. delta is 0 for sets that were not violated during the step.
// set_active marks the violated sets whose duals the step raised.
struct StepRecord {
  std::vector<std::uint8_t> x;
  std::vector<double> r;
  std::vector<double> delta;
  std::optional<double> Delta;
  std::vector<std::uint8_t> set_active;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

// steps[0] is the initial state after the zero-weight pre-pass; every later
// entry is one processor timestep.
struct Trajectory {
  Algo algo = Algo::kGeneral;
  AlgoConfig config;
  std::vector<StepRecord> steps;
  Solution final_solution;

  std::size_t num_timesteps() const {
    return steps.empty() ? 0 : steps.size() - 1;
  }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct AlgoState {
  std::vector<double> residuals;
  std::vector<Index> degrees;
  std::vector<std::uint8_t> element_active;  // not chosen and d_e > 0
  std::vector<std::uint8_t> set_active;      // not yet hit
  std::vector<std::uint8_t> chosen;
  std::size_t t = 0;
};

// Recomputes degrees and masks from the chosen mask.
inline void RefreshMasks(const HittingSetInstance& inst, AlgoState& s) {
  s.set_active.assign(inst.num_sets(), 1);
  s.degrees.assign(inst.n_elements, 0);
  for (std::size_t t = 0; t < inst.num_sets(); ++t) {
    for (Index e : inst.sets[t]) {
      if (s.chosen[e]) {
        s.set_active[t] = 0;
        break;
      }
    }
    if (!s.set_active[t]) continue;
    for (Index e : inst.sets[t]) ++s.degrees[e];
  }
  s.element_active.assign(inst.n_elements, 0);
  for (std::size_t e = 0; e < inst.n_elements; ++e) {
    s.element_active[e] = !s.chosen[e] && s.degrees[e] > 0;
  }
}

// Step-by-step executor. Useful on its own for lockstep comparisons; the
// Run* functions below drive it to completion.
class PrimalDualRun {
 public:
  PrimalDualRun(const HittingSetInstance& inst, const AlgoConfig& config)
      : inst_(inst), config_(config) {
    config_.Validate();
    state_.residuals = inst.weights;
    state_.chosen.assign(inst.n_elements, 0);
    RefreshMasks(inst_, state_);
    // Zero-weight pre-pass.
    StepRecord rec;
    rec.set_active = state_.set_active;
    rec.delta.assign(inst.num_sets(), 0.0);
    if (config_.uniform) rec.Delta = 0.0;
    AddTightElements(state_.element_active);
    rec.x = state_.chosen;
    rec.r = state_.residuals;
    initial_ = std::move(rec);
  }

  const StepRecord& initial_record() const { return initial_; }
  const AlgoState& state() const { return state_; }

  bool done() const {
    return std::none_of(state_.set_active.begin(), state_.set_active.end(),
                        [](std::uint8_t a) { return a != 0; });
  }

  // One pass of the dual raise, residual update, and tightness check.
  StepRecord Step() {
    const std::size_t m = inst_.num_sets();
    StepRecord rec;
    rec.set_active = state_.set_active;
    rec.delta.assign(m, 0.0);
    double min_delta = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < m; ++t) {
      if (!state_.set_active[t]) continue;
      double best = std::numeric_limits<double>::infinity();
      for (Index e : inst_.sets[t]) {
        best = std::min(best, state_.residuals[e] /
                                  static_cast<double>(state_.degrees[e]));
      }
      rec.delta[t] = best;
      min_delta = std::min(min_delta, best);
    }
    if (config_.uniform) {
      rec.Delta = min_delta;
      for (std::size_t e = 0; e < inst_.n_elements; ++e) {
        if (!state_.element_active[e]) continue;
        state_.residuals[e] -= static_cast<double>(state_.degrees[e]) * min_delta;
      }
    } else {
      std::vector<double> raise(inst_.n_elements, 0.0);
      for (std::size_t t = 0; t < m; ++t) {
        if (!state_.set_active[t]) continue;
        for (Index e : inst_.sets[t]) raise[e] += rec.delta[t];
      }
      for (std::size_t e = 0; e < inst_.n_elements; ++e) {
        if (state_.element_active[e]) state_.residuals[e] -= raise[e];
      }
    }
    const std::vector<std::uint8_t> candidates = state_.element_active;
    AddTightElements(candidates);
    ++state_.t;
    rec.x = state_.chosen;
    rec.r = state_.residuals;
    return rec;
  }

  bool IsTight(std::size_t e) const {
    const double slack =
        std::max(config_.tight_tol, config_.epsilon * inst_.weights[e]);
    return state_.residuals[e] <= slack;
  }

 private:
  void AddTightElements(const std::vector<std::uint8_t>& candidates) {
    bool changed = false;
    for (std::size_t e = 0; e < inst_.n_elements; ++e) {
      if (candidates[e] && IsTight(e)) {
        state_.chosen[e] = 1;
        changed = true;
      }
    }
    if (changed) RefreshMasks(inst_, state_);
  }

  const HittingSetInstance& inst_;
  AlgoConfig config_;
  AlgoState state_;
  StepRecord initial_;
};

inline Solution ChosenToSolution(const HittingSetInstance& inst,
                                 const std::vector<std::uint8_t>& chosen) {
  std::vector<Index> idx;
  for (Index e = 0; e < chosen.size(); ++e) {
    if (chosen[e]) idx.push_back(e);
  }
  return MakeSolution(inst, std::move(idx));
}

inline Trajectory RunPrimalDual(const HittingSetInstance& inst, Algo algo,
                                const AlgoConfig& config) {
  Trajectory traj;
  traj.algo = algo;
  traj.config = config;
  PrimalDualRun run(inst, config);
  traj.steps.push_back(run.initial_record());
  const std::size_t cap =
      config.max_steps == 0 ? inst.n_elements : config.max_steps;
  while (!run.done()) {
    if (traj.num_timesteps() >= cap) {
      Fail(ErrorKind::kIncompleteTrajectory,
           "no hitting set after " + std::to_string(cap) + " timesteps");
    }
    traj.steps.push_back(run.Step());
  }
  traj.final_solution = ChosenToSolution(inst, run.state().chosen);
  return traj;
}

// Plain rule (config.uniform == false) or uniform-increase rule.
inline Trajectory RunGeneral(const HittingSetInstance& inst,
                             const AlgoConfig& config) {
  return RunPrimalDual(inst, Algo::kGeneral, config);
}

inline AlgoConfig CoverConfig(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    Fail(ErrorKind::kInvalidArgument, "COVER requires epsilon in (0, 1)");
  }
  AlgoConfig cfg;
  cfg.epsilon = epsilon;
  return cfg;
}

// Relaxed COVER for vertex cover: a vertex leaves once its residual drops to
// eps * w. All vertices crossing the threshold in a round leave together.
inline Trajectory RunCoverMvc(const HittingSetInstance& inst, double epsilon) {
  if (inst.task != Task::kMvc) {
    Fail(ErrorKind::kInvalidArgument, "COVER (mvc) needs a vertex-cover instance");
  }
  return RunPrimalDual(inst, Algo::kCoverMvc, CoverConfig(epsilon));
}

inline Trajectory RunCoverMsc(const HittingSetInstance& inst, double epsilon) {
  if (inst.task != Task::kMsc) {
    Fail(ErrorKind::kInvalidArgument, "COVER (msc) needs a set-cover instance");
  }
  return RunPrimalDual(inst, Algo::kCoverMsc, CoverConfig(epsilon));
}

// Re-runs whatever produced `traj` on `inst`.
inline Trajectory Rerun(const HittingSetInstance& inst, const Trajectory& traj) {
  return RunPrimalDual(inst, traj.algo, traj.config);
}

// Accumulated dual variables y_T = sum over timesteps of the raise of T.
inline std::vector<double> DualVariables(const Trajectory& traj,
                                         const HittingSetInstance& inst) {
  std::vector<double> y(inst.num_sets(), 0.0);
  for (std::size_t k = 1; k < traj.steps.size(); ++k) {
    const StepRecord& rec = traj.steps[k];
    if (rec.delta.size() != y.size() || rec.set_active.size() != y.size()) {
      Fail(ErrorKind::kMismatch, "trajectory does not match instance sets");
    }
    for (std::size_t t = 0; t < y.size(); ++t) {
      if (!rec.set_active[t]) continue;
      y[t] += rec.Delta ? *rec.Delta : rec.delta[t];
    }
  }
  return y;
}

struct DualReport {
  bool feasible = false;
  double max_violation = 0.0;
  double dual_objective = 0.0;
};

// Checks sum_{T ∋ e} y_T <= w_e for every element.
inline DualReport VerifyDualFeasibility(const HittingSetInstance& inst,
                                        std::span<const double> y,
                                        double tol = 1e-9) {
  if (y.size() != inst.num_sets()) {
    Fail(ErrorKind::kMismatch, "dual vector length != number of sets");
  }
  std::vector<double> load(inst.n_elements, 0.0);
  DualReport report;
  for (std::size_t t = 0; t < y.size(); ++t) {
    if (y[t] < 0.0) {
      Fail(ErrorKind::kInvalidArgument,
           "negative dual value for set " + std::to_string(t));
    }
    report.dual_objective += y[t];
    for (Index e : inst.sets[t]) load[e] += y[t];
  }
  for (std::size_t e = 0; e < inst.n_elements; ++e) {
    report.max_violation =
        std::max(report.max_violation, load[e] - inst.weights[e]);
  }
  report.feasible = report.max_violation <= tol;
  return report;
}

}  // namespace pdlab

#endif  // PDLAB_ENGINE_HPP_
