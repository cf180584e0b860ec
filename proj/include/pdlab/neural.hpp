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

// Bipartite encode-process-decode network over elements (left) and sets
// (right). One forward step mirrors one primal-dual timestep:
//
//   h_e   = f_r(log r_e),  h_d = f_d(log-degree of e)
//   h_T   = min_{e in T} g_e([h_e || h_d])                 (dual raise)
//   h_z   = min_T h_T                                      (uniform rule only)
//   h_e'  = g_u([act(h_e) + b_skip || sum_{T ∋ e} h_T])    (h_z replaces h_T
//                                                           under the uniform rule)
//   x = sigmoid(q_x(h_e') / temperature), r = q_r(h_e'), delta = q_delta(h_T),
//   Delta = q_Delta(h_z)
//
// Only unchosen elements with at least one unhit set, and unhit sets, take
// part; everything else is masked.

#ifndef PDLAB_NEURAL_HPP_
#define PDLAB_NEURAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pdlab/bench.hpp"
#include "pdlab/common.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {

enum class Activation { kElu, kRelu };
enum class DegreeTransform { kLog, kLog1p };
enum class DecodeRule { kThreshold, kArgmax };

inline std::string_view ActivationName(Activation a) {
  return a == Activation::kElu ? "elu" : "relu";
}
inline Activation ParseActivation(std::string_view s) {
  if (s == "elu") return Activation::kElu;
  if (s == "relu") return Activation::kRelu;
  Fail(ErrorKind::kParse, "unknown activation '" + std::string(s) + "'");
}
inline std::string_view DegreeTransformName(DegreeTransform d) {
  return d == DegreeTransform::kLog ? "log" : "log1p";
}
inline DegreeTransform ParseDegreeTransform(std::string_view s) {
  if (s == "log") return DegreeTransform::kLog;
  if (s == "log1p") return DegreeTransform::kLog1p;
  Fail(ErrorKind::kParse, "unknown degree transform '" + std::string(s) + "'");
}

// Dense row-major tensor. Vectors have a single dimension.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  static Tensor Zeros(std::vector<std::size_t> shape) {
    std::size_t n = 1;
    for (std::size_t s : shape) n *= s;
    return Tensor{std::move(shape), std::vector<double>(n, 0.0)};
  }

  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }
  double& at(std::size_t i, std::size_t j) { return data[i * cols() + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols() + j]; }

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

inline constexpr double kMinLogInput = 1e-12;

struct ModelWeights {
  std::size_t hidden_dim = 0;
  bool uniform = false;
  Activation activation = Activation::kElu;
  DegreeTransform degree_transform = DegreeTransform::kLog1p;
  double temperature = 1.0;
  double decode_threshold = 0.5;
  std::map<std::string, Tensor> tensors;

  const Tensor& at(const std::string& name) const {
    auto it = tensors.find(name);
    if (it == tensors.end()) {
      Fail(ErrorKind::kInvalidArgument, "missing tensor '" + name + "'");
    }
    return it->second;
  }

  // Name -> expected shape for the configured architecture.
  std::map<std::string, std::vector<std::size_t>> ExpectedShapes() const {
    const std::size_t h = hidden_dim;
    std::map<std::string, std::vector<std::size_t>> s{
        {"f_r.weight", {h, 1}},         {"f_r.bias", {h}},
        {"f_d.weight", {h, 1}},         {"f_d.bias", {h}},
        {"g_e.lin1.weight", {h, 2 * h}}, {"g_e.lin1.bias", {h}},
        {"g_e.lin2.weight", {h, h}},     {"g_e.lin2.bias", {h}},
        {"g_u.skip.bias", {h}},
        {"g_u.lin1.weight", {h, 2 * h}}, {"g_u.lin1.bias", {h}},
        {"g_u.lin2.weight", {h, h}},     {"g_u.lin2.bias", {h}},
        {"q_x.weight", {1, h}},          {"q_x.bias", {1}},
        {"q_r.weight", {1, h}},          {"q_r.bias", {1}},
        {"q_delta.weight", {1, h}},      {"q_delta.bias", {1}},
    };
    if (uniform) {
      s["q_Delta.weight"] = {1, h};
      s["q_Delta.bias"] = {1};
    }
    return s;
  }

  void Validate() const {
    if (hidden_dim < 1) Fail(ErrorKind::kInvalidArgument, "hidden_dim must be >= 1");
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
      Fail(ErrorKind::kInvalidArgument, "temperature must be positive");
    }
    const auto expected = ExpectedShapes();
    for (const auto& [name, shape] : expected) {
      const Tensor& t = at(name);
      if (t.shape != shape) {
        Fail(ErrorKind::kInvalidArgument, "tensor '" + name + "' has wrong shape");
      }
      std::size_t n = 1;
      for (std::size_t d : shape) n *= d;
      if (t.data.size() != n) {
        Fail(ErrorKind::kInvalidArgument, "tensor '" + name + "' has wrong size");
      }
      for (double v : t.data) {
        if (!std::isfinite(v)) {
          Fail(ErrorKind::kInvalidArgument, "tensor '" + name + "' is not finite");
        }
      }
    }
    for (const auto& [name, t] : tensors) {
      if (!expected.count(name)) {
        Fail(ErrorKind::kInvalidArgument, "unexpected tensor '" + name + "'");
      }
    }
  }

  friend bool operator==(const ModelWeights&, const ModelWeights&) = default;
};

inline ModelWeights ZeroWeights(std::size_t hidden_dim, bool uniform) {
  ModelWeights w;
  w.hidden_dim = hidden_dim;
  w.uniform = uniform;
  for (auto& [name, shape] : w.ExpectedShapes()) {
    w.tensors[name] = Tensor::Zeros(shape);
  }
  return w;
}

// Closed-form parameters under which the network reproduces the primal-dual
// algorithm exactly: every quantity rides in coordinate 0, messages compute
// exp(log r - log d) = r / d through the ELU's negative branch, and the update
// subtracts the aggregated raise. Requires residuals in (0, 1].
inline ModelWeights AnalyticWeights(std::size_t hidden_dim, bool uniform,
                                    double tight_tol = 1e-9) {
  if (hidden_dim < 1) Fail(ErrorKind::kInvalidArgument, "hidden_dim must be >= 1");
  const std::size_t h = hidden_dim;
  ModelWeights w = ZeroWeights(h, uniform);
  w.activation = Activation::kElu;
  w.degree_transform = DegreeTransform::kLog;
  // Logit (tol - r) / temperature; margins of 1e-3 * tol already saturate.
  w.temperature = tight_tol * 1e-3;
  w.decode_threshold = 0.5;
  w.tensors["f_r.weight"].at(0, 0) = 1.0;
  w.tensors["f_d.weight"].at(0, 0) = 1.0;
  w.tensors["g_e.lin1.weight"].at(0, 0) = 1.0;
  w.tensors["g_e.lin1.weight"].at(0, h) = -1.0;
  w.tensors["g_e.lin2.weight"].at(0, 0) = 1.0;
  w.tensors["g_e.lin2.bias"].data[0] = 1.0;
  w.tensors["g_u.skip.bias"].data[0] = 1.0;
  w.tensors["g_u.lin1.weight"].at(0, 0) = 1.0;
  w.tensors["g_u.lin1.weight"].at(0, h) = -1.0;
  w.tensors["g_u.lin2.weight"].at(0, 0) = 1.0;
  w.tensors["q_x.weight"].at(0, 0) = -1.0;
  w.tensors["q_x.bias"].data[0] = tight_tol;
  w.tensors["q_r.weight"].at(0, 0) = 1.0;
  w.tensors["q_delta.weight"].at(0, 0) = 1.0;
  if (uniform) w.tensors["q_Delta.weight"].at(0, 0) = 1.0;
  return w;
}

// Glorot-uniform initialization; mostly for tests and smoke runs.
inline ModelWeights RandomWeights(std::size_t hidden_dim, bool uniform,
                                  std::uint64_t seed) {
  ModelWeights w = ZeroWeights(hidden_dim, uniform);
  Rng rng(seed);
  for (auto& [name, t] : w.tensors) {
    const double fan_in = static_cast<double>(t.cols());
    const double fan_out = static_cast<double>(t.rows());
    const double limit = t.shape.size() == 2
                             ? std::sqrt(6.0 / (fan_in + fan_out))
                             : 0.1;
    for (double& v : t.data) v = rng.UniformReal(-limit, limit);
  }
  return w;
}

namespace nn {

using Vec = std::vector<double>;

inline double Activate(Activation a, double x) {
  if (a == Activation::kRelu) return x > 0.0 ? x : 0.0;
  return x > 0.0 ? x : std::expm1(x);
}

inline double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double z = std::exp(x);
  return z / (1.0 + z);
}

// y = W x + b
inline Vec Affine(const Tensor& w, const Tensor& b, std::span<const double> x) {
  Vec y(w.rows());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < w.cols(); ++j) acc += w.at(i, j) * x[j];
    y[i] = acc + b.data[i];
  }
  return y;
}

inline Vec Concat(std::span<const double> a, std::span<const double> b) {
  Vec out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Two-layer perceptron lin2(act(lin1(x))) under tensor prefix `name`.
inline Vec Mlp(const ModelWeights& w, const std::string& name,
               std::span<const double> x) {
  Vec hidden = Affine(w.at(name + ".lin1.weight"), w.at(name + ".lin1.bias"), x);
  for (double& v : hidden) v = Activate(w.activation, v);
  return Affine(w.at(name + ".lin2.weight"), w.at(name + ".lin2.bias"), hidden);
}

inline double Scalar(const ModelWeights& w, const std::string& name,
                     std::span<const double> x) {
  return Affine(w.at(name + ".weight"), w.at(name + ".bias"), x)[0];
}

inline Vec EncodeResidual(const ModelWeights& w, double r) {
  const double in = std::log(std::max(r, kMinLogInput));
  const double x[1] = {in};
  return Affine(w.at("f_r.weight"), w.at("f_r.bias"), x);
}

inline Vec EncodeDegree(const ModelWeights& w, double d) {
  const double in = w.degree_transform == DegreeTransform::kLog
                        ? std::log(d)
                        : std::log1p(d);
  const double x[1] = {in};
  return Affine(w.at("f_d.weight"), w.at("f_d.bias"), x);
}

inline Vec Message(const ModelWeights& w, std::span<const double> h_e,
                   std::span<const double> h_d) {
  return Mlp(w, "g_e", Concat(h_e, h_d));
}

inline Vec Update(const ModelWeights& w, std::span<const double> h_e,
                  std::span<const double> aggregate) {
  const Tensor& skip = w.at("g_u.skip.bias");
  Vec pre(h_e.size());
  for (std::size_t i = 0; i < h_e.size(); ++i) {
    pre[i] = Activate(w.activation, h_e[i]) + skip.data[i];
  }
  return Mlp(w, "g_u", Concat(pre, aggregate));
}

}  // namespace nn

// Element-wise min over the active members of each active set. Inactive sets
// get an empty vector.
inline std::vector<nn::Vec> AggregateMinToSets(
    const HittingSetInstance& inst, const std::vector<nn::Vec>& element_values,
    std::span<const std::uint8_t> element_active,
    std::span<const std::uint8_t> set_active) {
  std::vector<nn::Vec> out(inst.num_sets());
  for (std::size_t t = 0; t < inst.num_sets(); ++t) {
    if (!set_active[t]) continue;
    bool first = true;
    for (Index e : inst.sets[t]) {
      if (!element_active[e]) continue;
      const auto& v = element_values[e];
      if (first) {
        out[t] = v;
        first = false;
      } else {
        for (std::size_t k = 0; k < v.size(); ++k) {
          out[t][k] = std::min(out[t][k], v[k]);
        }
      }
    }
    if (first) {
      Fail(ErrorKind::kEmptyStep,
           "min aggregation over empty neighbourhood of set " + std::to_string(t));
    }
  }
  return out;
}

// Element-wise sum over the active sets containing each active element, in
// increasing set order.
inline std::vector<nn::Vec> AggregateSumToElements(
    const HittingSetInstance& inst, const std::vector<nn::Vec>& set_values,
    std::span<const std::uint8_t> element_active,
    std::span<const std::uint8_t> set_active, std::size_t dim) {
  std::vector<nn::Vec> out(inst.n_elements);
  for (std::size_t e = 0; e < inst.n_elements; ++e) {
    if (element_active[e]) out[e].assign(dim, 0.0);
  }
  for (std::size_t t = 0; t < inst.num_sets(); ++t) {
    if (!set_active[t]) continue;
    for (Index e : inst.sets[t]) {
      if (!element_active[e]) continue;
      for (std::size_t k = 0; k < dim; ++k) out[e][k] += set_values[t][k];
    }
  }
  return out;
}

struct ForwardOutput {
  std::vector<double> x_hat;      // chosen elements report 1
  std::vector<double> r_hat;      // masked elements carry their input
  std::vector<double> delta_hat;  // 0 for hit sets
  std::optional<double> Delta_hat;
};

// One message-passing round on the current residuals and chosen mask.
inline ForwardOutput ForwardStep(const ModelWeights& w,
                                 const HittingSetInstance& inst,
                                 std::span<const double> residuals,
                                 std::span<const std::uint8_t> chosen) {
  if (residuals.size() != inst.n_elements || chosen.size() != inst.n_elements) {
    Fail(ErrorKind::kMismatch, "state length != number of elements");
  }
  AlgoState s;
  s.chosen.assign(chosen.begin(), chosen.end());
  RefreshMasks(inst, s);
  if (std::none_of(s.set_active.begin(), s.set_active.end(),
                   [](std::uint8_t a) { return a != 0; })) {
    Fail(ErrorKind::kEmptyStep, "every set is already hit");
  }
  const std::size_t h = w.hidden_dim;
  std::vector<nn::Vec> h_e(inst.n_elements);
  std::vector<nn::Vec> msg(inst.n_elements);
  for (std::size_t e = 0; e < inst.n_elements; ++e) {
    if (!s.element_active[e]) continue;
    h_e[e] = nn::EncodeResidual(w, residuals[e]);
    const nn::Vec h_d = nn::EncodeDegree(w, static_cast<double>(s.degrees[e]));
    msg[e] = nn::Message(w, h_e[e], h_d);
  }
  const auto h_t = AggregateMinToSets(inst, msg, s.element_active, s.set_active);

  ForwardOutput out;
  out.delta_hat.assign(inst.num_sets(), 0.0);
  for (std::size_t t = 0; t < inst.num_sets(); ++t) {
    if (s.set_active[t]) out.delta_hat[t] = nn::Scalar(w, "q_delta", h_t[t]);
  }
  std::vector<nn::Vec> agg;
  if (w.uniform) {
    nn::Vec h_z;
    for (std::size_t t = 0; t < inst.num_sets(); ++t) {
      if (!s.set_active[t]) continue;
      if (h_z.empty()) {
        h_z = h_t[t];
      } else {
        for (std::size_t k = 0; k < h; ++k) h_z[k] = std::min(h_z[k], h_t[t][k]);
      }
    }
    out.Delta_hat = nn::Scalar(w, "q_Delta", h_z);
    std::vector<nn::Vec> broadcast(inst.num_sets());
    for (std::size_t t = 0; t < inst.num_sets(); ++t) {
      if (s.set_active[t]) broadcast[t] = h_z;
    }
    agg = AggregateSumToElements(inst, broadcast, s.element_active, s.set_active, h);
  } else {
    agg = AggregateSumToElements(inst, h_t, s.element_active, s.set_active, h);
  }

  out.x_hat.assign(inst.n_elements, 0.0);
  out.r_hat.assign(residuals.begin(), residuals.end());
  for (std::size_t e = 0; e < inst.n_elements; ++e) {
    if (chosen[e]) {
      out.x_hat[e] = 1.0;
      continue;
    }
    if (!s.element_active[e]) continue;
    const nn::Vec updated = nn::Update(w, h_e[e], agg[e]);
    out.x_hat[e] = nn::Sigmoid(nn::Scalar(w, "q_x", updated) / w.temperature);
    out.r_hat[e] = nn::Scalar(w, "q_r", updated);
  }
  return out;
}

struct PredictedStep {
  std::vector<double> x_hat;
  std::vector<double> r_hat;
  std::vector<double> delta_hat;
  std::optional<double> Delta_hat;
};

struct PredictedTrajectory {
  std::vector<PredictedStep> steps;  // steps[0] is the initial state
  Solution final_solution;
  bool cleanup_used = false;
};

struct FreeRun {};
struct TeacherForced {
  const Trajectory* trajectory = nullptr;
};
using RolloutMode = std::variant<FreeRun, TeacherForced>;

struct RolloutConfig {
  std::size_t max_steps = 0;         // 0 means |E|
  std::optional<DecodeRule> rule;    // default: argmax for mhs, else threshold
  double tight_tol = 1e-9;           // zero-weight pre-pass
};

inline DecodeRule DefaultDecodeRule(Task task) {
  return task == Task::kMhs ? DecodeRule::kArgmax : DecodeRule::kThreshold;
}

inline PredictedTrajectory Rollout(const ModelWeights& w,
                                   const HittingSetInstance& inst,
                                   const RolloutMode& mode,
                                   const RolloutConfig& config = {}) {
  const Trajectory* teacher = nullptr;
  if (const auto* tf = std::get_if<TeacherForced>(&mode)) {
    teacher = tf->trajectory;
    if (teacher == nullptr || teacher->steps.empty() ||
        teacher->steps[0].x.size() != inst.n_elements ||
        teacher->steps[0].delta.size() != inst.num_sets()) {
      Fail(ErrorKind::kMismatch, "teacher trajectory does not match instance");
    }
  }
  const DecodeRule rule = config.rule.value_or(DefaultDecodeRule(inst.task));
  const std::size_t cap = config.max_steps == 0 ? inst.n_elements : config.max_steps;

  AlgoState s;
  s.residuals = inst.weights;
  s.chosen.assign(inst.n_elements, 0);
  RefreshMasks(inst, s);
  if (teacher) {
    s.residuals = teacher->steps[0].r;
    s.chosen = teacher->steps[0].x;
  } else {
    for (std::size_t e = 0; e < inst.n_elements; ++e) {
      if (s.element_active[e] && inst.weights[e] <= config.tight_tol) s.chosen[e] = 1;
    }
  }
  RefreshMasks(inst, s);

  PredictedTrajectory out;
  PredictedStep initial;
  initial.x_hat.assign(s.chosen.begin(), s.chosen.end());
  initial.r_hat = s.residuals;
  initial.delta_hat.assign(inst.num_sets(), 0.0);
  if (w.uniform) initial.Delta_hat = 0.0;
  out.steps.push_back(std::move(initial));

  auto any_active = [&]() {
    return std::any_of(s.set_active.begin(), s.set_active.end(),
                       [](std::uint8_t a) { return a != 0; });
  };
  while (any_active() && out.steps.size() - 1 < cap) {
    const std::size_t t = out.steps.size();
    if (teacher && t >= teacher->steps.size()) break;
    ForwardOutput f = ForwardStep(w, inst, s.residuals, s.chosen);
    if (teacher) {
      s.residuals = teacher->steps[t].r;
      s.chosen = teacher->steps[t].x;
    } else {
      std::vector<Index> picks;
      if (rule == DecodeRule::kThreshold) {
        for (Index e = 0; e < inst.n_elements; ++e) {
          if (s.element_active[e] && f.x_hat[e] >= w.decode_threshold) picks.push_back(e);
        }
      } else {
        double best = -1.0;
        Index pick = 0;
        bool found = false;
        for (Index e = 0; e < inst.n_elements; ++e) {
          if (s.element_active[e] && f.x_hat[e] > best) {
            best = f.x_hat[e];
            pick = e;
            found = true;
          }
        }
        if (found) picks.push_back(pick);
      }
      for (std::size_t e = 0; e < inst.n_elements; ++e) {
        if (s.element_active[e]) {
          s.residuals[e] = std::clamp(f.r_hat[e], 0.0, inst.weights[e]);
        }
      }
      for (Index e : picks) s.chosen[e] = 1;
    }
    RefreshMasks(inst, s);
    out.steps.push_back(
        PredictedStep{std::move(f.x_hat), std::move(f.r_hat), std::move(f.delta_hat), f.Delta_hat});
  }
  Solution partial = ChosenToSolution(inst, s.chosen);
  if (any_active()) {
    out.final_solution = GreedyCleanup(inst, partial, s.residuals, s.degrees);
    out.cleanup_used = true;
  } else {
    out.final_solution = std::move(partial);
  }
  return out;
}

struct ReplicationReport {
  double max_err_x = 0.0;
  double max_err_r = 0.0;
  double max_err_delta = 0.0;
  double max_err_Delta = 0.0;
  std::size_t engine_steps = 0;
  std::size_t model_steps = 0;
  bool solutions_equal = false;

  double max_err() const {
    return std::max({max_err_x, max_err_r, max_err_delta, max_err_Delta});
  }
  bool Passed(double tol) const {
    return solutions_equal && engine_steps == model_steps && max_err() <= tol;
  }
};

// Runs the primal-dual engine and the analytically parameterized network in
// lockstep on the same instance. Weights are scaled into (0, 1] first; errors
// are reported in the original units. The uniform rule is used for mhs.
inline ReplicationReport VerifyReplication(const HittingSetInstance& inst,
                                           std::size_t hidden_dim) {
  const bool uniform = inst.task == Task::kMhs;
  double max_w = 0.0;
  for (double v : inst.weights) max_w = std::max(max_w, v);
  HittingSetInstance scaled = inst;
  if (max_w > 0.0) {
    for (double& v : scaled.weights) v /= max_w;
  }
  const double unit = max_w > 0.0 ? max_w : 1.0;
  AlgoConfig cfg;
  cfg.uniform = uniform;
  const Trajectory engine = RunGeneral(scaled, cfg);
  const ModelWeights w = AnalyticWeights(hidden_dim, uniform, cfg.tight_tol);
  RolloutConfig rc;
  rc.rule = DecodeRule::kThreshold;
  rc.tight_tol = cfg.tight_tol;
  const PredictedTrajectory model = Rollout(w, scaled, FreeRun{}, rc);

  ReplicationReport rep;
  rep.engine_steps = engine.num_timesteps();
  rep.model_steps = model.steps.size() - 1;
  const double inf = std::numeric_limits<double>::infinity();
  if (rep.engine_steps != rep.model_steps) {
    rep.max_err_x = rep.max_err_r = rep.max_err_delta = inf;
    if (uniform) rep.max_err_Delta = inf;
  }
  const std::size_t common = std::min(engine.steps.size(), model.steps.size());
  for (std::size_t k = 0; k < common; ++k) {
    const StepRecord& a = engine.steps[k];
    const PredictedStep& b = model.steps[k];
    for (std::size_t e = 0; e < inst.n_elements; ++e) {
      rep.max_err_x = std::max(rep.max_err_x, std::abs(b.x_hat[e] - a.x[e]));
      rep.max_err_r = std::max(rep.max_err_r, unit * std::abs(b.r_hat[e] - a.r[e]));
    }
    for (std::size_t t = 0; t < inst.num_sets(); ++t) {
      rep.max_err_delta =
          std::max(rep.max_err_delta, unit * std::abs(b.delta_hat[t] - a.delta[t]));
    }
    if (uniform) {
      const double da = a.Delta.value_or(inf);
      const double db = b.Delta_hat.value_or(-inf);
      rep.max_err_Delta = std::max(rep.max_err_Delta, unit * std::abs(db - da));
    }
  }
  rep.solutions_equal = !model.cleanup_used &&
                        model.final_solution.chosen == engine.final_solution.chosen;
  return rep;
}

}  // namespace pdlab

#endif  // PDLAB_NEURAL_HPP_
