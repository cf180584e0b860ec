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

// Plain-text weights file.
//
//   pdlab-weights 1
//   hidden_dim 32
//   uniform 0
//   activation elu
//   degree_transform log1p
//   temperature 1
//   decode_threshold 0.5
//   tensor f_r.weight 2 32 1
//   <32 values, row-major, whitespace separated>
//   ...
//   end

#ifndef PDLAB_WEIGHTS_IO_HPP_
#define PDLAB_WEIGHTS_IO_HPP_

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pdlab/common.hpp"
#include "pdlab/neural.hpp"

namespace pdlab {

inline constexpr std::string_view kWeightsMagic = "pdlab-weights";
inline constexpr int kWeightsVersion = 1;

inline std::string FormatReal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void WriteWeights(std::ostream& out, const ModelWeights& w) {
  w.Validate();
  out << kWeightsMagic << ' ' << kWeightsVersion << '\n';
  out << "hidden_dim " << w.hidden_dim << '\n';
  out << "uniform " << (w.uniform ? 1 : 0) << '\n';
  out << "activation " << ActivationName(w.activation) << '\n';
  out << "degree_transform " << DegreeTransformName(w.degree_transform) << '\n';
  out << "temperature " << FormatReal(w.temperature) << '\n';
  out << "decode_threshold " << FormatReal(w.decode_threshold) << '\n';
  for (const auto& [name, t] : w.tensors) {
    out << "tensor " << name << ' ' << t.shape.size();
    for (std::size_t d : t.shape) out << ' ' << d;
    out << '\n';
    const std::size_t row = t.shape.empty() ? 1 : t.shape.back();
    for (std::size_t i = 0; i < t.data.size(); ++i) {
      out << FormatReal(t.data[i]) << ((i + 1) % row == 0 ? '\n' : ' ');
    }
  }
  out << "end\n";
}

inline std::string WeightsToString(const ModelWeights& w) {
  std::ostringstream out;
  WriteWeights(out, w);
  return out.str();
}

inline void WriteWeightsFile(const std::string& path, const ModelWeights& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  WriteWeights(out, w);
  if (!out) Fail(ErrorKind::kIo, "write to '" + path + "' failed");
}

namespace internal {

class WeightsReader {
 public:
  explicit WeightsReader(std::istream& in) : in_(in) {}

  std::string Word(const char* what) {
    std::string s;
    if (!(in_ >> s)) Fail(ErrorKind::kParse, std::string("weights: expected ") + what);
    return s;
  }

  void Keyword(const char* kw) {
    const std::string s = Word(kw);
    if (s != kw) Fail(ErrorKind::kParse, "weights: expected '" + std::string(kw) + "', got '" + s + "'");
  }

  std::size_t Count(const char* what) {
    const std::string s = Word(what);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-') {
      Fail(ErrorKind::kParse, std::string("weights: bad ") + what + " '" + s + "'");
    }
    return static_cast<std::size_t>(v);
  }

  double Real(const char* what) {
    const std::string s = Word(what);
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) {
      Fail(ErrorKind::kParse, std::string("weights: bad ") + what + " '" + s + "'");
    }
    return v;
  }

 private:
  std::istream& in_;
};

}  // namespace internal

inline ModelWeights ReadWeights(std::istream& in) {
  internal::WeightsReader rd(in);
  if (rd.Word("header") != kWeightsMagic) Fail(ErrorKind::kParse, "weights: not a pdlab weights file");
  if (rd.Count("version") != static_cast<std::size_t>(kWeightsVersion)) {
    Fail(ErrorKind::kParse, "weights: unsupported version");
  }
  ModelWeights w;
  rd.Keyword("hidden_dim");
  w.hidden_dim = rd.Count("hidden_dim");
  rd.Keyword("uniform");
  const std::size_t u = rd.Count("uniform");
  if (u > 1) Fail(ErrorKind::kParse, "weights: uniform must be 0 or 1");
  w.uniform = u == 1;
  try {
    rd.Keyword("activation");
    w.activation = ParseActivation(rd.Word("activation"));
    rd.Keyword("degree_transform");
    w.degree_transform = ParseDegreeTransform(rd.Word("degree_transform"));
  } catch (const Error& e) {
    Fail(ErrorKind::kParse, std::string("weights: ") + e.what());
  }
  rd.Keyword("temperature");
  w.temperature = rd.Real("temperature");
  rd.Keyword("decode_threshold");
  w.decode_threshold = rd.Real("decode_threshold");
  for (;;) {
    const std::string kw = rd.Word("'tensor' or 'end'");
    if (kw == "end") break;
    if (kw != "tensor") Fail(ErrorKind::kParse, "weights: unexpected token '" + kw + "'");
    const std::string name = rd.Word("tensor name");
    if (w.tensors.count(name)) Fail(ErrorKind::kParse, "weights: duplicate tensor '" + name + "'");
    Tensor t;
    const std::size_t ndim = rd.Count("ndim");
    if (ndim < 1 || ndim > 2) Fail(ErrorKind::kParse, "weights: tensor '" + name + "' must be 1-D or 2-D");
    std::size_t n = 1;
    for (std::size_t i = 0; i < ndim; ++i) {
      t.shape.push_back(rd.Count("dimension"));
      n *= t.shape.back();
    }
    if (n > (std::size_t{1} << 26)) Fail(ErrorKind::kParse, "weights: tensor '" + name + "' too large");
    t.data.reserve(n);
    for (std::size_t i = 0; i < n; ++i) t.data.push_back(rd.Real("tensor value"));
    w.tensors.emplace(name, std::move(t));
  }
  try {
    w.Validate();
  } catch (const Error& e) {
    Fail(ErrorKind::kParse, std::string("weights: ") + e.what());
  }
  return w;
}

inline ModelWeights WeightsFromString(const std::string& text) {
  std::istringstream in(text);
  return ReadWeights(in);
}

inline ModelWeights ReadWeightsFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  return ReadWeights(in);
}

}  // namespace pdlab

#endif  // PDLAB_WEIGHTS_IO_HPP_
