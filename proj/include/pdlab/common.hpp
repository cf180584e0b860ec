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

#ifndef PDLAB_COMMON_HPP_
#define PDLAB_COMMON_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdlab {

using Index = std::uint32_t;

enum class ErrorKind {
  kInvalidInstance,
  kInfeasibleInstance,
  kInvalidArgument,
  kIncompleteTrajectory,
  kEmptyStep,
  kParse,
  kMismatch,
  kIo,
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInstance: return "invalid-instance";
    case ErrorKind::kInfeasibleInstance: return "infeasible-instance";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kIncompleteTrajectory: return "incomplete-trajectory";
    case ErrorKind::kEmptyStep: return "empty-step";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kMismatch: return "mismatch";
    case ErrorKind::kIo: return "io-error";
  }
  return "unknown";
}

// Every failure raised by the library carries a kind so the CLI can map it to
// a machine-readable error line and exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// SplitMix64 finalizer. Used to derive independent per-record seeds from a
// base seed and a stream index.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
  return SplitMix64(SplitMix64(base) ^ (stream * 0xd1b54a32d192ed03ULL));
}

// Portable random source. std::mt19937_64 has a fully specified output
// sequence; the distributions below are written out by hand because the
// standard library ones differ between implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(SplitMix64(seed)) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of precision.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double UniformReal(double lo, double hi) {
    return lo + (hi - lo) * Uniform01();
  }

  // Uniform integer on the closed range [lo, hi], by rejection.
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + v % range;
  }

  bool Bernoulli(double p) { return Uniform01() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(UniformInt(0, i - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pdlab

#endif  // PDLAB_COMMON_HPP_
