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

// Left-right planarity test (de Fraysseix-Rosenstiehl criterion in the form
// given by Brandes). Only decides planarity; no embedding is produced.

#ifndef PDLAB_PLANARITY_HPP_
#define PDLAB_PLANARITY_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "pdlab/common.hpp"

namespace pdlab {

namespace internal {

class LrPlanarity {
 public:
  LrPlanarity(std::size_t n, const std::vector<std::pair<Index, Index>>& edges)
      : n_(n), m_(edges.size()), undirected_(edges), adj_(n) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adj_[edges[i].first].push_back(static_cast<int>(i));
      adj_[edges[i].second].push_back(static_cast<int>(i));
    }
  }

  bool Run() {
    if (n_ > 2 && m_ > 3 * n_ - 6) return false;
    height_.assign(n_, kInf);
    parent_edge_.assign(n_, kNone);
    src_.assign(m_, -1);
    dst_.assign(m_, -1);
    lowpt_.assign(m_, 0);
    lowpt2_.assign(m_, 0);
    nesting_.assign(m_, 0);
    std::vector<int> roots;
    for (std::size_t v = 0; v < n_; ++v) {
      if (height_[v] != kInf) continue;
      height_[v] = 0;
      roots.push_back(static_cast<int>(v));
      Orient(static_cast<int>(v));
    }
    ordered_.assign(n_, {});
    for (std::size_t e = 0; e < m_; ++e) ordered_[src_[e]].push_back(static_cast<int>(e));
    for (auto& out : ordered_) {
      std::stable_sort(out.begin(), out.end(),
                       [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    }
    ref_.assign(m_, kNone);
    lowpt_edge_.assign(m_, kNone);
    stack_bottom_.assign(m_, 0);
    stack_.clear();
    for (int root : roots) {
      if (!Test(root)) return false;
    }
    return true;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    void Swap() { std::swap(left, right); }
  };

  bool Conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int Lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void Orient(int v) {
    const int e = parent_edge_[v];
    for (int id : adj_[v]) {
      if (src_[id] != -1) continue;
      const int w = undirected_[id].first == static_cast<Index>(v)
                        ? static_cast<int>(undirected_[id].second)
                        : static_cast<int>(undirected_[id].first);
      src_[id] = v;
      dst_[id] = w;
      lowpt_[id] = height_[v];
      lowpt2_[id] = height_[v];
      if (height_[w] == kInf) {
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        Orient(w);
      } else {
        lowpt_[id] = height_[w];
      }
      nesting_[id] = 2 * lowpt_[id];
      if (lowpt2_[id] < height_[v]) nesting_[id] += 1;
      if (e != kNone) {
        if (lowpt_[id] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
          lowpt_[e] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
        }
      }
    }
  }

  bool Test(int v) {
    const int e = parent_edge_[v];
    const auto& out = ordered_[v];
    for (std::size_t k = 0; k < out.size(); ++k) {
      const int ei = out[k];
      const int w = dst_[ei];
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {
        if (!Test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.right = Interval{ei, ei};
        stack_.push_back(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (k == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!AddConstraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) RemoveBackEdges(e);
    return true;
  }

  bool AddConstraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.Swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);
    while (!stack_.empty() && (Conflicting(stack_.back().left, ei) ||
                               Conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (Conflicting(q.right, ei)) q.Swap();
      if (Conflicting(q.right, ei)) return false;
      ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!p.left.empty() || !p.right.empty()) stack_.push_back(p);
    return true;
  }

  void RemoveBackEdges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && Lowest(stack_.back()) == height_[u]) {
      stack_.pop_back();
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u) {
        p.left.high = ref_[p.left.high];
      }
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) {
        p.right.high = ref_[p.right.high];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl
                                                                          : hr;
    }
  }

  std::size_t n_;
  std::size_t m_;
  const std::vector<std::pair<Index, Index>>& undirected_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<int> src_;
  std::vector<int> dst_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_;
  std::vector<std::vector<int>> ordered_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
};

}  // namespace internal

// Simple undirected graph given as an edge list (no loops, no multi-edges).
inline bool IsPlanar(std::size_t n,
                     const std::vector<std::pair<Index, Index>>& edges) {
  internal::LrPlanarity lr(n, edges);
  return lr.Run();
}

}  // namespace pdlab

#endif  // PDLAB_PLANARITY_HPP_
