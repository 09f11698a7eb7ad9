// Copyright 2026 The lapsep Authors
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

#ifndef LAPSEP_PT_GRAPH_HPP_
#define LAPSEP_PT_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"

namespace lapsep {

/// Groups the factors of a shape into a left block V (size p) and a right
/// block W (size q). A flat index then has coordinates (v, w), each a
/// 0-based mixed-radix value over the factors of its block in shape order.
class BipartiteSplit {
 public:
  BipartiteSplit() = default;

  BipartiteSplit(TensorShape shape, std::vector<int> left_factors)
      : shape_(std::move(shape)), left_(std::move(left_factors)) {
    std::sort(left_.begin(), left_.end());
    if (left_.empty() || static_cast<int>(left_.size()) >= shape_.rank() ||
        std::adjacent_find(left_.begin(), left_.end()) != left_.end() ||
        left_.front() < 0 || left_.back() >= shape_.rank()) {
      throw std::invalid_argument(
          "split must put a nonempty proper subset of factors on the left");
    }
    std::vector<bool> is_left(shape_.rank(), false);
    for (int i : left_) is_left[i] = true;
    p_ = q_ = 1;
    for (int i = 0; i < shape_.rank(); ++i) {
      if (is_left[i]) {
        p_ *= shape_.factor(i);
      } else {
        right_.push_back(i);
        q_ *= shape_.factor(i);
      }
    }
    const int n = shape_.size();
    v_of_.resize(n);
    w_of_.resize(n);
    flat_of_.assign(n, -1);
    for (int f = 0; f < n; ++f) {
      const auto t = shape_.Unflatten(f);
      int v = 0;
      int w = 0;
      for (int i : left_) v = v * shape_.factor(i) + (t[i] - 1);
      for (int i : right_) w = w * shape_.factor(i) + (t[i] - 1);
      v_of_[f] = v;
      w_of_[f] = w;
      flat_of_[v * q_ + w] = f;
    }
  }

  /// Factor `factor` against the rest, with the single factor on the left.
  static BipartiteSplit SingleFactor(const TensorShape& shape, int factor) {
    return BipartiteSplit(shape, {factor});
  }

  /// Factor `factor` against the rest, with the rest on the left.
  static BipartiteSplit RestOfFactor(const TensorShape& shape, int factor) {
    std::vector<int> left;
    for (int i = 0; i < shape.rank(); ++i) {
      if (i != factor) left.push_back(i);
    }
    return BipartiteSplit(shape, std::move(left));
  }

  /// One split per factor: factor i on the left, everything else right.
  static std::vector<BipartiteSplit> SingleFactorCuts(const TensorShape& shape) {
    std::vector<BipartiteSplit> out;
    if (shape.rank() == 2) {
      out.push_back(SingleFactor(shape, 0));
      return out;
    }
    for (int i = 0; i < shape.rank(); ++i) out.push_back(SingleFactor(shape, i));
    return out;
  }

  const TensorShape& shape() const { return shape_; }
  const std::vector<int>& left_factors() const { return left_; }
  const std::vector<int>& right_factors() const { return right_; }
  int p() const { return p_; }
  int q() const { return q_; }

  int v_of(int flat) const { return v_of_[flat]; }
  int w_of(int flat) const { return w_of_[flat]; }
  int flat(int v, int w) const { return flat_of_[v * q_ + w]; }

  std::string ToString() const {
    auto side = [&](const std::vector<int>& ids) {
      std::string s;
      for (int i : ids) {
        if (!s.empty()) s += 'x';
        s += std::to_string(shape_.factor(i));
      }
      return s;
    };
    return "[" + side(left_) + "|" + side(right_) + "]";
  }

  friend bool operator==(const BipartiteSplit& a, const BipartiteSplit& b) {
    return a.shape_ == b.shape_ && a.left_ == b.left_;
  }

 private:
  TensorShape shape_;
  std::vector<int> left_;
  std::vector<int> right_;
  int p_ = 0;
  int q_ = 0;
  std::vector<int> v_of_;
  std::vector<int> w_of_;
  std::vector<int> flat_of_;
};

namespace internal {

inline void CheckCompatible(const Graph& g, const VertexLabeling& lab,
                            const BipartiteSplit& split) {
  if (lab.order() != g.order()) {
    throw std::invalid_argument("labeling does not cover the graph");
  }
  if (!(split.shape() == lab.shape())) {
    throw std::invalid_argument("split shape " + split.shape().ToString() +
                                " differs from labeling shape " +
                                lab.shape().ToString());
  }
}

}  // namespace internal

/// Image of the edge {a, b} under the partial-transpose edge map
/// {(u,v),(w,y)} -> {(u,y),(w,v)}.
inline std::pair<int, int> PartialTransposeEdge(const VertexLabeling& lab,
                                                const BipartiteSplit& split,
                                                int a, int b) {
  const int fa = lab.index(a);
  const int fb = lab.index(b);
  const int c = lab.vertex_at(split.flat(split.v_of(fa), split.w_of(fb)));
  const int d = lab.vertex_at(split.flat(split.v_of(fb), split.w_of(fa)));
  return {c, d};
}

inline Graph PartialTransposeGraph(const Graph& g, const VertexLabeling& lab,
                                   const BipartiteSplit& split) {
  internal::CheckCompatible(g, lab, split);
  Graph out(g.order());
  for (const auto& [a, b] : g.edges()) {
    const auto [c, d] = PartialTransposeEdge(lab, split, a, b);
    out.AddEdge(c, d);
  }
  return out;
}

/// Degrees of every vertex in the partial transpose graph, without building
/// it.
inline std::vector<int> PartialTransposeDegrees(const Graph& g,
                                                const VertexLabeling& lab,
                                                const BipartiteSplit& split) {
  internal::CheckCompatible(g, lab, split);
  std::vector<int> deg(g.order(), 0);
  for (int a = 0; a < g.order(); ++a) {
    Graph::Mask row = g.neighbors(a);
    while (row) {
      const int b = std::countr_zero(row);
      row &= row - 1;
      if (b < a) continue;
      const auto [c, d] = PartialTransposeEdge(lab, split, a, b);
      ++deg[c];
      ++deg[d];
    }
  }
  return deg;
}

/// True iff every vertex has the same degree in g and in its partial
/// transpose graph, the necessary condition for separability.
inline bool DegreeCondition(const Graph& g, const VertexLabeling& lab,
                            const BipartiteSplit& split) {
  const auto pt = PartialTransposeDegrees(g, lab, split);
  for (int v = 0; v < g.order(); ++v) {
    if (pt[v] != g.degree(v)) return false;
  }
  return true;
}

/// First vertex whose degree changes under the partial transpose, or -1.
inline int DegreeViolation(const Graph& g, const VertexLabeling& lab,
                           const BipartiteSplit& split) {
  const auto pt = PartialTransposeDegrees(g, lab, split);
  for (int v = 0; v < g.order(); ++v) {
    if (pt[v] != g.degree(v)) return v;
  }
  return -1;
}

}  // namespace lapsep

#endif  // LAPSEP_PT_GRAPH_HPP_
