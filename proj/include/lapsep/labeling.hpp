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

#ifndef LAPSEP_LABELING_HPP_
#define LAPSEP_LABELING_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lapsep {

/// Ordered factorization n = p_1 * ... * p_m of a composite order, m >= 2,
/// every p_i >= 2. Index tuples are 1-based; flat indices are mixed-radix
/// with the first factor most significant, the usual Kronecker convention.
class TensorShape {
 public:
  TensorShape() = default;

  explicit TensorShape(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.size() < 2) {
      throw std::invalid_argument("tensor shape needs at least two factors");
    }
    size_ = 1;
    for (int p : factors_) {
      if (p < 2) throw std::invalid_argument("tensor factors must be >= 2");
      size_ *= p;
      if (size_ > 64) throw std::invalid_argument("tensor shape too large");
    }
  }

  /// Parses "2x3", "2x2x2", ...
  static TensorShape Parse(std::string_view text) {
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find_first_of("xX*", pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view part = text.substr(pos, end - pos);
      if (part.empty() ||
          !std::all_of(part.begin(), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; }) ||
          part.size() > 3) {
        throw std::invalid_argument("malformed shape '" + std::string(text) +
                                    "'");
      }
      factors.push_back(std::stoi(std::string(part)));
      pos = end + 1;
    }
    return TensorShape(std::move(factors));
  }

  int rank() const { return static_cast<int>(factors_.size()); }
  int size() const { return size_; }
  int factor(int i) const { return factors_.at(i); }
  std::span<const int> factors() const { return factors_; }

  std::string ToString() const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
      if (i > 0) out += 'x';
      out += std::to_string(factors_[i]);
    }
    return out;
  }

  int Flatten(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != rank()) {
      throw std::invalid_argument("tuple length does not match shape");
    }
    int index = 0;
    for (int i = 0; i < rank(); ++i) {
      if (tuple[i] < 1 || tuple[i] > factors_[i]) {
        throw std::invalid_argument("tuple component out of range");
      }
      index = index * factors_[i] + (tuple[i] - 1);
    }
    return index;
  }

  std::vector<int> Unflatten(int index) const {
    if (index < 0 || index >= size_) {
      throw std::invalid_argument("flat index out of range");
    }
    std::vector<int> tuple(rank());
    for (int i = rank() - 1; i >= 0; --i) {
      tuple[i] = index % factors_[i] + 1;
      index /= factors_[i];
    }
    return tuple;
  }

  friend bool operator==(const TensorShape&, const TensorShape&) = default;

 private:
  std::vector<int> factors_;
  int size_ = 0;
};

/// Bijection from vertices 0..n-1 onto the index tuples of a shape, stored
/// as the flat index of each vertex's tuple.
class VertexLabeling {
 public:
  VertexLabeling() = default;

  VertexLabeling(TensorShape shape, std::vector<int> index_of_vertex)
      : shape_(std::move(shape)), index_(std::move(index_of_vertex)) {
    if (static_cast<int>(index_.size()) != shape_.size()) {
      throw std::invalid_argument("labeling length " +
                                  std::to_string(index_.size()) +
                                  " does not match shape " + shape_.ToString());
    }
    vertex_.assign(index_.size(), -1);
    for (int v = 0; v < order(); ++v) {
      const int i = index_[v];
      if (i < 0 || i >= order() || vertex_[i] != -1) {
        throw std::invalid_argument("labeling is not a permutation");
      }
      vertex_[i] = v;
    }
  }

  static VertexLabeling Identity(const TensorShape& shape) {
    std::vector<int> index(shape.size());
    std::iota(index.begin(), index.end(), 0);
    return VertexLabeling(shape, std::move(index));
  }

  /// `tuples[v]` is the 1-based tuple assigned to vertex v.
  static VertexLabeling FromTuples(const TensorShape& shape,
                                   const std::vector<std::vector<int>>& tuples) {
    std::vector<int> index;
    index.reserve(tuples.size());
    for (const auto& t : tuples) index.push_back(shape.Flatten(t));
    return VertexLabeling(shape, std::move(index));
  }

  /// Parses a permutation line "s(0) s(1) ... s(n-1)"; commas are accepted
  /// as separators too.
  static VertexLabeling Parse(std::string_view line, const TensorShape& shape) {
    std::string text(line);
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    std::vector<int> index;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw std::invalid_argument("bad labeling token '" + token + "'");
      }
      index.push_back(value);
    }
    return VertexLabeling(shape, std::move(index));
  }

  const TensorShape& shape() const { return shape_; }
  int order() const { return static_cast<int>(index_.size()); }
  int index(int v) const { return index_.at(v); }
  int vertex_at(int flat) const { return vertex_.at(flat); }
  std::span<const int> indices() const { return index_; }
  std::vector<int> tuple(int v) const { return shape_.Unflatten(index(v)); }

  std::string ToString() const {
    std::string out;
    for (int v = 0; v < order(); ++v) {
      if (v > 0) out += ' ';
      out += std::to_string(index_[v]);
    }
    return out;
  }

  friend bool operator==(const VertexLabeling& a, const VertexLabeling& b) {
    return a.shape_ == b.shape_ && a.index_ == b.index_;
  }
  friend bool operator<(const VertexLabeling& a, const VertexLabeling& b) {
    return a.index_ < b.index_;
  }

 private:
  friend class LabelingEnumerator;

  TensorShape shape_;
  std::vector<int> index_;
  std::vector<int> vertex_;
};

/// Labeling symmetries quotiented during enumeration.
///   kNone          every bijection
///   kWithinFactor  permutations of each factor's index set
///   kFull          additionally, swaps of equal-size factors
enum class Reduction { kNone, kWithinFactor, kFull };

namespace internal {

inline std::int64_t Factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Coordinate permutations that only exchange equal-size factors, excluding
/// the identity.
inline std::vector<std::vector<int>> FactorSwaps(const TensorShape& shape) {
  std::vector<int> perm(shape.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool ok = true;
    for (int i = 0; i < shape.rank() && ok; ++i) {
      ok = shape.factor(perm[i]) == shape.factor(i);
    }
    if (ok) out.push_back(perm);
  }
  return out;
}

/// Lexicographic comparison of `flat` against the labeling obtained by
/// reading coordinates through `coord_perm` and relabeling every coordinate
/// in order of first appearance. Returns <0, 0, >0.
inline int CompareWithNormalized(const TensorShape& shape,
                                 std::span<const int> flat,
                                 std::span<const int> coord_perm) {
  const int m = shape.rank();
  const int n = shape.size();
  std::vector<std::vector<int>> relabel(m);
  std::vector<int> next(m, 0);
  for (int i = 0; i < m; ++i) relabel[i].assign(shape.factor(i), -1);
  std::vector<int> tuple(m);
  for (int v = 0; v < n; ++v) {
    int rest = flat[v];
    for (int i = m - 1; i >= 0; --i) {
      tuple[i] = rest % shape.factor(i);
      rest /= shape.factor(i);
    }
    int image = 0;
    for (int i = 0; i < m; ++i) {
      const int source = tuple[coord_perm[i]];
      int& slot = relabel[i][source];
      if (slot < 0) slot = next[i]++;
      image = image * shape.factor(i) + slot;
    }
    if (image != flat[v]) return image < flat[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace internal

/// Order of the symmetry group used by `reduction`. The group acts freely on
/// labelings, so every orbit has exactly this many elements.
inline std::int64_t SymmetryGroupOrder(const TensorShape& shape,
                                       Reduction reduction) {
  if (reduction == Reduction::kNone) return 1;
  std::int64_t order = 1;
  for (int p : shape.factors()) order *= internal::Factorial(p);
  if (reduction == Reduction::kFull) {
    order *= static_cast<std::int64_t>(internal::FactorSwaps(shape).size()) + 1;
  }
  return order;
}

inline std::int64_t LabelingCount(const TensorShape& shape,
                                  Reduction reduction) {
  return internal::Factorial(shape.size()) /
         SymmetryGroupOrder(shape, reduction);
}

/// Relabels the index set of `factor` by `perm` (0-based values).
inline VertexLabeling PermuteFactor(const VertexLabeling& lab, int factor,
                                    std::span<const int> perm) {
  const TensorShape& shape = lab.shape();
  if (static_cast<int>(perm.size()) != shape.factor(factor)) {
    throw std::invalid_argument("factor permutation has wrong length");
  }
  std::vector<int> index(lab.order());
  for (int v = 0; v < lab.order(); ++v) {
    auto t = lab.tuple(v);
    t[factor] = perm[t[factor] - 1] + 1;
    index[v] = shape.Flatten(t);
  }
  return VertexLabeling(shape, std::move(index));
}

/// Exchanges the coordinates of two equal-size factors.
inline VertexLabeling SwapFactors(const VertexLabeling& lab, int a, int b) {
  const TensorShape& shape = lab.shape();
  if (shape.factor(a) != shape.factor(b)) {
    throw std::invalid_argument("only equal-size factors can be swapped");
  }
  std::vector<int> index(lab.order());
  for (int v = 0; v < lab.order(); ++v) {
    auto t = lab.tuple(v);
    std::swap(t[a], t[b]);
    index[v] = shape.Flatten(t);
  }
  return VertexLabeling(shape, std::move(index));
}

/// Lexicographically smallest labeling in the orbit of `lab`.
inline VertexLabeling Canonicalize(const VertexLabeling& lab,
                                   Reduction reduction) {
  if (reduction == Reduction::kNone) return lab;
  const TensorShape& shape = lab.shape();
  std::vector<std::vector<int>> perms;
  std::vector<int> identity(shape.rank());
  std::iota(identity.begin(), identity.end(), 0);
  perms.push_back(identity);
  if (reduction == Reduction::kFull) {
    for (auto& p : internal::FactorSwaps(shape)) perms.push_back(std::move(p));
  }
  std::vector<int> best;
  for (const auto& cp : perms) {
    const int m = shape.rank();
    std::vector<std::vector<int>> relabel(m);
    std::vector<int> next(m, 0);
    for (int i = 0; i < m; ++i) relabel[i].assign(shape.factor(i), -1);
    std::vector<int> index(lab.order());
    for (int v = 0; v < lab.order(); ++v) {
      const auto t = lab.tuple(v);
      int image = 0;
      for (int i = 0; i < m; ++i) {
        int& slot = relabel[i][t[cp[i]] - 1];
        if (slot < 0) slot = next[i]++;
        image = image * shape.factor(i) + slot;
      }
      index[v] = image;
    }
    if (best.empty() || index < best) best = std::move(index);
  }
  return VertexLabeling(shape, std::move(best));
}

/// Depth-first generator of labelings in lexicographic order of the flat
/// index sequence. Under a reduction, exactly the lexicographically smallest
/// member of each orbit is produced.
class LabelingEnumerator {
 public:
  LabelingEnumerator(TensorShape shape, Reduction reduction)
      : shape_(std::move(shape)), reduction_(reduction) {
    const int n = shape_.size();
    coords_.assign(n, std::vector<int>(shape_.rank()));
    for (int f = 0; f < n; ++f) {
      auto t = shape_.Unflatten(f);
      for (int i = 0; i < shape_.rank(); ++i) coords_[f][i] = t[i] - 1;
    }
    if (reduction_ == Reduction::kFull) swaps_ = internal::FactorSwaps(shape_);
  }

  /// Calls `visit(const VertexLabeling&)` for each labeling until it returns
  /// false. Returns true when the enumeration ran to completion.
  template <typename Visitor>
  bool Run(Visitor&& visit) {
    const int n = shape_.size();
    current_.shape_ = shape_;
    current_.index_.assign(n, -1);
    current_.vertex_.assign(n, -1);
    max_seen_.assign(shape_.rank(), -1);
    return Extend(0, visit);
  }

 private:
  template <typename Visitor>
  bool Extend(int v, Visitor& visit) {
    const int n = shape_.size();
    if (v == n) {
      for (const auto& cp : swaps_) {
        if (internal::CompareWithNormalized(shape_, current_.index_, cp) > 0) {
          return true;
        }
      }
      return visit(static_cast<const VertexLabeling&>(current_));
    }
    for (int f = 0; f < n; ++f) {
      if (current_.vertex_[f] != -1) continue;
      const auto& c = coords_[f];
      if (reduction_ != Reduction::kNone) {
        bool fresh_ok = true;
        for (int i = 0; i < shape_.rank() && fresh_ok; ++i) {
          fresh_ok = c[i] <= max_seen_[i] + 1;
        }
        if (!fresh_ok) continue;
      }
      std::vector<int> saved;
      if (reduction_ != Reduction::kNone) {
        saved = max_seen_;
        for (int i = 0; i < shape_.rank(); ++i) {
          max_seen_[i] = std::max(max_seen_[i], c[i]);
        }
      }
      current_.index_[v] = f;
      current_.vertex_[f] = v;
      const bool go_on = Extend(v + 1, visit);
      current_.vertex_[f] = -1;
      current_.index_[v] = -1;
      if (reduction_ != Reduction::kNone) max_seen_ = std::move(saved);
      if (!go_on) return false;
    }
    return true;
  }

  TensorShape shape_;
  Reduction reduction_;
  std::vector<std::vector<int>> coords_;
  std::vector<std::vector<int>> swaps_;
  std::vector<int> max_seen_;
  VertexLabeling current_;
};

template <typename Visitor>
bool ForEachLabeling(const TensorShape& shape, Reduction reduction,
                     Visitor&& visit) {
  LabelingEnumerator e(shape, reduction);
  return e.Run(visit);
}

template <typename Rng>
VertexLabeling RandomLabeling(const TensorShape& shape, Rng& rng) {
  std::vector<int> index(shape.size());
  std::iota(index.begin(), index.end(), 0);
  std::shuffle(index.begin(), index.end(), rng);
  return VertexLabeling(shape, std::move(index));
}

}  // namespace lapsep

#endif  // LAPSEP_LABELING_HPP_
