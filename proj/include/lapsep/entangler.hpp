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

// Construction of vertex labelings that make the normalized Laplacian of a
// noncomplete graph entangled.
//
// For a split with |V| = p >= 3, |W| = q and minimum degree d >= q, pick a
// pivot x of degree d and disjoint vertex sets U (size q, containing x) and
// W (size p - 1) with e({x}, U) + e(U, W) > d. Labeling U as (v1, w_i) with
// x = (v1, w1), and W as (v_j, w1), makes x gain degree under the partial
// transpose, which violates the degree condition. Which U to use depends on
// t = q(d - q + 1) = r k + s, k = q(p - 1):
//   s in (0, p-1)  case 1: x and q-1 neighbors
//   s in [p-1, k)  case 2: same U
//   s == 0         case 3: x, a non-neighbor y, and q-2 neighbors
// W is always the p - 1 vertices outside U with the most edges into U.
// Graphs with d < q, and splits without p >= 3, go to a labeling search.

#ifndef LAPSEP_ENTANGLER_HPP_
#define LAPSEP_ENTANGLER_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"
#include "lapsep/pigeonhole.hpp"
#include "lapsep/pt_graph.hpp"

namespace lapsep {

/// Complete graphs are separable under every labeling.
class NoEntanglingLabelingError : public std::domain_error {
 public:
  NoEntanglingLabelingError()
      : std::domain_error("complete graphs have no entangling labeling") {}
};

enum class ProofCase { kCase1, kCase2, kCase3, kFallbackSearch };

inline const char* ToString(ProofCase c) {
  switch (c) {
    case ProofCase::kCase1:
      return "CASE1";
    case ProofCase::kCase2:
      return "CASE2";
    case ProofCase::kCase3:
      return "CASE3";
    case ProofCase::kFallbackSearch:
      return "FALLBACK_SEARCH";
  }
  return "?";
}

/// k = q(p-1), t = q(d-q+1) = r k + s, and the case selected by s.
struct CaseArithmetic {
  int k = 0;
  int t = 0;
  int r = 0;
  int s = 0;
  ProofCase proof_case = ProofCase::kFallbackSearch;
};

inline CaseArithmetic DispatchCase(int p, int q, int d) {
  if (p < 3 || q < 2 || d < q) {
    throw std::invalid_argument("case dispatch needs p >= 3, q >= 2, d >= q");
  }
  CaseArithmetic a;
  a.k = q * (p - 1);
  a.t = q * (d - q + 1);
  a.r = a.t / a.k;
  a.s = a.t % a.k;
  if (a.s == 0) {
    a.proof_case = ProofCase::kCase3;
  } else if (a.s < p - 1) {
    a.proof_case = ProofCase::kCase1;
  } else {
    a.proof_case = ProofCase::kCase2;
  }
  return a;
}

struct EntanglingCertificate {
  VertexLabeling labeling;
  BipartiteSplit split;
  ProofCase proof_case = ProofCase::kFallbackSearch;
  int pivot = -1;
  std::vector<int> u_set;  // pivot first, then ascending
  std::vector<int> w_set;  // ascending
  int min_degree = 0;
  CaseArithmetic arithmetic;
  int pivot_degree = 0;
  int pivot_pt_degree = 0;
  int pivot_to_u = 0;         // e({x}, U \ {x})
  int u_to_w = 0;             // e(U, W)
  int u_to_rest = 0;          // e(U, V \ U)
  int guaranteed_u_to_w = 0;  // lower bound on e(U, W) for the case
};

namespace internal {

inline void CheckEntanglerInput(const Graph& g, const BipartiteSplit& split) {
  if (g.order() != split.shape().size()) {
    throw std::invalid_argument("graph order does not match split");
  }
  if (g.empty()) throw EmptyGraphError();
  if (g.is_complete()) throw NoEntanglingLabelingError();
}

inline void Require(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("entangler: ") + what);
}

}  // namespace internal

/// Constructive entangling labeling. Requires split.p() >= 3 and minimum
/// degree >= split.q(); see FindEntanglingLabeling for the general entry
/// point.
inline EntanglingCertificate EntanglingLabeling(const Graph& g,
                                                const BipartiteSplit& split) {
  internal::CheckEntanglerInput(g, split);
  const int n = g.order();
  const int p = split.p();
  const int q = split.q();
  const int d = g.min_degree();
  if (p < 3) throw std::invalid_argument("constructive case needs p >= 3");
  if (d < q) {
    throw std::invalid_argument(
        "minimum degree below q; use FallbackSearch instead");
  }

  EntanglingCertificate cert;
  cert.split = split;
  cert.min_degree = d;
  cert.arithmetic = DispatchCase(p, q, d);
  cert.proof_case = cert.arithmetic.proof_case;
  const auto& [k, t, r, s, proof_case] = cert.arithmetic;

  int x = 0;
  while (g.degree(x) != d) ++x;
  cert.pivot = x;
  cert.pivot_degree = d;

  std::vector<int> nbrs;
  for (Graph::Mask m = g.neighbors(x); m; m &= m - 1) {
    nbrs.push_back(std::countr_zero(m));
  }

  std::vector<int> u_set{x};
  int take = q - 1;
  if (proof_case == ProofCase::kCase3) {
    int y = 0;
    while (y == x || g.adjacent(x, y)) ++y;
    u_set.push_back(y);
    take = q - 2;
  }
  u_set.insert(u_set.end(), nbrs.begin(), nbrs.begin() + take);
  std::sort(u_set.begin() + 1, u_set.end());

  Graph::Mask u_mask = 0;
  for (int v : u_set) u_mask |= Graph::Mask{1} << v;
  std::vector<int> rest;
  std::vector<std::int64_t> into_u;
  for (int v = 0; v < n; ++v) {
    if ((u_mask >> v) & 1U) continue;
    rest.push_back(v);
    into_u.push_back(std::popcount(g.neighbors(v) & u_mask));
  }
  const BoxDistribution dist(into_u);
  const BoxSelection chosen = SelectBoxes(dist, p - 1);
  for (int b : chosen.boxes) cert.w_set.push_back(rest[b]);

  cert.u_set = u_set;
  const std::vector<int> others(u_set.begin() + 1, u_set.end());
  const int single[] = {x};
  cert.pivot_to_u = EdgesBetween(g, single, others);
  cert.u_to_w = EdgesBetween(g, u_set, cert.w_set);
  cert.u_to_rest = EdgesBetween(g, u_set, rest);

  switch (proof_case) {
    case ProofCase::kCase1:
      cert.guaranteed_u_to_w = r * (p - 1) + s;
      internal::Require(cert.guaranteed_u_to_w > d - q + 1, "case 1 bound");
      break;
    case ProofCase::kCase2:
      cert.guaranteed_u_to_w = (r + 1) * (p - 1);
      internal::Require(cert.guaranteed_u_to_w > d - q + 1, "case 2 bound");
      break;
    case ProofCase::kCase3:
      cert.guaranteed_u_to_w = r * (p - 1) + 2;
      internal::Require(cert.guaranteed_u_to_w > d - q + 2, "case 3 bound");
      break;
    case ProofCase::kFallbackSearch:
      break;
  }
  const int rest_bound = proof_case == ProofCase::kCase3 ? t + 2 : t;
  internal::Require(cert.u_to_rest >= rest_bound, "edges leaving U");
  internal::Require(cert.u_to_w >= cert.guaranteed_u_to_w, "edges U to W");
  internal::Require(cert.pivot_to_u + cert.u_to_w > d, "pivot violation");

  // U on row v = 0, W down column w = 0, the rest in ascending order.
  std::vector<int> flat_of_vertex(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < q; ++i) {
    flat_of_vertex[u_set[i]] = split.flat(0, i);
  }
  for (int j = 0; j < p - 1; ++j) {
    flat_of_vertex[cert.w_set[j]] = split.flat(j + 1, 0);
  }
  for (int f : flat_of_vertex) {
    if (f >= 0) used[f] = true;
  }
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (flat_of_vertex[v] >= 0) continue;
    while (used[next]) ++next;
    flat_of_vertex[v] = next;
    used[next] = true;
  }
  cert.labeling = VertexLabeling(split.shape(), std::move(flat_of_vertex));

  cert.pivot_pt_degree = PartialTransposeDegrees(g, cert.labeling, split)[x];
  internal::Require(cert.pivot_pt_degree == cert.pivot_to_u + cert.u_to_w,
                    "pT degree identity");
  return cert;
}

struct FallbackOptions {
  std::int64_t budget = 1'000'000;
  std::uint64_t seed = 1;
};

struct SearchOutcome {
  std::optional<EntanglingCertificate> certificate;
  /// Every labeling was checked up to verdict-preserving symmetry, so a
  /// missing certificate means none exists for this split.
  bool exhaustive = false;
  std::int64_t tested = 0;
  std::uint64_t seed = 0;
};

namespace internal {

inline EntanglingCertificate SearchCertificate(const Graph& g,
                                               const BipartiteSplit& split,
                                               const VertexLabeling& lab,
                                               int pivot) {
  EntanglingCertificate cert;
  cert.labeling = lab;
  cert.split = split;
  cert.proof_case = ProofCase::kFallbackSearch;
  cert.pivot = pivot;
  cert.min_degree = g.min_degree();
  cert.pivot_degree = g.degree(pivot);
  cert.pivot_pt_degree = PartialTransposeDegrees(g, lab, split)[pivot];
  return cert;
}

}  // namespace internal

/// Searches labelings for one that violates the degree condition on
/// `split`. Enumerates orbit representatives when they fit in the budget,
/// otherwise samples `budget` random labelings.
inline SearchOutcome FallbackSearch(const Graph& g, const BipartiteSplit& split,
                                    const FallbackOptions& options = {}) {
  internal::CheckEntanglerInput(g, split);
  if (options.budget < 1) throw std::invalid_argument("budget must be >= 1");
  const TensorShape& shape = split.shape();
  // Factor swaps map one cut onto another unless there are only two factors.
  const Reduction reduction =
      shape.rank() == 2 ? Reduction::kFull : Reduction::kWithinFactor;

  SearchOutcome out;
  out.seed = options.seed;
  auto try_labeling = [&](const VertexLabeling& lab) {
    ++out.tested;
    const int v = DegreeViolation(g, lab, split);
    if (v < 0) return true;
    out.certificate = internal::SearchCertificate(g, split, lab, v);
    return false;
  };

  if (LabelingCount(shape, reduction) <= options.budget) {
    out.exhaustive = ForEachLabeling(shape, reduction, try_labeling);
    return out;
  }
  std::mt19937_64 rng(options.seed);
  while (out.tested < options.budget) {
    if (!try_labeling(RandomLabeling(shape, rng))) break;
  }
  return out;
}

/// Split used for the constructive path: the largest single factor >= 3 on
/// the left. Shapes of all twos put the rest of the last factor on the left
/// instead, which gives p = n / 2.
inline BipartiteSplit ChooseEntanglerSplit(const TensorShape& shape) {
  int best = -1;
  for (int i = 0; i < shape.rank(); ++i) {
    if (shape.factor(i) >= 3 && (best < 0 || shape.factor(i) > shape.factor(best))) {
      best = i;
    }
  }
  if (best >= 0) return BipartiteSplit::SingleFactor(shape, best);
  if (shape.rank() >= 3) {
    return BipartiteSplit::RestOfFactor(shape, shape.rank() - 1);
  }
  return BipartiteSplit::SingleFactor(shape, 0);
}

/// Constructive labeling when its preconditions hold, search otherwise.
inline SearchOutcome FindEntanglingLabeling(const Graph& g,
                                            const TensorShape& shape,
                                            const FallbackOptions& options = {}) {
  const BipartiteSplit split = ChooseEntanglerSplit(shape);
  internal::CheckEntanglerInput(g, split);
  if (split.p() >= 3 && g.min_degree() >= split.q()) {
    SearchOutcome out;
    out.certificate = EntanglingLabeling(g, split);
    out.tested = 1;
    return out;
  }
  return FallbackSearch(g, split, options);
}

}  // namespace lapsep

#endif  // LAPSEP_ENTANGLER_HPP_
