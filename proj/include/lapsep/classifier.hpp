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

#ifndef LAPSEP_CLASSIFIER_HPP_
#define LAPSEP_CLASSIFIER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lapsep/density.hpp"
#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"
#include "lapsep/pt_graph.hpp"

namespace lapsep {

enum class Verdict { kSeparable, kEntangled, kUnknown };

inline const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kSeparable:
      return "SEPARABLE";
    case Verdict::kEntangled:
      return "ENTANGLED";
    case Verdict::kUnknown:
      return "UNKNOWN";
  }
  return "?";
}

/// Sufficient condition that certified a SEPARABLE verdict.
enum class SeparableBy {
  kNone,
  /// Two-factor shape with a factor of size 2 where the degree condition
  /// holds.
  kQubitCut,
  /// Every block of L along one side of the cut lies in span{I, J}, so
  /// L = X0 (x) (I - J/q) + X1 (x) J/q with X0, X1 positive semidefinite.
  kIsotropicBlocks,
  /// K_n for any shape, or K_{2,2} and its complement on four vertices.
  kSeparableFamily,
};

inline const char* ToString(SeparableBy s) {
  switch (s) {
    case SeparableBy::kNone:
      return "none";
    case SeparableBy::kQubitCut:
      return "qubit-cut degree condition";
    case SeparableBy::kIsotropicBlocks:
      return "isotropic blocks";
    case SeparableBy::kSeparableFamily:
      return "separable family";
  }
  return "?";
}

struct CutProbe {
  BipartiteSplit split;
  int degree_violation = -1;  // first vertex whose degree changes, or -1
  std::optional<PptResult> ppt;

  bool degree_condition() const { return degree_violation < 0; }
  bool entangled() const {
    return !degree_condition() || (ppt.has_value() && !ppt->ppt);
  }
  /// The two tests disagree; never expected for graph Laplacians.
  bool mismatch() const {
    return ppt.has_value() && ppt->ppt != degree_condition();
  }
};

struct LabelingVerdict {
  VertexLabeling labeling;
  std::vector<CutProbe> cuts;
  Verdict verdict = Verdict::kUnknown;
  SeparableBy reason = SeparableBy::kNone;

  bool mismatch() const {
    for (const auto& c : cuts) {
      if (c.mismatch()) return true;
    }
    return false;
  }
};

struct VerdictOptions {
  /// Also run the matrix PPT test on every cut; otherwise only the degree
  /// condition is used.
  bool matrix_test = true;
  PptOptions ppt;
};

inline bool IsInSeparableFamily(const Graph& g) {
  if (g.is_complete()) return true;
  if (g.order() != 4) return false;
  const int e = g.edge_count();
  const int want = e == 4 ? 2 : (e == 2 ? 1 : -1);
  if (want < 0) return false;
  for (int v = 0; v < 4; ++v) {
    if (g.degree(v) != want) return false;
  }
  return true;
}

/// True when, along one side of the cut, every block of `m` has a constant
/// diagonal and a constant off-diagonal.
inline bool HasIsotropicBlocks(const IntMatrix& m, const BipartiteSplit& split) {
  auto blocks_ok = [&](bool blocks_over_w) {
    const int outer = blocks_over_w ? split.p() : split.q();
    const int inner = blocks_over_w ? split.q() : split.p();
    auto at = [&](int a, int i, int b, int j) {
      return blocks_over_w ? m(split.flat(a, i), split.flat(b, j))
                           : m(split.flat(i, a), split.flat(j, b));
    };
    for (int a = 0; a < outer; ++a) {
      for (int b = 0; b < outer; ++b) {
        const auto diag = at(a, 0, b, 0);
        const auto off = at(a, 0, b, 1);
        for (int i = 0; i < inner; ++i) {
          for (int j = 0; j < inner; ++j) {
            if (at(a, i, b, j) != (i == j ? diag : off)) return false;
          }
        }
      }
    }
    return true;
  };
  return blocks_ok(true) || blocks_ok(false);
}

/// Separability verdict for one labeling. Every single-factor cut is
/// probed; entanglement across any cut implies entanglement of the whole
/// multipartite state.
inline LabelingVerdict ClassifyLabeling(const Graph& g,
                                        const VertexLabeling& lab,
                                        const TensorShape& shape,
                                        const VerdictOptions& options = {}) {
  if (g.empty()) throw EmptyGraphError();
  if (!(lab.shape() == shape) || lab.order() != g.order()) {
    throw std::invalid_argument("labeling does not match graph and shape");
  }
  LabelingVerdict out;
  out.labeling = lab;
  std::optional<DensityMatrix> rho;
  if (options.matrix_test) rho = NormalizedLaplacian(g, lab);
  bool entangled = false;
  for (auto& split : BipartiteSplit::SingleFactorCuts(shape)) {
    CutProbe probe;
    probe.degree_violation = DegreeViolation(g, lab, split);
    if (rho) probe.ppt = IsPpt(*rho, split, options.ppt);
    probe.split = std::move(split);
    entangled = entangled || probe.entangled();
    out.cuts.push_back(std::move(probe));
  }
  if (entangled) {
    out.verdict = Verdict::kEntangled;
    return out;
  }
  if (IsInSeparableFamily(g)) {
    out.reason = SeparableBy::kSeparableFamily;
  } else if (shape.rank() == 2) {
    const BipartiteSplit& cut = out.cuts.front().split;
    if (std::min(cut.p(), cut.q()) == 2) {
      out.reason = SeparableBy::kQubitCut;
    } else if (HasIsotropicBlocks(rho ? rho->numerator
                                      : Laplacian(g, lab).entries,
                                  cut)) {
      out.reason = SeparableBy::kIsotropicBlocks;
    }
  }
  out.verdict = out.reason == SeparableBy::kNone ? Verdict::kUnknown
                                                 : Verdict::kSeparable;
  return out;
}

enum class GraphClass { kS, kSE, kE, kSCandidate, kUnresolved };

inline const char* ToString(GraphClass c) {
  switch (c) {
    case GraphClass::kS:
      return "S";
    case GraphClass::kSE:
      return "SE";
    case GraphClass::kE:
      return "E";
    case GraphClass::kSCandidate:
      return "S_CANDIDATE";
    case GraphClass::kUnresolved:
      return "UNRESOLVED";
  }
  return "?";
}

struct ClassifyOptions {
  Reduction reduction = Reduction::kFull;
  /// Maximum number of labelings (orbit representatives when reduced) to
  /// examine before giving up with an incomplete report.
  std::int64_t budget = 50'000'000;
  VerdictOptions verdict;
};

struct GraphClassReport {
  Graph graph;
  TensorShape shape;
  GraphClass graph_class = GraphClass::kUnresolved;
  // Counts are over all n! labelings; a reduced run weights each orbit
  // representative by the orbit size.
  std::int64_t separable = 0;
  std::int64_t entangled = 0;
  std::int64_t unknown = 0;
  std::int64_t examined = 0;
  std::int64_t mismatches = 0;
  std::optional<VertexLabeling> separable_witness;
  std::optional<VertexLabeling> entangled_witness;
  bool complete = false;
  double elapsed_ms = 0.0;
};

inline GraphClass ClassFromCounts(std::int64_t separable,
                                  std::int64_t entangled, std::int64_t unknown,
                                  bool complete) {
  if (separable > 0 && entangled > 0) return GraphClass::kSE;
  if (!complete) return GraphClass::kUnresolved;
  if (entangled == 0 && unknown == 0) return GraphClass::kS;
  if (separable == 0 && unknown == 0) return GraphClass::kE;
  if (entangled == 0) return GraphClass::kSCandidate;
  return GraphClass::kUnresolved;
}

inline GraphClassReport Classify(const Graph& g, const TensorShape& shape,
                                 const ClassifyOptions& options = {}) {
  if (g.order() != shape.size()) {
    throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                " does not match shape " + shape.ToString());
  }
  if (g.empty()) throw EmptyGraphError();
  const auto start = std::chrono::steady_clock::now();
  GraphClassReport report;
  report.graph = g;
  report.shape = shape;
  const std::int64_t weight = SymmetryGroupOrder(shape, options.reduction);
  report.complete = ForEachLabeling(
      shape, options.reduction, [&](const VertexLabeling& lab) {
        if (report.examined >= options.budget) return false;
        ++report.examined;
        const LabelingVerdict v = ClassifyLabeling(g, lab, shape, options.verdict);
        if (v.mismatch()) ++report.mismatches;
        switch (v.verdict) {
          case Verdict::kSeparable:
            report.separable += weight;
            if (!report.separable_witness) report.separable_witness = lab;
            break;
          case Verdict::kEntangled:
            report.entangled += weight;
            if (!report.entangled_witness) report.entangled_witness = lab;
            break;
          case Verdict::kUnknown:
            report.unknown += weight;
            break;
        }
        return true;
      });
  report.graph_class = ClassFromCounts(report.separable, report.entangled,
                                       report.unknown, report.complete);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace lapsep

#endif  // LAPSEP_CLASSIFIER_HPP_
