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

#include "lapsep/entangler.hpp"

#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "lapsep/density.hpp"
#include "test_support.hpp"

namespace lapsep {
namespace {

using ::lapsep::testing::AllGraphs;
using ::lapsep::testing::RandomNoncompleteGraph;

// Independent checks on a certificate: the pivot's degree really changes,
// the state really is NPT, and for constructed certificates the counting
// behind the construction holds.
void VerifyCertificate(const Graph& g, const EntanglingCertificate& c) {
  const auto pt_degrees = PartialTransposeDegrees(g, c.labeling, c.split);
  ASSERT_GE(c.pivot, 0);
  EXPECT_EQ(pt_degrees[c.pivot], c.pivot_pt_degree);
  EXPECT_NE(pt_degrees[c.pivot], g.degree(c.pivot));
  EXPECT_FALSE(DegreeCondition(g, c.labeling, c.split));
  const PptResult ppt = IsPpt(NormalizedLaplacian(g, c.labeling), c.split);
  EXPECT_FALSE(ppt.ppt);
  EXPECT_FALSE(ppt.exact_ppt);
  if (c.proof_case == ProofCase::kFallbackSearch) return;

  const int p = c.split.p(), q = c.split.q();
  EXPECT_EQ(c.pivot_degree, g.min_degree());
  EXPECT_EQ(g.degree(c.pivot), c.min_degree);
  ASSERT_EQ(static_cast<int>(c.u_set.size()), q);
  ASSERT_EQ(static_cast<int>(c.w_set.size()), p - 1);
  EXPECT_EQ(c.u_set.front(), c.pivot);
  std::set<int> all(c.u_set.begin(), c.u_set.end());
  all.insert(c.w_set.begin(), c.w_set.end());
  EXPECT_EQ(static_cast<int>(all.size()), p + q - 1);
  // U shares a row, W shares a column with the pivot.
  for (int u : c.u_set) {
    EXPECT_EQ(c.split.v_of(c.labeling.index(u)),
              c.split.v_of(c.labeling.index(c.pivot)));
  }
  for (int w : c.w_set) {
    EXPECT_EQ(c.split.w_of(c.labeling.index(w)),
              c.split.w_of(c.labeling.index(c.pivot)));
  }
  EXPECT_EQ(c.pivot_pt_degree, c.pivot_to_u + c.u_to_w);
  EXPECT_GT(c.pivot_pt_degree, c.pivot_degree);
  const auto& a = c.arithmetic;
  switch (c.proof_case) {
    case ProofCase::kCase1:
      EXPECT_GE(c.u_to_w, a.r * (p - 1) + a.s);
      EXPECT_EQ(c.pivot_to_u, q - 1);
      break;
    case ProofCase::kCase2:
      EXPECT_GE(c.u_to_w, (a.r + 1) * (p - 1));
      EXPECT_EQ(c.pivot_to_u, q - 1);
      break;
    case ProofCase::kCase3:
      EXPECT_GE(c.u_to_w, a.r * (p - 1) + 2);
      EXPECT_EQ(c.pivot_to_u, q - 2);
      break;
    case ProofCase::kFallbackSearch:
      break;
  }
}

TEST(DispatchCaseTest, Arithmetic) {
  const CaseArithmetic a = DispatchCase(3, 2, 2);
  EXPECT_EQ(a.k, 4);
  EXPECT_EQ(a.t, 2);
  EXPECT_EQ(a.r, 0);
  EXPECT_EQ(a.s, 2);
  EXPECT_EQ(a.proof_case, ProofCase::kCase2);
  EXPECT_EQ(DispatchCase(4, 2, 2).proof_case, ProofCase::kCase1);
  EXPECT_EQ(DispatchCase(4, 2, 4).proof_case, ProofCase::kCase3);
  EXPECT_THROW(DispatchCase(2, 2, 2), std::invalid_argument);
  EXPECT_THROW(DispatchCase(3, 3, 2), std::invalid_argument);
}

TEST(DispatchCaseTest, CasesAreExhaustiveAndExclusive) {
  for (int p = 3; p <= 12; ++p) {
    for (int q = 2; q <= 12; ++q) {
      for (int d = q; d <= p * q - 2; ++d) {
        const CaseArithmetic a = DispatchCase(p, q, d);
        EXPECT_EQ(a.r * a.k + a.s, a.t);
        EXPECT_GE(a.s, 0);
        EXPECT_LT(a.s, a.k);
        const bool c1 = a.s > 0 && a.s < p - 1;
        const bool c2 = a.s >= p - 1;
        const bool c3 = a.s == 0;
        EXPECT_EQ(c1 + c2 + c3, 1);
        EXPECT_EQ(a.proof_case, c1   ? ProofCase::kCase1
                                : c2 ? ProofCase::kCase2
                                     : ProofCase::kCase3);
      }
    }
  }
}

TEST(EntanglingLabelingTest, CycleOnSix) {
  const TensorShape shape({2, 3});
  const BipartiteSplit split = ChooseEntanglerSplit(shape);
  EXPECT_EQ(split.p(), 3);
  EXPECT_EQ(split.q(), 2);
  const Graph c6 = CycleGraph(6);
  const auto c = EntanglingLabeling(c6, split);
  EXPECT_EQ(c.proof_case, ProofCase::kCase2);
  EXPECT_EQ(c.min_degree, 2);
  EXPECT_EQ(c.arithmetic.k, 4);
  EXPECT_EQ(c.arithmetic.t, 2);
  EXPECT_EQ(c.arithmetic.r, 0);
  EXPECT_EQ(c.arithmetic.s, 2);
  EXPECT_EQ(c.pivot, 0);
  VerifyCertificate(c6, c);
}

TEST(EntanglingLabelingTest, CompleteBipartiteThreeSix) {
  const TensorShape shape({3, 3});
  const Graph k36 = CompleteBipartite(3, 6);
  const auto outcome = FindEntanglingLabeling(k36, shape);
  ASSERT_TRUE(outcome.certificate);
  const auto& c = *outcome.certificate;
  EXPECT_EQ(c.proof_case, ProofCase::kCase2);
  EXPECT_EQ(c.arithmetic.t, 3);
  EXPECT_EQ(c.arithmetic.k, 6);
  EXPECT_EQ(c.arithmetic.s, 3);
  VerifyCertificate(k36, c);
}

TEST(EntanglingLabelingTest, EveryCaseIsReached) {
  const TensorShape shape({2, 4});
  const BipartiteSplit split = ChooseEntanglerSplit(shape);
  EXPECT_EQ(split.p(), 4);
  const Graph c8 = CycleGraph(8);
  const auto c1 = EntanglingLabeling(c8, split);
  EXPECT_EQ(c1.proof_case, ProofCase::kCase1);
  VerifyCertificate(c8, c1);
  // 4-regular circulant on eight vertices: d = 4, t = 6 = k.
  Graph circ(8);
  for (int v = 0; v < 8; ++v) {
    circ.AddEdge(v, (v + 1) % 8);
    circ.AddEdge(v, (v + 2) % 8);
  }
  const auto c3 = EntanglingLabeling(circ, split);
  EXPECT_EQ(c3.proof_case, ProofCase::kCase3);
  VerifyCertificate(circ, c3);
}

TEST(EntanglingLabelingTest, RejectsCompleteAndEmpty) {
  EXPECT_THROW(FindEntanglingLabeling(CompleteGraph(4), TensorShape({2, 2})),
               NoEntanglingLabelingError);
  EXPECT_THROW(FindEntanglingLabeling(CompleteGraph(9), TensorShape({3, 3})),
               NoEntanglingLabelingError);
  EXPECT_THROW(FindEntanglingLabeling(Graph(6), TensorShape({2, 3})),
               EmptyGraphError);
  EXPECT_THROW(FindEntanglingLabeling(CycleGraph(5), TensorShape({2, 3})),
               std::invalid_argument);
  // Minimum degree below q needs the search instead.
  EXPECT_THROW(EntanglingLabeling(CompleteBipartite(1, 5),
                                  ChooseEntanglerSplit(TensorShape({2, 3}))),
               std::invalid_argument);
}

TEST(FallbackSearchTest, SmallGraphs) {
  const auto star6 = FindEntanglingLabeling(CompleteBipartite(1, 5), TensorShape({2, 3}));
  ASSERT_TRUE(star6.certificate);
  EXPECT_EQ(star6.certificate->proof_case, ProofCase::kFallbackSearch);
  VerifyCertificate(CompleteBipartite(1, 5), *star6.certificate);

  const auto star4 = FindEntanglingLabeling(CompleteBipartite(1, 3), TensorShape({2, 2}));
  ASSERT_TRUE(star4.certificate);
  VerifyCertificate(CompleteBipartite(1, 3), *star4.certificate);

  // K_{2,2} is separable under every labeling, and the search can say so.
  const auto k22 = FindEntanglingLabeling(CompleteBipartite(2, 2), TensorShape({2, 2}));
  EXPECT_FALSE(k22.certificate);
  EXPECT_TRUE(k22.exhaustive);
  EXPECT_EQ(k22.tested, 3);
}

TEST(FallbackSearchTest, SamplingRespectsBudgetAndSeed) {
  // 2K2 plus nothing else has no entangling labeling; sampling runs out.
  Graph two_k2(4);
  two_k2.AddEdge(0, 1);
  two_k2.AddEdge(2, 3);
  FallbackOptions options;
  options.budget = 2;  // below the three orbit representatives
  options.seed = 5;
  const auto out = FallbackSearch(two_k2, BipartiteSplit::SingleFactor(TensorShape({2, 2}), 0), options);
  EXPECT_FALSE(out.certificate);
  EXPECT_FALSE(out.exhaustive);
  EXPECT_EQ(out.tested, 2);
  EXPECT_EQ(out.seed, 5u);

  // Same seed, same certificate.
  std::mt19937 rng(3);
  const Graph g = RandomNoncompleteGraph(10, rng);
  options.budget = 1000;
  const BipartiteSplit split = BipartiteSplit::SingleFactor(TensorShape({2, 5}), 0);
  const auto a = FallbackSearch(g, split, options);
  const auto b = FallbackSearch(g, split, options);
  ASSERT_TRUE(a.certificate);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.certificate->labeling, b.certificate->labeling);
  EXPECT_THROW(FallbackSearch(g, split, FallbackOptions{0, 1}), std::invalid_argument);
}

TEST(FindEntanglingLabelingTest, EveryNoncompleteGraphOnSix) {
  std::map<ProofCase, int> cases;
  for (const Graph& g : AllGraphs(6)) {
    if (g.empty() || g.is_complete()) continue;
    for (const TensorShape& shape : {TensorShape({2, 3}), TensorShape({3, 2})}) {
      const auto out = FindEntanglingLabeling(g, shape);
      ASSERT_TRUE(out.certificate) << ToGraph6(g);
      ++cases[out.certificate->proof_case];
      VerifyCertificate(g, *out.certificate);
    }
  }
  EXPECT_GT(cases[ProofCase::kCase2], 0);
  EXPECT_GT(cases[ProofCase::kFallbackSearch], 0);
}

TEST(FindEntanglingLabelingTest, RandomGraphsOnEightAndNine) {
  std::mt19937 rng(41);
  for (const char* text : {"2x4", "3x3", "2x2x2"}) {
    const TensorShape shape = TensorShape::Parse(text);
    for (int trial = 0; trial < 150; ++trial) {
      const Graph g = RandomNoncompleteGraph(shape.size(), rng);
      const auto out = FindEntanglingLabeling(g, shape);
      ASSERT_TRUE(out.certificate) << text << ' ' << ToGraph6(g);
      VerifyCertificate(g, *out.certificate);
    }
  }
}

// Dense noncomplete graphs stress the case split: minimum degree close to
// n - 2 pushes t toward its largest values.
TEST(FindEntanglingLabelingTest, NearCompleteGraphs) {
  std::mt19937 rng(43);
  for (const char* text : {"2x4", "3x3", "3x4", "2x5"}) {
    const TensorShape shape = TensorShape::Parse(text);
    const int n = shape.size();
    std::uniform_int_distribution<int> vertex(0, n - 1);
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = CompleteGraph(n);
      const int removals = 1 + trial % 4;
      for (int i = 0; i < removals; ++i) {
        const int a = vertex(rng), b = vertex(rng);
        if (a != b) g.RemoveEdge(a, b);
      }
      if (g.is_complete()) g.RemoveEdge(0, 1);
      const auto out = FindEntanglingLabeling(g, shape);
      ASSERT_TRUE(out.certificate) << text << ' ' << ToGraph6(g);
      VerifyCertificate(g, *out.certificate);
    }
  }
}

}  // namespace
}  // namespace lapsep
