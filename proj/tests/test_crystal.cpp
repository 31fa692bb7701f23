// Copyright 2026 The yhk Authors.
//
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

#include <gtest/gtest.h>

#include <set>

#include "yhk/crystal.hpp"
#include "yhk/errors.hpp"
#include "yhk/graph_compare.hpp"

namespace yhk {
namespace {

const WeightDatum kLam = WeightDatum::parse_charges("0");

Multipartition single(const Partition& p, int e, int charge = 0) {
  Multipartition m = Multipartition::empty(WeightDatum::from_charges({charge}), e);
  m.comps[0] = p;
  return m;
}

TEST(Crystal, Residues) {
  EXPECT_EQ(residue(1, 1, 0, 2), 0);
  EXPECT_EQ(residue(2, 1, 0, 2), 1);
  EXPECT_EQ(residue(1, 2, 1, 2), 0);
  EXPECT_EQ(residue(3, 1, 0, kInfinite), -2);
  EXPECT_THROW(residue(1, 1, 0, 1), InvalidArgument);
}

TEST(Crystal, KashiwaraExamples) {
  auto e0 = kashiwara_e(single({1}, 2), 0);
  ASSERT_TRUE(e0.has_value());
  EXPECT_TRUE(e0->comps[0].empty());
  // frozen regression value of the reading order
  auto f1 = kashiwara_f(single({1}, 2), 1);
  ASSERT_TRUE(f1.has_value());
  EXPECT_EQ(f1->comps[0], (Partition{1, 1}));
  for (int i = 0; i < 3; ++i) EXPECT_FALSE(kashiwara_e(single({}, 3), i).has_value());
  // e = infinity: the unique addable box of content i
  auto f = kashiwara_f(single({2, 1}, kInfinite), -2);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->comps[0], (Partition{2, 1, 1}));
}

TEST(Crystal, SignatureCancellation) {
  // e=2, (2): removable (1,2) has residue 1, addable (2,1) has residue 1;
  // reading bottom to top gives "+-", which cancels
  Multipartition m = single({2}, 2);
  auto sig = signature(m, 1);
  ASSERT_EQ(sig.size(), 2u);
  EXPECT_EQ(sig[0].second, 1);
  EXPECT_EQ(sig[1].second, -1);
  EXPECT_FALSE(kashiwara_f(m, 1).has_value());
  EXPECT_FALSE(kashiwara_e(m, 1).has_value());
}

TEST(Crystal, KleshchevExamples) {
  auto k22 = kleshchev_enumerate(2, kLam, 2);
  ASSERT_EQ(k22.size(), 1u);
  EXPECT_EQ(k22[0].comps[0], (Partition{1, 1}));
  EXPECT_EQ(kleshchev_enumerate(2, kLam, 3).size(), 2u);
  auto k0 = kleshchev_enumerate(0, kLam, 2);
  ASSERT_EQ(k0.size(), 1u);
  EXPECT_EQ(k0[0].size(), 0);
}

TEST(Crystal, RestrictedEqualsReachable) {
  for (int e : {2, 3, 4, kInfinite}) {
    for (int n = 0; n <= 6; ++n) {
      EXPECT_EQ(kleshchev_enumerate(n, kLam, e), kleshchev_by_reachability(n, kLam, e)) << "e=" << e << " n=" << n;
    }
  }
}

TEST(Crystal, LevelCounts) {
  for (auto [r, e] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    CrystalGraph g = tensor_crystal(kLam, r, e, 6);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(g.level_count(n), predicted_level_count(r, n, e)) << r << " " << e << " " << n;
    EXPECT_TRUE(partial_inverse_holds(g));
  }
  EXPECT_EQ(tensor_crystal(kLam, 2, 2, 2).level_count(2), 3);
}

TEST(Crystal, ArrowsChangeOneBoxInOneSlot) {
  CrystalGraph g = tensor_crystal(WeightDatum::parse_charges("0,1"), 2, 3, 4);
  for (const CrystalEdge& edge : g.edges) {
    const CrystalNode& x = g.nodes[static_cast<std::size_t>(edge.from)];
    const CrystalNode& y = g.nodes[static_cast<std::size_t>(edge.to)];
    for (int k = 1; k <= 2; ++k) {
      if (k != edge.k) {
        EXPECT_EQ(x[static_cast<std::size_t>(k - 1)], y[static_cast<std::size_t>(k - 1)]);
      }
    }
    auto back = kashiwara_e(y[static_cast<std::size_t>(edge.k - 1)], edge.i);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, x[static_cast<std::size_t>(edge.k - 1)]);
    EXPECT_EQ(node_size(y), node_size(x) + 1);
  }
}

TEST(Crystal, DotExport) {
  std::string dot = to_dot(tensor_crystal(kLam, 2, 2, 1));
  EXPECT_NE(dot.find("digraph crystal"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1 [label=\"0@1\"]"), std::string::npos);
  EXPECT_NE(dot.find("[()|()]"), std::string::npos);
  EXPECT_EQ(dot, to_dot(tensor_crystal(kLam, 2, 2, 1)));
}

TEST(GraphCompare, YoungGraph) {
  CompareReport rep = branch_graph_compare(1, 3, kLam);
  EXPECT_TRUE(rep.isomorphic) << rep.first_divergence;
  EXPECT_EQ(rep.module_levels, (std::vector<int>{1, 1, 2, 3}));
}

TEST(GraphCompare, RankTwo) {
  for (const char* ch : {"0", "3"}) {
    CompareReport rep = branch_graph_compare(2, 3, WeightDatum::parse_charges(ch));
    EXPECT_TRUE(rep.isomorphic) << rep.first_divergence;
    EXPECT_EQ(rep.crystal_levels, (std::vector<int>{1, 2, 5, 10}));
  }
}

TEST(GraphCompare, DetectsCorruption) {
  ModuleGraph module = module_branch_graph(2, 2, kLam);
  CrystalGraph crystal = tensor_crystal(kLam, 2, kInfinite, 2);
  ASSERT_TRUE(branch_graph_compare(module, crystal, 2, kLam).isomorphic);
  ModuleGraph relabelled = module;
  relabelled.edges.back().k = 3 - relabelled.edges.back().k;
  CompareReport bad = branch_graph_compare(relabelled, crystal, 2, kLam);
  EXPECT_FALSE(bad.isomorphic);
  EXPECT_NE(bad.first_divergence.find("arrows 1->2"), std::string::npos) << bad.first_divergence;
  CompareReport finite = branch_graph_compare(module, tensor_crystal(kLam, 2, 2, 2), 2, kLam);
  EXPECT_FALSE(finite.isomorphic);
}

TEST(GraphCompare, EmptyGraphs) {
  CompareReport rep = branch_graph_compare(ModuleGraph{}, CrystalGraph{}, 0, kLam);
  EXPECT_TRUE(rep.isomorphic) << rep.first_divergence;
  EXPECT_EQ(rep.module_levels, (std::vector<int>{0}));
}

}  // namespace
}  // namespace yhk
