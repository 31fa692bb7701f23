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

#include <gmpxx.h>

#include "yhk/errors.hpp"
#include "yhk/quotient.hpp"
#include "yhk/rep.hpp"

namespace yhk {
namespace {

const WeightDatum kLam = WeightDatum::parse_charges("0");

TEST(Rep, CharacterPattern) {
  EXPECT_EQ(character_pattern({2, 0, 1}), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(character_pattern({0, 2}), (std::vector<int>{2, 2}));
}

TEST(Rep, IsotypicOfRegularRep) {
  FdModule reg = regular_representation(kLam, 2, 2);
  EXPECT_EQ(isotypic(reg, {2, 0}).dim(), 2);
  int total = 0;
  for (const Composition& mu : compositions(2, 2)) total += isotypic_component(reg, mu).dim();
  EXPECT_EQ(total, reg.dim);
  EXPECT_EQ(isotypic(reg, {3, 0}).dim(), 0);
}

TEST(Rep, InduceDimensions) {
  FdModule W = character_module(2, {1, 1}, tensor_hecke({seminormal_simple({1}, 0), seminormal_simple({1}, 0)}, {1, 1}));
  FdModule ind = induce(W, {1, 1});
  EXPECT_EQ(ind.dim, 2);
  EXPECT_TRUE(check_module_relations(ind).all_pass());
  FdModule top = character_module(2, {2, 0}, tensor_hecke({seminormal_simple({2}, 0), hecke_factor({}, 0)}, {2, 0}));
  EXPECT_EQ(induce(top, {2, 0}).dim, top.dim);
}

TEST(Rep, SimpleModuleExamples) {
  EXPECT_EQ(simple_module({1, 1}, {{1}, {1}}, kLam).dim, 2);
  EXPECT_EQ(simple_module({3}, {{2, 1}}, kLam).dim, 2);
  EXPECT_THROW(simple_module({1, 1}, {{2}, {1}}, kLam), InvalidArgument);
}

TEST(Rep, SumOfSquaresSmall) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      mpz_class total = 0, expect = 1;
      for (int j = 1; j <= n; ++j) expect *= r * j;
      std::vector<TraceInvariants> seen;
      for (const SimpleLabel& label : simple_labels(r, n)) {
        FdModule m = simple_module(label, kLam);
        total += mpz_class(m.dim) * m.dim;
        EXPECT_TRUE(check_module_relations(m).all_pass()) << label.str();
        EXPECT_TRUE(satisfies_f_lambda(m, kLam));
        TraceInvariants inv = trace_invariants(m);
        for (const auto& other : seen) EXPECT_NE(inv, other) << label.str();
        seen.push_back(inv);
      }
      EXPECT_EQ(total, expect) << "r=" << r << " n=" << n;
    }
  }
}

TEST(Rep, MoritaRoundTrip) {
  for (const SimpleLabel& label : simple_labels(2, 3)) {
    FdModule N = simple_module(label, kLam);
    auto F = functor_F(N);
    int nonzero = 0;
    for (const auto& [mu, P] : F) {
      if (P.dim == 0) continue;
      ++nonzero;
      EXPECT_EQ(mu, label.mu);
      EXPECT_TRUE(block_starts_satisfy(P, mu, kLam));
    }
    EXPECT_EQ(nonzero, 1);
    EXPECT_EQ(trace_invariants(functor_G(2, 3, F)), trace_invariants(N)) << label.str();
  }
  auto F0 = functor_F(FdModule::zero(2, 2));
  for (const auto& [mu, P] : F0) EXPECT_EQ(P.dim, 0);
  EXPECT_EQ(functor_G(2, 2, F0).dim, 0);
}

TEST(Rep, InductionIgnoresBlockOrder) {
  // inducing L2 (x) L1 placed with characters (2, 1) gives the module of
  // L1 (x) L2 with characters (1, 2)
  for (int r : {2, 3}) {
    Partition a{1}, b{2};
    FdModule expect = simple_module({1, 2}, {a, b}, kLam);
    if (r == 3) expect = simple_module({1, 2, 0}, {a, b, {}}, kLam);
    FdModule P = tensor_hecke({hecke_factor(b, 0), hecke_factor(a, 0)}, {2, 1});
    Composition padded(static_cast<std::size_t>(r), 0);
    padded[0] = 2;
    padded[1] = 1;
    FdModule W = character_module(r, padded, P);
    Scalar z2 = Scalar(CycloNum::root_of_unity(r, 1));
    W.t[0] = z2 * Matrix::identity(W.dim);
    W.t[1] = z2 * Matrix::identity(W.dim);
    W.t[2] = Matrix::identity(W.dim);
    FdModule ind = induce(W, padded);
    EXPECT_TRUE(check_module_relations(ind).all_pass());
    EXPECT_EQ(trace_invariants(ind), trace_invariants(expect)) << "r=" << r;
  }
}

TEST(Rep, BranchExamples) {
  auto parts = restrict_branch(simple_module({1, 1}, {{1}, {1}}, kLam));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].k, 1);
  EXPECT_EQ(parts[0].a, 0);
  EXPECT_EQ(parts[1].k, 2);
  EXPECT_EQ(parts[1].a, 0);
  auto row = restrict_branch(simple_module({2}, {{2}}, kLam));
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].a, 2);
  auto one = restrict_branch(simple_module({0, 1}, {{}, {1}}, kLam));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].k, 2);
  EXPECT_EQ(one[0].module.dim, 1);
}

TEST(Rep, BranchMatchesPrediction) {
  for (int n = 1; n <= 3; ++n) {
    for (const SimpleLabel& label : simple_labels(2, n)) {
      auto got = restrict_branch(simple_module(label, kLam));
      auto want = predict_branch(label, kLam);
      ASSERT_EQ(got.size(), want.size()) << label.str();
      for (std::size_t s = 0; s < got.size(); ++s) {
        EXPECT_EQ(got[s].k, want[s].k);
        EXPECT_EQ(got[s].a, want[s].a);
        EXPECT_EQ(got[s].module.dim, want[s].dim);
        EXPECT_EQ(trace_invariants(got[s].module), trace_invariants(simple_module(want[s].label, kLam)));
      }
    }
  }
}

TEST(Rep, Blocks) {
  EXPECT_EQ(content_of({0, 1, 0}), (std::map<int, int>{{0, 2}, {1, 1}}));
  FdModule a = simple_module({1, 1}, {{1}, {1}}, kLam);
  FdModule b = simple_module({2, 0}, {{2}, {}}, kLam);
  EXPECT_EQ(blocks(a).size(), 1u);
  auto both = blocks(direct_sum(a, b));
  ASSERT_EQ(both.size(), 2u);
  int total = 0;
  for (const auto& [label, s] : both) total += s.dim();
  EXPECT_EQ(total, a.dim + b.dim);
}

TEST(Rep, FunctorE) {
  FdModule v = simple_module({0, 1}, {{}, {1}}, kLam);
  FdModule e = functor_e(v, 0, 2);
  EXPECT_EQ(e.dim, 1);
  EXPECT_EQ(e.n, 0);
  EXPECT_EQ(functor_e(v, 0, 1).dim, 0);
  EXPECT_EQ(functor_e(v, 2, 2).dim, 0);
}

TEST(Rep, FunctorFFromVacuum) {
  // f_{a,k} on the vacuum gives the one-box simple in slot k for a = charge,
  // and nothing otherwise
  for (int r = 1; r <= 3; ++r) {
    FdModule vac = vacuum_module(r);
    for (int k = 1; k <= r; ++k) {
      FdModule f = functor_f(vac, 0, k, kLam);
      EXPECT_EQ(f.dim, 1);
      EXPECT_EQ(functor_f(vac, 2, k, kLam).dim, 0);
      EXPECT_EQ(functor_e(f, 0, k).dim, 1);
      Composition mu(static_cast<std::size_t>(r), 0);
      mu[static_cast<std::size_t>(k - 1)] = 1;
      std::vector<Partition> shapes(static_cast<std::size_t>(r));
      shapes[static_cast<std::size_t>(k - 1)] = {1};
      EXPECT_EQ(trace_invariants(f), trace_invariants(simple_module(mu, shapes, kLam)));
    }
  }
}

TEST(Rep, FunctorFGrowsOneBox) {
  // f_{a,k} S((1)) for r = 1: a = 2 adds to the row, a = -2 to the column
  FdModule s = simple_module({1}, {{1}}, kLam);
  EXPECT_EQ(trace_invariants(functor_f(s, 2, 1, kLam)), trace_invariants(simple_module({2}, {{2}}, kLam)));
  EXPECT_EQ(trace_invariants(functor_f(s, -2, 1, kLam)), trace_invariants(simple_module({2}, {{1, 1}}, kLam)));
  EXPECT_EQ(functor_f(s, 0, 1, kLam).dim, 0);
}

}  // namespace
}  // namespace yhk
