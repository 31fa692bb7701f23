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

#include <random>

#include "yhk/errors.hpp"
#include "yhk/pbw.hpp"

namespace yhk {
namespace {

const Scalar kQQ = Scalar::q() - Scalar::q(-1);

PbwElement X(const AlgebraSpec& s, std::vector<int> a) {
  return monomial_element(s, a, std::vector<int>(a.size(), 0), Perm(s.n));
}

TEST(Pbw, GeneratorExamples) {
  AlgebraSpec s{2, 2};
  PbwElement e1 = gen_e(s, 1);
  PbwElement expect = scalar_element(s, Scalar::rational(1, 2));
  expect += monomial_element(s, {0, 0}, {1, 1}, Perm(2), Scalar::rational(1, 2));
  EXPECT_EQ(e1, expect);
  PbwElement ginv = gen_g(s, 1) - kQQ * gen_e(s, 1);
  EXPECT_EQ(gen_g_inv(s, 1), ginv);
  EXPECT_THROW(gen_g(s, 2), InvalidArgument);
  EXPECT_THROW(gen_t(s, 0), InvalidArgument);
}

TEST(Pbw, ThetaMatchesFactorProduct) {
  AlgebraSpec s{3, 3};
  for (int i = 1; i <= 2; ++i) {
    PbwElement factor = one(s) - mult(gen_X(s, i), gen_X(s, i + 1, -1));
    PbwElement th = Scalar::q() * mult(gen_g(s, i), factor) + (Scalar(1L) - Scalar::q(2)) * gen_e(s, i);
    EXPECT_EQ(gen_theta(s, i), th);
  }
}

TEST(Pbw, MultExamples) {
  AlgebraSpec s{2, 2};
  PbwElement g1 = gen_g(s, 1), X1 = gen_X(s, 1), X2 = gen_X(s, 2), e1 = gen_e(s, 1);
  // g1 X1 = X2 g1 - (q - q^{-1}) e1 X2
  EXPECT_EQ(mult(g1, X1), mult(X2, g1) - kQQ * mult(e1, X2));
  EXPECT_EQ(mult(g1, g1), one(s) + kQQ * mult(e1, g1));
  EXPECT_EQ(mult(e1, e1), e1);
  EXPECT_EQ(mult(g1, gen_t(s, 1)), mult(gen_t(s, 2), g1));
}

TEST(Pbw, DividedDifferenceExamples) {
  AlgebraSpec s{1, 2};
  EXPECT_EQ(divided_difference(X(s, {1, 0}), 1), -X(s, {0, 1}));
  EXPECT_TRUE(divided_difference(X(s, {1, 1}), 1).is_zero());
  EXPECT_EQ(divided_difference(X(s, {2, 0}), 1), -(X(s, {1, 1}) + X(s, {0, 2})));
}

TEST(Pbw, DividedDifferenceMultiplyBack) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4);
  AlgebraSpec s{1, 3};
  for (int trial = 0; trial < 30; ++trial) {
    PbwElement f(s);
    for (int k = 0; k < 4; ++k) f += Scalar(static_cast<long>(co(rng))) * X(s, {ex(rng), ex(rng), ex(rng)});
    for (int i = 1; i <= 2; ++i) {
      PbwElement d = divided_difference(f, i);
      std::vector<int> a(3, 0);
      a[static_cast<std::size_t>(i - 1)] = 1;
      a[static_cast<std::size_t>(i)] = -1;
      PbwElement back = mult(d, one(s) - X(s, a));
      EXPECT_EQ(back, f - permute_torus_part(f, Perm::simple(3, i)));
    }
  }
}

PbwElement random_monomial(std::mt19937_64& rng, const AlgebraSpec& s) {
  std::uniform_int_distribution<int> ex(-2, 2), be(0, s.r - 1);
  auto perms = all_perms(s.n);
  std::uniform_int_distribution<std::size_t> pw(0, perms.size() - 1);
  std::vector<int> a(static_cast<std::size_t>(s.n)), b(static_cast<std::size_t>(s.n));
  for (auto& x : a) x = ex(rng);
  for (auto& x : b) x = be(rng);
  return monomial_element(s, a, b, perms[pw(rng)]);
}

TEST(Pbw, AssociativitySeeded) {
  std::mt19937_64 rng(11);
  for (int r : {2, 3}) {
    for (int n : {2, 3}) {
      AlgebraSpec s{r, n};
      for (int trial = 0; trial < 8; ++trial) {
        PbwElement a = random_monomial(rng, s), b = random_monomial(rng, s), c = random_monomial(rng, s);
        EXPECT_EQ(mult(mult(a, b), c), mult(a, mult(b, c)));
      }
    }
  }
}

TEST(Pbw, MatsumotoIndependence) {
  for (int n = 2; n <= 4; ++n) {
    AlgebraSpec s{2, n};
    for (const Perm& w : all_perms(n)) {
      for (const auto& word : all_reduced_words(w)) {
        PbwElement p = one(s);
        for (int i : word) p = mult(p, gen_g(s, i));
        EXPECT_EQ(p, gen_gw(s, w));
      }
    }
  }
}

TEST(Pbw, TriangularityAgainstBruhat) {
  std::mt19937_64 rng(5);
  AlgebraSpec s{2, 3};
  for (int trial = 0; trial < 20; ++trial) {
    PbwElement a = random_monomial(rng, s), b = random_monomial(rng, s);
    Perm wa = a.terms().begin()->first.perm(3), wb = b.terms().begin()->first.perm(3);
    // output permutations lie below the Demazure product of wa and wb
    Perm dem = wa;
    for (int i : reduced_word(wb)) {
      Perm t = dem.right_simple(i);
      if (t.length() > dem.length()) dem = t;
    }
    for (const auto& [m, c] : mult(a, b).terms()) {
      EXPECT_TRUE(bruhat_leq(m.perm(3), dem)) << m.perm(3).str() << " vs " << dem.str();
    }
  }
}

TEST(Pbw, CenterExamples) {
  AlgebraSpec s{2, 2};
  EXPECT_TRUE(is_central(orbit_sum(s, {1, 0}, {0, 0})));
  EXPECT_FALSE(is_central(gen_X(s, 1)));
  EXPECT_NE(mult(gen_g(s, 1), gen_X(s, 1)), mult(gen_X(s, 1), gen_g(s, 1)));
  PbwElement z = orbit_sum(s, {1, 0}, {1, 0});
  EXPECT_EQ(z.size(), 2u);
  EXPECT_TRUE(is_central(z));
}

TEST(Pbw, ExpandLeftCosetsExamples) {
  AlgebraSpec s{2, 2};
  auto a = expand_left_cosets(gen_g(s, 1), {1, 1});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.begin()->first, Perm::simple(2, 1));
  EXPECT_EQ(a.begin()->second, one(s));

  PbwElement x = mult(gen_X(s, 1), gen_g(s, 1));
  auto b = expand_left_cosets(x, {1, 1});
  EXPECT_EQ(b.at(Perm::simple(2, 1)), gen_X(s, 2));
  PbwElement back(s);
  for (const auto& [tau, h] : b) back += mult(gen_gw(s, tau), h);
  EXPECT_EQ(back, x);

  auto c = expand_left_cosets(gen_t(s, 1), {2, 0});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.begin()->first.is_identity());
  EXPECT_EQ(c.begin()->second, gen_t(s, 1));
}

TEST(Pbw, ExpandLeftCosetsRandom) {
  std::mt19937_64 rng(3);
  AlgebraSpec s{2, 3};
  for (const Composition& mu : {Composition{2, 1}, Composition{1, 2}, Composition{1, 1, 1}, Composition{3, 0}}) {
    AlgebraSpec sm{s.r, 3};
    for (int trial = 0; trial < 5; ++trial) {
      PbwElement a = random_monomial(rng, sm) + random_monomial(rng, sm);
      auto ex = expand_left_cosets(a, mu);
      PbwElement back(sm);
      auto reps = coset_reps(mu);
      for (const auto& [tau, h] : ex) {
        EXPECT_NE(std::find(reps.begin(), reps.end(), tau), reps.end());
        for (const auto& [m, c] : h.terms()) EXPECT_TRUE(in_young_subgroup(m.perm(3), mu));
        back += mult(gen_gw(sm, tau), h);
      }
      EXPECT_EQ(back, a);
    }
  }
}

}  // namespace
}  // namespace yhk
