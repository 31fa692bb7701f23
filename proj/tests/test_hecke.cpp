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
#include "yhk/hecke.hpp"

namespace yhk {
namespace {

const Scalar kQQ = Scalar::q() - Scalar::q(-1);

TEST(Hecke, MultExamples) {
  HeckeElement T1 = gen_T(2, 1);
  EXPECT_EQ(hecke_mult(T1, T1), one(hecke_spec(2)) + kQQ * T1);
  EXPECT_EQ(hecke_mult(hecke_mult(T1, gen_Y(2, 1)), T1), gen_Y(2, 2));
  EXPECT_EQ(hecke_mult(gen_Y(2, 1), gen_Y(2, 2)), hecke_mult(gen_Y(2, 2), gen_Y(2, 1)));
}

TEST(Hecke, TableauCounts) {
  EXPECT_EQ(count_standard_tableaux({2, 1}), 2);
  EXPECT_EQ(count_standard_tableaux({3, 2, 1}), 16);
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& p : partitions(n)) {
      EXPECT_EQ(static_cast<long>(standard_tableaux(p).size()), count_standard_tableaux(p)) << partition_str(p);
    }
  }
  EXPECT_EQ(partitions(4).front(), (Partition{4}));
  EXPECT_EQ(partitions(4).size(), 5u);
}

TEST(Hecke, SeminormalExamples) {
  FdModule row = seminormal_simple({2}, 0);
  ASSERT_EQ(row.dim, 1);
  EXPECT_EQ(row.gen_g(1)(0, 0), Scalar::q());
  EXPECT_EQ(row.gen_X(2)(0, 0), Scalar::q(2));
  FdModule col = seminormal_simple({1, 1}, 0);
  EXPECT_EQ(col.gen_g(1)(0, 0), -Scalar::q(-1));
  EXPECT_EQ(seminormal_simple({2, 1}, 0).dim, 2);
  FdModule shifted = seminormal_simple({1}, 3);
  EXPECT_EQ(shifted.gen_X(1)(0, 0), Scalar::q(3));
}

TEST(Hecke, SumOfSquares) {
  mpz_class fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    mpz_class total = 0;
    for (const Partition& p : partitions(n)) {
      FdModule m = seminormal_simple(p, 0);
      total += mpz_class(m.dim) * m.dim;
      if (n <= 4) {
        EXPECT_TRUE(check_module_relations(m).all_pass()) << partition_str(p);
      }
    }
    EXPECT_EQ(total, fact) << "n=" << n;
  }
}

TEST(Hecke, EvPullback) {
  WeightDatum lam = WeightDatum::parse_charges("0");
  FdModule triv = ev_pullback(seminormal_simple({1}, 0), lam);
  EXPECT_EQ(triv.gen_X(1)(0, 0), Scalar(1L));
  EXPECT_THROW(ev_pullback(seminormal_simple({1}, 1), lam), CheckFailure);
  FdModule zero = FdModule::zero(1, 2);
  EXPECT_EQ(ev_pullback(zero, lam).dim, 0);
}

TEST(Hecke, DeltaAndE) {
  FdModule m = seminormal_simple({2, 1}, 0);
  EXPECT_EQ(e_a(m, 2).dim, 1);
  EXPECT_EQ(e_a(m, -2).dim, 1);
  EXPECT_EQ(e_a(m, 0).dim, 0);
  FdModule d = delta_a(m, 2);
  EXPECT_EQ(d.blocks, (Composition{2, 1}));
  EXPECT_TRUE(check_module_relations(d).all_pass());
  // dim Res M = sum_a dim e_a M
  for (const Partition& p : partitions(4)) {
    FdModule s = seminormal_simple(p, 0);
    int total = 0;
    for (const auto& [a, mult] : eigen_exponents(s.gen_X(4))) total += e_a(s, a).dim;
    EXPECT_EQ(total, s.dim);
  }
}

}  // namespace
}  // namespace yhk
