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
#include "yhk/scalar.hpp"

namespace yhk {
namespace {

TEST(CycloNum, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(12), 4);
}

TEST(CycloNum, RootsOfUnity) {
  for (int m : {3, 4, 5, 6, 12}) {
    CycloNum z = CycloNum::root_of_unity(m, 1);
    CycloNum p(1L);
    for (int i = 0; i < m; ++i) p *= z;
    EXPECT_TRUE(p.is_one()) << m;
  }
  for (int p : {3, 5, 7}) {
    CycloNum sum;
    for (int k = 0; k < p; ++k) sum += CycloNum::root_of_unity(p, k);
    EXPECT_TRUE(sum.is_zero());
  }
  EXPECT_EQ(CycloNum::root_of_unity(2, 1), CycloNum(-1L));
  EXPECT_EQ(CycloNum::root_of_unity(6, 3), CycloNum(-1L));
}

TEST(CycloNum, InverseAndEmbedding) {
  CycloNum z = CycloNum::root_of_unity(5, 1);
  CycloNum a = z * z + CycloNum(3L) * z - CycloNum(Rational(1, 2));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW(CycloNum().inverse(), DomainError);
  CycloNum w = CycloNum::root_of_unity(3, 1);
  EXPECT_EQ(w.embed(6), CycloNum::root_of_unity(6, 2));
  // mixing fields goes through the compositum
  CycloNum i = CycloNum::root_of_unity(4, 1);
  EXPECT_EQ((w * i).field().order(), 12);
  EXPECT_EQ(w * i, CycloNum::root_of_unity(12, 7));
}

TEST(Scalar, SpecExamples) {
  Scalar q = Scalar::q();
  Scalar qi = Scalar::q(-1);
  EXPECT_EQ((q - qi) * (q + qi), Scalar::q(2) - Scalar::q(-2));
  EXPECT_EQ(q.inverse(), qi);
  Scalar frac = (Scalar::q(2) - Scalar(1L)) / (q - Scalar(1L));
  EXPECT_EQ(frac, q + Scalar(1L));
  EXPECT_TRUE(frac.is_laurent());
  EXPECT_THROW(Scalar().inverse(), DomainError);
}

TEST(Scalar, CanonicalDenominator) {
  Scalar q = Scalar::q();
  Scalar a = Scalar(1L) / (Scalar(2L) * q * q - Scalar(2L) * q);
  // 1/(2q^2 - 2q) = (1/2) q^-1 / (q - 1)
  EXPECT_EQ(a.den(), LaurentPoly::monomial(1) - LaurentPoly(1L));
  EXPECT_EQ(a.num(), LaurentPoly::monomial(-1, CycloNum(Rational(1, 2))));
}

Scalar random_scalar(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), terms(1, 3);
  auto poly = [&]() {
    LaurentPoly p;
    int k = terms(rng);
    for (int i = 0; i < k; ++i) {
      CycloNum c(static_cast<long>(coef(rng)));
      if (r > 2) c += CycloNum::root_of_unity(r, coef(rng)) * CycloNum(static_cast<long>(coef(rng)));
      p += LaurentPoly::monomial(expo(rng), c);
    }
    return p;
  };
  LaurentPoly d;
  while (d.is_zero()) d = poly();
  return Scalar(poly(), d);
}

TEST(Scalar, FieldAxiomsSeeded) {
  std::mt19937_64 rng(20261017);
  for (int r : {1, 3, 4}) {
    for (int trial = 0; trial < 25; ++trial) {
      Scalar a = random_scalar(rng, r), b = random_scalar(rng, r), c = random_scalar(rng, r);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
      }
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Specialization, Examples) {
  Scalar q = Scalar::q(), qi = Scalar::q(-1);
  EXPECT_EQ(specialize(q + qi, Specialization::root_of_unity(2)), CycloNum(-2L));
  EXPECT_TRUE(specialize(q - qi, Specialization::root_of_unity(1)).is_zero());
  EXPECT_THROW(specialize(Scalar(1L) / (q - Scalar(1L)), Specialization::root_of_unity(1)), DomainError);
  // q -> zeta_3 inside Q(zeta_6) when r = 2
  CycloNum v = specialize(q, Specialization::root_of_unity(3, 2));
  EXPECT_EQ(v, CycloNum::root_of_unity(3, 1));
  EXPECT_EQ(v.field().order(), 6);
}

}  // namespace
}  // namespace yhk
