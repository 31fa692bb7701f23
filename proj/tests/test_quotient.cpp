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
#include "yhk/quotient.hpp"

namespace yhk {
namespace {

const Scalar kQQ = Scalar::q() - Scalar::q(-1);

TEST(Quotient, FLambdaExamples) {
  AlgebraSpec s{1, 1};
  PbwElement X1 = gen_X(s, 1);
  EXPECT_EQ(f_lambda(s, WeightDatum::parse_charges("0")), X1 - one(s));
  EXPECT_EQ(f_lambda(s, WeightDatum::parse_charges("0,1")),
            mult(X1, X1) - (Scalar(1L) + Scalar::q()) * X1 + scalar_element(s, Scalar::q()));
  PbwElement xq = X1 - scalar_element(s, Scalar::q());
  EXPECT_EQ(f_lambda(s, WeightDatum::parse_charges("1,1")), mult(xq, xq));
}

TEST(Quotient, WeightDatumParsing) {
  WeightDatum w = WeightDatum::parse_charges("1,-2,1");
  EXPECT_EQ(w.d(), 3);
  EXPECT_EQ(w.charges(), (std::vector<int>{-2, 1, 1}));
  EXPECT_THROW(WeightDatum::parse_charges(""), InvalidArgument);
  EXPECT_THROW(WeightDatum::parse_charges("a"), InvalidArgument);
}

TEST(Quotient, ReduceExamples) {
  AlgebraSpec s1{2, 2};
  EXPECT_EQ(reduce(gen_X(s1, 1), WeightDatum::parse_charges("0")), one(s1));
  EXPECT_EQ(reduce(gen_X(s1, 1, 2), WeightDatum::parse_charges("0,1")),
            (Scalar(1L) + Scalar::q()) * gen_X(s1, 1) - scalar_element(s1, Scalar::q()));
  AlgebraSpec h{1, 2};
  EXPECT_EQ(reduce(gen_X(h, 2), WeightDatum::parse_charges("0")), one(h) + kQQ * gen_g(h, 1));
}

TEST(Quotient, FLambdaReducesToZero) {
  for (const char* ch : {"0", "0,1", "2,2", "-1,0,1"}) {
    WeightDatum lam = WeightDatum::parse_charges(ch);
    AlgebraSpec s{2, 2};
    EXPECT_TRUE(reduce(f_lambda(s, lam), lam).is_zero()) << ch;
  }
}

TEST(Quotient, RingMapAndIdempotence) {
  WeightDatum lam = WeightDatum::parse_charges("0,1");
  AlgebraSpec s{2, 2};
  CyclotomicQuotient quo(s, lam);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ex(-1, 2), bt(0, 1);
  auto random_element = [&] {
    std::vector<Perm> perms = all_perms(2);
    return monomial_element(s, {ex(rng), ex(rng)}, {bt(rng), bt(rng)}, perms[static_cast<std::size_t>(bt(rng))]);
  };
  for (int trial = 0; trial < 10; ++trial) {
    PbwElement a = random_element(), b = random_element();
    PbwElement ra = quo.reduce(a), rb = quo.reduce(b);
    EXPECT_TRUE(quo.in_window(ra));
    EXPECT_EQ(quo.reduce(ra), ra);
    EXPECT_EQ(quo.reduce(mult(a, b)), quo.reduce(mult(ra, rb)));
  }
}

TEST(Quotient, RegularRepresentationDimensions) {
  struct Case {
    const char* charges;
    int r, n;
    int dim;
  };
  for (const Case& c : {Case{"0", 1, 2, 2}, Case{"0", 2, 2, 8}, Case{"0,1", 2, 2, 32}, Case{"0", 3, 2, 18},
                        Case{"0", 2, 3, 48}}) {
    FdModule m = regular_representation(WeightDatum::parse_charges(c.charges), c.r, c.n);
    EXPECT_EQ(m.dim, c.dim);
    EXPECT_TRUE(check_module_relations(m).all_pass()) << c.charges << " r=" << c.r << " n=" << c.n;
  }
  EXPECT_THROW(regular_representation(WeightDatum::parse_charges("0"), 2, 3, 10), ResourceLimit);
}

}  // namespace
}  // namespace yhk
