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

#include "yhk/errors.hpp"
#include "yhk/hecke.hpp"
#include "yhk/module.hpp"

namespace yhk {
namespace {

Matrix from_ints(int rows, int cols, std::initializer_list<long> v) {
  Matrix m(rows, cols);
  auto it = v.begin();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Scalar(*it++);
  }
  return m;
}

TEST(Matrix, RankKernelInverse) {
  Matrix a = from_ints(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  EXPECT_EQ(rank(a), 2);
  Matrix k = kernel(a);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_TRUE((a * k).is_zero());
  Matrix b = from_ints(2, 2, {2, 1, 1, 1});
  EXPECT_TRUE((b * inverse(b)).is_identity());
  EXPECT_EQ(power(b, 3), b * b * b);
}

TEST(Matrix, SubspaceCoordinates) {
  Matrix cols = from_ints(3, 2, {1, 0, 1, 1, 0, 1});
  Subspace s = column_space(cols);
  EXPECT_EQ(s.dim(), 2);
  Matrix v = from_ints(3, 1, {2, 5, 3});
  Matrix c = coordinates(s, v);
  EXPECT_EQ(s.basis * c, v);
  EXPECT_THROW(coordinates(s, from_ints(3, 1, {1, 0, 0})), CheckFailure);
}

TEST(Matrix, TraceOfProductMatchesProduct) {
  Matrix a = from_ints(2, 3, {1, 2, 3, 4, 5, 6});
  Matrix b = from_ints(3, 2, {1, 0, 2, 1, 0, 3});
  EXPECT_EQ(trace_of_product(a, b), (a * b).trace());
}

TEST(Module, SeminormalPassesRelations) {
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& p : partitions(n)) {
      FdModule m = seminormal_simple(p, 0);
      EXPECT_TRUE(check_module_relations(m).all_pass()) << partition_str(p);
    }
  }
}

TEST(Module, BrokenMatrixIsCaught) {
  FdModule m = seminormal_simple({2, 1}, 0);
  m.g[1] = m.g[1] + Matrix::identity(m.dim);
  EXPECT_FALSE(check_module_relations(m).all_pass());
}

TEST(Module, EigenExponents) {
  Matrix d = Matrix::diagonal({Scalar::q(2), Scalar::q(-1), Scalar::q(2)});
  auto ev = eigen_exponents(d);
  EXPECT_EQ(ev, (std::vector<std::pair<int, int>>{{-1, 1}, {2, 2}}));
  EXPECT_EQ(generalized_eigenspace(d, Scalar::q(2)).dim(), 2);
  EXPECT_EQ(generalized_eigenspace(d, Scalar::q(5)).dim(), 0);
  // a Jordan block
  Matrix j = from_ints(2, 2, {1, 1, 0, 1});
  EXPECT_EQ(eigen_exponents(j), (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_THROW(eigen_exponents(from_ints(1, 1, {2})), DomainError);
}

TEST(Module, RestrictAndDirectSum) {
  FdModule a = seminormal_simple({2}, 0);
  FdModule b = seminormal_simple({1, 1}, 0);
  FdModule s = direct_sum(a, b);
  EXPECT_EQ(s.dim, 2);
  EXPECT_TRUE(check_module_relations(s).all_pass());
  auto split = split_by_eigenvalue(s.gen_X(2), full_space(2));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split.at(2).dim(), 1);
  EXPECT_EQ(split.at(-2).dim(), 1);
  Subspace first = column_space(from_ints(2, 1, {1, 0}));
  FdModule sub = restrict_to(s, first);
  EXPECT_EQ(trace_invariants(sub), trace_invariants(a));
  Subspace mixed = column_space(from_ints(2, 1, {1, 1}));
  EXPECT_THROW(restrict_to(s, mixed), CheckFailure);
}

TEST(Module, TraceInvariantsSeparateShapes) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<TraceInvariants> seen;
    for (const Partition& p : partitions(n)) {
      TraceInvariants inv = trace_invariants(seminormal_simple(p, 0));
      for (const auto& other : seen) EXPECT_NE(inv, other) << partition_str(p);
      seen.push_back(inv);
    }
  }
}

}  // namespace
}  // namespace yhk
