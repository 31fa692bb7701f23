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

#ifndef YHK_HECKE_HPP
#define YHK_HECKE_HPP

#include <string>
#include <utility>
#include <vector>

#include "yhk/module.hpp"
#include "yhk/pbw.hpp"
#include "yhk/quotient.hpp"

namespace yhk {

// The affine Hecke algebra is the r = 1 case of the affine Yokonuma-Hecke
// algebra: e_i = 1, T_i = g_i and Y_j = X_j. Elements in normal form
// Y^gamma T_w are PbwElements with r = 1.
using HeckeElement = PbwElement;

AlgebraSpec hecke_spec(int n);
HeckeElement gen_T(int n, int i);
HeckeElement gen_Y(int n, int j, int power = 1);
HeckeElement hecke_mult(const HeckeElement& a, const HeckeElement& b);

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
std::string partition_str(const Partition& p);

/// A standard tableau as the (row, col) box of each entry 1..n, 0-based.
using Tableau = std::vector<std::pair<int, int>>;

/// Standard tableaux of a shape, in lexicographic order of the row of each
/// entry.
std::vector<Tableau> standard_tableaux(const Partition& shape);
long count_standard_tableaux(const Partition& shape);

/// Seminormal simple module of the affine Hecke algebra on the standard
/// tableaux of `shape`, with Y_j acting on a tableau by q^(charge + 2 c), c
/// the content (col - row) of the box holding j. Requires generic q.
FdModule seminormal_simple(const Partition& shape, int charge);

/// Returns M after checking that f_lambda(Y_1) acts as zero; throws
/// CheckFailure otherwise.
FdModule ev_pullback(const FdModule& M, const WeightDatum& lam);

/// The generalized q^a-eigenspace of Y_n as a module over the parabolic
/// subalgebra for (n-1, 1).
FdModule delta_a(const FdModule& M, int a);
/// delta_a restricted to the first n-1 strands.
FdModule e_a(const FdModule& M, int a);

/// Forgets the last strand: keeps t, X for j < n and g_i for i < n-1.
FdModule drop_last_strand(const FdModule& M);

}  // namespace yhk

#endif  // YHK_HECKE_HPP
