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

#ifndef YHK_QUOTIENT_HPP
#define YHK_QUOTIENT_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "yhk/module.hpp"
#include "yhk/pbw.hpp"

namespace yhk {

/// Multiplicities lambda_i of the residues i; f_lambda = prod (X_1 - q^i)^lambda_i.
struct WeightDatum {
  std::map<int, int> lambda;

  /// Charges "0,1" give lambda_0 = lambda_1 = 1; repeats add up.
  static WeightDatum from_charges(const std::vector<int>& charges);
  static WeightDatum parse_charges(const std::string& text);

  int d() const;
  /// Residues with multiplicity, ascending.
  std::vector<int> charges() const;
  void validate() const;
  std::string str() const;

  friend bool operator==(const WeightDatum& a, const WeightDatum& b) { return a.lambda == b.lambda; }
};

/// Coefficients c_0..c_d (lowest first, c_d = 1) of prod (x - q^i)^lambda_i.
std::vector<Scalar> f_lambda_coeffs(const WeightDatum& lam);

/// f_lambda(X_1) as an element of the affine algebra.
PbwElement f_lambda(const AlgebraSpec& s, const WeightDatum& lam);

/// The cyclotomic quotient by the two-sided ideal generated by f_lambda(X_1),
/// with canonical representatives in the exponent window 0 <= alpha_j < d.
///
/// Reduction memoizes X_j^{+-1} times window monomials. The cache is not
/// synchronized; use one instance per thread.
class CyclotomicQuotient {
 public:
  CyclotomicQuotient(const AlgebraSpec& s, WeightDatum lam);

  const AlgebraSpec& spec() const { return spec_; }
  const WeightDatum& weight() const { return lam_; }
  int d() const { return d_; }

  bool in_window(const PbwMonomial& m) const;
  bool in_window(const PbwElement& a) const;

  /// The canonical representative of a modulo the ideal.
  PbwElement reduce(const PbwElement& a) const;

  /// X_j^{sign} * b for b in the window, reduced.
  PbwElement mul_X(int j, int sign, const PbwElement& b) const;

  /// The window basis X^alpha t^beta g_w in PBW order.
  std::vector<PbwMonomial> basis() const;
  long dimension() const;

 private:
  const PbwElement& mul_X_monomial(int j, int sign, const PbwMonomial& m) const;

  AlgebraSpec spec_;
  WeightDatum lam_;
  int d_;
  std::vector<Scalar> coeffs_;
  mutable std::map<std::tuple<int, int, PbwMonomial>, PbwElement> memo_;
};

PbwElement reduce(const PbwElement& a, const WeightDatum& lam);

/// Left regular representation of the quotient on its window basis. Throws
/// ResourceLimit above max_dim and CheckFailure if the action leaves the span.
FdModule regular_representation(const WeightDatum& lam, int r, int n, long max_dim = 4000);

}  // namespace yhk

#endif  // YHK_QUOTIENT_HPP
