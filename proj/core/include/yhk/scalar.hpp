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

#ifndef YHK_SCALAR_HPP
#define YHK_SCALAR_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "yhk/cyclonum.hpp"
#include "yhk/laurent.hpp"

namespace yhk {

/// Element of the rational function field Q(zeta)(q), kept as a reduced
/// fraction num/den of Laurent polynomials.
///
/// The denominator has lowest exponent 0 and leading coefficient 1, and
/// shares no nonunit factor with the numerator, so equal values have
/// identical representations.
class Scalar {
 public:
  Scalar() : den_(1L) {}
  Scalar(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(const CycloNum& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly num, LaurentPoly den);

  /// q^k.
  static Scalar q(int k = 1) { return Scalar(LaurentPoly::monomial(k)); }
  static Scalar rational(long p, long d);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the denominator is 1.
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// Throws DomainError on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Value at q = x. Throws DomainError at a pole.
  CycloNum evaluate(const CycloNum& x) const;

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
  std::string str() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Evaluation data for q: either generic (q stays an indeterminate) or a
/// primitive e-th root of unity inside Q(zeta_m), m = lcm(r, e).
struct Specialization {
  int e = 0;  // 0 means generic
  int r = 1;

  static Specialization generic(int r = 1) { return {0, r}; }
  static Specialization root_of_unity(int e, int r = 1);

  bool is_generic() const { return e == 0; }
  /// The order m of the ambient cyclotomic field.
  int field_order() const;
  /// The image of q.
  CycloNum q_value() const;
};

/// Image of a under q -> q_value(); throws DomainError at a pole and
/// InvalidArgument in generic mode.
CycloNum specialize(const Scalar& a, const Specialization& s);

}  // namespace yhk

#endif  // YHK_SCALAR_HPP
