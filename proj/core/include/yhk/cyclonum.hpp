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

#ifndef YHK_CYCLONUM_HPP
#define YHK_CYCLONUM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace yhk {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

/// The m-th cyclotomic field Q(zeta_m), stored as Q[x]/Phi_m(x).
///
/// Fields are interned: get(m) always returns the same object, and fields of
/// degree one (m = 1, 2) are all represented by get(1). Instances are never
/// destroyed or mutated after construction.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int m);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

  /// Coefficients of Phi_m, lowest degree first (monic, integral).
  const std::vector<Rational>& modulus() const { return modulus_; }

  /// zeta_m^k reduced modulo Phi_m, as a coefficient vector of length degree().
  const std::vector<Rational>& power(long k) const;

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

 private:
  explicit CyclotomicField(int m);

  int order_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Euler's totient.
int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int m);

/// Element of Q(zeta_m) in canonical (fully reduced) coordinates.
///
/// Elements of degree-one fields behave as plain rationals and mix freely
/// with elements of any other field.
class CycloNum {
 public:
  CycloNum();  // zero in Q
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  CycloNum(const Rational& v);  // NOLINT(google-explicit-constructor)
  CycloNum(const CyclotomicField& field, std::vector<Rational> coeffs);

  /// zeta_m^k.
  static CycloNum root_of_unity(int m, long k);

  const CyclotomicField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return field_->degree() == 1; }
  /// Valid when is_rational().
  const Rational& rational() const { return c_[0]; }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  /// Throws DomainError on zero.
  CycloNum inverse() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) {
    return !(a == b);
  }

  /// Image under the embedding Q(zeta_m) -> Q(zeta_target), zeta_m -> zeta_target^(target/m).
  CycloNum embed(int target_order) const;

  /// Total order on coordinates; only used to make output deterministic.
  friend bool operator<(const CycloNum& a, const CycloNum& b);

  std::size_t hash() const;
  std::string str() const;

 private:
  void lift_to(const CyclotomicField& f);
  void unify(CycloNum& o);

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

}  // namespace yhk

#endif  // YHK_CYCLONUM_HPP
