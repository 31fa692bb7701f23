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

#ifndef YHK_LAURENT_HPP
#define YHK_LAURENT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "yhk/cyclonum.hpp"

namespace yhk {

/// Laurent polynomial in q with cyclotomic coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const CycloNum& c);  // NOLINT(google-explicit-constructor)

  /// c * q^exp.
  static LaurentPoly monomial(int exp, const CycloNum& c = CycloNum(1L));
  /// Builds from coefficients of q^low, q^(low+1), ...
  static LaurentPoly from_coeffs(int low, std::vector<CycloNum> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return c_.size() == 1; }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<CycloNum>& coeffs() const { return c_; }
  CycloNum coeff(int exp) const;
  const CycloNum& leading() const { return c_.back(); }
  const CycloNum& trailing() const { return c_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CycloNum& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;

  /// Value at q = x; throws DomainError when x = 0 and negative powers occur.
  CycloNum evaluate(const CycloNum& x) const;

  std::size_t hash() const;
  std::string str() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<CycloNum> c_;
};

/// Polynomial division for Laurent polynomials with low_degree() >= 0.
/// Returns quotient and stores the remainder in rem.
LaurentPoly poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& rem);

/// Monic gcd of two polynomials (nonnegative exponents) over the cyclotomic field.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace yhk

#endif  // YHK_LAURENT_HPP
