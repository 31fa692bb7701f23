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

#include "yhk/scalar.hpp"

#include <numeric>
#include <ostream>

#include "yhk/errors.hpp"

namespace yhk {

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Scalar Scalar::rational(long p, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational v(p, d);
  v.canonicalize();
  return Scalar(CycloNum(v));
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DomainError("division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ = num_.shifted(-den_.low_degree());
    num_ *= den_.leading().inverse();
    den_ = LaurentPoly(1L);
    return;
  }
  const int dl = den_.low_degree();
  LaurentPoly d = den_.shifted(-dl);
  const int nl = num_.low_degree() - dl;
  LaurentPoly p = num_.shifted(-num_.low_degree());
  LaurentPoly g = poly_gcd(p, d);
  if (g.high_degree() > 0) {
    LaurentPoly rem;
    p = poly_divmod(p, g, rem);
    d = poly_divmod(d, g, rem);
  }
  const CycloNum lc_inv = d.leading().inverse();
  p *= lc_inv;
  d *= lc_inv;
  num_ = p.shifted(nl);
  den_ = std::move(d);
  if (den_.is_monomial()) normalize();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1L);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return *this;
  }
  if (o.den_.is_one()) {
    if (!den_.is_one()) normalize();
    return *this;
  }
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

CycloNum Scalar::evaluate(const CycloNum& x) const {
  CycloNum d = den_.evaluate(x);
  if (d.is_zero()) throw DomainError("pole: denominator " + den_.str() + " vanishes");
  return num_.evaluate(x) / d;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const LaurentPoly& p) {
    std::string s = p.str();
    return p.is_monomial() ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Specialization Specialization::root_of_unity(int e, int r) {
  if (e <= 0) throw InvalidArgument("root-of-unity order must be positive");
  if (r <= 0) throw InvalidArgument("r must be positive");
  return {e, r};
}

int Specialization::field_order() const { return is_generic() ? r : std::lcm(r, e); }

CycloNum Specialization::q_value() const {
  if (is_generic()) throw InvalidArgument("generic specialization has no value for q");
  const int m = field_order();
  return CycloNum::root_of_unity(m, m / e);
}

CycloNum specialize(const Scalar& a, const Specialization& s) {
  CycloNum v = a.evaluate(s.q_value());
  return v.is_rational() ? v : v.embed(s.field_order());
}

}  // namespace yhk
