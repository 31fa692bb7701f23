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

#include "yhk/cyclonum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "yhk/errors.hpp"

namespace yhk {

Rational parse_rational(const std::string& text) {
  Rational x;
  if (x.set_str(text, 10) != 0) {
    throw InvalidArgument("malformed rational: '" + text + "'");
  }
  if (x.get_den() == 0) throw InvalidArgument("zero denominator: '" + text + "'");
  x.canonicalize();
  return x;
}

std::string to_string(const Rational& x) { return x.get_str(); }

int euler_phi(int m) {
  if (m <= 0) throw InvalidArgument("euler_phi: order must be positive");
  int result = m;
  int k = m;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

using RPoly = std::vector<Rational>;  // lowest degree first

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of exact long division by a nonzero divisor.
void divmod(const RPoly& a, const RPoly& b, RPoly& quo, RPoly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    Rational c = rem.back() * lead_inv;
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem.pop_back();
    trim(rem);
  }
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RPoly sub(const RPoly& a, const RPoly& b) {
  RPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int m) {
  if (m <= 0) throw InvalidArgument("cyclotomic_polynomial: order must be positive");
  RPoly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto sub_poly = cyclotomic_polynomial(d);
    RPoly divisor(sub_poly.begin(), sub_poly.end());
    RPoly quo, rem;
    divmod(num, divisor, quo, rem);
    num = quo;
  }
  std::vector<long> out;
  out.reserve(num.size());
  for (const auto& c : num) out.push_back(c.get_num().get_si());
  return out;
}

CyclotomicField::CyclotomicField(int m) : order_(m) {
  auto phi = cyclotomic_polynomial(m);
  modulus_.assign(phi.begin(), phi.end());
  const int d = degree();
  powers_.reserve(m);
  RPoly cur(d, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce
    RPoly next(d + 1, Rational(0));
    for (int i = 0; i < d; ++i) next[i + 1] = cur[i];
    Rational top = next[d];
    for (int i = 0; i <= d; ++i) next[i] -= top * modulus_[i];
    next.resize(d);
    cur = std::move(next);
  }
}

const CyclotomicField& CyclotomicField::get(int m) {
  if (m <= 0) throw InvalidArgument("cyclotomic field order must be positive");
  if (euler_phi(m) == 1) m = 1;
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(m);
  if (it == registry.end()) {
    it = registry.emplace(m, std::unique_ptr<CyclotomicField>(new CyclotomicField(m))).first;
  }
  return *it->second;
}

const std::vector<Rational>& CyclotomicField::power(long k) const {
  long idx = k % order_;
  if (idx < 0) idx += order_;
  return powers_[static_cast<std::size_t>(idx)];
}

CycloNum::CycloNum() : field_(&CyclotomicField::get(1)), c_{Rational(0)} {}
CycloNum::CycloNum(long v) : field_(&CyclotomicField::get(1)), c_{Rational(v)} {}
CycloNum::CycloNum(const Rational& v) : field_(&CyclotomicField::get(1)), c_{v} {}

CycloNum::CycloNum(const CyclotomicField& field, std::vector<Rational> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  const auto d = static_cast<std::size_t>(field.degree());
  if (c_.size() > d) {
    // reduce a longer representative modulo Phi_m
    RPoly quo, rem;
    divmod(c_, field.modulus(), quo, rem);
    c_ = std::move(rem);
  }
  c_.resize(d, Rational(0));
  for (auto& x : c_) x.canonicalize();
}

CycloNum CycloNum::root_of_unity(int m, long k) {
  if (m <= 0) throw InvalidArgument("root_of_unity: order must be positive");
  if (m == 2) return CycloNum((k % 2 == 0) ? 1L : -1L);
  const auto& f = CyclotomicField::get(m);
  if (f.order() == 1) return CycloNum(1L);
  CycloNum out;
  out.field_ = &f;
  out.c_ = f.power(k);
  return out;
}

bool CycloNum::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool CycloNum::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

void CycloNum::lift_to(const CyclotomicField& f) {
  if (field_ == &f) return;
  if (is_rational()) {
    Rational v = c_[0];
    c_.assign(static_cast<std::size_t>(f.degree()), Rational(0));
    c_[0] = v;
    field_ = &f;
    return;
  }
  *this = embed(f.order());
}

void CycloNum::unify(CycloNum& o) {
  if (field_ == o.field_) return;
  if (o.is_rational()) {
    o.lift_to(*field_);
  } else if (is_rational()) {
    lift_to(*o.field_);
  } else {
    const int m = std::lcm(field_->order(), o.field_->order());
    const auto& f = CyclotomicField::get(m);
    lift_to(f);
    o.lift_to(f);
  }
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycloNum b = o;
  unify(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (is_rational() && o.is_rational()) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  CycloNum b = o;
  unify(b);
  const auto& f = *field_;
  const int d = f.degree();
  RPoly prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += c_[i] * b.c_[j];
  }
  const auto& phi = f.modulus();
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    Rational top = prod[k];
    for (int i = 0; i <= d; ++i) prod[k - d + i] -= top * phi[i];
  }
  prod.resize(d);
  c_ = std::move(prod);
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in cyclotomic field");
  if (is_rational()) return CycloNum(Rational(1 / c_[0]));
  // extended Euclid: find u with u*a = 1 mod Phi
  RPoly a = c_;
  trim(a);
  RPoly b = field_->modulus();
  RPoly u0{Rational(1)}, u1{};
  while (!(b.empty())) {
    RPoly quo, rem;
    divmod(a, b, quo, rem);
    RPoly u2 = sub(u0, mul(quo, u1));
    a = std::move(b);
    b = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // a is a nonzero constant now
  Rational s = 1 / a[0];
  for (auto& x : u0) x *= s;
  return CycloNum(*field_, u0);
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  CycloNum x = a, y = b;
  x.unify(y);
  return x.c_ == y.c_;
}

bool operator<(const CycloNum& a, const CycloNum& b) {
  if (a.field_->order() != b.field_->order()) return a.field_->order() < b.field_->order();
  return a.c_ < b.c_;
}

CycloNum CycloNum::embed(int target_order) const {
  if (is_rational()) return *this;
  const int m = field_->order();
  if (target_order % m != 0) {
    throw InvalidArgument("cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" +
                          std::to_string(target_order) + ")");
  }
  const int step = target_order / m;
  CycloNum out(0L);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    out += root_of_unity(target_order, static_cast<long>(j) * step) * CycloNum(c_[j]);
  }
  if (out.is_rational()) out.lift_to(CyclotomicField::get(target_order));
  return out;
}

std::size_t CycloNum::hash() const {
  std::size_t h = static_cast<std::size_t>(field_->order()) * 1000003u;
  for (const auto& x : c_) {
    h = h * 31 + static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t()));
    h = h * 31 + static_cast<std::size_t>(mpz_get_ui(x.get_den_mpz_t()));
  }
  return h;
}

std::string CycloNum::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << (c_[j] > 0 ? "+" : "");
    first = false;
    if (j == 0) {
      os << c_[j].get_str();
    } else {
      if (c_[j] == -1) {
        os << "-";
      } else if (c_[j] != 1) {
        os << c_[j].get_str() << "*";
      }
      os << "z" << field_->order();
      if (j > 1) os << "^" << j;
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.str(); }

}  // namespace yhk
