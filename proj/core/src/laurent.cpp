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

#include "yhk/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "yhk/errors.hpp"

namespace yhk {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const CycloNum& c) {
  if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(int exp, const CycloNum& c) {
  LaurentPoly p(c);
  p.low_ = p.c_.empty() ? 0 : exp;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<CycloNum> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0].is_one(); }

CycloNum LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < low_ || exp > high_degree()) return CycloNum();
  return c_[static_cast<std::size_t>(exp - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), CycloNum());
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.c_.empty() || b.c_.empty()) return out;
  out.low_ = a.low_ + b.low_;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, CycloNum());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const CycloNum& c) {
  if (c.is_zero()) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.c_.empty()) p.low_ += k;
  return p;
}

CycloNum LaurentPoly::evaluate(const CycloNum& x) const {
  if (c_.empty()) return CycloNum();
  CycloNum acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  if (low_ == 0) return acc;
  if (x.is_zero()) {
    if (low_ < 0) throw DomainError("Laurent polynomial evaluated at zero");
    return CycloNum();
  }
  CycloNum base = low_ > 0 ? x : x.inverse();
  for (int i = 0; i < std::abs(low_); ++i) acc *= base;
  return acc;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = static_cast<std::size_t>(low_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& c : c_) h = (h ^ c.hash()) * 1099511628211ULL;
  return h;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const CycloNum& c = c_[i];
    if (c.is_zero()) continue;
    const int e = low_ + static_cast<int>(i);
    std::string cs = c.str();
    const bool compound = !c.is_rational() && cs.find_first_of("+-", 1) != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    if (!first) {
      if (cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (e == 0) {
      os << cs;
      continue;
    }
    if (cs == "-1") {
      os << "-";
    } else if (cs != "1") {
      os << cs << "*";
    }
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.low_degree() < 0 || b.low_degree() < 0) {
    throw InvalidArgument("poly_divmod expects nonnegative exponents");
  }
  const int db = b.high_degree();
  const CycloNum inv = b.leading().inverse();
  std::vector<CycloNum> r(static_cast<std::size_t>(std::max(a.high_degree(), 0) + 1));
  for (int e = a.low_degree(); !a.is_zero() && e <= a.high_degree(); ++e) {
    r[static_cast<std::size_t>(e)] = a.coeff(e);
  }
  std::vector<CycloNum> quo;
  if (!a.is_zero() && a.high_degree() >= db) quo.resize(static_cast<std::size_t>(a.high_degree() - db + 1));
  const auto& bc = b.coeffs();
  const int bl = b.low_degree();
  for (int k = a.is_zero() ? -1 : a.high_degree(); k >= db; --k) {
    const CycloNum top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const CycloNum f = top * inv;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (std::size_t i = 0; i < bc.size(); ++i) {
      r[static_cast<std::size_t>(k - db + bl) + i] -= f * bc[i];
    }
  }
  rem = LaurentPoly::from_coeffs(0, std::move(r));
  return LaurentPoly::from_coeffs(0, std::move(quo));
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly rem;
    poly_divmod(a, b, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  a *= a.leading().inverse();
  return a;
}

}  // namespace yhk
