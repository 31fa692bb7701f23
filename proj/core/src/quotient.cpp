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

#include "yhk/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "yhk/errors.hpp"

namespace yhk {

WeightDatum WeightDatum::from_charges(const std::vector<int>& charges) {
  WeightDatum w;
  for (int c : charges) ++w.lambda[c];
  w.validate();
  return w;
}

WeightDatum WeightDatum::parse_charges(const std::string& text) {
  std::vector<int> charges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      charges.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidArgument("bad charge '" + item + "'");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad charge '" + item + "'");
    }
  }
  return from_charges(charges);
}

int WeightDatum::d() const {
  int s = 0;
  for (const auto& [i, m] : lambda) s += m;
  return s;
}

std::vector<int> WeightDatum::charges() const {
  std::vector<int> out;
  for (const auto& [i, m] : lambda) out.insert(out.end(), static_cast<std::size_t>(m), i);
  return out;
}

void WeightDatum::validate() const {
  for (const auto& [i, m] : lambda) {
    if (m < 0) throw InvalidArgument("negative multiplicity in weight datum");
  }
  if (d() < 1) throw InvalidArgument("weight datum must have |lambda| >= 1");
}

std::string WeightDatum::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, m] : lambda) {
    if (m == 0) continue;
    s += (first ? "" : ",") + std::to_string(i) + ":" + std::to_string(m);
    first = false;
  }
  return s + "}";
}

std::vector<Scalar> f_lambda_coeffs(const WeightDatum& lam) {
  lam.validate();
  std::vector<Scalar> c{Scalar(1L)};
  for (int i : lam.charges()) {
    // multiply by (x - q^i)
    std::vector<Scalar> next(c.size() + 1, Scalar(0L));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= Scalar::q(i) * c[k];
    }
    c = std::move(next);
  }
  return c;
}

PbwElement f_lambda(const AlgebraSpec& s, const WeightDatum& lam) {
  PbwElement out(s);
  const std::vector<Scalar> c = f_lambda_coeffs(lam);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out += c[k] * gen_X(s, 1, static_cast<int>(k));
  }
  return out;
}

CyclotomicQuotient::CyclotomicQuotient(const AlgebraSpec& s, WeightDatum lam)
    : spec_(s), lam_(std::move(lam)), d_(lam_.d()), coeffs_(f_lambda_coeffs(lam_)) {
  spec_.validate();
}

bool CyclotomicQuotient::in_window(const PbwMonomial& m) const {
  for (int j = 0; j < spec_.n; ++j) {
    const int a = m.alpha[static_cast<std::size_t>(j)];
    if (a < 0 || a >= d_) return false;
  }
  return true;
}

bool CyclotomicQuotient::in_window(const PbwElement& a) const {
  return std::all_of(a.terms().begin(), a.terms().end(), [&](const auto& kv) { return in_window(kv.first); });
}

namespace {

PbwElement left_mult_g_inv(int i, const PbwElement& b) {
  const Scalar qq = Scalar::q() - Scalar::q(-1);
  return left_mult_g(i, b) - qq * mult(gen_e(b.spec(), i), b);
}

}  // namespace

const PbwElement& CyclotomicQuotient::mul_X_monomial(int j, int sign, const PbwMonomial& m) const {
  auto key = std::make_tuple(j, sign, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (memo_.size() > spec_.max_support) throw ResourceLimit("reduction cache exceeds the support guard");

  PbwElement out(spec_);
  if (j == 1) {
    const int a = m.alpha[0];
    if (sign > 0 && a + 1 < d_) {
      PbwMonomial m2 = m;
      ++m2.alpha[0];
      out.add_term(m2, Scalar(1L));
    } else if (sign > 0) {
      // X_1^d = -(c_0 + c_1 X_1 + ... + c_{d-1} X_1^{d-1})
      for (int k = 0; k < d_; ++k) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        PbwMonomial m2 = m;
        m2.alpha[0] = static_cast<std::int8_t>(k);
        out.add_term(m2, -c);
      }
    } else if (a > 0) {
      PbwMonomial m2 = m;
      --m2.alpha[0];
      out.add_term(m2, Scalar(1L));
    } else {
      // X_1^{-1} = -(c_1 + c_2 X_1 + ... + c_d X_1^{d-1}) / c_0
      const Scalar inv0 = coeffs_[0].inverse();
      for (int k = 0; k < d_; ++k) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(k + 1)];
        if (c.is_zero()) continue;
        PbwMonomial m2 = m;
        m2.alpha[0] = static_cast<std::int8_t>(k);
        out.add_term(m2, -(c * inv0));
      }
    }
  } else {
    // X_j^{+-1} = g_{j-1}^{+-1} X_{j-1}^{+-1} g_{j-1}^{+-1}
    PbwElement b(spec_);
    b.add_term(m, Scalar(1L));
    auto lg = [&](const PbwElement& x) { return sign > 0 ? left_mult_g(j - 1, x) : left_mult_g_inv(j - 1, x); };
    out = lg(mul_X(j - 1, sign, lg(b)));
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

PbwElement CyclotomicQuotient::mul_X(int j, int sign, const PbwElement& b) const {
  PbwElement out(spec_);
  for (const auto& [m, c] : b.terms()) {
    PbwElement part = mul_X_monomial(j, sign, m);
    part *= c;
    out += part;
  }
  return out;
}

PbwElement CyclotomicQuotient::reduce(const PbwElement& a) const {
  if (!(a.spec() == spec_)) throw InvalidArgument("element and quotient ranks differ");
  PbwElement out(spec_);
  for (const auto& [m, c] : a.sorted_terms()) {
    if (in_window(m)) {
      out.add_term(m, c);
      continue;
    }
    PbwMonomial base = m;
    base.alpha.fill(0);
    PbwElement cur(spec_);
    cur.add_term(base, c);
    for (int j = 1; j <= spec_.n; ++j) {
      const int e = m.alpha[static_cast<std::size_t>(j - 1)];
      for (int s = 0; s < std::abs(e); ++s) cur = mul_X(j, e > 0 ? 1 : -1, cur);
    }
    out += cur;
  }
  if (!in_window(out)) throw CheckFailure("reduction left the exponent window");
  return out;
}

std::vector<PbwMonomial> CyclotomicQuotient::basis() const {
  const int n = spec_.n;
  std::vector<PbwMonomial> out;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0), beta(static_cast<std::size_t>(n), 0);
  for (const Perm& w : all_perms(n)) {
    std::fill(alpha.begin(), alpha.end(), 0);
    for (;;) {
      std::fill(beta.begin(), beta.end(), 0);
      for (;;) {
        PbwMonomial m = PbwMonomial::identity(n);
        for (int j = 0; j < n; ++j) {
          m.alpha[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(alpha[static_cast<std::size_t>(j)]);
          m.beta[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(beta[static_cast<std::size_t>(j)]);
        }
        m.set_perm(w);
        out.push_back(m);
        int k = 0;
        while (k < n && ++beta[static_cast<std::size_t>(k)] == spec_.r) beta[static_cast<std::size_t>(k++)] = 0;
        if (k == n) break;
      }
      int k = 0;
      while (k < n && ++alpha[static_cast<std::size_t>(k)] == d_) alpha[static_cast<std::size_t>(k++)] = 0;
      if (k == n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long CyclotomicQuotient::dimension() const {
  long dim = 1;
  for (int j = 1; j <= spec_.n; ++j) dim *= static_cast<long>(d_) * spec_.r * j;
  return dim;
}

PbwElement reduce(const PbwElement& a, const WeightDatum& lam) {
  return CyclotomicQuotient(a.spec(), lam).reduce(a);
}

FdModule regular_representation(const WeightDatum& lam, int r, int n, long max_dim) {
  AlgebraSpec s{r, n};
  CyclotomicQuotient Q(s, lam);
  if (Q.dimension() > max_dim) {
    throw ResourceLimit("quotient dimension " + std::to_string(Q.dimension()) + " exceeds the guard");
  }
  const std::vector<PbwMonomial> basis = Q.basis();
  const int dim = static_cast<int>(basis.size());
  std::map<PbwMonomial, int> index;
  for (int k = 0; k < dim; ++k) index.emplace(basis[static_cast<std::size_t>(k)], k);

  auto matrix_of = [&](auto&& apply) {
    Matrix m(dim, dim);
    for (int col = 0; col < dim; ++col) {
      PbwElement b(s);
      b.add_term(basis[static_cast<std::size_t>(col)], Scalar(1L));
      const PbwElement img = apply(b);
      for (const auto& [mono, c] : img.terms()) {
        auto it = index.find(mono);
        if (it == index.end()) throw CheckFailure("regular action left the window basis");
        m(it->second, col) = c;
      }
    }
    return m;
  };

  FdModule M = FdModule::zero(r, n);
  M.dim = dim;
  for (int j = 1; j <= n; ++j) {
    const PbwElement tj = gen_t(s, j);
    M.t[static_cast<std::size_t>(j - 1)] = matrix_of([&](const PbwElement& b) { return mult(tj, b); });
    M.X[static_cast<std::size_t>(j - 1)] = matrix_of([&](const PbwElement& b) { return Q.mul_X(j, 1, b); });
    M.Xinv[static_cast<std::size_t>(j - 1)] = matrix_of([&](const PbwElement& b) { return Q.mul_X(j, -1, b); });
  }
  for (auto& [i, gi] : M.g) {
    const int ii = i;
    gi = matrix_of([&](const PbwElement& b) { return left_mult_g(ii, b); });
  }
  return M;
}

}  // namespace yhk
