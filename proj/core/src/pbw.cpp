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

#include "yhk/pbw.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

#include "yhk/errors.hpp"

namespace yhk {

namespace {

constexpr int kMaxExponent = 120;

const Scalar& q_minus_qinv() {
  static const Scalar v = Scalar::q() - Scalar::q(-1);
  return v;
}

void add_to(PbwElement::Terms& terms, const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::int8_t checked_exponent(int v) {
  if (v > kMaxExponent || v < -kMaxExponent) throw ResourceLimit("X exponent exceeds the supported range");
  return static_cast<std::int8_t>(v);
}

// Monomials of Delta_i(X^gamma) with their signs, as exponent pairs at (i, i+1).
void divided_difference_pairs(int a, int b, std::vector<std::pair<std::pair<int, int>, int>>& out) {
  out.clear();
  if (a > b) {
    for (int k = 0; k < a - b; ++k) out.push_back({{b + k, a - k}, -1});
  } else if (a < b) {
    for (int k = 0; k < b - a; ++k) out.push_back({{a + k, b - k}, 1});
  }
}

}  // namespace

PbwMonomial PbwMonomial::identity(int n) {
  PbwMonomial m;
  for (int i = 0; i < n; ++i) m.w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return m;
}

Perm PbwMonomial::perm(int n) const {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
  return Perm(std::move(v));
}

void PbwMonomial::set_perm(const Perm& p) {
  w.fill(0);
  for (int i = 1; i <= p.size(); ++i) w[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(p(i));
}

std::vector<int> PbwMonomial::alpha_vec(int n) const { return {alpha.begin(), alpha.begin() + n}; }
std::vector<int> PbwMonomial::beta_vec(int n) const { return {beta.begin(), beta.begin() + n}; }

bool PbwMonomial::is_torus_part() const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0 && w[i] != i + 1) return false;
  }
  return true;
}

bool operator<(const PbwMonomial& a, const PbwMonomial& b) {
  if (a.w != b.w) return a.w < b.w;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

std::size_t PbwMonomialHash::operator()(const PbwMonomial& m) const noexcept {
  std::uint64_t words[3];
  std::memcpy(&words[0], m.alpha.data(), 8);
  std::memcpy(&words[1], m.beta.data(), 8);
  std::memcpy(&words[2], m.w.data(), 8);
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (auto x : words) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

void AlgebraSpec::validate() const {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (n < 1 || n > kMaxRank) throw InvalidArgument("n must lie in 1.." + std::to_string(kMaxRank));
  if (r > 255) throw InvalidArgument("r must be at most 255");
}

std::vector<std::pair<PbwMonomial, Scalar>> PbwElement::sorted_terms() const {
  std::vector<std::pair<PbwMonomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

Scalar PbwElement::coeff(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void PbwElement::add_term(const PbwMonomial& m, const Scalar& c) {
  add_to(terms_, m, c);
  check_guard();
}

void PbwElement::check_guard() const {
  if (terms_.size() > spec_.max_support) {
    throw ResourceLimit("PBW support exceeds " + std::to_string(spec_.max_support) + " monomials");
  }
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  if (!(spec_ == o.spec_)) throw InvalidArgument("rank mismatch");
  for (const auto& [m, c] : o.terms_) add_to(terms_, m, c);
  check_guard();
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  if (!(spec_ == o.spec_)) throw InvalidArgument("rank mismatch");
  for (const auto& [m, c] : o.terms_) add_to(terms_, m, -c);
  return *this;
}

PbwElement& PbwElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PbwElement PbwElement::operator-() const {
  PbwElement e = *this;
  for (auto& [m, v] : e.terms_) v = -v;
  return e;
}

bool operator==(const PbwElement& a, const PbwElement& b) {
  if (!(a.spec_ == b.spec_) || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

bool PbwElement::in_torus_part() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_torus_part(); });
}

bool PbwElement::is_x_polynomial() const {
  for (const auto& [m, c] : terms_) {
    if (!m.is_torus_part()) return false;
    for (auto b : m.beta) {
      if (b != 0) return false;
    }
  }
  return true;
}

std::string PbwElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const int n = spec_.n;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool need_paren = !c.is_laurent() || c.num().size() > 1;
    os << (need_paren ? "(" + cs + ")" : cs);
    for (int j = 0; j < n; ++j) {
      if (m.alpha[static_cast<std::size_t>(j)] != 0) {
        os << "*X" << j + 1;
        if (m.alpha[static_cast<std::size_t>(j)] != 1) os << "^" << int(m.alpha[static_cast<std::size_t>(j)]);
      }
    }
    for (int j = 0; j < n; ++j) {
      if (m.beta[static_cast<std::size_t>(j)] != 0) {
        os << "*t" << j + 1;
        if (m.beta[static_cast<std::size_t>(j)] != 1) os << "^" << int(m.beta[static_cast<std::size_t>(j)]);
      }
    }
    Perm w = m.perm(n);
    if (!w.is_identity()) os << "*g" << w.str();
  }
  return os.str();
}

PbwElement one(const AlgebraSpec& s) { return scalar_element(s, Scalar(1L)); }

PbwElement scalar_element(const AlgebraSpec& s, const Scalar& c) {
  PbwElement e(s);
  e.add_term(PbwMonomial::identity(s.n), c);
  return e;
}

namespace {

void check_index(const AlgebraSpec& s, int j, int hi, const char* what) {
  if (j < 1 || j > hi) {
    throw InvalidArgument(std::string(what) + " index " + std::to_string(j) + " out of range for n=" +
                          std::to_string(s.n));
  }
}

}  // namespace

PbwElement gen_t(const AlgebraSpec& s, int j, int power) {
  check_index(s, j, s.n, "t");
  PbwMonomial m = PbwMonomial::identity(s.n);
  m.beta[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(((power % s.r) + s.r) % s.r);
  PbwElement e(s);
  e.add_term(m, Scalar(1L));
  return e;
}

PbwElement gen_X(const AlgebraSpec& s, int j, int power) {
  check_index(s, j, s.n, "X");
  PbwMonomial m = PbwMonomial::identity(s.n);
  m.alpha[static_cast<std::size_t>(j - 1)] = checked_exponent(power);
  PbwElement e(s);
  e.add_term(m, Scalar(1L));
  return e;
}

PbwElement gen_g(const AlgebraSpec& s, int i) {
  check_index(s, i, s.n - 1, "g");
  return gen_gw(s, Perm::simple(s.n, i));
}

PbwElement gen_g_inv(const AlgebraSpec& s, int i) {
  PbwElement e = gen_g(s, i);
  PbwElement ei = gen_e(s, i);
  ei *= q_minus_qinv();
  return e - ei;
}

PbwElement gen_e_pair(const AlgebraSpec& s, int j, int k) {
  check_index(s, j, s.n, "e");
  check_index(s, k, s.n, "e");
  PbwElement e(s);
  if (j == k) return one(s);
  const Scalar c = Scalar::rational(1, s.r);
  for (int x = 0; x < s.r; ++x) {
    PbwMonomial m = PbwMonomial::identity(s.n);
    m.beta[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(x);
    m.beta[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>((s.r - x) % s.r);
    e.add_term(m, c);
  }
  return e;
}

PbwElement gen_e(const AlgebraSpec& s, int i) {
  check_index(s, i, s.n - 1, "e");
  return gen_e_pair(s, i, i + 1);
}

PbwElement gen_theta(const AlgebraSpec& s, int i) {
  check_index(s, i, s.n - 1, "Theta");
  PbwElement factor = one(s);
  std::vector<int> alpha(static_cast<std::size_t>(s.n), 0), beta(static_cast<std::size_t>(s.n), 0);
  alpha[static_cast<std::size_t>(i - 1)] = 1;
  alpha[static_cast<std::size_t>(i)] = -1;
  factor -= monomial_element(s, alpha, beta, Perm(s.n));
  PbwElement out = mult(gen_g(s, i), factor);
  out *= Scalar::q();
  PbwElement e = gen_e(s, i);
  e *= Scalar(1L) - Scalar::q(2);
  return out + e;
}

PbwElement gen_gw(const AlgebraSpec& s, const Perm& w) {
  if (w.size() != s.n) throw InvalidArgument("permutation size does not match n");
  PbwMonomial m = PbwMonomial::identity(s.n);
  m.set_perm(w);
  PbwElement e(s);
  e.add_term(m, Scalar(1L));
  return e;
}

PbwElement monomial_element(const AlgebraSpec& s, const std::vector<int>& alpha, const std::vector<int>& beta,
                            const Perm& w, const Scalar& c) {
  if (static_cast<int>(alpha.size()) != s.n || static_cast<int>(beta.size()) != s.n || w.size() != s.n) {
    throw InvalidArgument("monomial data does not match n");
  }
  PbwMonomial m = PbwMonomial::identity(s.n);
  for (int j = 0; j < s.n; ++j) {
    m.alpha[static_cast<std::size_t>(j)] = checked_exponent(alpha[static_cast<std::size_t>(j)]);
    m.beta[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(((beta[static_cast<std::size_t>(j)] % s.r) + s.r) % s.r);
  }
  m.set_perm(w);
  PbwElement e(s);
  e.add_term(m, c);
  return e;
}

PbwElement left_mult_g(int i, const PbwElement& b) {
  const AlgebraSpec& s = b.spec();
  check_index(s, i, s.n - 1, "g");
  const int r = s.r;
  const std::size_t a = static_cast<std::size_t>(i - 1), a1 = static_cast<std::size_t>(i);
  const Scalar& qq = q_minus_qinv();
  const Scalar qq_r = qq * Scalar::rational(1, r);
  PbwElement::Terms out;
  out.reserve(b.size() * 3);
  std::vector<std::pair<std::pair<int, int>, int>> dd;
  for (const auto& [m, c] : b.terms()) {
    // X^{s_i gamma} t^{s_i delta} (g_i g_u)
    PbwMonomial sm = m;
    std::swap(sm.alpha[a], sm.alpha[a1]);
    std::swap(sm.beta[a], sm.beta[a1]);
    // s_i u swaps the values i and i+1 in the one-line notation of u
    int pos_i = -1, pos_i1 = -1;
    for (int k = 0; k < s.n; ++k) {
      if (m.w[static_cast<std::size_t>(k)] == i) pos_i = k;
      if (m.w[static_cast<std::size_t>(k)] == i + 1) pos_i1 = k;
    }
    PbwMonomial up = sm;
    std::swap(up.w[static_cast<std::size_t>(pos_i)], up.w[static_cast<std::size_t>(pos_i1)]);
    add_to(out, up, c);
    if (pos_i > pos_i1) {
      // length drops: extra (q - q^{-1}) e_i g_u term
      const Scalar cc = c * qq_r;
      for (int x = 0; x < r; ++x) {
        PbwMonomial em = sm;
        em.beta[a] = static_cast<std::uint8_t>((em.beta[a] + x) % r);
        em.beta[a1] = static_cast<std::uint8_t>((em.beta[a1] + r - x) % r);
        add_to(out, em, cc);
      }
    }
    // (q - q^{-1}) e_i Delta_i(X^gamma) t^delta g_u
    divided_difference_pairs(m.alpha[a], m.alpha[a1], dd);
    if (!dd.empty()) {
      const Scalar cc = c * qq_r;
      const Scalar ncc = -cc;
      for (const auto& [ex, sign] : dd) {
        PbwMonomial dm = m;
        dm.alpha[a] = checked_exponent(ex.first);
        dm.alpha[a1] = checked_exponent(ex.second);
        for (int x = 0; x < r; ++x) {
          PbwMonomial em = dm;
          em.beta[a] = static_cast<std::uint8_t>((em.beta[a] + x) % r);
          em.beta[a1] = static_cast<std::uint8_t>((em.beta[a1] + r - x) % r);
          add_to(out, em, sign > 0 ? cc : ncc);
        }
      }
    }
  }
  PbwElement res(s);
  for (auto& [m, c] : out) res.add_term(m, c);
  return res;
}

PbwElement mult(const PbwElement& a, const PbwElement& b) {
  if (!(a.spec() == b.spec())) throw InvalidArgument("rank mismatch in mult");
  const AlgebraSpec& s = a.spec();
  const int n = s.n, r = s.r;
  // group the left factor by permutation so each g_w * b is computed once
  std::map<std::array<std::uint8_t, kMaxRank>, std::vector<std::pair<const PbwMonomial*, const Scalar*>>> groups;
  for (const auto& [m, c] : a.terms()) groups[m.w].push_back({&m, &c});
  PbwElement::Terms out;
  for (const auto& [w, items] : groups) {
    const Perm wp = items.front().first->perm(n);
    const std::vector<int> word = reduced_word(wp);
    PbwElement gb = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) gb = left_mult_g(*it, gb);
    for (const auto& [lm, lc] : items) {
      for (const auto& [m, c] : gb.terms()) {
        PbwMonomial pm = m;
        for (int j = 0; j < n; ++j) {
          const std::size_t k = static_cast<std::size_t>(j);
          pm.alpha[k] = checked_exponent(pm.alpha[k] + lm->alpha[k]);
          pm.beta[k] = static_cast<std::uint8_t>((pm.beta[k] + lm->beta[k]) % r);
        }
        add_to(out, pm, *lc * c);
      }
      if (out.size() > s.max_support) {
        throw ResourceLimit("PBW support exceeds " + std::to_string(s.max_support) + " monomials");
      }
    }
  }
  PbwElement res(s);
  for (auto& [m, c] : out) res.add_term(m, c);
  return res;
}

PbwElement divided_difference(const PbwElement& f, int i) {
  const AlgebraSpec& s = f.spec();
  check_index(s, i, s.n - 1, "divided difference");
  if (!f.is_x_polynomial()) throw InvalidArgument("divided_difference expects a polynomial in X only");
  PbwElement out(s);
  std::vector<std::pair<std::pair<int, int>, int>> dd;
  const std::size_t a = static_cast<std::size_t>(i - 1), a1 = static_cast<std::size_t>(i);
  for (const auto& [m, c] : f.terms()) {
    divided_difference_pairs(m.alpha[a], m.alpha[a1], dd);
    for (const auto& [ex, sign] : dd) {
      PbwMonomial dm = m;
      dm.alpha[a] = checked_exponent(ex.first);
      dm.alpha[a1] = checked_exponent(ex.second);
      out.add_term(dm, sign > 0 ? c : -c);
    }
  }
  return out;
}

PbwElement permute_torus_part(const PbwElement& f, const Perm& w) {
  const AlgebraSpec& s = f.spec();
  if (!f.in_torus_part()) throw InvalidArgument("permute_torus_part expects an element of P(T)");
  PbwElement out(s);
  for (const auto& [m, c] : f.terms()) {
    PbwMonomial pm = m;
    for (int j = 1; j <= s.n; ++j) {
      pm.alpha[static_cast<std::size_t>(w(j) - 1)] = m.alpha[static_cast<std::size_t>(j - 1)];
      pm.beta[static_cast<std::size_t>(w(j) - 1)] = m.beta[static_cast<std::size_t>(j - 1)];
    }
    out.add_term(pm, c);
  }
  return out;
}

PbwElement orbit_sum(const AlgebraSpec& s, const std::vector<int>& alpha, const std::vector<int>& beta) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<int> b(beta);
  for (auto& x : b) x = ((x % s.r) + s.r) % s.r;
  PbwElement out(s);
  for (const Perm& w : all_perms(s.n)) {
    auto key = std::make_pair(act(w, alpha), act(w, b));
    if (!seen.insert(key).second) continue;
    out += monomial_element(s, key.first, key.second, Perm(s.n));
  }
  return out;
}

bool is_central(const PbwElement& z) {
  const AlgebraSpec& s = z.spec();
  std::vector<PbwElement> gens{gen_t(s, 1), gen_X(s, 1)};
  for (int i = 1; i < s.n; ++i) gens.push_back(gen_g(s, i));
  for (const auto& x : gens) {
    if (mult(x, z) != mult(z, x)) return false;
  }
  return true;
}

std::map<Perm, PbwElement> left_normal_form(const PbwElement& a) {
  const AlgebraSpec& s = a.spec();
  const int n = s.n;
  std::map<Perm, PbwElement> out;
  PbwElement rem = a;
  while (!rem.is_zero()) {
    // a term of maximal length, smallest in the monomial order among those
    const PbwMonomial* best = nullptr;
    int best_len = -1;
    for (const auto& [m, c] : rem.terms()) {
      const int len = m.perm(n).length();
      if (len > best_len || (len == best_len && m < *best)) {
        best = &m;
        best_len = len;
      }
    }
    const PbwMonomial lead = *best;
    const Scalar c = rem.coeff(lead);
    const Perm w = lead.perm(n);
    PbwMonomial f = PbwMonomial::identity(n);
    for (int j = 1; j <= n; ++j) {
      f.alpha[static_cast<std::size_t>(j - 1)] = lead.alpha[static_cast<std::size_t>(w(j) - 1)];
      f.beta[static_cast<std::size_t>(j - 1)] = lead.beta[static_cast<std::size_t>(w(j) - 1)];
    }
    PbwElement fe(s);
    fe.add_term(f, c);
    auto it = out.try_emplace(w, PbwElement(s)).first;
    it->second += fe;
    rem -= mult(gen_gw(s, w), fe);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::map<Perm, PbwElement> expand_left_cosets(const PbwElement& a, const Composition& mu) {
  const AlgebraSpec& s = a.spec();
  if (composition_size(mu) != s.n) throw InvalidArgument("composition does not sum to n");
  std::map<Perm, PbwElement> out;
  for (const auto& [v, f] : left_normal_form(a)) {
    auto [tau, u] = coset_factorize(v, mu);
    auto it = out.try_emplace(tau, PbwElement(s)).first;
    it->second += mult(gen_gw(s, u), f);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace yhk
