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

#include "yhk/identities.hpp"

#include <algorithm>
#include <random>

#include "yhk/errors.hpp"

namespace yhk {

void CheckReport::record(const std::string& family, const std::string& identity, bool pass) {
  items.push_back({family, identity, pass});
}

void CheckReport::append(const CheckReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }

bool CheckReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> CheckReport::families() const {
  std::vector<std::string> out;
  for (const auto& c : items) {
    if (std::find(out.begin(), out.end(), c.family) == out.end()) out.push_back(c.family);
  }
  return out;
}

bool CheckReport::family_pass(const std::string& family) const {
  return std::all_of(items.begin(), items.end(),
                     [&](const CheckResult& c) { return c.family != family || c.pass; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckResult& c) { return !c.pass; }));
}

const std::vector<std::string>& identity_families() {
  static const std::vector<std::string> names{"braid",   "torus", "g-t",  "quadratic", "affine-X1",
                                              "inverse-idempotent", "egge", "giXj", "xyyx",
                                              "gxxg",    "ektbeta", "commutator", "theta", "xggx"};
  return names;
}

namespace {

const Scalar& qq() {
  static const Scalar v = Scalar::q() - Scalar::q(-1);
  return v;
}

std::string idx(const char* name, int i) { return std::string(name) + std::to_string(i); }

PbwElement prod(std::initializer_list<PbwElement> xs) {
  auto it = xs.begin();
  PbwElement acc = *it++;
  for (; it != xs.end(); ++it) acc = mult(acc, *it);
  return acc;
}

}  // namespace

CheckReport check_relations(int r, int n, std::uint64_t seed, int random_f) {
  AlgebraSpec s{r, n};
  s.validate();
  CheckReport rep;
  std::vector<PbwElement> g(static_cast<std::size_t>(n)), gi(static_cast<std::size_t>(n)),
      e(static_cast<std::size_t>(n));
  std::vector<PbwElement> t(static_cast<std::size_t>(n + 1)), X(static_cast<std::size_t>(n + 1)),
      Xi(static_cast<std::size_t>(n + 1));
  for (int i = 1; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = gen_g(s, i);
    gi[static_cast<std::size_t>(i)] = gen_g_inv(s, i);
    e[static_cast<std::size_t>(i)] = gen_e(s, i);
  }
  for (int j = 1; j <= n; ++j) {
    t[static_cast<std::size_t>(j)] = gen_t(s, j);
    X[static_cast<std::size_t>(j)] = gen_X(s, j);
    Xi[static_cast<std::size_t>(j)] = gen_X(s, j, -1);
  }
  auto G = [&](int i) -> const PbwElement& { return g[static_cast<std::size_t>(i)]; };
  auto E = [&](int i) -> const PbwElement& { return e[static_cast<std::size_t>(i)]; };
  auto T = [&](int j) -> const PbwElement& { return t[static_cast<std::size_t>(j)]; };
  const PbwElement id = one(s);

  // braid
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      rep.record("braid", idx("g", i) + idx("g", j) + "=" + idx("g", j) + idx("g", i),
                 mult(G(i), G(j)) == mult(G(j), G(i)));
    }
    if (i + 1 < n) {
      rep.record("braid", idx("g", i) + idx("g", i + 1) + idx("g", i) + "=" + idx("g", i + 1) + idx("g", i) +
                              idx("g", i + 1),
                 prod({G(i), G(i + 1), G(i)}) == prod({G(i + 1), G(i), G(i + 1)}));
    }
  }
  if (n < 3) rep.record("braid", "vacuous", true);

  // torus
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      rep.record("torus", idx("t", i) + idx("t", j) + "=" + idx("t", j) + idx("t", i),
                 mult(T(i), T(j)) == mult(T(j), T(i)));
    }
    PbwElement p = id;
    for (int k = 0; k < r; ++k) p = mult(p, T(i));
    rep.record("torus", idx("t", i) + "^r=1", p == id);
  }

  // g-t
  for (int i = 1; i < n; ++i) {
    const Perm si = Perm::simple(n, i);
    for (int j = 1; j <= n; ++j) {
      rep.record("g-t", idx("g", i) + idx("t", j) + "=" + idx("t", si(j)) + idx("g", i),
                 mult(G(i), T(j)) == mult(T(si(j)), G(i)));
    }
  }
  if (n < 2) rep.record("g-t", "vacuous", true);

  // quadratic
  for (int i = 1; i < n; ++i) {
    rep.record("quadratic", idx("g", i) + "^2=1+(q-q^-1)" + idx("e", i) + idx("g", i),
               mult(G(i), G(i)) == id + qq() * mult(E(i), G(i)));
  }
  if (n < 2) rep.record("quadratic", "vacuous", true);

  // affine-X1
  rep.record("affine-X1", "X1*X1^-1=1", mult(X[1], Xi[1]) == id);
  rep.record("affine-X1", "X1^-1*X1=1", mult(Xi[1], X[1]) == id);
  if (n >= 2) {
    rep.record("affine-X1", "g1X1g1X1=X1g1X1g1", prod({G(1), X[1], G(1), X[1]}) == prod({X[1], G(1), X[1], G(1)}));
  }
  for (int i = 2; i < n; ++i) {
    rep.record("affine-X1", idx("g", i) + "X1=X1" + idx("g", i), mult(G(i), X[1]) == mult(X[1], G(i)));
  }
  for (int j = 1; j <= n; ++j) {
    rep.record("affine-X1", idx("t", j) + "X1=X1" + idx("t", j), mult(T(j), X[1]) == mult(X[1], T(j)));
  }

  // inverse-idempotent
  for (int i = 1; i < n; ++i) {
    rep.record("inverse-idempotent", idx("g", i) + "*" + idx("g", i) + "^-1=1",
               mult(G(i), gi[static_cast<std::size_t>(i)]) == id);
    rep.record("inverse-idempotent", idx("g", i) + "^-1*" + idx("g", i) + "=1",
               mult(gi[static_cast<std::size_t>(i)], G(i)) == id);
    rep.record("inverse-idempotent", idx("e", i) + "^2=" + idx("e", i), mult(E(i), E(i)) == E(i));
    rep.record("inverse-idempotent", idx("e", i) + idx("g", i) + "=" + idx("g", i) + idx("e", i),
               mult(E(i), G(i)) == mult(G(i), E(i)));
  }
  if (n < 2) rep.record("inverse-idempotent", "vacuous", true);

  // egge
  for (int i = 1; i < n; ++i) {
    const Perm si = Perm::simple(n, i);
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        rep.record("egge",
                   "e" + std::to_string(j) + "," + std::to_string(k) + idx("g", i) + "=" + idx("g", i) + "e" +
                       std::to_string(si(j)) + "," + std::to_string(si(k)),
                   mult(gen_e_pair(s, j, k), G(i)) == mult(G(i), gen_e_pair(s, si(j), si(k))));
      }
    }
  }
  if (n < 2) rep.record("egge", "vacuous", true);

  // X_{i+1} := g_i X_i g_i, built only from X_1 and the g's
  std::vector<PbwElement> Xd(static_cast<std::size_t>(n + 1));
  Xd[1] = X[1];
  for (int i = 1; i < n; ++i) Xd[static_cast<std::size_t>(i + 1)] = prod({G(i), Xd[static_cast<std::size_t>(i)], G(i)});
  auto XD = [&](int j) -> const PbwElement& { return Xd[static_cast<std::size_t>(j)]; };

  // giXj
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      rep.record("giXj", idx("g", i) + idx("X", j) + "=" + idx("X", j) + idx("g", i),
                 mult(G(i), XD(j)) == mult(XD(j), G(i)));
    }
  }
  if (n < 3) rep.record("giXj", "vacuous", true);

  // xyyx
  for (int j = 1; j <= n; ++j) {
    rep.record("xyyx", idx("X", j) + "=g..X1..g", XD(j) == X[static_cast<std::size_t>(j)]);
  }
  {
    std::vector<std::pair<std::string, const PbwElement*>> fam;
    for (int j = 1; j <= n; ++j) fam.push_back({idx("t", j), &T(j)});
    for (int j = 1; j <= n; ++j) fam.push_back({idx("X", j), &XD(j)});
    for (std::size_t a = 0; a < fam.size(); ++a) {
      for (std::size_t b = a + 1; b < fam.size(); ++b) {
        rep.record("xyyx", fam[a].first + fam[b].first + "=" + fam[b].first + fam[a].first,
                   mult(*fam[a].second, *fam[b].second) == mult(*fam[b].second, *fam[a].second));
      }
    }
  }

  // gxxg
  for (int i = 1; i < n; ++i) {
    const PbwElement& Xa = X[static_cast<std::size_t>(i)];
    const PbwElement& Xb = X[static_cast<std::size_t>(i + 1)];
    const PbwElement& Xai = Xi[static_cast<std::size_t>(i)];
    const PbwElement& Xbi = Xi[static_cast<std::size_t>(i + 1)];
    rep.record("gxxg", idx("g", i) + idx("X", i), mult(G(i), Xa) == mult(Xb, G(i)) - qq() * mult(E(i), Xb));
    rep.record("gxxg", idx("g", i) + idx("X", i + 1), mult(G(i), Xb) == mult(Xa, G(i)) + qq() * mult(E(i), Xb));
    rep.record("gxxg", idx("g", i) + idx("Xi", i), mult(G(i), Xai) == mult(Xbi, G(i)) + qq() * mult(E(i), Xai));
    rep.record("gxxg", idx("g", i) + idx("Xi", i + 1), mult(G(i), Xbi) == mult(Xai, G(i)) - qq() * mult(E(i), Xai));
  }
  if (n < 2) rep.record("gxxg", "vacuous", true);

  // ektbeta
  {
    std::vector<int> beta(static_cast<std::size_t>(n), 0), zero(static_cast<std::size_t>(n), 0);
    long total = 1;
    for (int j = 0; j < n; ++j) total *= r;
    for (int k = 1; k < n; ++k) {
      bool ok = true;
      for (long code = 0; code < total; ++code) {
        long c = code;
        for (int j = 0; j < n; ++j) {
          beta[static_cast<std::size_t>(j)] = static_cast<int>(c % r);
          c /= r;
        }
        PbwElement tb = monomial_element(s, zero, beta, Perm(n));
        PbwElement tsb = monomial_element(s, zero, act(Perm::simple(n, k), beta), Perm(n));
        if (mult(E(k), tb) != mult(tsb, E(k))) ok = false;
      }
      rep.record("ektbeta", idx("e", k) + "t^beta=t^(s beta)" + idx("e", k) + " for all beta", ok);
    }
    if (n < 2) rep.record("ektbeta", "vacuous", true);
  }

  // commutator identity on seeded random Laurent polynomials in X
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3), nterms(1, 4), qe(-1, 1);
    for (int trial = 0; trial < random_f; ++trial) {
      PbwElement f(s);
      const int k = nterms(rng);
      for (int m = 0; m < k; ++m) {
        std::vector<int> a(static_cast<std::size_t>(n));
        for (auto& x : a) x = ex(rng);
        int c = co(rng);
        if (c == 0) c = 1;
        Scalar coeff = Scalar(static_cast<long>(c)) * Scalar::q(qe(rng));
        f += monomial_element(s, a, std::vector<int>(static_cast<std::size_t>(n), 0), Perm(n), coeff);
      }
      for (int i = 1; i < n; ++i) {
        PbwElement sf = permute_torus_part(f, Perm::simple(n, i));
        PbwElement lhs = mult(G(i), f) - mult(sf, G(i));
        PbwElement dd = divided_difference(f, i);
        PbwElement rhs = qq() * mult(E(i), dd);
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i - 1)] = 1;
        a[static_cast<std::size_t>(i)] = -1;
        PbwElement back =
            mult(dd, id - monomial_element(s, a, std::vector<int>(static_cast<std::size_t>(n), 0), Perm(n)));
        rep.record("commutator", "f#" + std::to_string(trial) + " i=" + std::to_string(i),
                   lhs == rhs && back == f - sf);
      }
    }
    if (n < 2) rep.record("commutator", "vacuous", true);
  }
  return rep;
}

CheckReport check_theta(int r, int n) {
  AlgebraSpec s{r, n};
  s.validate();
  CheckReport rep;
  const PbwElement id = one(s);
  const Scalar one_minus_q2 = Scalar(1L) - Scalar::q(2);
  for (int i = 1; i < n; ++i) {
    PbwElement th = gen_theta(s, i);
    std::vector<int> a(static_cast<std::size_t>(n), 0), z(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i - 1)] = 1;
    a[static_cast<std::size_t>(i)] = -1;
    std::vector<int> b(a);
    b[static_cast<std::size_t>(i - 1)] = -1;
    b[static_cast<std::size_t>(i)] = 1;
    PbwElement r1 = id - Scalar::q(2) * monomial_element(s, a, z, Perm(n));
    PbwElement r2 = id - Scalar::q(2) * monomial_element(s, b, z, Perm(n));
    PbwElement rhs = (one_minus_q2 * one_minus_q2) * (gen_e(s, i) - id) + mult(r1, r2);
    rep.record("theta", idx("Th", i) + "^2", mult(th, th) == rhs);
    for (int j = 1; j <= n; ++j) {
      int target = j;
      if (j == i) target = i + 1;
      if (j == i + 1) target = i;
      rep.record("theta", idx("Th", i) + idx("X", j) + "=" + idx("X", target) + idx("Th", i),
                 mult(th, gen_X(s, j)) == mult(gen_X(s, target), th));
    }
  }
  if (n < 2) rep.record("theta", "vacuous", true);
  return rep;
}

CheckReport check_xggx(int r, int n, const Composition& mu, int k) {
  AlgebraSpec s{r, n};
  s.validate();
  if (static_cast<int>(mu.size()) != r || composition_size(mu) != n) {
    throw InvalidArgument("mu must be an r-composition of n");
  }
  if (k < 0 || k > r - 1) throw InvalidArgument("k must lie in 0..r-1");
  CheckReport rep;
  const int m = partial_sum(mu, k);
  std::string label = "mu=" + std::to_string(k) + ":";
  for (int x : mu) label += std::to_string(x) + ",";
  label.pop_back();
  label += " k=" + std::to_string(k);
  if (m + 1 > n) {
    rep.record("xggx", label + " (vacuous)", true);
    return rep;
  }
  const PbwElement X1 = gen_X(s, 1);
  const PbwElement gw = gen_gw(s, transposition(n, 1, m + 1));
  PbwElement rhs = mult(gw, gen_X(s, m + 1));
  for (int l = 1; l <= m; ++l) {
    // g_m ... g_2 g_1 g_2 ... g_m with the ascending g_l (the middle g_1 when
    // l = 1) replaced by X_{l+1}
    std::vector<PbwElement> word;
    for (int i = m; i >= 2; --i) word.push_back(gen_g(s, i));
    word.push_back(l == 1 ? gen_X(s, 2) : gen_g(s, 1));
    for (int i = 2; i <= m; ++i) word.push_back(i == l ? gen_X(s, l + 1) : gen_g(s, i));
    PbwElement acc = one(s);
    for (const auto& x : word) acc = mult(acc, x);
    acc = mult(acc, gen_e_pair(s, l, m + 1));
    rhs -= qq() * acc;
  }
  rep.record("xggx", label, mult(X1, gw) == rhs);
  return rep;
}

CheckReport check_xggx_all(int r, int n) {
  CheckReport rep;
  for (const Composition& mu : compositions(r, n)) {
    for (int k = 0; k < r; ++k) rep.append(check_xggx(r, n, mu, k));
  }
  return rep;
}

CheckReport check_all_identities(int r, int n, std::uint64_t seed) {
  CheckReport rep = check_relations(r, n, seed);
  rep.append(check_theta(r, n));
  rep.append(check_xggx_all(r, n));
  return rep;
}

}  // namespace yhk
