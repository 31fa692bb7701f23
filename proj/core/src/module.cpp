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

#include "yhk/module.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "yhk/errors.hpp"

namespace yhk {

CMatrix evaluate(const Matrix& m, const CycloNum& x) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).evaluate(x);
    }
  }
  return out;
}

Composition full_blocks(int r, int n) {
  Composition c(static_cast<std::size_t>(r), 0);
  c[0] = n;
  return c;
}

FdModule FdModule::zero(int r, int n, Composition blocks) {
  FdModule m;
  m.r = r;
  m.n = n;
  m.blocks = blocks.empty() ? full_blocks(r, n) : std::move(blocks);
  if (composition_size(m.blocks) != n) throw InvalidArgument("blocks do not sum to n");
  m.t.assign(static_cast<std::size_t>(n), Matrix(0, 0));
  m.X = m.t;
  m.Xinv = m.t;
  for (int i = 1; i < n; ++i) {
    if (simple_in_young_subgroup(i, m.blocks)) m.g.emplace(i, Matrix(0, 0));
  }
  return m;
}

const Matrix& FdModule::gen_g(int i) const {
  auto it = g.find(i);
  if (it == g.end()) throw InvalidArgument("g" + std::to_string(i) + " does not act on this module");
  return it->second;
}

std::vector<int> FdModule::g_indices() const {
  std::vector<int> out;
  for (const auto& [i, _] : g) out.push_back(i);
  return out;
}

namespace {

std::string idx(const char* name, int i) { return std::string(name) + std::to_string(i); }

}  // namespace

Matrix e_action(const FdModule& m, int j, int k) {
  Matrix acc(m.dim, m.dim);
  const Matrix& tj = m.gen_t(j);
  const Matrix& tk = m.gen_t(k);
  Matrix pj = Matrix::identity(m.dim);
  for (int s = 0; s < m.r; ++s) {
    // t_k^{-s} = t_k^{r-s}
    acc += pj * power(tk, (m.r - s) % m.r);
    pj = pj * tj;
  }
  return Scalar::rational(1, m.r) * acc;
}

CheckReport check_module_relations(const FdModule& m) {
  CheckReport rep;
  const int n = m.n;
  const int d = m.dim;
  bool shapes = static_cast<int>(m.t.size()) == n && static_cast<int>(m.X.size()) == n &&
                static_cast<int>(m.Xinv.size()) == n;
  auto square = [d](const Matrix& a) { return a.rows() == d && a.cols() == d; };
  if (shapes) {
    for (int j = 1; j <= n; ++j) {
      shapes = shapes && square(m.gen_t(j)) && square(m.gen_X(j)) && square(m.gen_Xinv(j));
    }
    for (const auto& [i, gi] : m.g) shapes = shapes && square(gi) && simple_in_young_subgroup(i, m.blocks);
  }
  rep.record("shape", "matrix sizes", shapes);
  if (!shapes) return rep;
  const Matrix id = Matrix::identity(d);
  const Scalar qq = Scalar::q() - Scalar::q(-1);

  for (int j = 1; j <= n; ++j) {
    rep.record("torus", idx("t", j) + "^r=1", power(m.gen_t(j), m.r) == id);
    for (int k = j + 1; k <= n; ++k) {
      rep.record("torus", idx("t", j) + idx("t", k), m.gen_t(j) * m.gen_t(k) == m.gen_t(k) * m.gen_t(j));
    }
    for (int k = 1; k <= n; ++k) {
      rep.record("torus", idx("t", j) + idx("X", k), m.gen_t(j) * m.gen_X(k) == m.gen_X(k) * m.gen_t(j));
    }
    rep.record("X-inverse", idx("X", j), m.gen_X(j) * m.gen_Xinv(j) == id);
    for (int k = j + 1; k <= n; ++k) {
      rep.record("X-commute", idx("X", j) + idx("X", k), m.gen_X(j) * m.gen_X(k) == m.gen_X(k) * m.gen_X(j));
    }
  }
  for (const auto& [i, gi] : m.g) {
    const Perm si = Perm::simple(n, i);
    for (int j = 1; j <= n; ++j) {
      rep.record("g-t", idx("g", i) + idx("t", j), gi * m.gen_t(j) == m.gen_t(si(j)) * gi);
    }
    rep.record("quadratic", idx("g", i), gi * gi == id + qq * (e_action(m, i, i + 1) * gi));
    rep.record("g-X", idx("X", i + 1) + "=g X g", gi * m.gen_X(i) * gi == m.gen_X(i + 1));
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      rep.record("g-X", idx("g", i) + idx("X", j), gi * m.gen_X(j) == m.gen_X(j) * gi);
    }
    for (const auto& [k, gk] : m.g) {
      if (k == i + 1) {
        rep.record("braid", idx("g", i) + idx("g", k), gi * gk * gi == gk * gi * gk);
      } else if (k > i + 1) {
        rep.record("braid", idx("g", i) + idx("g", k), gi * gk == gk * gi);
      }
    }
  }
  return rep;
}

Matrix act_gw(const FdModule& m, const Perm& w) {
  Matrix acc = Matrix::identity(m.dim);
  for (int i : reduced_word(w)) acc = acc * m.gen_g(i);
  return acc;
}

Matrix act(const FdModule& m, const PbwElement& a) {
  if (a.n() != m.n || a.r() != m.r) throw InvalidArgument("element and module ranks differ");
  Matrix out(m.dim, m.dim);
  std::map<Perm, Matrix> gw_cache;
  for (const auto& [mono, c] : a.sorted_terms()) {
    const Perm w = mono.perm(m.n);
    auto it = gw_cache.find(w);
    if (it == gw_cache.end()) it = gw_cache.emplace(w, act_gw(m, w)).first;
    Matrix acc = it->second;
    for (int j = m.n; j >= 1; --j) {
      const int b = mono.beta[static_cast<std::size_t>(j - 1)];
      for (int s = 0; s < b; ++s) acc = m.gen_t(j) * acc;
      const int al = mono.alpha[static_cast<std::size_t>(j - 1)];
      const Matrix& xm = al >= 0 ? m.gen_X(j) : m.gen_Xinv(j);
      for (int s = 0; s < std::abs(al); ++s) acc = xm * acc;
    }
    out += c * acc;
  }
  return out;
}

Subspace full_space(int dim) {
  Subspace s{Matrix::identity(dim), {}};
  for (int i = 0; i < dim; ++i) s.pivots.push_back(i);
  return s;
}

FdModule restrict_to(const FdModule& m, const Subspace& s) {
  if (s.ambient() != m.dim) throw InvalidArgument("subspace lives in a different space");
  auto part = [&](const Matrix& a) { return coordinates(s, a * s.basis); };
  FdModule out = FdModule::zero(m.r, m.n, m.blocks);
  out.dim = s.dim();
  try {
    for (std::size_t j = 0; j < m.t.size(); ++j) {
      out.t[j] = part(m.t[j]);
      out.X[j] = part(m.X[j]);
      out.Xinv[j] = part(m.Xinv[j]);
    }
    for (const auto& [i, gi] : m.g) out.g[i] = part(gi);
  } catch (const CheckFailure&) {
    throw CheckFailure("subspace is not invariant under the generators");
  }
  return out;
}

FdModule restrict_blocks(const FdModule& m, const Composition& blocks) {
  FdModule out = FdModule::zero(m.r, m.n, blocks);
  out.dim = m.dim;
  out.t = m.t;
  out.X = m.X;
  out.Xinv = m.Xinv;
  for (auto& [i, gi] : out.g) gi = m.gen_g(i);
  return out;
}

FdModule direct_sum(const FdModule& a, const FdModule& b) {
  if (a.r != b.r || a.n != b.n || a.blocks != b.blocks) throw InvalidArgument("direct sum of unlike modules");
  FdModule out = FdModule::zero(a.r, a.n, a.blocks);
  out.dim = a.dim + b.dim;
  for (std::size_t j = 0; j < a.t.size(); ++j) {
    out.t[j] = direct_sum(a.t[j], b.t[j]);
    out.X[j] = direct_sum(a.X[j], b.X[j]);
    out.Xinv[j] = direct_sum(a.Xinv[j], b.Xinv[j]);
  }
  for (auto& [i, gi] : out.g) gi = direct_sum(a.gen_g(i), b.gen_g(i));
  return out;
}

TraceInvariants trace_invariants(const FdModule& m) {
  std::vector<std::pair<std::string, const Matrix*>> gens, small;
  for (int j = 1; j <= m.n; ++j) {
    if (m.r > 1) gens.emplace_back(idx("t", j), &m.gen_t(j));
  }
  for (int j = 1; j <= m.n; ++j) gens.emplace_back(idx("X", j), &m.gen_X(j));
  for (int i : m.g_indices()) gens.emplace_back(idx("g", i), &m.gen_g(i));

  if (m.r > 1 && m.n > 0) small.emplace_back("t1", &m.gen_t(1));
  int start = 1;
  for (int part : m.blocks) {
    if (part > 0) small.emplace_back(idx("X", start), &m.gen_X(start));
    start += part;
  }
  for (int i : m.g_indices()) small.emplace_back(idx("g", i), &m.gen_g(i));

  TraceInvariants inv;
  inv.dim = m.dim;
  for (const auto& [name, a] : gens) inv.values.emplace_back(name, a->trace());
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = x; y < gens.size(); ++y) {
      inv.values.emplace_back(gens[x].first + "*" + gens[y].first, trace_of_product(*gens[x].second, *gens[y].second));
    }
  }
  // one representative per cyclic class: the lexicographically least rotation
  using Triple = std::array<std::size_t, 3>;
  for (std::size_t x = 0; x < small.size(); ++x) {
    for (std::size_t y = 0; y < small.size(); ++y) {
      Matrix ab;
      for (std::size_t z = 0; z < small.size(); ++z) {
        const Triple w{x, y, z};
        if (w > Triple{y, z, x} || w > Triple{z, x, y}) continue;
        if (ab.rows() == 0 && m.dim > 0) ab = *small[x].second * *small[y].second;
        inv.values.emplace_back(small[x].first + "*" + small[y].first + "*" + small[z].first,
                                m.dim > 0 ? trace_of_product(ab, *small[z].second) : Scalar(0L));
      }
    }
  }
  return inv;
}

const CycloNum& probe_point() {
  static const CycloNum v(Rational(3));
  return v;
}

namespace {

int nullity(const CMatrix& b) { return b.cols() - rank(b); }

int algebraic_multiplicity(const CMatrix& b) {
  int prev = nullity(b);
  if (prev == 0) return 0;
  CMatrix p = b;
  for (;;) {
    p = p * b;
    int cur = nullity(p);
    if (cur == prev) return cur;
    prev = cur;
  }
}

}  // namespace

std::vector<std::pair<int, int>> eigen_exponents(const Matrix& a, int max_exponent) {
  if (!a.is_square()) throw InvalidArgument("eigenvalues of a non-square matrix");
  const int d = a.rows();
  std::vector<std::pair<int, int>> out;
  if (d == 0) return out;
  const CycloNum& x = probe_point();
  const CMatrix av = evaluate(a, x);
  int found = 0;
  for (int step = 0; step <= 2 * max_exponent && found < d; ++step) {
    const int j = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    CycloNum lam(1L);
    for (int s = 0; s < std::abs(j); ++s) lam *= x;
    if (j < 0) lam = lam.inverse();
    CMatrix b = av - lam * CMatrix::identity(d);
    const int mult = algebraic_multiplicity(b);
    if (mult > 0) {
      out.emplace_back(j, mult);
      found += mult;
    }
  }
  if (found != d) throw DomainError("matrix has eigenvalues that are not small powers of q");
  std::sort(out.begin(), out.end());
  return out;
}

Subspace generalized_eigenspace(const Matrix& a, const Scalar& c) {
  const Matrix b = a - c * Matrix::identity(a.rows());
  Matrix p = b;
  Matrix k = kernel(p);
  for (;;) {
    if (k.cols() == 0) break;
    p = p * b;
    Matrix k2 = kernel(p);
    if (k2.cols() == k.cols()) break;
    k = std::move(k2);
  }
  return column_space(k);
}

std::map<int, Subspace> split_by_eigenvalue(const Matrix& a, const Subspace& s) {
  std::map<int, Subspace> out;
  if (s.dim() == 0) return out;
  const Matrix local = coordinates(s, a * s.basis);
  int total = 0;
  for (const auto& [j, mult] : eigen_exponents(local)) {
    Subspace ge = generalized_eigenspace(local, Scalar::q(j));
    if (ge.dim() != mult) throw CheckFailure("eigenspace dimension differs from the probe multiplicity");
    out.emplace(j, column_space(s.basis * ge.basis));
    total += ge.dim();
  }
  if (total != s.dim()) throw CheckFailure("generalized eigenspaces do not exhaust the space");
  return out;
}

}  // namespace yhk
