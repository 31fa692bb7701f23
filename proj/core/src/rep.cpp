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

#include "yhk/rep.hpp"

#include <algorithm>

#include "yhk/errors.hpp"

namespace yhk {

std::vector<int> character_pattern(const Composition& mu) {
  std::vector<int> p;
  for (std::size_t k = 0; k < mu.size(); ++k) p.insert(p.end(), static_cast<std::size_t>(mu[k]), static_cast<int>(k) + 1);
  return p;
}

namespace {

Scalar zeta(int r, long k) { return Scalar(CycloNum::root_of_unity(r, k)); }

/// (1/r) sum_s zeta^{-(k-1)s} t^s.
Matrix character_projector(const Matrix& t, int r, int k) {
  const int d = t.rows();
  Matrix acc(d, d);
  Matrix p = Matrix::identity(d);
  for (int s = 0; s < r; ++s) {
    acc += zeta(r, -static_cast<long>(k - 1) * s) * p;
    p = p * t;
  }
  return Scalar::rational(1, r) * acc;
}

bool same_young(const Composition& a, const Composition& b, int n) {
  for (int i = 1; i < n; ++i) {
    if (simple_in_young_subgroup(i, a) != simple_in_young_subgroup(i, b)) return false;
  }
  return true;
}

Matrix poly_at(const Matrix& x, const std::vector<Scalar>& coeffs) {
  Matrix f(x.rows(), x.cols());
  Matrix p = Matrix::identity(x.rows());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    f += coeffs[k] * p;
    if (k + 1 < coeffs.size()) p = p * x;
  }
  return f;
}

int single_charge(const WeightDatum& lam) {
  lam.validate();
  if (lam.d() != 1) throw InvalidArgument("this construction needs |lambda| = 1");
  return lam.charges().front();
}

long multinomial(const Composition& mu) {
  long v = 1;
  int total = 0;
  for (int m : mu) {
    for (int i = 1; i <= m; ++i) {
      ++total;
      v = v * total / i;
    }
  }
  return v;
}

FdModule induce_impl(const FdModule& W, const Composition& mu, bool with_X) {
  const int n = W.n;
  if (composition_size(mu) != n) throw InvalidArgument("composition does not match the module rank");
  if (!same_young(W.blocks, mu, n)) throw InvalidArgument("module is not over the parabolic subalgebra of mu");
  if (n == 0) {
    FdModule out = W;
    out.blocks = full_blocks(W.r, 0);
    return out;
  }
  const AlgebraSpec s{W.r, n};
  const std::vector<Perm> reps = coset_reps(mu);
  std::map<Perm, int> pos;
  for (std::size_t a = 0; a < reps.size(); ++a) pos.emplace(reps[a], static_cast<int>(a));
  std::vector<PbwElement> gtau;
  for (const Perm& tau : reps) gtau.push_back(gen_gw(s, tau));

  const int dw = W.dim;
  const int N = static_cast<int>(reps.size()) * dw;
  auto build = [&](const PbwElement& x) {
    Matrix m(N, N);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (const auto& [sigma, h] : expand_left_cosets(mult(x, gtau[a]), mu)) {
        const Matrix blk = act(W, h);
        const int row0 = pos.at(sigma) * dw;
        const int col0 = static_cast<int>(a) * dw;
        for (int i = 0; i < dw; ++i) {
          for (int j = 0; j < dw; ++j) m(row0 + i, col0 + j) = blk(i, j);
        }
      }
    }
    return m;
  };

  FdModule out = FdModule::zero(W.r, n, full_blocks(W.r, n));
  out.dim = N;
  for (int j = 1; j <= n; ++j) {
    out.t[static_cast<std::size_t>(j - 1)] = build(gen_t(s, j));
    if (with_X) {
      out.X[static_cast<std::size_t>(j - 1)] = build(gen_X(s, j));
      out.Xinv[static_cast<std::size_t>(j - 1)] = build(gen_X(s, j, -1));
    }
  }
  for (auto& [i, gi] : out.g) gi = build(gen_g(s, i));
  return out;
}

FdModule zero_module(int r, int n) {
  FdModule m = FdModule::zero(r, n);
  m.dim = 0;
  return m;
}

FdModule submodule_by_subspace(const FdModule& M, const Composition& blocks, const Subspace& s, int r) {
  FdModule P = restrict_to(restrict_blocks(M, blocks), s);
  FdModule out = drop_last_strand(P);
  out.blocks = full_blocks(r, M.n - 1);
  return out;
}

}  // namespace

Matrix weight_projector(const FdModule& M, const std::vector<int>& pattern) {
  if (static_cast<int>(pattern.size()) != M.n) throw InvalidArgument("pattern length differs from n");
  Matrix p = Matrix::identity(M.dim);
  for (int j = 1; j <= M.n; ++j) {
    const int k = pattern[static_cast<std::size_t>(j - 1)];
    if (k < 1 || k > M.r) throw InvalidArgument("character label out of range");
    p = p * character_projector(M.gen_t(j), M.r, k);
  }
  return p;
}

Subspace isotypic(const FdModule& M, const Composition& mu) {
  if (static_cast<int>(mu.size()) != M.r) throw InvalidArgument("composition must have r parts");
  if (composition_size(mu) != M.n) return column_space(Matrix(M.dim, 0));
  return column_space(weight_projector(M, character_pattern(mu)));
}

Subspace isotypic_component(const FdModule& M, const Composition& mu) {
  if (static_cast<int>(mu.size()) != M.r) throw InvalidArgument("composition must have r parts");
  Matrix acc(M.dim, M.dim);
  if (composition_size(mu) == M.n) {
    std::vector<int> p = character_pattern(mu);
    do {
      acc += weight_projector(M, p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return column_space(acc);
}

FdModule induce(const FdModule& W, const Composition& mu) { return induce_impl(W, mu, true); }

FdModule character_module(int r, const Composition& mu, const FdModule& P) {
  const int n = composition_size(mu);
  if (static_cast<int>(mu.size()) != r) throw InvalidArgument("composition must have r parts");
  if (P.r != 1 || P.n != n) throw InvalidArgument("character_module expects a Hecke-side module of rank |mu|");
  if (!same_young(P.blocks, mu, n)) throw InvalidArgument("Hecke-side module is not over the algebra of mu");
  FdModule W = FdModule::zero(r, n, mu);
  W.dim = P.dim;
  const std::vector<int> pat = character_pattern(mu);
  for (int j = 1; j <= n; ++j) {
    W.t[static_cast<std::size_t>(j - 1)] = zeta(r, pat[static_cast<std::size_t>(j - 1)] - 1) * Matrix::identity(P.dim);
    W.X[static_cast<std::size_t>(j - 1)] = P.gen_X(j);
    W.Xinv[static_cast<std::size_t>(j - 1)] = P.gen_Xinv(j);
  }
  for (auto& [i, gi] : W.g) gi = P.gen_g(i);
  return W;
}

FdModule tensor_hecke(const std::vector<FdModule>& factors, const Composition& mu) {
  if (factors.size() != mu.size()) throw InvalidArgument("one factor per block is required");
  const int n = composition_size(mu);
  std::vector<int> dims;
  int total = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].r != 1 || factors[k].n != mu[k]) throw InvalidArgument("factor rank differs from its block");
    dims.push_back(factors[k].dim);
    total *= factors[k].dim;
  }
  FdModule out = FdModule::zero(1, n, mu);
  out.dim = total;
  int start = 0;
  int before = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const int after = dims[k] == 0 ? 0 : total / before / dims[k];
    auto lift = [&](const Matrix& a) {
      return kronecker(kronecker(Matrix::identity(before), a), Matrix::identity(after));
    };
    for (int jj = 1; jj <= mu[k]; ++jj) {
      const auto j = static_cast<std::size_t>(start + jj - 1);
      out.t[j] = Matrix::identity(total);
      out.X[j] = lift(factors[k].gen_X(jj));
      out.Xinv[j] = lift(factors[k].gen_Xinv(jj));
    }
    for (int jj = 1; jj < mu[k]; ++jj) out.g[start + jj] = lift(factors[k].gen_g(jj));
    start += mu[k];
    before *= dims[k];
  }
  return out;
}

std::string SimpleLabel::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < shapes.size(); ++k) s += (k ? "|" : "") + partition_str(shapes[k]);
  return s + ")";
}

std::vector<SimpleLabel> simple_labels(int r, int n) {
  std::vector<SimpleLabel> out;
  for (const Composition& mu : compositions(r, n)) {
    std::vector<std::vector<Partition>> choices;
    for (int m : mu) choices.push_back(partitions(m));
    std::vector<std::size_t> idx(mu.size(), 0);
    for (;;) {
      SimpleLabel l{mu, {}};
      for (std::size_t k = 0; k < mu.size(); ++k) l.shapes.push_back(choices[k][idx[k]]);
      out.push_back(std::move(l));
      std::size_t k = 0;
      while (k < mu.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == mu.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FdModule hecke_factor(const Partition& shape, int charge) {
  if (shape.empty()) {
    FdModule m = FdModule::zero(1, 0, {0});
    m.dim = 1;
    return m;
  }
  return seminormal_simple(shape, charge);
}

FdModule simple_module(const Composition& mu, const std::vector<Partition>& shapes, const WeightDatum& lam) {
  const int charge = single_charge(lam);
  if (shapes.size() != mu.size()) throw InvalidArgument("one shape per block is required");
  const int r = static_cast<int>(mu.size());
  std::vector<FdModule> factors;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const int size = shapes[k].empty() ? 0 : partition_size(shapes[k]);
    if (size != mu[k]) throw InvalidArgument("shape size differs from its block");
    factors.push_back(shapes[k].empty() ? hecke_factor(shapes[k], charge)
                                        : ev_pullback(hecke_factor(shapes[k], charge), lam));
  }
  return induce(character_module(r, mu, tensor_hecke(factors, mu)), mu);
}

FdModule simple_module(const SimpleLabel& label, const WeightDatum& lam) {
  return simple_module(label.mu, label.shapes, lam);
}

FdModule vacuum_module(int r) {
  FdModule m = FdModule::zero(r, 0);
  m.dim = 1;
  return m;
}

FdModule forget_torus(const FdModule& M) {
  FdModule out = M;
  out.r = 1;
  for (auto& t : out.t) t = Matrix::identity(M.dim);
  return out;
}

std::map<Composition, FdModule> functor_F(const FdModule& N) {
  std::map<Composition, FdModule> out;
  for (const Composition& mu : compositions(N.r, N.n)) {
    const Subspace s = isotypic(N, mu);
    out.emplace(mu, forget_torus(restrict_to(restrict_blocks(N, mu), s)));
  }
  return out;
}

FdModule functor_G(int r, int n, const std::map<Composition, FdModule>& P) {
  FdModule out = zero_module(r, n);
  for (const auto& [mu, Pm] : P) {
    if (Pm.dim == 0) continue;
    out = direct_sum(out, induce(character_module(r, mu, Pm), mu));
  }
  return out;
}

bool block_starts_satisfy(const FdModule& P, const Composition& mu, const WeightDatum& lam) {
  const std::vector<Scalar> c = f_lambda_coeffs(lam);
  int start = 1;
  for (int m : mu) {
    if (m > 0 && !poly_at(P.gen_X(start), c).is_zero()) return false;
    start += m;
  }
  return true;
}

bool satisfies_f_lambda(const FdModule& M, const WeightDatum& lam) {
  if (M.n == 0 || M.dim == 0) return true;
  return poly_at(M.gen_X(1), f_lambda_coeffs(lam)).is_zero();
}

std::vector<BranchSummand> restrict_branch(const FdModule& M) {
  if (M.n < 1) throw InvalidArgument("restriction needs n >= 1");
  std::vector<BranchSummand> out;
  if (M.dim == 0) return out;
  const Composition split{M.n - 1, 1};
  for (int k = 1; k <= M.r; ++k) {
    const Subspace sk = column_space(character_projector(M.gen_t(M.n), M.r, k));
    for (const auto& [a, sub] : split_by_eigenvalue(M.gen_X(M.n), sk)) {
      out.push_back({k, a, submodule_by_subspace(M, split, sub, M.r)});
    }
  }
  return out;
}

std::vector<BranchPrediction> predict_branch(const SimpleLabel& label, const WeightDatum& lam) {
  const int charge = single_charge(lam);
  const Composition& mu = label.mu;
  std::vector<BranchPrediction> out;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] == 0) continue;
    const FdModule L = hecke_factor(label.shapes[k], charge);
    long others = 1;
    for (std::size_t l = 0; l < mu.size(); ++l) {
      if (l != k) others *= label.shapes[l].empty() ? 1 : count_standard_tableaux(label.shapes[l]);
    }
    Composition mu2 = mu;
    --mu2[k];
    for (const auto& [a, mult] : eigen_exponents(L.gen_X(mu[k]))) {
      const int da = e_a(L, a).dim;
      if (da != mult) throw CheckFailure("e_a dimension differs from the eigenvalue multiplicity");
      const Partition& sh = label.shapes[k];
      Partition smaller;
      bool found = false;
      for (std::size_t row = 0; row < sh.size(); ++row) {
        const bool removable = row + 1 == sh.size() || sh[row + 1] < sh[row];
        const int c = sh[row] - 1 - static_cast<int>(row);
        if (removable && charge + 2 * c == a) {
          smaller = sh;
          if (--smaller[row] == 0) smaller.pop_back();
          found = true;
        }
      }
      if (!found) throw CheckFailure("no removable box has eigenvalue q^" + std::to_string(a));
      BranchPrediction p;
      p.k = static_cast<int>(k) + 1;
      p.a = a;
      p.dim = static_cast<int>(multinomial(mu2) * others * da);
      p.label = label;
      p.label.mu = mu2;
      p.label.shapes[k] = smaller;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::map<int, int> content_of(const std::vector<int>& exponents) {
  std::map<int, int> g;
  for (int e : exponents) ++g[e];
  return g;
}

std::string BlockLabel::str() const {
  std::string s = "mu=(";
  for (std::size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu[k]);
  s += ") gamma={";
  bool first = true;
  for (const auto& [j, c] : gamma) {
    s += (first ? "" : ",") + std::to_string(j) + ":" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

std::map<BlockLabel, Subspace> blocks(const FdModule& M) {
  std::map<BlockLabel, Subspace> out;
  int total = 0;
  for (const Composition& mu : compositions(M.r, M.n)) {
    const Subspace iso = isotypic_component(M, mu);
    if (iso.dim() == 0) continue;
    std::vector<std::pair<std::vector<int>, Subspace>> pieces{{{}, iso}};
    for (int j = 1; j <= M.n; ++j) {
      std::vector<std::pair<std::vector<int>, Subspace>> next;
      for (const auto& [tuple, sub] : pieces) {
        for (const auto& [a, part] : split_by_eigenvalue(M.gen_X(j), sub)) {
          std::vector<int> t2 = tuple;
          t2.push_back(a);
          next.emplace_back(std::move(t2), part);
        }
      }
      pieces = std::move(next);
    }
    std::map<std::map<int, int>, Subspace> grouped;
    for (const auto& [tuple, sub] : pieces) {
      auto g = content_of(tuple);
      auto it = grouped.find(g);
      if (it == grouped.end()) {
        grouped.emplace(g, sub);
      } else {
        it->second = subspace_sum(it->second, sub);
      }
    }
    for (auto& [g, sub] : grouped) {
      restrict_to(M, sub);  // throws unless the slice is a submodule
      total += sub.dim();
      out.emplace(BlockLabel{mu, g}, std::move(sub));
    }
  }
  if (total != M.dim) throw CheckFailure("block slices do not exhaust the module");
  return out;
}

FdModule functor_e(const FdModule& M, int a, int k) {
  if (M.n < 1) throw InvalidArgument("e needs n >= 1");
  if (k < 1 || k > M.r) throw InvalidArgument("character label out of range");
  if (M.dim == 0) return zero_module(M.r, M.n - 1);
  const Subspace sk = column_space(character_projector(M.gen_t(M.n), M.r, k));
  const auto parts = split_by_eigenvalue(M.gen_X(M.n), sk);
  auto it = parts.find(a);
  if (it == parts.end()) return zero_module(M.r, M.n - 1);
  return submodule_by_subspace(M, {M.n - 1, 1}, it->second, M.r);
}

FdModule functor_f(const FdModule& M, int a, int k, const WeightDatum& lam) {
  const int charge = single_charge(lam);
  const int r = M.r;
  const int n = M.n;
  if (k < 1 || k > r) throw InvalidArgument("character label out of range");
  if (M.dim == 0) return zero_module(r, n + 1);
  const auto mb = blocks(M);
  if (mb.size() != 1) throw InvalidArgument("f expects a module concentrated in one block");
  BlockLabel target = mb.begin()->first;
  ++target.mu[static_cast<std::size_t>(k - 1)];
  ++target.gamma[a];

  // M (x) V_k over the finite parabolic subalgebra for (n, 1)
  FdModule W = FdModule::zero(r, n + 1, {n, 1});
  W.dim = M.dim;
  for (int j = 1; j <= n; ++j) {
    W.t[static_cast<std::size_t>(j - 1)] = M.gen_t(j);
    W.X[static_cast<std::size_t>(j - 1)] = M.gen_X(j);
    W.Xinv[static_cast<std::size_t>(j - 1)] = M.gen_Xinv(j);
  }
  W.t[static_cast<std::size_t>(n)] = zeta(r, k - 1) * Matrix::identity(M.dim);
  W.X[static_cast<std::size_t>(n)] = Matrix::identity(M.dim);
  W.Xinv[static_cast<std::size_t>(n)] = Matrix::identity(M.dim);
  for (auto& [i, gi] : W.g) gi = M.gen_g(i);

  FdModule I = induce_impl(W, {n, 1}, false);
  const Scalar qq = Scalar::q() - Scalar::q(-1);
  I.X[0] = Scalar::q(charge) * Matrix::identity(I.dim);
  I.Xinv[0] = Scalar::q(-charge) * Matrix::identity(I.dim);
  for (int j = 1; j <= n; ++j) {
    const Matrix& g = I.gen_g(j);
    const Matrix ginv = g - qq * (e_action(I, j, j + 1));
    I.X[static_cast<std::size_t>(j)] = g * I.X[static_cast<std::size_t>(j - 1)] * g;
    I.Xinv[static_cast<std::size_t>(j)] = ginv * I.Xinv[static_cast<std::size_t>(j - 1)] * ginv;
  }
  const auto ib = blocks(I);
  auto it = ib.find(target);
  if (it == ib.end()) return zero_module(r, n + 1);
  return restrict_to(I, it->second);
}

}  // namespace yhk
