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

#include "yhk/hecke.hpp"

#include <algorithm>
#include <map>

#include "yhk/errors.hpp"

namespace yhk {

AlgebraSpec hecke_spec(int n) {
  AlgebraSpec s{1, n};
  s.validate();
  return s;
}

HeckeElement gen_T(int n, int i) { return gen_g(hecke_spec(n), i); }
HeckeElement gen_Y(int n, int j, int power) { return gen_X(hecke_spec(n), j, power); }

HeckeElement hecke_mult(const HeckeElement& a, const HeckeElement& b) {
  if (a.r() != 1 || b.r() != 1) throw InvalidArgument("Hecke elements have r = 1");
  return mult(a, b);
}

int partition_size(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) throw InvalidArgument("not a partition");
    s += p[i];
  }
  return s;
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

void tableaux_rec(const Partition& shape, std::vector<int>& filled, Tableau& cur, std::vector<Tableau>& out) {
  const int n = partition_size(shape);
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t row = 0; row < shape.size(); ++row) {
    const int col = filled[row];
    if (col >= shape[row]) continue;
    if (row > 0 && filled[row - 1] <= col) continue;
    ++filled[row];
    cur.emplace_back(static_cast<int>(row), col);
    tableaux_rec(shape, filled, cur, out);
    cur.pop_back();
    --filled[row];
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidArgument("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  partition_size(shape);
  std::vector<Tableau> out;
  std::vector<int> filled(shape.size(), 0);
  Tableau cur;
  tableaux_rec(shape, filled, cur, out);
  return out;
}

long count_standard_tableaux(const Partition& shape) {
  // hook length formula
  const int n = partition_size(shape);
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k) ++below;
      den *= shape[i] - j + below;
    }
  }
  mpz_class q = num / den;
  return q.get_si();
}

FdModule seminormal_simple(const Partition& shape, int charge) {
  const int n = partition_size(shape);
  const std::vector<Tableau> tabs = standard_tableaux(shape);
  const int dim = static_cast<int>(tabs.size());
  std::map<Tableau, int> index;
  for (int k = 0; k < dim; ++k) index.emplace(tabs[static_cast<std::size_t>(k)], k);
  auto content = [](const std::pair<int, int>& b) { return b.second - b.first; };

  FdModule M = FdModule::zero(1, n, {n});
  M.dim = dim;
  for (int j = 1; j <= n; ++j) {
    std::vector<Scalar> y, yi;
    for (const Tableau& t : tabs) {
      const int e = charge + 2 * content(t[static_cast<std::size_t>(j - 1)]);
      y.push_back(Scalar::q(e));
      yi.push_back(Scalar::q(-e));
    }
    M.t[static_cast<std::size_t>(j - 1)] = Matrix::identity(dim);
    M.X[static_cast<std::size_t>(j - 1)] = Matrix::diagonal(y);
    M.Xinv[static_cast<std::size_t>(j - 1)] = Matrix::diagonal(yi);
  }
  const Scalar qq = Scalar::q() - Scalar::q(-1);
  for (auto& [k, T] : M.g) {
    T = Matrix(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const Tableau& t = tabs[static_cast<std::size_t>(col)];
      const auto bk = t[static_cast<std::size_t>(k - 1)];
      const auto bk1 = t[static_cast<std::size_t>(k)];
      if (bk.first == bk1.first) {
        T(col, col) = Scalar::q();
        continue;
      }
      if (bk.second == bk1.second) {
        T(col, col) = -Scalar::q(-1);
        continue;
      }
      Tableau s = t;
      std::swap(s[static_cast<std::size_t>(k - 1)], s[static_cast<std::size_t>(k)]);
      const int row_s = index.at(s);
      const int diff = content(bk) - content(bk1);
      const Scalar at = qq / (Scalar(1L) - Scalar::q(2 * diff));
      const Scalar as = qq / (Scalar(1L) - Scalar::q(-2 * diff));
      T(col, col) = at;
      T(row_s, col) = bk1.first > bk.first ? Scalar(1L) : Scalar(1L) + at * as;
    }
  }
  return M;
}

FdModule ev_pullback(const FdModule& M, const WeightDatum& lam) {
  if (M.r != 1) throw InvalidArgument("ev_pullback expects a Hecke module (r = 1)");
  if (M.n == 0 || M.dim == 0) return M;
  const std::vector<Scalar> c = f_lambda_coeffs(lam);
  Matrix f(M.dim, M.dim);
  Matrix p = Matrix::identity(M.dim);
  for (const Scalar& ck : c) {
    f += ck * p;
    p = p * M.gen_X(1);
  }
  if (!f.is_zero()) throw CheckFailure("f_lambda(Y_1) does not vanish on the module");
  return M;
}

FdModule drop_last_strand(const FdModule& M) {
  if (M.n < 1) throw InvalidArgument("no strand to drop");
  Composition b = M.blocks;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    if (*it > 0) {
      --*it;
      break;
    }
  }
  FdModule out = FdModule::zero(M.r, M.n - 1, b);
  out.dim = M.dim;
  for (int j = 0; j < M.n - 1; ++j) {
    out.t[static_cast<std::size_t>(j)] = M.t[static_cast<std::size_t>(j)];
    out.X[static_cast<std::size_t>(j)] = M.X[static_cast<std::size_t>(j)];
    out.Xinv[static_cast<std::size_t>(j)] = M.Xinv[static_cast<std::size_t>(j)];
  }
  for (auto& [i, gi] : out.g) gi = M.gen_g(i);
  return out;
}

FdModule delta_a(const FdModule& M, int a) {
  if (M.n < 1) throw InvalidArgument("delta_a needs n >= 1");
  Composition b = M.blocks;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    if (*it > 0) {
      --*it;
      break;
    }
  }
  b.push_back(1);
  FdModule P = restrict_blocks(M, b);
  if (M.dim == 0) return P;
  return restrict_to(P, generalized_eigenspace(M.gen_X(M.n), Scalar::q(a)));
}

FdModule e_a(const FdModule& M, int a) { return drop_last_strand(delta_a(M, a)); }

}  // namespace yhk
