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

#ifndef YHK_MODULE_HPP
#define YHK_MODULE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yhk/identities.hpp"
#include "yhk/matrix.hpp"
#include "yhk/pbw.hpp"
#include "yhk/perm.hpp"

namespace yhk {

/// A finite-dimensional module over the affine algebra, or over its
/// parabolic subalgebra for a composition `blocks`, given by one matrix per
/// generator.
///
/// Only g_i with s_i in the Young subgroup of `blocks` carry a matrix. With
/// r = 1 every t_j is the identity and the same data describes a module over
/// the affine Hecke algebra (T_i = g_i, Y_j = X_j).
struct FdModule {
  int r = 1;
  int n = 0;
  Composition blocks;
  int dim = 0;
  std::vector<Matrix> t;     // t[j-1]
  std::vector<Matrix> X;     // X[j-1]
  std::vector<Matrix> Xinv;  // Xinv[j-1]
  std::map<int, Matrix> g;   // g[i] for allowed i

  /// All matrices zero-sized; blocks defaults to (n).
  static FdModule zero(int r, int n, Composition blocks = {});

  bool has_g(int i) const { return g.count(i) != 0; }
  const Matrix& gen_t(int j) const { return t.at(static_cast<std::size_t>(j - 1)); }
  const Matrix& gen_X(int j) const { return X.at(static_cast<std::size_t>(j - 1)); }
  const Matrix& gen_Xinv(int j) const { return Xinv.at(static_cast<std::size_t>(j - 1)); }
  const Matrix& gen_g(int i) const;
  /// Indices i with a g_i matrix, ascending.
  std::vector<int> g_indices() const;
};

/// The composition (n) padded with zeros to r parts.
Composition full_blocks(int r, int n);

/// Relation suite on the matrices. Families: torus, g-t, braid, quadratic,
/// X-inverse, X-commute, g-X.
CheckReport check_module_relations(const FdModule& m);

/// Matrix of a PBW element. Its permutations must lie in the Young subgroup
/// of m.blocks.
Matrix act(const FdModule& m, const PbwElement& a);

/// Matrix of e_{j,k} = (1/r) sum_s t_j^s t_k^{-s}.
Matrix e_action(const FdModule& m, int j, int k);

/// Matrix of g_w for w in the Young subgroup of m.blocks.
Matrix act_gw(const FdModule& m, const Perm& w);

/// The submodule on an invariant subspace; throws CheckFailure when the
/// subspace is not invariant.
FdModule restrict_to(const FdModule& m, const Subspace& s);

/// Forgets g_i outside the Young subgroup of `blocks`.
FdModule restrict_blocks(const FdModule& m, const Composition& blocks);

FdModule direct_sum(const FdModule& a, const FdModule& b);

/// The subspace of all vectors.
Subspace full_space(int dim);

/// (label, value) pairs; equal for isomorphic semisimple modules.
struct TraceInvariants {
  int dim = 0;
  std::vector<std::pair<std::string, Scalar>> values;

  friend bool operator==(const TraceInvariants& a, const TraceInvariants& b) {
    return a.dim == b.dim && a.values == b.values;
  }
  friend bool operator!=(const TraceInvariants& a, const TraceInvariants& b) { return !(a == b); }
};

/// Traces of every generator, of every product of two generators, and of
/// every product of three generators drawn from {t_1, X at each block start,
/// allowed g_i}.
TraceInvariants trace_invariants(const FdModule& m);

/// Point at which matrices are evaluated to locate eigenvalues.
const CycloNum& probe_point();

/// Eigenvalues of a (all of the form q^j) with algebraic multiplicities,
/// ascending in j. Throws DomainError when some eigenvalue is not a power of
/// q with |j| <= max_exponent.
std::vector<std::pair<int, int>> eigen_exponents(const Matrix& a, int max_exponent = 64);

/// Generalized eigenspace of a for eigenvalue c.
Subspace generalized_eigenspace(const Matrix& a, const Scalar& c);

/// Generalized eigenspaces of a restricted to the invariant subspace s,
/// keyed by eigenvalue exponent j (eigenvalue q^j).
std::map<int, Subspace> split_by_eigenvalue(const Matrix& a, const Subspace& s);

}  // namespace yhk

#endif  // YHK_MODULE_HPP
