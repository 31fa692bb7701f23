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

#ifndef YHK_REP_HPP
#define YHK_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "yhk/hecke.hpp"
#include "yhk/module.hpp"
#include "yhk/quotient.hpp"

namespace yhk {

// Characters of Z/r are labelled 1..r; label k sends t to zeta_r^(k-1).

/// iota(mu) = (1^mu_1, ..., r^mu_r).
std::vector<int> character_pattern(const Composition& mu);

/// Projector onto the vectors on which each t_j acts by the character
/// pattern[j-1].
Matrix weight_projector(const FdModule& M, const std::vector<int>& pattern);

/// The weight space for iota(mu); a submodule for the parabolic subalgebra of mu.
Subspace isotypic(const FdModule& M, const Composition& mu);

/// Sum of the weight spaces over all rearrangements of iota(mu); a submodule.
Subspace isotypic_component(const FdModule& M, const Composition& mu);

/// Induction from the parabolic subalgebra of mu (W.blocks == mu) to the full
/// algebra on the basis g_tau (x) w, tau over coset_reps(mu) in order.
FdModule induce(const FdModule& W, const Composition& mu);

/// V(mu) (x) P: a Hecke-side module P (r = 1, blocks mu) with t_j acting by
/// the character iota(mu)_j.
FdModule character_module(int r, const Composition& mu, const FdModule& P);

/// The module L_1 (x) ... (x) L_r over the tensor product of affine Hecke
/// algebras for mu; factor k lives on the strands of block k.
FdModule tensor_hecke(const std::vector<FdModule>& factors, const Composition& mu);

/// One simple module per (mu, shapes) with |shapes[k]| = mu[k].
struct SimpleLabel {
  Composition mu;
  std::vector<Partition> shapes;

  std::string str() const;
  friend bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
    return a.mu != b.mu ? a.mu < b.mu : a.shapes < b.shapes;
  }
  friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) {
    return a.mu == b.mu && a.shapes == b.shapes;
  }
};

/// All labels for rank r and size n, ordered by composition then shapes.
std::vector<SimpleLabel> simple_labels(int r, int n);

/// The seminormal factor for a shape (the trivial module when it is empty).
FdModule hecke_factor(const Partition& shape, int charge);

/// S_mu(L.) with L_k the seminormal simple of shapes[k]; requires |lambda| = 1.
FdModule simple_module(const Composition& mu, const std::vector<Partition>& shapes, const WeightDatum& lam);
FdModule simple_module(const SimpleLabel& label, const WeightDatum& lam);

/// The trivial module of the rank-0 algebra.
FdModule vacuum_module(int r);

/// Strips the t action: the Hecke-side module with the same X and g.
FdModule forget_torus(const FdModule& M);

/// F: for each mu, the weight space for iota(mu) with T = g and Y = X, as a
/// module over the tensor Hecke algebra of mu. Every composition is present.
std::map<Composition, FdModule> functor_F(const FdModule& N);

/// G: the direct sum over mu of induce(V(mu) (x) P_mu).
FdModule functor_G(int r, int n, const std::map<Composition, FdModule>& P);

/// prod_i (X_{mubar^k+1} - q^i)^lambda_i over the nonempty blocks all vanish.
bool block_starts_satisfy(const FdModule& P, const Composition& mu, const WeightDatum& lam);
/// f_lambda(X_1) vanishes on M.
bool satisfies_f_lambda(const FdModule& M, const WeightDatum& lam);

/// One summand of the restriction to the subalgebra for (n-1, 1).
struct BranchSummand {
  int k = 0;  // t_n acts by character k
  int a = 0;  // X_n acts with generalized eigenvalue q^a
  FdModule module;  // over the algebra of rank n-1
};

/// Splits M by the t_n character and the X_n generalized eigenvalue.
std::vector<BranchSummand> restrict_branch(const FdModule& M);

/// The predicted summand for a simple module: removing from shapes[k-1] the
/// box whose eigenvalue is q^a.
struct BranchPrediction {
  int k = 0;
  int a = 0;
  int dim = 0;
  SimpleLabel label;
};

/// Predicted branching of S_mu(L.), with e_a taken on the Hecke side.
std::vector<BranchPrediction> predict_branch(const SimpleLabel& label, const WeightDatum& lam);

/// The multiset of eigenvalue exponents, as exponent -> count.
std::map<int, int> content_of(const std::vector<int>& exponents);

struct BlockLabel {
  Composition mu;
  std::map<int, int> gamma;

  std::string str() const;
  friend bool operator<(const BlockLabel& a, const BlockLabel& b) {
    return a.mu != b.mu ? a.mu < b.mu : a.gamma < b.gamma;
  }
  friend bool operator==(const BlockLabel& a, const BlockLabel& b) { return a.mu == b.mu && a.gamma == b.gamma; }
};

/// M[mu, gamma]: isotypic components intersected with joint generalized
/// eigenspaces of X_1..X_n grouped by content. Each slice is checked to be a
/// submodule and the slices are checked to exhaust M.
std::map<BlockLabel, Subspace> blocks(const FdModule& M);

/// e_{a,k}: the part of the restriction on which t_n acts by character k and
/// X_n by generalized eigenvalue q^a, as a module of rank n-1.
FdModule functor_e(const FdModule& M, int a, int k);

/// f_{a,k} for |lambda| = 1: finite induction of M (x) V_k from rank n to
/// n+1 with X_1 = q^charge, then the block where the content gains q^a and
/// mu gains a box in slot k. M must be homogeneous in its isotypic type.
FdModule functor_f(const FdModule& M, int a, int k, const WeightDatum& lam);

}  // namespace yhk

#endif  // YHK_REP_HPP
