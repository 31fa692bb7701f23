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

#ifndef YHK_PBW_HPP
#define YHK_PBW_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yhk/perm.hpp"
#include "yhk/scalar.hpp"

namespace yhk {

inline constexpr int kMaxRank = 8;

/// X^alpha t^beta g_w with n <= kMaxRank. Unused slots are zero.
struct PbwMonomial {
  std::array<std::int8_t, kMaxRank> alpha{};
  std::array<std::uint8_t, kMaxRank> beta{};
  std::array<std::uint8_t, kMaxRank> w{};  // one-line, 1-based; 0 past n

  static PbwMonomial identity(int n);

  Perm perm(int n) const;
  void set_perm(const Perm& p);
  std::vector<int> alpha_vec(int n) const;
  std::vector<int> beta_vec(int n) const;
  bool is_torus_part() const;  // w is the identity

  friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.w == b.w;
  }
  /// Deterministic output order: w first, then alpha, then beta.
  friend bool operator<(const PbwMonomial& a, const PbwMonomial& b);
};

struct PbwMonomialHash {
  std::size_t operator()(const PbwMonomial& m) const noexcept;
};

/// Ranks and guards shared by every element of one algebra.
struct AlgebraSpec {
  int r = 1;
  int n = 1;
  std::size_t max_support = 2'000'000;

  void validate() const;
  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return a.r == b.r && a.n == b.n; }
};

/// Element of the affine Yokonuma-Hecke algebra in PBW normal form.
class PbwElement {
 public:
  using Terms = std::unordered_map<PbwMonomial, Scalar, PbwMonomialHash>;

  PbwElement() = default;
  explicit PbwElement(const AlgebraSpec& spec) : spec_(spec) { spec_.validate(); }

  const AlgebraSpec& spec() const { return spec_; }
  int r() const { return spec_.r; }
  int n() const { return spec_.n; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Terms in deterministic order.
  std::vector<std::pair<PbwMonomial, Scalar>> sorted_terms() const;
  Scalar coeff(const PbwMonomial& m) const;

  /// Adds c * m; drops the entry when it cancels.
  void add_term(const PbwMonomial& m, const Scalar& c);

  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  PbwElement& operator*=(const Scalar& c);
  PbwElement operator-() const;

  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(const Scalar& c, PbwElement a) { return a *= c; }
  friend bool operator==(const PbwElement& a, const PbwElement& b);
  friend bool operator!=(const PbwElement& a, const PbwElement& b) { return !(a == b); }

  /// Whether every monomial has w = identity.
  bool in_torus_part() const;
  /// Whether every monomial has beta = 0 and w = identity.
  bool is_x_polynomial() const;

  std::string str() const;

 private:
  void check_guard() const;

  AlgebraSpec spec_;
  Terms terms_;
};

// Generators. Indices are 1-based and range-checked.
PbwElement one(const AlgebraSpec& s);
PbwElement scalar_element(const AlgebraSpec& s, const Scalar& c);
PbwElement gen_t(const AlgebraSpec& s, int j, int power = 1);
PbwElement gen_X(const AlgebraSpec& s, int j, int power = 1);
PbwElement gen_g(const AlgebraSpec& s, int i);
PbwElement gen_g_inv(const AlgebraSpec& s, int i);
/// e_{j,k} = (1/r) sum_s t_j^s t_k^{-s}; gen_e(s, i) = e_{i,i+1}.
PbwElement gen_e_pair(const AlgebraSpec& s, int j, int k);
PbwElement gen_e(const AlgebraSpec& s, int i);
/// Theta_i = q g_i (1 - X_i X_{i+1}^{-1}) + (1 - q^2) e_i.
PbwElement gen_theta(const AlgebraSpec& s, int i);
/// g_w as a single monomial.
PbwElement gen_gw(const AlgebraSpec& s, const Perm& w);
/// X^alpha t^beta g_w with coefficient c.
PbwElement monomial_element(const AlgebraSpec& s, const std::vector<int>& alpha, const std::vector<int>& beta,
                            const Perm& w, const Scalar& c = Scalar(1L));

/// The product a * b in PBW normal form.
PbwElement mult(const PbwElement& a, const PbwElement& b);
/// g_i * b.
PbwElement left_mult_g(int i, const PbwElement& b);

/// Delta_i(f) = (f - s_i f) / (1 - X_i X_{i+1}^{-1}) for an X-polynomial f.
PbwElement divided_difference(const PbwElement& f, int i);
/// s_i acting on the X and t parts of a torus-part element.
PbwElement permute_torus_part(const PbwElement& f, const Perm& w);

/// Sum over the distinct S_n-images of (alpha, beta) of X^{w alpha} t^{w beta}.
PbwElement orbit_sum(const AlgebraSpec& s, const std::vector<int>& alpha, const std::vector<int>& beta);
/// Commutes with t_1, X_1, g_1, ..., g_{n-1}.
bool is_central(const PbwElement& z);

/// Writes a as sum_v g_v f_v with f_v in the torus part P(T).
std::map<Perm, PbwElement> left_normal_form(const PbwElement& a);

/// Writes a as sum over minimal coset representatives tau of g_tau h_tau with
/// h_tau in the parabolic subalgebra for mu.
std::map<Perm, PbwElement> expand_left_cosets(const PbwElement& a, const Composition& mu);

}  // namespace yhk

#endif  // YHK_PBW_HPP
