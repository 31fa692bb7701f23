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

#ifndef YHK_PERM_HPP
#define YHK_PERM_HPP

#include <string>
#include <utility>
#include <vector>

namespace yhk {

/// A permutation of {1..n} in one-line notation.
class Perm {
 public:
  Perm() = default;
  /// Identity of S_n.
  explicit Perm(int n);
  /// Validates bijectivity; throws InvalidArgument otherwise.
  explicit Perm(std::vector<int> one_line);

  /// The simple transposition s_i = (i, i+1) in S_n.
  static Perm simple(int n, int i);
  /// Product of simple transpositions s_{w[0]} s_{w[1]} ...
  static Perm from_word(int n, const std::vector<int>& word);

  int size() const { return static_cast<int>(img_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const;
  int length() const;
  Perm inverse() const;
  /// Position of value v, that is w^{-1}(v).
  int position(int v) const;

  /// s_i * w: swaps the values i and i+1.
  Perm left_simple(int i) const;
  /// w * s_i: swaps the entries in positions i and i+1.
  Perm right_simple(int i) const;

  /// (u * w)(i) = u(w(i)).
  friend Perm operator*(const Perm& u, const Perm& w);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  /// Lexicographic on one-line notation.
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string str() const;

 private:
  std::vector<int> img_;
};

/// Canonical reduced word, produced by repeatedly splitting off the leftmost
/// right descent: word(w) = word(w s_i) followed by i.
std::vector<int> reduced_word(const Perm& w);

/// All reduced words of w.
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

/// Bruhat order u <= w.
bool bruhat_leq(const Perm& u, const Perm& w);

/// All permutations of S_n in lexicographic order.
std::vector<Perm> all_perms(int n);

/// Exponent vector action (w a)_j = a_{w^{-1}(j)}.
template <typename T>
std::vector<T> act(const Perm& w, const std::vector<T>& a) {
  std::vector<T> out(a.size());
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = a[static_cast<std::size_t>(i - 1)];
  return out;
}

/// r-composition: r nonnegative parts.
using Composition = std::vector<int>;

int composition_size(const Composition& mu);
/// All r-compositions of n in lexicographic order, largest first part first.
std::vector<Composition> compositions(int r, int n);
/// The block index (0-based) containing position j (1-based), skipping empty parts.
int block_of(const Composition& mu, int j);
/// Partial sum mu_1 + ... + mu_k.
int partial_sum(const Composition& mu, int k);
/// Whether w lies in the Young subgroup S_mu.
bool in_young_subgroup(const Perm& w, const Composition& mu);
/// Whether s_i lies in S_mu.
bool simple_in_young_subgroup(int i, const Composition& mu);

/// Minimal-length left coset representatives of S_mu in S_n, sorted lexicographically.
std::vector<Perm> coset_reps(const Composition& mu);

/// w = tau * u with tau a minimal coset representative and u in S_mu.
std::pair<Perm, Perm> coset_factorize(const Perm& w, const Composition& mu);

/// The transposition (a, b) in S_n.
Perm transposition(int n, int a, int b);

}  // namespace yhk

#endif  // YHK_PERM_HPP
