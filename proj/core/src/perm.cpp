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

#include "yhk/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yhk/errors.hpp"

namespace yhk {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InvalidArgument("negative permutation size");
  std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw InvalidArgument("simple transposition index out of range");
  return Perm(n).right_simple(i);
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm w(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw InvalidArgument("word letter out of range");
    w = w.right_simple(i);
  }
  return w;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    for (std::size_t j = i + 1; j < img_.size(); ++j) {
      if (img_[i] > img_[j]) ++inv;
    }
  }
  return inv;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

int Perm::position(int v) const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] == v) return static_cast<int>(i) + 1;
  }
  throw InvalidArgument("value not in permutation");
}

Perm Perm::left_simple(int i) const {
  Perm p = *this;
  for (auto& v : p.img_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return p;
}

Perm Perm::right_simple(int i) const {
  Perm p = *this;
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Perm operator*(const Perm& u, const Perm& w) {
  if (u.size() != w.size()) throw InvalidArgument("permutation size mismatch");
  Perm p;
  p.img_.resize(w.img_.size());
  for (std::size_t i = 0; i < w.img_.size(); ++i) p.img_[i] = u(w.img_[i]);
  return p;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < img_.size(); ++i) os << (i ? "," : "") << img_[i];
  os << "]";
  return os.str();
}

std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> rev;
  Perm cur = w;
  for (;;) {
    int d = 0;
    for (int i = 1; i < cur.size(); ++i) {
      if (cur(i) > cur(i + 1)) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    rev.push_back(d);
    cur = cur.right_simple(d);
  }
  return {rev.rbegin(), rev.rend()};
}

namespace {

void collect_words(const Perm& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  bool any = false;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      any = true;
      suffix.push_back(i);
      collect_words(w.right_simple(i), suffix, out);
      suffix.pop_back();
    }
  }
  if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
  if (u.size() != w.size()) throw InvalidArgument("permutation size mismatch");
  Perm a = u, b = w;
  for (;;) {
    if (b.is_identity()) return a.is_identity();
    int d = 0;
    for (int i = 1; i < b.size(); ++i) {
      if (b(i) > b(i + 1)) {
        d = i;
        break;
      }
    }
    // lifting property: a <= b iff min(a, a s_d) <= b s_d
    if (a(d) > a(d + 1)) a = a.right_simple(d);
    b = b.right_simple(d);
  }
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int composition_size(const Composition& mu) {
  int s = 0;
  for (int m : mu) {
    if (m < 0) throw InvalidArgument("composition parts must be nonnegative");
    s += m;
  }
  return s;
}

namespace {

void compositions_rec(int r, int n, Composition& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    cur.push_back(k);
    compositions_rec(r, n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int r, int n) {
  if (r < 1 || n < 0) throw InvalidArgument("compositions: need r >= 1 and n >= 0");
  std::vector<Composition> out;
  Composition cur;
  compositions_rec(r, n, cur, out);
  return out;
}

int block_of(const Composition& mu, int j) {
  int acc = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    acc += mu[k];
    if (j <= acc) return static_cast<int>(k);
  }
  throw InvalidArgument("position beyond composition");
}

int partial_sum(const Composition& mu, int k) {
  int acc = 0;
  for (int i = 0; i < k && i < static_cast<int>(mu.size()); ++i) acc += mu[static_cast<std::size_t>(i)];
  return acc;
}

bool in_young_subgroup(const Perm& w, const Composition& mu) {
  for (int j = 1; j <= w.size(); ++j) {
    if (block_of(mu, j) != block_of(mu, w(j))) return false;
  }
  return true;
}

bool simple_in_young_subgroup(int i, const Composition& mu) { return block_of(mu, i) == block_of(mu, i + 1); }

std::vector<Perm> coset_reps(const Composition& mu) {
  const int n = composition_size(mu);
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n)) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      if (simple_in_young_subgroup(i, mu) && w(i) > w(i + 1)) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::pair<Perm, Perm> coset_factorize(const Perm& w, const Composition& mu) {
  if (composition_size(mu) != w.size()) throw InvalidArgument("composition does not match permutation size");
  std::vector<int> tau = w.one_line();
  int start = 0;
  for (int m : mu) {
    std::sort(tau.begin() + start, tau.begin() + start + m);
    start += m;
  }
  Perm t(tau);
  Perm u = t.inverse() * w;
  return {t, u};
}

Perm transposition(int n, int a, int b) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
  return Perm(v);
}

}  // namespace yhk
