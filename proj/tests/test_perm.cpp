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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "yhk/errors.hpp"
#include "yhk/perm.hpp"

namespace yhk {
namespace {

// Tableau criterion: u <= w iff sorted prefixes compare entrywise.
bool bruhat_tableau(const Perm& u, const Perm& w) {
  const int n = u.size();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> a(u.one_line().begin(), u.one_line().begin() + i);
    std::vector<int> b(w.one_line().begin(), w.one_line().begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int k = 0; k < i; ++k) {
      if (a[static_cast<std::size_t>(k)] > b[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

TEST(Perm, ReducedWordExamples) {
  EXPECT_TRUE(reduced_word(Perm(3)).empty());
  EXPECT_EQ(reduced_word(Perm({3, 2, 1})), (std::vector<int>{1, 2, 1}));
  Perm s1s2 = Perm::simple(3, 1) * Perm::simple(3, 2);
  EXPECT_EQ(reduced_word(s1s2), (std::vector<int>{1, 2}));
  EXPECT_THROW(Perm({1, 1, 2}), InvalidArgument);
}

TEST(Perm, ReducedWordsAreReduced) {
  for (int n = 1; n <= 5; ++n) {
    for (const Perm& w : all_perms(n)) {
      auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(Perm::from_word(n, word), w);
    }
  }
}

TEST(Perm, BruhatExamples) {
  Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  EXPECT_TRUE(bruhat_leq(Perm(3), s1 * s2));
  EXPECT_TRUE(bruhat_leq(s1, s1 * s2));
  EXPECT_FALSE(bruhat_leq(s1, s2));
}

TEST(Perm, BruhatMatchesTableauCriterion) {
  for (int n = 1; n <= 4; ++n) {
    auto perms = all_perms(n);
    for (const Perm& u : perms) {
      for (const Perm& w : perms) EXPECT_EQ(bruhat_leq(u, w), bruhat_tableau(u, w));
    }
  }
}

TEST(Perm, SubwordsLieBelow) {
  for (const Perm& w : all_perms(4)) {
    auto word = reduced_word(w);
    const std::size_t k = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) sub.push_back(word[i]);
      }
      EXPECT_TRUE(bruhat_leq(Perm::from_word(4, sub), w));
    }
  }
}

TEST(Perm, CosetRepsExamples) {
  EXPECT_EQ(coset_reps({1, 1}).size(), 2u);
  EXPECT_EQ(coset_reps({2, 0}).size(), 1u);
  EXPECT_EQ(coset_reps({1, 1, 1}).size(), 6u);
}

TEST(Perm, CosetRepsTileWithLengthsAdding) {
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const Composition& mu : compositions(r, n)) {
        auto reps = coset_reps(mu);
        std::vector<Perm> young;
        for (const Perm& u : all_perms(n)) {
          if (in_young_subgroup(u, mu)) young.push_back(u);
        }
        std::set<std::vector<int>> seen;
        for (const Perm& t : reps) {
          for (const Perm& u : young) {
            EXPECT_EQ((t * u).length(), t.length() + u.length());
            EXPECT_TRUE(seen.insert((t * u).one_line()).second);
          }
          // t = sigma (1, mubar^k + 1) with sigma fixing 1
          bool found = false;
          for (int k = 0; k < r && !found; ++k) {
            const int m = partial_sum(mu, k);
            if (m + 1 > n) continue;
            Perm sigma = t * transposition(n, 1, m + 1);
            if (sigma(1) == 1) found = true;
          }
          EXPECT_TRUE(found) << t.str();
        }
        EXPECT_EQ(static_cast<int>(seen.size()), static_cast<int>(all_perms(n).size()));
      }
    }
  }
}

TEST(Perm, CosetFactorizeExamples) {
  auto [t0, u0] = coset_factorize(Perm(2), {1, 1});
  EXPECT_TRUE(t0.is_identity() && u0.is_identity());
  auto [t1, u1] = coset_factorize(Perm::simple(2, 1), {2, 0});
  EXPECT_TRUE(t1.is_identity());
  EXPECT_EQ(u1, Perm::simple(2, 1));
  auto [t2, u2] = coset_factorize(Perm::simple(2, 1), {1, 1});
  EXPECT_EQ(t2, Perm::simple(2, 1));
  EXPECT_TRUE(u2.is_identity());
}

TEST(Perm, CosetFactorizeAll) {
  for (const Composition& mu : {Composition{2, 2}, Composition{1, 2, 1}, Composition{3, 0, 1}}) {
    auto reps = coset_reps(mu);
    for (const Perm& w : all_perms(4)) {
      auto [t, u] = coset_factorize(w, mu);
      EXPECT_EQ(t * u, w);
      EXPECT_EQ(w.length(), t.length() + u.length());
      EXPECT_TRUE(in_young_subgroup(u, mu));
      EXPECT_NE(std::find(reps.begin(), reps.end(), t), reps.end());
    }
  }
}

}  // namespace
}  // namespace yhk
