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

#include "yhk/errors.hpp"
#include "yhk/identities.hpp"

namespace yhk {
namespace {

std::string first_failure(const CheckReport& rep) {
  for (const auto& c : rep.items) {
    if (!c.pass) return c.family + ": " + c.identity;
  }
  return "";
}

TEST(Identities, AllFamiliesSmallRanks) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 2; n <= 3; ++n) {
      CheckReport rep = check_all_identities(r, n, 7);
      EXPECT_TRUE(rep.all_pass()) << "r=" << r << " n=" << n << " " << first_failure(rep);
      EXPECT_EQ(rep.families(), identity_families());
    }
  }
}

TEST(Identities, XggxExamples) {
  EXPECT_TRUE(check_xggx(2, 3, {2, 1}, 1).all_pass());
  EXPECT_TRUE(check_xggx(2, 2, {1, 1}, 1).all_pass());
  CheckReport triv = check_xggx(2, 2, {1, 1}, 0);
  EXPECT_TRUE(triv.all_pass());
  EXPECT_THROW(check_xggx(2, 2, {1, 1}, 2), InvalidArgument);
  EXPECT_THROW(check_xggx(2, 2, {2, 1}, 0), InvalidArgument);
}

TEST(Identities, ThetaSingleRank) {
  CheckReport rep = check_theta(2, 2);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.items.size(), 3u);
}

TEST(Identities, ReportBookkeeping) {
  CheckReport rep;
  rep.record("a", "x", true);
  rep.record("b", "y", false);
  rep.record("a", "z", true);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_TRUE(rep.family_pass("a"));
  EXPECT_FALSE(rep.family_pass("b"));
  EXPECT_EQ(rep.failures(), 1u);
  EXPECT_EQ(rep.families(), (std::vector<std::string>{"a", "b"}));
}

}  // namespace
}  // namespace yhk
