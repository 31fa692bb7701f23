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

#ifndef YHK_IDENTITIES_HPP
#define YHK_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "yhk/pbw.hpp"

namespace yhk {

struct CheckResult {
  std::string family;
  std::string identity;
  bool pass = false;
};

/// Ordered list of identity checks, grouped into named families.
struct CheckReport {
  std::vector<CheckResult> items;

  void record(const std::string& family, const std::string& identity, bool pass);
  void append(const CheckReport& o);
  bool all_pass() const;
  /// Family names in first-seen order.
  std::vector<std::string> families() const;
  bool family_pass(const std::string& family) const;
  std::size_t failures() const;
};

/// The frozen list of identity families checked by the full suite.
const std::vector<std::string>& identity_families();

/// Defining relations and derived identities of the affine algebra, checked
/// by mult: braid, torus, g-t, quadratic, affine-X1, inverse-idempotent,
/// egge, giXj, xyyx, gxxg, ektbeta and commutator (on `random_f` seeded
/// Laurent polynomials).
CheckReport check_relations(int r, int n, std::uint64_t seed = 1, int random_f = 20);

/// Theta_i^2 and Theta_i X_j identities for every i.
CheckReport check_theta(int r, int n);

/// X_1 g_w for w = (1, mubar^k + 1) against its expansion.
CheckReport check_xggx(int r, int n, const Composition& mu, int k);
/// check_xggx over every r-composition of n and every k.
CheckReport check_xggx_all(int r, int n);

/// All fourteen families.
CheckReport check_all_identities(int r, int n, std::uint64_t seed = 1);

}  // namespace yhk

#endif  // YHK_IDENTITIES_HPP
