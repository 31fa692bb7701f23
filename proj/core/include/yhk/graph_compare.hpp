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

#ifndef YHK_GRAPH_COMPARE_HPP
#define YHK_GRAPH_COMPARE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yhk/crystal.hpp"
#include "yhk/rep.hpp"

namespace yhk {

struct ModuleEdge {
  int from = 0;  // the summand, at level n - 1
  int to = 0;    // the restricted simple, at level n
  int k = 0;
  int a = 0;
};

/// Branching graph of the simple modules S_mu(L.) for |lambda| = 1. Summands
/// of restrict_branch are identified with simples one level down by their
/// trace invariants, not by their predicted labels.
struct ModuleGraph {
  int r = 1;
  std::vector<SimpleLabel> nodes;
  std::vector<int> level;
  std::vector<ModuleEdge> edges;
  std::vector<std::string> problems;  // summands that matched no simple

  int level_count(int n) const;
};

ModuleGraph module_branch_graph(int r, int n_max, const WeightDatum& lam);

/// Crystal node of a simple label: slot k holds shapes[k-1].
CrystalNode crystal_node_of(const SimpleLabel& label, const WeightDatum& lam);

/// Edge label bijection: an X_n eigenvalue q^a corresponds to residue
/// i = (a + charge) / 2. Returns false when a - charge is odd.
bool residue_of_exponent(int a, int charge, int& i);

struct CompareReport {
  bool isomorphic = false;
  std::vector<int> module_levels;
  std::vector<int> crystal_levels;
  /// Arrow counts keyed by (i, k), per level transition n -> n + 1.
  std::vector<std::map<std::pair<int, int>, int>> module_arrows;
  std::vector<std::map<std::pair<int, int>, int>> crystal_arrows;
  std::string first_divergence;  // empty when isomorphic
};

/// Compares level sizes, then the arrow multiset by label, then the edge sets
/// under the node bijection. The crystal must be the e = infinity tensor
/// crystal of the same lambda and r.
CompareReport branch_graph_compare(const ModuleGraph& module, const CrystalGraph& crystal, int n_max,
                                   const WeightDatum& lam);

/// Builds both graphs and compares them.
CompareReport branch_graph_compare(int r, int n_max, const WeightDatum& lam);

}  // namespace yhk

#endif  // YHK_GRAPH_COMPARE_HPP
