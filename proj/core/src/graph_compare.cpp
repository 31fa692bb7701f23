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

#include "yhk/graph_compare.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "yhk/errors.hpp"

namespace yhk {

namespace {

std::string arrow_str(const std::pair<int, int>& label) {
  return std::to_string(label.first) + "@" + std::to_string(label.second);
}

}  // namespace

int ModuleGraph::level_count(int n) const {
  return static_cast<int>(std::count(level.begin(), level.end(), n));
}

ModuleGraph module_branch_graph(int r, int n_max, const WeightDatum& lam) {
  if (lam.d() != 1) throw DomainError("module branching graph needs |lambda| = 1");
  if (n_max < 0) throw InvalidArgument("negative size");
  ModuleGraph g;
  g.r = r;
  std::vector<std::pair<TraceInvariants, int>> below;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::pair<TraceInvariants, int>> here;
    for (const SimpleLabel& label : simple_labels(r, n)) {
      int id = static_cast<int>(g.nodes.size());
      g.nodes.push_back(label);
      g.level.push_back(n);
      FdModule m = simple_module(label, lam);
      here.emplace_back(trace_invariants(m), id);
      if (n == 0) continue;
      for (const BranchSummand& s : restrict_branch(m)) {
        TraceInvariants inv = trace_invariants(s.module);
        auto it = std::find_if(below.begin(), below.end(), [&](const auto& b) { return b.first == inv; });
        if (it == below.end()) {
          g.problems.push_back("summand (k=" + std::to_string(s.k) + ", a=" + std::to_string(s.a) + ") of " +
                               label.str() + " matches no simple module");
          continue;
        }
        g.edges.push_back({it->second, id, s.k, s.a});
      }
    }
    below = std::move(here);
  }
  return g;
}

CrystalNode crystal_node_of(const SimpleLabel& label, const WeightDatum& lam) {
  Multipartition base = Multipartition::empty(lam, kInfinite);
  CrystalNode x;
  for (const Partition& shape : label.shapes) {
    Multipartition m = base;
    m.comps[0] = shape;
    x.push_back(m);
  }
  return x;
}

bool residue_of_exponent(int a, int charge, int& i) {
  if ((a + charge) % 2 != 0) return false;
  i = (a + charge) / 2;
  return true;
}

CompareReport branch_graph_compare(const ModuleGraph& module, const CrystalGraph& crystal, int n_max,
                                   const WeightDatum& lam) {
  CompareReport rep;
  if (lam.d() != 1) throw DomainError("graph comparison needs |lambda| = 1");
  int charge = lam.charges().front();
  auto diverge = [&](const std::string& what) {
    if (rep.first_divergence.empty()) rep.first_divergence = what;
  };
  if (!module.problems.empty()) diverge(module.problems.front());
  if (crystal.e != kInfinite) diverge("crystal side must use e = infinity");
  if (crystal.r != module.r) diverge("rank mismatch");

  for (int n = 0; n <= n_max; ++n) {
    rep.module_levels.push_back(module.level_count(n));
    rep.crystal_levels.push_back(crystal.level_count(n));
    if (rep.module_levels.back() != rep.crystal_levels.back()) {
      diverge("level " + std::to_string(n) + ": " + std::to_string(rep.module_levels.back()) + " simple modules vs " +
              std::to_string(rep.crystal_levels.back()) + " crystal nodes");
    }
  }

  // arrow multisets, per transition
  rep.module_arrows.resize(static_cast<std::size_t>(n_max));
  rep.crystal_arrows.resize(static_cast<std::size_t>(n_max));
  std::set<std::tuple<std::string, std::string, int, int>> module_edges;
  std::set<std::tuple<std::string, std::string, int, int>> crystal_edges;
  for (const ModuleEdge& e : module.edges) {
    int n = module.level[static_cast<std::size_t>(e.from)];
    if (n >= n_max) continue;
    int i = 0;
    if (!residue_of_exponent(e.a, charge, i)) {
      diverge("eigenvalue exponent " + std::to_string(e.a) + " has the wrong parity for charge " +
              std::to_string(charge));
      continue;
    }
    ++rep.module_arrows[static_cast<std::size_t>(n)][{i, e.k}];
    module_edges.emplace(node_str(crystal_node_of(module.nodes[static_cast<std::size_t>(e.from)], lam)),
                         node_str(crystal_node_of(module.nodes[static_cast<std::size_t>(e.to)], lam)), i, e.k);
  }
  for (const CrystalEdge& e : crystal.edges) {
    int n = crystal.level[static_cast<std::size_t>(e.from)];
    if (n >= n_max) continue;
    ++rep.crystal_arrows[static_cast<std::size_t>(n)][{e.i, e.k}];
    crystal_edges.emplace(node_str(crystal.nodes[static_cast<std::size_t>(e.from)]),
                          node_str(crystal.nodes[static_cast<std::size_t>(e.to)]), e.i, e.k);
  }
  for (int n = 0; n < n_max; ++n) {
    const auto& ma = rep.module_arrows[static_cast<std::size_t>(n)];
    const auto& ca = rep.crystal_arrows[static_cast<std::size_t>(n)];
    if (ma == ca) continue;
    std::set<std::pair<int, int>> labels;
    for (const auto& [label, c] : ma) labels.insert(label);
    for (const auto& [label, c] : ca) labels.insert(label);
    for (const auto& label : labels) {
      int mc = ma.count(label) ? ma.at(label) : 0;
      int cc = ca.count(label) ? ca.at(label) : 0;
      if (mc != cc) {
        diverge("arrows " + std::to_string(n) + "->" + std::to_string(n + 1) + " labelled " + arrow_str(label) + ": " +
                std::to_string(mc) + " in the module graph vs " + std::to_string(cc) + " in the crystal");
        break;
      }
    }
  }

  std::set<std::string> crystal_nodes;
  for (std::size_t id = 0; id < crystal.nodes.size(); ++id) {
    if (crystal.level[id] <= n_max) crystal_nodes.insert(node_str(crystal.nodes[id]));
  }
  for (std::size_t id = 0; id < module.nodes.size(); ++id) {
    if (module.level[id] > n_max) continue;
    std::string s = node_str(crystal_node_of(module.nodes[id], lam));
    if (!crystal_nodes.count(s)) diverge("simple " + module.nodes[id].str() + " has no crystal node " + s);
  }
  if (module_edges != crystal_edges) {
    std::vector<std::tuple<std::string, std::string, int, int>> only_module, only_crystal;
    std::set_difference(module_edges.begin(), module_edges.end(), crystal_edges.begin(), crystal_edges.end(),
                        std::back_inserter(only_module));
    std::set_difference(crystal_edges.begin(), crystal_edges.end(), module_edges.begin(), module_edges.end(),
                        std::back_inserter(only_crystal));
    const auto& [from, to, i, k] = only_module.empty() ? only_crystal.front() : only_module.front();
    diverge(std::string(only_module.empty() ? "crystal" : "module") + " edge " + from + " -> " + to + " labelled " +
            arrow_str({i, k}) + " has no counterpart");
  }
  rep.isomorphic = rep.first_divergence.empty();
  return rep;
}

CompareReport branch_graph_compare(int r, int n_max, const WeightDatum& lam) {
  ModuleGraph module = module_branch_graph(r, n_max, lam);
  CrystalGraph crystal = tensor_crystal(lam, r, kInfinite, n_max);
  return branch_graph_compare(module, crystal, n_max, lam);
}

}  // namespace yhk
