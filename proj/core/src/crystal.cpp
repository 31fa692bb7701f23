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

#include "yhk/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "yhk/errors.hpp"
#include "yhk/perm.hpp"

namespace yhk {

namespace {

int reduce_mod(int x, int e) {
  if (e == kInfinite) return x;
  int v = x % e;
  return v < 0 ? v + e : v;
}

void check_e(int e) {
  if (e != kInfinite && e < 2) throw InvalidArgument("e must be 0 (infinite) or at least 2");
}

int part(const Partition& p, int row) {
  return row < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(row)] : 0;
}

void trim(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Cancels +- pairs; what is left reads - ... - + ... +.
std::vector<std::pair<Box, int>> reduce_signature(const std::vector<std::pair<Box, int>>& sig) {
  std::vector<std::pair<Box, int>> stack;
  for (const auto& entry : sig) {
    if (entry.second < 0 && !stack.empty() && stack.back().second > 0) {
      stack.pop_back();
    } else {
      stack.push_back(entry);
    }
  }
  return stack;
}

}  // namespace

int residue(int row, int col, int charge, int e) {
  check_e(e);
  return reduce_mod(charge + col - row, e);
}

Multipartition Multipartition::empty(const WeightDatum& lam, int e) {
  check_e(e);
  lam.validate();
  Multipartition m;
  m.e = e;
  for (int c : lam.charges()) m.charges.push_back(reduce_mod(c, e));
  m.comps.assign(m.charges.size(), Partition{});
  return m;
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : comps) s += partition_size(p);
  return s;
}

std::string Multipartition::str() const {
  if (comps.size() == 1) return partition_str(comps[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < comps.size(); ++k) s += (k ? "," : "") + partition_str(comps[k]);
  return s + ")";
}

int residue(const Multipartition& m, const Box& b) {
  return residue(b.row + 1, b.col + 1, m.charges.at(static_cast<std::size_t>(b.comp)), m.e);
}

std::vector<Box> addable_boxes(const Multipartition& m) {
  std::vector<Box> out;
  for (int c = 0; c < static_cast<int>(m.comps.size()); ++c) {
    const Partition& p = m.comps[static_cast<std::size_t>(c)];
    for (int row = 0; row <= static_cast<int>(p.size()); ++row) {
      int len = part(p, row);
      if (row == 0 || part(p, row - 1) > len) out.push_back({c, row, len});
    }
  }
  return out;
}

std::vector<Box> removable_boxes(const Multipartition& m) {
  std::vector<Box> out;
  for (int c = 0; c < static_cast<int>(m.comps.size()); ++c) {
    const Partition& p = m.comps[static_cast<std::size_t>(c)];
    for (int row = 0; row < static_cast<int>(p.size()); ++row) {
      int len = part(p, row);
      if (part(p, row + 1) < len) out.push_back({c, row, len - 1});
    }
  }
  return out;
}

std::vector<std::pair<Box, int>> signature(const Multipartition& m, int i) {
  std::vector<std::pair<Box, int>> nodes;
  for (const Box& b : addable_boxes(m)) {
    if (residue(m, b) == i) nodes.emplace_back(b, +1);
  }
  for (const Box& b : removable_boxes(m)) {
    if (residue(m, b) == i) nodes.emplace_back(b, -1);
  }
  std::sort(nodes.begin(), nodes.end(), [](const auto& x, const auto& y) {
    if (x.first.comp != y.first.comp) return x.first.comp > y.first.comp;
    return x.first.row > y.first.row;
  });
  return nodes;
}

std::optional<Multipartition> kashiwara_e(const Multipartition& m, int i) {
  auto reduced = reduce_signature(signature(m, i));
  auto it = std::find_if(reduced.rbegin(), reduced.rend(), [](const auto& s) { return s.second < 0; });
  if (it == reduced.rend()) return std::nullopt;
  Multipartition out = m;
  Partition& p = out.comps[static_cast<std::size_t>(it->first.comp)];
  --p[static_cast<std::size_t>(it->first.row)];
  trim(p);
  return out;
}

std::optional<Multipartition> kashiwara_f(const Multipartition& m, int i) {
  auto reduced = reduce_signature(signature(m, i));
  auto it = std::find_if(reduced.begin(), reduced.end(), [](const auto& s) { return s.second > 0; });
  if (it == reduced.end()) return std::nullopt;
  Multipartition out = m;
  Partition& p = out.comps[static_cast<std::size_t>(it->first.comp)];
  if (it->first.row == static_cast<int>(p.size())) p.push_back(0);
  ++p[static_cast<std::size_t>(it->first.row)];
  return out;
}

std::vector<int> addable_residues(const Multipartition& m) {
  std::set<int> res;
  for (const Box& b : addable_boxes(m)) res.insert(residue(m, b));
  return {res.begin(), res.end()};
}

std::vector<Partition> e_restricted_partitions(int n, int e) {
  check_e(e);
  std::vector<Partition> out;
  for (const Partition& p : partitions(n)) {
    bool ok = true;
    if (e != kInfinite) {
      for (std::size_t i = 0; i < p.size() && ok; ++i) {
        int next = i + 1 < p.size() ? p[i + 1] : 0;
        ok = p[i] - next < e;
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Multipartition> kleshchev_by_reachability(int n, const WeightDatum& lam, int e) {
  if (n < 0) throw InvalidArgument("negative size");
  std::set<Multipartition> level{Multipartition::empty(lam, e)};
  for (int s = 0; s < n; ++s) {
    std::set<Multipartition> next;
    for (const auto& m : level) {
      for (int i : addable_residues(m)) {
        if (auto f = kashiwara_f(m, i)) next.insert(*f);
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<Multipartition> kleshchev_enumerate(int n, const WeightDatum& lam, int e) {
  if (lam.d() != 1) return kleshchev_by_reachability(n, lam, e);
  std::vector<Multipartition> out;
  Multipartition base = Multipartition::empty(lam, e);
  for (const Partition& p : e_restricted_partitions(n, e)) {
    Multipartition m = base;
    m.comps[0] = p;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string node_str(const CrystalNode& x) {
  std::string s = "[";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "|" : "") + x[k].str();
  return s + "]";
}

int node_size(const CrystalNode& x) {
  int s = 0;
  for (const auto& m : x) s += m.size();
  return s;
}

int CrystalGraph::level_count(int n) const {
  return static_cast<int>(std::count(level.begin(), level.end(), n));
}

CrystalGraph tensor_crystal(const WeightDatum& lam, int r, int e, int n_max) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (n_max < 0) throw InvalidArgument("negative size");
  CrystalGraph g;
  g.r = r;
  g.e = e;
  std::map<std::string, int> index;
  auto add_node = [&](const CrystalNode& x) {
    auto [it, fresh] = index.emplace(node_str(x), static_cast<int>(g.nodes.size()));
    if (fresh) {
      g.nodes.push_back(x);
      g.level.push_back(node_size(x));
    }
    return it->second;
  };
  add_node(CrystalNode(static_cast<std::size_t>(r), Multipartition::empty(lam, e)));
  std::size_t begin = 0;
  for (int n = 0; n < n_max; ++n) {
    std::size_t end = g.nodes.size();
    for (std::size_t id = begin; id < end; ++id) {
      for (int k = 1; k <= r; ++k) {
        for (int i : addable_residues(g.nodes[id][static_cast<std::size_t>(k - 1)])) {
          auto f = kashiwara_f(g.nodes[id][static_cast<std::size_t>(k - 1)], i);
          if (!f) continue;
          CrystalNode y = g.nodes[id];
          y[static_cast<std::size_t>(k - 1)] = *f;
          int to = add_node(y);
          g.edges.push_back({static_cast<int>(id), to, i, k});
        }
      }
    }
    begin = end;
  }
  return g;
}

long predicted_level_count(int r, int n, int e) {
  std::vector<long> k_sizes;
  for (int m = 0; m <= n; ++m) k_sizes.push_back(static_cast<long>(e_restricted_partitions(m, e).size()));
  long total = 0;
  for (const Composition& mu : compositions(r, n)) {
    long prod = 1;
    for (int part_size : mu) prod *= k_sizes[static_cast<std::size_t>(part_size)];
    total += prod;
  }
  return total;
}

bool partial_inverse_holds(const CrystalGraph& g) {
  for (const CrystalNode& x : g.nodes) {
    for (const Multipartition& m : x) {
      std::set<int> res;
      for (const Box& b : addable_boxes(m)) res.insert(residue(m, b));
      for (const Box& b : removable_boxes(m)) res.insert(residue(m, b));
      for (int i : res) {
        if (auto f = kashiwara_f(m, i)) {
          auto back = kashiwara_e(*f, i);
          if (!back || !(*back == m)) return false;
        }
        if (auto em = kashiwara_e(m, i)) {
          auto back = kashiwara_f(*em, i);
          if (!back || !(*back == m)) return false;
        }
      }
    }
  }
  return true;
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    os << "  n" << id << " [label=\"" << node_str(g.nodes[id]) << "\"];\n";
  }
  for (const auto& edge : g.edges) {
    os << "  n" << edge.from << " -> n" << edge.to << " [label=\"" << edge.i << "@" << edge.k << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace yhk
