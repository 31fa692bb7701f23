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

#ifndef YHK_CRYSTAL_HPP
#define YHK_CRYSTAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yhk/hecke.hpp"
#include "yhk/quotient.hpp"

namespace yhk {

/// e = 0 stands for e = infinity: residues are integers without reduction.
inline constexpr int kInfinite = 0;

/// (charge + col - row) mod e, for 1-based row and col.
int residue(int row, int col, int charge, int e);

/// A tuple of partitions, one per charge.
struct Multipartition {
  std::vector<Partition> comps;
  std::vector<int> charges;
  int e = kInfinite;

  static Multipartition empty(const WeightDatum& lam, int e);

  int size() const;
  std::string str() const;
  friend bool operator==(const Multipartition& a, const Multipartition& b) {
    return a.comps == b.comps && a.charges == b.charges && a.e == b.e;
  }
  friend bool operator<(const Multipartition& a, const Multipartition& b) { return a.comps < b.comps; }
};

/// A box (component, row, col), all 0-based.
struct Box {
  int comp = 0;
  int row = 0;
  int col = 0;
  friend bool operator==(const Box& a, const Box& b) {
    return a.comp == b.comp && a.row == b.row && a.col == b.col;
  }
};

int residue(const Multipartition& m, const Box& b);
std::vector<Box> addable_boxes(const Multipartition& m);
std::vector<Box> removable_boxes(const Multipartition& m);

/// The i-signature: addable (+1) and removable (-1) i-boxes in reading
/// order, components last to first and, within a component, bottom row to
/// top row. All choices of reading order live in this function.
std::vector<std::pair<Box, int>> signature(const Multipartition& m, int i);

/// Removes the good removable i-box, if any.
std::optional<Multipartition> kashiwara_e(const Multipartition& m, int i);
/// Adds the good addable i-box, if any.
std::optional<Multipartition> kashiwara_f(const Multipartition& m, int i);

/// Residues of all addable boxes, ascending.
std::vector<int> addable_residues(const Multipartition& m);

/// Partitions of n with all differences of consecutive parts (the last part
/// against 0 included) below e.
std::vector<Partition> e_restricted_partitions(int n, int e);

/// Kleshchev multipartitions of size n: the e-restricted test when
/// |lambda| = 1, otherwise reachability from the empty multipartition.
std::vector<Multipartition> kleshchev_enumerate(int n, const WeightDatum& lam, int e);
/// Reachability from the empty multipartition by kashiwara_f, for any lambda.
std::vector<Multipartition> kleshchev_by_reachability(int n, const WeightDatum& lam, int e);

/// An r-tuple of Kleshchev multipartitions.
using CrystalNode = std::vector<Multipartition>;
std::string node_str(const CrystalNode& x);
int node_size(const CrystalNode& x);

struct CrystalEdge {
  int from = 0;
  int to = 0;
  int i = 0;  // residue
  int k = 0;  // slot, 1-based
};

/// Graded graph: nodes grouped by level, arrows from level n to n + 1.
struct CrystalGraph {
  int r = 1;
  int e = kInfinite;
  std::vector<CrystalNode> nodes;
  std::vector<int> level;  // level[id] = size of node id
  std::vector<CrystalEdge> edges;

  int level_count(int n) const;
};

/// The tensor crystal B(lambda)^{(x) r} up to size n_max, generated from the
/// empty node by slot-wise kashiwara_f.
CrystalGraph tensor_crystal(const WeightDatum& lam, int r, int e, int n_max);

/// Sum over mu in C_r(n) of prod_k |K_{mu_k}| using the e-restricted count.
long predicted_level_count(int r, int n, int e);

/// Checks that e and f are mutually inverse wherever defined, on every node.
bool partial_inverse_holds(const CrystalGraph& g);

std::string to_dot(const CrystalGraph& g);

}  // namespace yhk

#endif  // YHK_CRYSTAL_HPP
