// Copyright 2026 The ddprep Authors
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


#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ddprep/state.hpp"

namespace ddprep {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Relative tolerance under which two terminal amplitudes are merged.
inline constexpr double kTerminalTolerance = 1e-9;

/// Internal nodes carry a level in 1..n; terminals sit at level n+1 and
/// carry the amplitude. An absent child (kNoNode) means no basis state of
/// the support lies on that side.
struct Node {
  unsigned level = 0;
  NodeId zero = kNoNode;
  NodeId one = kNoNode;
  Amplitude value{};
};

/**
 * Reduced ordered decision diagram of a sparse state, variable order q1..qn.
 *
 * Nodes are stored children-first, so every child id is smaller than its
 * parent id and the root is the last node.
 */
class DecisionDiagram {
 public:
  DecisionDiagram() = default;

  unsigned num_qubits() const { return num_qubits_; }
  NodeId root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  bool is_terminal(NodeId id) const {
    return nodes_[id].level == num_qubits_ + 1;
  }
  bool is_branching(NodeId id) const {
    return nodes_[id].zero != kNoNode && nodes_[id].one != kNoNode;
  }
  unsigned level(NodeId id) const { return nodes_[id].level; }

  /// Levels skipped on the edge from `parent` to `child`.
  unsigned skips(NodeId parent, NodeId child) const {
    return nodes_[child].level - nodes_[parent].level - 1;
  }
  /// Levels above the root (root eliminated by the reduction).
  unsigned leading_skips() const { return nodes_[root_].level - 1; }

  std::size_t internal_count() const;
  std::size_t terminal_count() const;

 private:
  friend class DDBuilder;
  unsigned num_qubits_ = 0;
  NodeId root_ = kNoNode;
  std::vector<Node> nodes_;
};

/// Bottom-up construction with a unique table; canonical without a
/// separate reduce pass.
DecisionDiagram build_dd(const SparseState& state);

struct ReductionCounters {
  std::size_t tree_nodes = 0;  // internal + terminal nodes of the full tree
  std::size_t terminal_merges = 0;
  std::size_t rule1_merges = 0;        // structurally identical internals
  std::size_t rule2_eliminations = 0;  // both edges to the same child
};

/// Builds the unreduced binary tree, then applies both reduction rules.
/// Used to cross-check build_dd.
DecisionDiagram build_dd_via_tree(const SparseState& state,
                                  ReductionCounters* counters = nullptr);

/// Isomorphism check; terminal values compared with relative tolerance.
bool structurally_equal(const DecisionDiagram& a, const DecisionDiagram& b,
                        double tolerance = kTerminalTolerance);

/// Hash over the reachable structure from the root. Terminal values are
/// rounded to 9 significant digits.
std::uint64_t structural_hash(const DecisionDiagram& dd);

struct PathStep {
  NodeId node = kNoNode;
  unsigned level = 0;
  int value = 0;
  bool branching = false;
  unsigned skipped = 0;  // levels skipped on the edge taken
};

struct Path {
  unsigned leading_skipped = 0;
  std::vector<PathStep> steps;
  Amplitude amplitude{};

  unsigned total_skips() const;
  /// 2^total_skips
  std::uint64_t covered_count() const;
  /// Bits fixed along the path, and the mask of free (skipped) positions.
  BasisIndex fixed_bits(unsigned num_qubits) const;
  BasisIndex free_mask(unsigned num_qubits) const;
  /// Largest basis state covered by the path.
  BasisIndex largest(unsigned num_qubits) const {
    return fixed_bits(num_qubits) | free_mask(num_qubits);
  }
  /// Bitstring with '-' at skipped levels.
  std::string pattern(unsigned num_qubits) const;
};

/// Pre-order enumeration, one-child first: paths come out in strictly
/// descending order of their largest covered state.
std::vector<Path> enumerate_paths(const DecisionDiagram& dd);

/// Expands every path over its skipped levels (round-trip oracle).
SparseState expand_paths(const DecisionDiagram& dd);

struct DDStats {
  std::size_t node_count = 0;  // internal nodes
  std::size_t terminal_count = 0;
  std::uint64_t eliminated_count = 0;     // per path, with multiplicity
  std::uint64_t eliminated_per_edge = 0;  // each DD edge once
  std::size_t path_count = 0;
  std::vector<unsigned> branching_per_path;
};

DDStats stats(const DecisionDiagram& dd);

/// Graphviz rendering: solid edges are one-children, dotted are
/// zero-children, terminals are boxes labelled with their amplitude.
std::string to_dot(const DecisionDiagram& dd);

}  // namespace ddprep
