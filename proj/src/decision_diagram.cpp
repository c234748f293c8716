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


#include "ddprep/decision_diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ddprep {

std::size_t DecisionDiagram::internal_count() const {
  std::size_t c = 0;
  for (const auto& n : nodes_) c += n.level <= num_qubits_;
  return c;
}

std::size_t DecisionDiagram::terminal_count() const {
  return nodes_.size() - internal_count();
}

namespace {

bool amplitudes_close(Amplitude a, Amplitude b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

struct TripleHash {
  std::size_t operator()(const std::array<std::uint32_t, 3>& k) const {
    std::uint64_t h = k[0];
    h = h * 0x9E3779B97F4A7C15ULL ^ k[1];
    h = h * 0x9E3779B97F4A7C15ULL ^ k[2];
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace

// Owns the unique tables while a diagram is being assembled.
class DDBuilder {
 public:
  explicit DDBuilder(unsigned n) { dd_.num_qubits_ = n; }

  NodeId terminal(Amplitude a, bool* merged = nullptr) {
    const double r = std::abs(a);
    const double window = 2 * kTerminalTolerance * r;
    for (auto it = terminals_.lower_bound(a.real() - window);
         it != terminals_.end() && it->first <= a.real() + window; ++it) {
      if (amplitudes_close(dd_.nodes_[it->second].value, a,
                           kTerminalTolerance)) {
        if (merged) *merged = true;
        return it->second;
      }
    }
    if (merged) *merged = false;
    const NodeId id = push({dd_.num_qubits_ + 1, kNoNode, kNoNode, a});
    terminals_.emplace(a.real(), id);
    return id;
  }

  // Applies both reduction rules. `eliminated`/`merged` report which
  // rule fired, if any.
  NodeId internal(unsigned level, NodeId zero, NodeId one,
                  bool* eliminated = nullptr, bool* merged = nullptr) {
    if (eliminated) *eliminated = false;
    if (merged) *merged = false;
    if (zero == one && zero != kNoNode) {
      if (eliminated) *eliminated = true;
      return zero;
    }
    auto [it, inserted] =
        unique_.try_emplace({level, zero, one}, static_cast<NodeId>(0));
    if (!inserted) {
      if (merged) *merged = true;
      return it->second;
    }
    it->second = push({level, zero, one, {}});
    return it->second;
  }

  DecisionDiagram finish(NodeId root) {
    dd_.root_ = root;
    return std::move(dd_);
  }

 private:
  NodeId push(const Node& n) {
    dd_.nodes_.push_back(n);
    return static_cast<NodeId>(dd_.nodes_.size() - 1);
  }

  DecisionDiagram dd_;
  std::multimap<double, NodeId> terminals_;
  std::unordered_map<std::array<std::uint32_t, 3>, NodeId, TripleHash>
      unique_;
};

namespace {

using EntryIt = std::span<const BasisEntry>::iterator;

// Entries in [first, last) share their first level-1 bits and are sorted
// descending, so the ones with bit `level` set come first.
EntryIt split_point(EntryIt first, EntryIt last, unsigned level, unsigned n) {
  const unsigned shift = n - level;
  return std::partition_point(first, last, [shift](const BasisEntry& e) {
    return (e.index >> shift) & 1U;
  });
}

NodeId build_range(DDBuilder& b, EntryIt first, EntryIt last, unsigned level,
                   unsigned n) {
  if (level == n + 1) return b.terminal(first->amplitude);
  const EntryIt mid = split_point(first, last, level, n);
  const NodeId one =
      first != mid ? build_range(b, first, mid, level + 1, n) : kNoNode;
  const NodeId zero =
      mid != last ? build_range(b, mid, last, level + 1, n) : kNoNode;
  return b.internal(level, zero, one);
}

}  // namespace

DecisionDiagram build_dd(const SparseState& state) {
  const unsigned n = state.num_qubits();
  DDBuilder b(n);
  auto e = state.entries();
  const NodeId root = build_range(b, e.begin(), e.end(), 1, n);
  return b.finish(root);
}

namespace {

struct TreeNode {
  unsigned level;
  std::size_t zero = SIZE_MAX, one = SIZE_MAX;
  Amplitude value{};
};

std::size_t grow_tree(std::vector<TreeNode>& tree, EntryIt first,
                      EntryIt last, unsigned level, unsigned n) {
  if (level == n + 1) {
    tree.push_back({level, SIZE_MAX, SIZE_MAX, first->amplitude});
    return tree.size() - 1;
  }
  const std::size_t id = tree.size();
  tree.push_back({level});
  const EntryIt mid = split_point(first, last, level, n);
  if (first != mid) {
    const std::size_t c = grow_tree(tree, first, mid, level + 1, n);
    tree[id].one = c;
  }
  if (mid != last) {
    const std::size_t c = grow_tree(tree, mid, last, level + 1, n);
    tree[id].zero = c;
  }
  return id;
}

}  // namespace

DecisionDiagram build_dd_via_tree(const SparseState& state,
                                  ReductionCounters* counters) {
  const unsigned n = state.num_qubits();
  std::vector<TreeNode> tree;
  auto e = state.entries();
  grow_tree(tree, e.begin(), e.end(), 1, n);

  ReductionCounters local;
  local.tree_nodes = tree.size();
  DDBuilder b(n);
  std::function<NodeId(std::size_t)> reduce = [&](std::size_t t) -> NodeId {
    const TreeNode& tn = tree[t];
    if (tn.level == n + 1) {
      bool merged = false;
      const NodeId id = b.terminal(tn.value, &merged);
      local.terminal_merges += merged;
      return id;
    }
    const NodeId one = tn.one == SIZE_MAX ? kNoNode : reduce(tn.one);
    const NodeId zero = tn.zero == SIZE_MAX ? kNoNode : reduce(tn.zero);
    bool eliminated = false, merged = false;
    const NodeId id = b.internal(tn.level, zero, one, &eliminated, &merged);
    local.rule1_merges += merged;
    local.rule2_eliminations += eliminated;
    return id;
  };
  const NodeId root = reduce(0);
  if (counters) *counters = local;
  return b.finish(root);
}

bool structurally_equal(const DecisionDiagram& a, const DecisionDiagram& b,
                        double tolerance) {
  if (a.num_qubits() != b.num_qubits()) return false;
  if (a.internal_count() != b.internal_count() ||
      a.terminal_count() != b.terminal_count()) {
    return false;
  }
  std::unordered_map<NodeId, NodeId> map;
  std::function<bool(NodeId, NodeId)> eq = [&](NodeId x, NodeId y) {
    if (x == kNoNode || y == kNoNode) return x == y;
    if (auto it = map.find(x); it != map.end()) return it->second == y;
    const Node& nx = a.node(x);
    const Node& ny = b.node(y);
    if (nx.level != ny.level) return false;
    if (a.is_terminal(x)) {
      if (!amplitudes_close(nx.value, ny.value, tolerance)) return false;
    } else if (!eq(nx.zero, ny.zero) || !eq(nx.one, ny.one)) {
      return false;
    }
    map.emplace(x, y);
    return true;
  };
  return eq(a.root(), b.root());
}

std::uint64_t structural_hash(const DecisionDiagram& dd) {
  std::vector<std::uint64_t> h(dd.size());
  auto mix = [](std::uint64_t x, std::uint64_t y) {
    x ^= y + 0x9E3779B97F4A7C15ULL + (x << 6) + (x >> 2);
    return x;
  };
  // children precede parents in storage order
  for (NodeId i = 0; i < dd.size(); ++i) {
    const Node& nd = dd.node(i);
    std::uint64_t v = nd.level;
    if (dd.is_terminal(i)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.8e,%.8e", nd.value.real(),
                    nd.value.imag());
      v = mix(v, std::hash<std::string>{}(buf));
    } else {
      v = mix(v, nd.zero == kNoNode ? 0x5bd1e995ULL : h[nd.zero]);
      v = mix(v, nd.one == kNoNode ? 0x1b873593ULL : h[nd.one]);
    }
    h[i] = v;
  }
  return mix(h[dd.root()], dd.num_qubits());
}

unsigned Path::total_skips() const {
  unsigned s = leading_skipped;
  for (const auto& st : steps) s += st.skipped;
  return s;
}

std::uint64_t Path::covered_count() const {
  return std::uint64_t{1} << total_skips();
}

BasisIndex Path::fixed_bits(unsigned num_qubits) const {
  BasisIndex v = 0;
  for (const auto& st : steps) {
    if (st.value) v |= BasisIndex{1} << (num_qubits - st.level);
  }
  return v;
}

BasisIndex Path::free_mask(unsigned num_qubits) const {
  BasisIndex fixed = 0;
  for (const auto& st : steps) fixed |= BasisIndex{1} << (num_qubits - st.level);
  const BasisIndex all =
      num_qubits == 64 ? ~BasisIndex{0} : (BasisIndex{1} << num_qubits) - 1;
  return all & ~fixed;
}

std::string Path::pattern(unsigned num_qubits) const {
  std::string out(num_qubits, '-');
  for (const auto& st : steps) out[st.level - 1] = st.value ? '1' : '0';
  return out;
}

std::vector<Path> enumerate_paths(const DecisionDiagram& dd) {
  std::vector<Path> out;
  Path cur;
  cur.leading_skipped = dd.leading_skips();
  std::function<void(NodeId)> walk = [&](NodeId id) {
    if (dd.is_terminal(id)) {
      cur.amplitude = dd.node(id).value;
      out.push_back(cur);
      return;
    }
    const Node& nd = dd.node(id);
    const bool br = dd.is_branching(id);
    for (int v : {1, 0}) {
      const NodeId c = v ? nd.one : nd.zero;
      if (c == kNoNode) continue;
      cur.steps.push_back({id, nd.level, v, br, dd.skips(id, c)});
      walk(c);
      cur.steps.pop_back();
    }
  };
  walk(dd.root());
  return out;
}

SparseState expand_paths(const DecisionDiagram& dd) {
  const unsigned n = dd.num_qubits();
  std::vector<BasisEntry> entries;
  for (const Path& p : enumerate_paths(dd)) {
    const BasisIndex fixed = p.fixed_bits(n);
    const BasisIndex mask = p.free_mask(n);
    // enumerate all submasks of `mask`
    BasisIndex sub = mask;
    while (true) {
      entries.push_back({fixed | sub, p.amplitude});
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  return normalize(n, std::move(entries));
}

DDStats stats(const DecisionDiagram& dd) {
  DDStats s;
  s.node_count = dd.internal_count();
  s.terminal_count = dd.terminal_count();
  s.eliminated_per_edge = dd.leading_skips();
  for (NodeId i = 0; i < dd.size(); ++i) {
    if (dd.is_terminal(i)) continue;
    const Node& nd = dd.node(i);
    if (nd.zero != kNoNode) s.eliminated_per_edge += dd.skips(i, nd.zero);
    if (nd.one != kNoNode) s.eliminated_per_edge += dd.skips(i, nd.one);
  }
  for (const Path& p : enumerate_paths(dd)) {
    ++s.path_count;
    s.eliminated_count += p.total_skips();
    unsigned br = 0;
    for (const auto& st : p.steps) br += st.branching;
    s.branching_per_path.push_back(br);
  }
  return s;
}

std::string to_dot(const DecisionDiagram& dd) {
  std::ostringstream out;
  out << "digraph dd {\n  rankdir=TB;\n";
  for (NodeId i = 0; i < dd.size(); ++i) {
    const Node& nd = dd.node(i);
    if (dd.is_terminal(i)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.6g%+.6gi", nd.value.real(),
                    nd.value.imag());
      out << "  n" << i << " [shape=box,label=\"" << buf << "\"];\n";
    } else {
      out << "  n" << i << " [shape=circle,label=\"q" << nd.level << "\"];\n";
      if (nd.one != kNoNode) {
        out << "  n" << i << " -> n" << nd.one << " [style=solid];\n";
      }
      if (nd.zero != kNoNode) {
        out << "  n" << i << " -> n" << nd.zero << " [style=dotted];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ddprep
