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


#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "ddprep/decision_diagram.hpp"

using namespace ddprep;

namespace {

const char* kEq3 =
    "1110 0.5 0\n1001 0.70710678 0\n0010 0.35355339 0\n0000 0.35355339 0\n";

SparseState fuzz_state(std::uint64_t seed) {
  const unsigned n = 1 + seed % 10;
  const std::uint64_t space = std::uint64_t{1} << n;
  const std::uint64_t m = 1 + (seed * 2654435761u) % space;
  const auto mode =
      seed % 3 == 0 ? AmplitudeMode::RandomComplex : AmplitudeMode::Uniform;
  return random_sparse_state(n, m, seed, mode);
}

bool same_state(const SparseState& a, const SparseState& b) {
  if (a.size() != b.size() || a.num_qubits() != b.num_qubits()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index) return false;
    if (std::abs(a[i].amplitude - b[i].amplitude) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("example DD: three paths, one eliminated node, merged terminal",
          "[dd]") {
  const SparseState s = parse_state(kEq3);
  const DecisionDiagram dd = build_dd(s);
  const DDStats st = stats(dd);
  CHECK(st.path_count == 3);
  CHECK(st.eliminated_count == 1);
  CHECK(st.eliminated_per_edge == 1);
  CHECK(st.terminal_count == 3);  // four entries, two equal amplitudes
  CHECK(st.node_count == 8);
  CHECK(dd.level(dd.root()) == 1);
  CHECK(dd.leading_skips() == 0);

  ReductionCounters rc;
  const DecisionDiagram tree = build_dd_via_tree(s, &rc);
  CHECK(rc.terminal_merges == 1);
  CHECK(rc.rule2_eliminations == 1);
  CHECK(structurally_equal(dd, tree));

  const auto paths = enumerate_paths(dd);
  REQUIRE(paths.size() == 3);
  CHECK(paths[0].pattern(4) == "1110");
  CHECK(paths[1].pattern(4) == "1001");
  CHECK(paths[2].pattern(4) == "00-0");
  CHECK(paths[2].covered_count() == 2);
  CHECK(paths[2].free_mask(4) == 0b0010);
  CHECK(paths[2].largest(4) == 0b0010);
  CHECK(std::abs(paths[2].amplitude.real() - 0.35355339) < 1e-8);

  const SparseState back = expand_paths(dd);
  CHECK(same_state(back, s));
}

TEST_CASE("single basis state gives a chain", "[dd]") {
  for (unsigned n : {1u, 5u, 20u}) {
    const SparseState s = normalize(n, {{0, {1, 0}}});
    const DecisionDiagram dd = build_dd(s);
    const DDStats st = stats(dd);
    CHECK(st.node_count == n);
    CHECK(st.terminal_count == 1);
    CHECK(st.path_count == 1);
    CHECK(st.eliminated_count == 0);
    CHECK(st.branching_per_path == std::vector<unsigned>{0});
  }
}

TEST_CASE("full uniform state reduces to a terminal root", "[dd]") {
  for (unsigned n : {1u, 4u, 9u}) {
    const SparseState s = random_sparse_state(
        n, std::size_t{1} << n, 1, AmplitudeMode::Uniform);
    const DecisionDiagram dd = build_dd(s);
    const DDStats st = stats(dd);
    CHECK(st.node_count == 0);
    CHECK(st.terminal_count == 1);
    CHECK(st.path_count == 1);
    CHECK(st.eliminated_count == n);
    CHECK(dd.leading_skips() == n);
    CHECK(enumerate_paths(dd)[0].pattern(n) == std::string(n, '-'));
  }
}

TEST_CASE("direct and tree builders agree on fuzzed states", "[dd]") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const SparseState s = fuzz_state(seed);
    const DecisionDiagram a = build_dd(s);
    const DecisionDiagram b = build_dd_via_tree(s);
    INFO("seed " << seed);
    REQUIRE(structurally_equal(a, b));
    CHECK(structural_hash(a) == structural_hash(b));
    REQUIRE(same_state(expand_paths(a), s));

    const DDStats st = stats(a);
    CHECK(st.path_count <= s.size());
    std::uint64_t covered = 0;
    BasisIndex prev = ~BasisIndex{0};
    for (const auto& p : enumerate_paths(a)) {
      covered += p.covered_count();
      CHECK(p.largest(s.num_qubits()) < prev);  // largest first
      prev = p.largest(s.num_qubits());
    }
    CHECK(covered == s.size());
  }
}

TEST_CASE("children precede parents", "[dd]") {
  const DecisionDiagram dd = build_dd(fuzz_state(77));
  for (NodeId id = 0; id < dd.size(); ++id) {
    const Node& nd = dd.node(id);
    if (nd.zero != kNoNode) CHECK(nd.zero < id);
    if (nd.one != kNoNode) CHECK(nd.one < id);
  }
  CHECK(dd.root() == dd.size() - 1);
}

TEST_CASE("QBA statistics", "[dd]") {
  struct Row {
    unsigned n;
    std::size_t nodes, k;
    std::uint64_t eliminated;
  };
  for (Row r : {Row{20, 32, 18, 110}, Row{25, 37, 19, 123},
                Row{30, 44, 22, 141}}) {
    const DDStats st = stats(build_dd(qba_state(r.n)));
    INFO("n = " << r.n);
    CHECK(st.node_count == r.nodes);
    CHECK(st.path_count == r.k);
    CHECK(st.eliminated_count == r.eliminated);
    CHECK(st.eliminated_per_edge == r.eliminated);
    CHECK(st.terminal_count == 1);
  }
}

TEST_CASE("hash separates different states", "[dd]") {
  const auto a = build_dd(random_sparse_state(8, 30, 1, AmplitudeMode::Uniform));
  const auto b = build_dd(random_sparse_state(8, 30, 2, AmplitudeMode::Uniform));
  CHECK(structural_hash(a) != structural_hash(b));
  CHECK_FALSE(structurally_equal(a, b));
}

TEST_CASE("terminals within tolerance merge", "[dd]") {
  // two analytically equal amplitudes computed differently
  const double x = 1 / std::sqrt(8.0);
  const double y = std::sqrt(0.125) * (1 + 1e-13);
  const auto s = normalize(2, {{0, {x, 0}}, {1, {y, 0}}, {3, {0.5, 0}}});
  CHECK(stats(build_dd(s)).terminal_count == 2);
}

TEST_CASE("DOT export", "[dd]") {
  const std::string dot = to_dot(build_dd(parse_state(kEq3)));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dotted") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.back() == '\n');
}
