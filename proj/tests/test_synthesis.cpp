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
#include <numbers>

#include "ddprep/decompose.hpp"
#include "ddprep/simulator.hpp"
#include "ddprep/synthesis.hpp"

using namespace ddprep;
using Catch::Approx;

namespace {

const char* kEq3 =
    "1110 0.5 0\n1001 0.70710678 0\n0010 0.35355339 0\n0000 0.35355339 0\n";

// Abstract circuit of the example in exact mode, as a fixture.
const char* kEq3Exact =
    "wires 5\n"
    "X 0 0\n"
    "RY 2.0943951028776016 1\n"
    "RY 1.2309594189228379 2 +1\n"
    "X 0 3 +2\n"
    "X 0 0 +1 +2\n"
    "X 0 4 +0 +1\n"
    "X 0 0 +1 -2\n"
    "RY 1.5707963267948966 3 +0\n"
    "X 0 0 -1\n";

}  // namespace

TEST_CASE("example circuit structure", "[synthesis]") {
  const SparseState s = parse_state(kEq3);
  const Compilation exact = compile(s, {AncillaMode::Exact, true});
  const Circuit want = parse_native(kEq3Exact);
  REQUIRE(exact.circuit.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const Gate& a = exact.circuit.gates()[i];
    const Gate& b = want.gates()[i];
    INFO("gate " << i);
    CHECK(a.kind == b.kind);
    CHECK(a.target == b.target);
    CHECK(a.controls == b.controls);
    CHECK(a.angle == Approx(b.angle).margin(1e-7));
  }

  // lean mode drops the flip after the last path
  const Compilation lean = compile(s, {AncillaMode::Lean, true});
  CHECK(lean.circuit.size() == want.size() - 1);
  CHECK(lean.circuit.gates().back().kind == GateKind::RY);

  CHECK(count_cnots(exact.circuit) == 24);
}

TEST_CASE("example circuit prepares the state", "[synthesis]") {
  const SparseState s = parse_state(kEq3);
  const auto r = check_preparation(simulate(compile(s).circuit), s);
  CHECK(r.fidelity >= 1 - 1e-9);
  CHECK(r.ancilla_purity >= 1 - 1e-10);
  CHECK(r.max_leakage < 1e-10);
}

TEST_CASE("exact mode on random states, lowered circuits", "[synthesis]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const unsigned n = 2 + seed % 7;
    const std::size_t m = 1 + (seed * 7919) % (std::size_t{1} << n);
    const auto mode =
        seed % 2 ? AmplitudeMode::RandomComplex : AmplitudeMode::Uniform;
    const SparseState s = random_sparse_state(n, m, seed, mode);
    const Circuit c = decompose(compile(s).circuit);
    const auto r = check_preparation(simulate(c), s);
    INFO("seed " << seed);
    CHECK(r.fidelity >= 1 - 1e-9);
    CHECK(r.ancilla_purity >= 1 - 1e-10);
    CHECK(r.max_leakage < 1e-10);
  }
}

TEST_CASE("lean mode keeps the data marginals", "[synthesis]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const unsigned n = 3 + seed % 6;
    const SparseState s = random_sparse_state(
        n, 1 + seed % (std::size_t{1} << n), seed,
        AmplitudeMode::RandomComplex);
    const Circuit c = compile(s, {AncillaMode::Lean, true}).circuit;
    const auto r = check_preparation(simulate(c), s);
    INFO("seed " << seed);
    CHECK(r.max_prob_delta < 1e-9);
    CHECK(r.max_leakage < 1e-10);
  }
}

TEST_CASE("phases can be switched off", "[synthesis]") {
  const SparseState s =
      random_sparse_state(5, 9, 3, AmplitudeMode::RandomComplex);
  const auto r = check_preparation(
      simulate(compile(s, {AncillaMode::Exact, false}).circuit), s);
  CHECK(r.max_prob_delta < 1e-9);
  CHECK(r.fidelity < 1 - 1e-6);  // magnitudes only
}

TEST_CASE("full uniform state: G(1/2) on every qubit", "[synthesis]") {
  for (unsigned n : {1u, 3u, 8u}) {
    const SparseState s = random_sparse_state(
        n, std::size_t{1} << n, 0, AmplitudeMode::Uniform);
    const Compilation c = compile(s);
    std::size_t halves = 0;
    for (const Gate& g : c.circuit.gates()) {
      CHECK(g.controls.empty());
      if (g.kind == GateKind::RY) {
        CHECK(g.angle == Approx(std::numbers::pi / 2));
        ++halves;
      } else {
        CHECK(g.kind == GateKind::X);
      }
    }
    CHECK(halves == n);
    CHECK(count_cnots(c.circuit) == 0);
  }
}

TEST_CASE("single basis state: NOT gates only", "[synthesis]") {
  const SparseState s = parse_state("10110 1\n");
  for (auto mode : {AncillaMode::Exact, AncillaMode::Lean}) {
    const Circuit c = compile(s, {mode, true}).circuit;
    std::vector<unsigned> targets;
    for (const Gate& g : c.gates()) {
      CHECK(g.kind == GateKind::X);
      CHECK(g.controls.empty());
      targets.push_back(g.target);
    }
    // one NOT per 1 bit; exact mode flips the ancilla back at the end
    const long flips = mode == AncillaMode::Exact ? 2 : 1;
    CHECK(std::count(targets.begin(), targets.end(), 0u) == flips);
    CHECK(targets.size() == 3 + static_cast<std::size_t>(flips));
    CHECK(count_cnots(c) == 0);
    CHECK(check_preparation(simulate(c), s).max_prob_delta < 1e-12);
  }
}

TEST_CASE("gate count and traversal bounds", "[synthesis]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const unsigned n = 4 + seed % 12;
    const std::size_t m =
        std::min<std::size_t>(1 + seed * 37, std::size_t{1} << n);
    const SparseState s =
        random_sparse_state(n, m, seed, AmplitudeMode::RandomComplex);
    const Compilation c = compile(s);
    const std::size_t k = stats(c.dd).path_count;
    CHECK(c.circuit.size() <= 3 * k * n + 2);
    CHECK(c.counters.total() <= 2 * k * n);
    CHECK(c.circuit.max_controls() <= n);
  }
}

TEST_CASE("compilation is deterministic", "[synthesis]") {
  const SparseState s =
      random_sparse_state(12, 200, 9, AmplitudeMode::RandomComplex);
  CHECK(to_native(compile(s).circuit) == to_native(compile(s).circuit));
}

TEST_CASE("ancilla mode names", "[synthesis]") {
  CHECK(ancilla_mode_from_string("lean") == AncillaMode::Lean);
  CHECK(to_string(AncillaMode::Exact) == "exact");
  CHECK_THROWS(ancilla_mode_from_string("fast"));
}
