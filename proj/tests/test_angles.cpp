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

#include <cmath>
#include <numbers>

#include "ddprep/angles.hpp"

using namespace ddprep;
using Catch::Approx;

namespace {
// full-precision amplitudes so the expected ratios are exact
SparseState eq3() {
  const double r2 = std::sqrt(2.0);
  return normalize(4, {{0b1110, {0.5, 0}},
                       {0b1001, {r2 / 2, 0}},
                       {0b0010, {r2 / 4, 0}},
                       {0b0000, {r2 / 4, 0}}});
}

NodeId child_of_root(const DecisionDiagram& dd, int value) {
  const Node& r = dd.node(dd.root());
  return value ? r.one : r.zero;
}
}  // namespace

TEST_CASE("example angle table", "[angles]") {
  const DecisionDiagram dd = build_dd(eq3());
  const AngleTable t = compute_angles(dd);
  CHECK(t.total_mass() == Approx(1.0).epsilon(1e-12));

  const NodeAngle& root = t[dd.root()];
  CHECK(root.p0 == Approx(0.25).epsilon(1e-12));
  CHECK(root.split == Split::Both);
  CHECK(root.theta == Approx(2 * std::acos(0.5)));

  // q2 under q1 = 1: 0.5 on the zero edge, 0.25 on the one edge
  const NodeAngle& q2_one = t[child_of_root(dd, 1)];
  CHECK(q2_one.p0 == Approx(2.0 / 3.0).epsilon(1e-12));

  // q2 under q1 = 0: its zero edge skips q3 into a 1/8 subtree
  const NodeAngle& q2_zero = t[child_of_root(dd, 0)];
  CHECK(q2_zero.t0 == Approx(2 * 0.5 / 4).epsilon(1e-12));
  CHECK(q2_zero.t1 == 0.0);
  CHECK(q2_zero.split == Split::ZeroOnly);
  CHECK(q2_zero.p0 == 1.0);
}

TEST_CASE("one visit per internal node", "[angles]") {
  for (unsigned n : {20u, 25u}) {
    const DecisionDiagram dd = build_dd(qba_state(n));
    const AngleTable t = compute_angles(dd);
    CHECK(t.visits() == dd.internal_count());
    CHECK(t.total_mass() == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("p0 matches the zero-branch probability", "[angles]") {
  const SparseState s =
      random_sparse_state(9, 60, 5, AmplitudeMode::RandomComplex);
  const DecisionDiagram dd = build_dd(s);
  const AngleTable t = compute_angles(dd);
  double p_q1_zero = 0;
  for (const auto& e : s.entries()) {
    if (!(e.index >> 8)) p_q1_zero += std::norm(e.amplitude);
  }
  if (dd.leading_skips() == 0) {
    CHECK(t[dd.root()].p0 == Approx(p_q1_zero).margin(1e-12));
  }
  for (NodeId id = 0; id < dd.size(); ++id) {
    if (dd.is_terminal(id)) continue;
    const NodeAngle& a = t[id];
    CHECK(a.mass() == Approx(t.subtree_mass(id)).epsilon(1e-12));
    CHECK(a.p0 >= 0.0);
    CHECK(a.p0 <= 1.0);
  }
}

TEST_CASE("G rotation angles", "[angles]") {
  CHECK(g_rotation_angle(1.0) == 0.0);
  CHECK(g_rotation_angle(0.0) == Approx(std::numbers::pi));
  CHECK(g_rotation_angle(0.5) == Approx(std::numbers::pi / 2));
  CHECK(g_rotation_angle(0.25) == Approx(2 * std::numbers::pi / 3));
  CHECK(g_rotation_angle(1.0 + 1e-14) == 0.0);  // clamped
  CHECK_THROWS(g_rotation_angle(1.5));
  CHECK_THROWS(g_rotation_angle(-0.1));
}
