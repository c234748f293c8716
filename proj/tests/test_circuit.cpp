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

#include <limits>

#include "ddprep/circuit.hpp"
#include "ddprep/state.hpp"

using namespace ddprep;

TEST_CASE("gate validation", "[circuit]") {
  Circuit c(3);
  CHECK_THROWS(c.x(3));
  CHECK_THROWS(c.x(1, {{1, true}}));
  CHECK_THROWS(c.x(2, {{0, true}, {0, false}}));
  CHECK_THROWS(c.x(2, {{5, true}}));
  CHECK_THROWS(c.ry(std::numeric_limits<double>::infinity(), 0));
  CHECK(c.empty());
  c.x(2, {{0, true}, {1, false}});
  CHECK(c.size() == 1);
  CHECK(c.max_controls() == 2);
  CHECK_FALSE(c.is_decomposed());
}

TEST_CASE("cx detection and counting", "[circuit]") {
  Circuit c(3);
  c.cx(0, 1);
  c.x(1, {{0, false}});
  c.ry(0.3, 2);
  c.cx(2, 0);
  CHECK(c.cx_count() == 2);
  CHECK_FALSE(c.is_decomposed());  // the negative control
  Circuit d(3);
  d.cx(0, 1);
  d.h(2);
  d.u(0.1, 0.2, 0.3, 1);
  CHECK(d.is_decomposed());
}

TEST_CASE("inverse", "[circuit]") {
  Circuit c(2);
  c.ry(0.4, 0);
  c.u(0.1, 0.2, 0.3, 1, {{0, true}});
  c.x(1);
  const Circuit inv = c.inverse();
  REQUIRE(inv.size() == 3);
  CHECK(inv.gates()[0].kind == GateKind::X);
  const Gate& u = inv.gates()[1];
  CHECK(u.angle == -0.1);
  CHECK(u.phi == -0.3);
  CHECK(u.lambda == -0.2);
  CHECK(inv.gates()[2].angle == -0.4);
  CHECK(inv.inverse() == c);
}

TEST_CASE("native format round trip", "[circuit]") {
  Circuit c(5);
  c.x(0);
  c.ry(2.0943951028776016, 1);
  c.ry(1.2309594189228379, 2, {{1, true}});
  c.x(0, {{1, true}, {2, false}});
  c.p(-0.25, 3, {{0, true}});
  c.u(0.5, 1e-300, -3.0, 4);
  c.h(2);
  const std::string text = to_native(c);
  CHECK(text.rfind("wires 5\n", 0) == 0);
  CHECK(text.find("X 0 0 +1 -2\n") != std::string::npos);
  const Circuit back = parse_native(text);
  CHECK(back == c);
  CHECK(to_native(back) == text);
}

TEST_CASE("native parse errors", "[circuit]") {
  CHECK_THROWS_AS(parse_native(""), ParseError);
  CHECK_THROWS_AS(parse_native("X 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_native("wires 2\nFOO 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_native("wires 2\nX 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_native("wires 2\nRY abc 0\n"), ParseError);
  CHECK_THROWS_AS(parse_native("wires 2\nX 0 0 1\n"), ParseError);
  try {
    parse_native("wires 2\n# comment\nX 0 0\nX 0 7\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("qasm export", "[circuit]") {
  SECTION("single NOT") {
    Circuit c(1);
    c.x(0);
    CHECK(to_qasm(c) ==
          "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nx q[0];\n");
  }
  SECTION("empty circuit is header only") {
    CHECK(to_qasm(Circuit(3)) ==
          "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
  }
  SECTION("gate spellings") {
    Circuit c(2);
    c.cx(1, 0);
    c.h(0);
    c.ry(0.5, 1);
    c.rz(0.25, 0);
    c.p(0.125, 1);
    c.u(1, 2, 3, 0);
    const std::string q = to_qasm(c);
    CHECK(q.find("cx q[1],q[0];") != std::string::npos);
    CHECK(q.find("h q[0];") != std::string::npos);
    CHECK(q.find("ry(0.5) q[1];") != std::string::npos);
    CHECK(q.find("rz(0.25) q[0];") != std::string::npos);
    CHECK(q.find("u1(0.125) q[1];") != std::string::npos);
    CHECK(q.find("u3(1,2,3) q[0];") != std::string::npos);
  }
  SECTION("abstract gates are rejected") {
    Circuit c(3);
    c.x(2, {{0, true}, {1, true}});
    CHECK_THROWS(to_qasm(c));
    Circuit d(2);
    d.ry(0.1, 1, {{0, true}});
    CHECK_THROWS(to_qasm(d));
  }
}

TEST_CASE("gate kind names", "[circuit]") {
  for (auto k : {GateKind::X, GateKind::H, GateKind::RY, GateKind::RZ,
                 GateKind::P, GateKind::U}) {
    CHECK(gate_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS(gate_kind_from_string("CCX"));
}
