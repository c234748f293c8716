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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ddprep {

/// RY(t) = exp(-i t Y/2), RZ(t) = exp(-i t Z/2), P(t) = diag(1, e^{it}),
/// U(t, f, l) = RZ(f) RY(t) RZ(l).
enum class GateKind { X, H, RY, RZ, P, U };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

struct Control {
  unsigned wire = 0;
  bool positive = true;
  bool operator==(const Control&) const = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  double angle = 0.0;  // ignored for X and H
  unsigned target = 0;
  std::vector<Control> controls;
  double phi = 0.0;  // U only
  double lambda = 0.0;

  bool operator==(const Gate&) const = default;
  bool is_cx() const {
    return kind == GateKind::X && controls.size() == 1 &&
           controls[0].positive;
  }
  Gate inverse() const;
};

/// Ordered gate list over a fixed number of wires. Wire 0 is the ancilla
/// q_A in synthesized circuits; wire l is data qubit q_l.
class Circuit {
 public:
  explicit Circuit(unsigned width = 0) : width_(width) {}

  unsigned width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates and appends. Throws std::invalid_argument when a wire is
  /// out of range, the target is also a control, a control repeats, or
  /// the angle is not finite.
  void add(Gate g);
  void add(GateKind kind, double angle, unsigned target,
           std::vector<Control> controls = {}) {
    add(Gate{kind, angle, target, std::move(controls)});
  }
  void x(unsigned target, std::vector<Control> controls = {}) {
    add(GateKind::X, 0.0, target, std::move(controls));
  }
  void cx(unsigned control, unsigned target) {
    add(GateKind::X, 0.0, target, {{control, true}});
  }
  void h(unsigned target) { add(GateKind::H, 0.0, target); }
  void ry(double angle, unsigned target, std::vector<Control> controls = {}) {
    add(GateKind::RY, angle, target, std::move(controls));
  }
  void rz(double angle, unsigned target, std::vector<Control> controls = {}) {
    add(GateKind::RZ, angle, target, std::move(controls));
  }
  void p(double angle, unsigned target, std::vector<Control> controls = {}) {
    add(GateKind::P, angle, target, std::move(controls));
  }
  void u(double theta, double phi, double lambda, unsigned target,
         std::vector<Control> controls = {}) {
    add(Gate{GateKind::U, theta, target, std::move(controls), phi, lambda});
  }

  void append(const Circuit& other);
  Circuit inverse() const;

  /// Only CX gates and uncontrolled single-qubit gates.
  bool is_decomposed() const;
  /// Literal number of CX gates.
  std::size_t cx_count() const;
  /// Largest control count over all gates.
  std::size_t max_controls() const;

  bool operator==(const Circuit&) const = default;

 private:
  unsigned width_;
  std::vector<Gate> gates_;
};

/// Native text format:
///   wires <N>
///   <KIND> <angle> <target> [+w|-w ...]
///   U <theta> <phi> <lambda> <target> [+w|-w ...]
/// Angles use 17 significant digits, so the round trip is bit-exact.
std::string to_native(const Circuit& c);
Circuit parse_native(std::string_view text);

/// OpenQASM 2.0 for decomposed circuits; throws std::invalid_argument on
/// any gate other than CX or an uncontrolled single-qubit gate.
std::string to_qasm(const Circuit& c);

}  // namespace ddprep
