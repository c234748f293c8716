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


#include "ddprep/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ddprep/state.hpp"

namespace ddprep {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::P: return "P";
    case GateKind::U: return "U";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::RY, GateKind::RZ,
                     GateKind::P, GateKind::U}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind == GateKind::U) {
    g.angle = -angle;
    g.phi = -lambda;
    g.lambda = -phi;
  } else if (kind != GateKind::X && kind != GateKind::H) {
    g.angle = -angle;
  }
  return g;
}

void Circuit::add(Gate g) {
  if (g.target >= width_) {
    throw std::invalid_argument("target wire " + std::to_string(g.target) +
                                " outside width " + std::to_string(width_));
  }
  if (!std::isfinite(g.angle) || !std::isfinite(g.phi) ||
      !std::isfinite(g.lambda)) {
    throw std::invalid_argument("non-finite angle");
  }
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const unsigned w = g.controls[i].wire;
    if (w >= width_) {
      throw std::invalid_argument("control wire " + std::to_string(w) +
                                  " outside width " + std::to_string(width_));
    }
    if (w == g.target) {
      throw std::invalid_argument("wire " + std::to_string(w) +
                                  " is both target and control");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.controls[j].wire == w) {
        throw std::invalid_argument("repeated control wire " +
                                    std::to_string(w));
      }
    }
  }
  if (g.kind == GateKind::X || g.kind == GateKind::H) g.angle = 0.0;
  if (g.kind != GateKind::U) g.phi = g.lambda = 0.0;
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_) {
    throw std::invalid_argument("appended circuit is wider");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::inverse() const {
  Circuit out(width_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

bool Circuit::is_decomposed() const {
  return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.controls.empty() || g.is_cx();
  });
}

std::size_t Circuit::cx_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [](const Gate& g) { return g.is_cx(); }));
}

std::size_t Circuit::max_controls() const {
  std::size_t m = 0;
  for (const auto& g : gates_) m = std::max(m, g.controls.size());
  return m;
}

namespace {

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

std::string to_native(const Circuit& c) {
  std::string out = "wires " + std::to_string(c.width()) + "\n";
  for (const Gate& g : c.gates()) {
    out += to_string(g.kind);
    out += ' ';
    out += format_angle(g.angle);
    if (g.kind == GateKind::U) {
      out += ' ' + format_angle(g.phi) + ' ' + format_angle(g.lambda);
    }
    out += ' ';
    out += std::to_string(g.target);
    for (const Control& ctl : g.controls) {
      out += ctl.positive ? " +" : " -";
      out += std::to_string(ctl.wire);
    }
    out += '\n';
  }
  return out;
}

Circuit parse_native(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Circuit c;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    try {
      if (!have_header) {
        unsigned w = 0;
        if (head != "wires" || !(ls >> w)) {
          throw std::invalid_argument("expected 'wires <N>' header");
        }
        c = Circuit(w);
        have_header = true;
        continue;
      }
      Gate g;
      g.kind = gate_kind_from_string(head);
      auto read_angle = [&ls]() {
        std::string tok;
        if (!(ls >> tok)) throw std::invalid_argument("missing angle");
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad angle");
        return v;
      };
      g.angle = read_angle();
      if (g.kind == GateKind::U) {
        g.phi = read_angle();
        g.lambda = read_angle();
      }
      if (!(ls >> g.target)) throw std::invalid_argument("missing target");
      for (std::string tok; ls >> tok;) {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
          throw std::invalid_argument("bad control '" + tok + "'");
        }
        g.controls.push_back(
            {static_cast<unsigned>(std::stoul(tok.substr(1))), tok[0] == '+'});
      }
      c.add(std::move(g));
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(0, "missing 'wires' header");
  return c;
}

std::string to_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(std::max(1U, c.width())) + "];\n";
  for (const Gate& g : c.gates()) {
    const std::string t = "q[" + std::to_string(g.target) + "]";
    if (g.is_cx()) {
      out += "cx q[" + std::to_string(g.controls[0].wire) + "]," + t + ";\n";
      continue;
    }
    if (!g.controls.empty()) {
      throw std::invalid_argument(
          "QASM export needs a decomposed circuit; found a " +
          std::to_string(g.controls.size()) + "-controlled " +
          std::string(to_string(g.kind)));
    }
    switch (g.kind) {
      case GateKind::X: out += "x " + t + ";\n"; break;
      case GateKind::H: out += "h " + t + ";\n"; break;
      case GateKind::RY: out += "ry(" + format_angle(g.angle) + ") " + t + ";\n"; break;
      case GateKind::RZ: out += "rz(" + format_angle(g.angle) + ") " + t + ";\n"; break;
      case GateKind::P: out += "u1(" + format_angle(g.angle) + ") " + t + ";\n"; break;
      case GateKind::U:
        // u3 equals U up to a global phase
        out += "u3(" + format_angle(g.angle) + "," + format_angle(g.phi) + "," +
               format_angle(g.lambda) + ") " + t + ";\n";
        break;
    }
  }
  return out;
}

}  // namespace ddprep
