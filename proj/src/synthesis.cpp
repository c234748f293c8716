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


#include "ddprep/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace ddprep {

std::string_view to_string(AncillaMode mode) {
  return mode == AncillaMode::Exact ? "exact" : "lean";
}

AncillaMode ancilla_mode_from_string(std::string_view name) {
  if (name == "exact") return AncillaMode::Exact;
  if (name == "lean") return AncillaMode::Lean;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

namespace {

constexpr double kHalf = std::numbers::pi / 2;  // G(1/2)

std::vector<Control> controls_for(bool use_ancilla,
                                  std::optional<unsigned> last_one) {
  std::vector<Control> c;
  if (use_ancilla) c.push_back({kAncillaWire, true});
  if (last_one) c.push_back({*last_one, true});
  return c;
}

// Phase e^{i phi} on the subspace where `ctrl` holds and `wire` == value.
void emit_phase(Circuit& c, double phi, std::vector<Control> ctrl,
                unsigned wire, int value) {
  if (value == 1) {
    c.p(phi, wire, std::move(ctrl));
    return;
  }
  if (ctrl.empty()) {
    c.x(wire);
    c.p(phi, wire);
    c.x(wire);
    return;
  }
  const unsigned target = ctrl.back().wire;
  ctrl.pop_back();
  ctrl.push_back({wire, false});
  c.p(phi, target, std::move(ctrl));
}

}  // namespace

Circuit synthesize(const DecisionDiagram& dd, const AngleTable& angles,
                   const SynthesisOptions& options,
                   TraversalCounters* counters) {
  const unsigned n = dd.num_qubits();
  Circuit c(n + 1);
  TraversalCounters local;
  local.post_order_visits = angles.visits();

  c.x(kAncillaWire);
  for (unsigned l = 1; l <= dd.leading_skips(); ++l) c.ry(kHalf, l);

  const std::vector<Path> paths = enumerate_paths(dd);
  const std::size_t k = paths.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Path& p = paths[i];
    const bool use_ancilla = i > 0;

    // First step at which this path leaves the previous one. There the
    // previous path took the one-edge and this one takes the zero-edge;
    // the node's rotation was already applied.
    std::size_t d = 0;
    if (i > 0) {
      const Path& prev = paths[i - 1];
      while (d < p.steps.size() && d < prev.steps.size() &&
             p.steps[d].node == prev.steps[d].node &&
             p.steps[d].value == prev.steps[d].value) {
        ++d;
      }
    }

    std::optional<unsigned> last_one;
    std::vector<Control> record;
    for (std::size_t j = 0; j < p.steps.size(); ++j) {
      const PathStep& s = p.steps[j];
      const auto pre = controls_for(use_ancilla, last_one);
      if (j >= d) {
        ++local.pre_order_visits;
        if (j > d || i == 0) {
          const NodeAngle& a = angles[s.node];
          if (a.split == Split::Both) {
            c.ry(a.theta, s.level, pre);
          } else if (a.split == Split::OneOnly) {
            c.x(s.level, pre);
          }
        }
      }
      if (s.branching) {
        record.push_back({s.level, s.value == 1});
        if (s.value == 1) last_one = s.level;
      }
      if (j < d) continue;

      const auto post = controls_for(use_ancilla, last_one);
      for (unsigned l = s.level + 1; l <= s.level + s.skipped; ++l) {
        c.ry(kHalf, l, post);
      }
      if (j + 1 == p.steps.size() && options.emit_phases) {
        const double phi = std::arg(p.amplitude);
        if (std::abs(phi) > kPhaseThreshold) {
          emit_phase(c, phi, pre, s.level, s.value);
        }
      }
    }

    if (i + 1 < k || options.ancilla_mode == AncillaMode::Exact) {
      c.x(kAncillaWire, record);
    }
  }

  if (counters) *counters = local;
  return c;
}

Compilation compile(const SparseState& state,
                    const SynthesisOptions& options) {
  Compilation out;
  out.dd = build_dd(state);
  out.angles = compute_angles(out.dd);
  out.circuit = synthesize(out.dd, out.angles, options, &out.counters);
  return out;
}

}  // namespace ddprep
