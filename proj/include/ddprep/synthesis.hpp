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
#include <string_view>

#include "ddprep/angles.hpp"
#include "ddprep/circuit.hpp"
#include "ddprep/decision_diagram.hpp"
#include "ddprep/state.hpp"

namespace ddprep {

/// Exact mode flips the ancilla back after every path, including the last
/// one, so the output is |0>_A (x) |phi>. Lean mode skips that final
/// flip; the ancilla then stays correlated with the last path whenever
/// more than one path exists.
enum class AncillaMode { Exact, Lean };

std::string_view to_string(AncillaMode mode);
AncillaMode ancilla_mode_from_string(std::string_view name);

struct SynthesisOptions {
  AncillaMode ancilla_mode = AncillaMode::Exact;
  bool emit_phases = true;
};

/// Instrumentation of the two DD traversals.
struct TraversalCounters {
  std::size_t post_order_visits = 0;  // angle pass, once per internal node
  std::size_t pre_order_visits = 0;   // path steps processed by synthesis
  std::size_t total() const { return post_order_visits + pre_order_visits; }
};

inline constexpr unsigned kAncillaWire = 0;
inline constexpr double kPhaseThreshold = 1e-12;

/**
 * Emits the abstract preparation circuit on n+1 wires (wire 0 = ancilla,
 * wire l = q_l), starting from |0...0>.
 *
 * Paths are prepared largest first. Per path, gates resume at the node
 * where it leaves the previous path. Gates on path i > 1 are controlled
 * by the ancilla and by the deepest branching node at which the path
 * takes its one-edge. Each completed path flips the ancilla using its
 * branching nodes as controls.
 */
Circuit synthesize(const DecisionDiagram& dd, const AngleTable& angles,
                   const SynthesisOptions& options = {},
                   TraversalCounters* counters = nullptr);

/// Everything the pipeline produces for one state.
struct Compilation {
  DecisionDiagram dd;
  AngleTable angles;
  Circuit circuit;
  TraversalCounters counters;
};

/// build_dd, compute_angles, synthesize.
Compilation compile(const SparseState& state,
                    const SynthesisOptions& options = {});

}  // namespace ddprep
