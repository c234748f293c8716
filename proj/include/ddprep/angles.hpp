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
#include <vector>

#include "ddprep/decision_diagram.hpp"

namespace ddprep {

/// How a node divides its mass between its children.
enum class Split { Both, ZeroOnly, OneOnly };

struct NodeAngle {
  double t0 = 0.0;  // mass routed through the zero edge
  double t1 = 0.0;
  double p0 = 1.0;
  double theta = 0.0;  // y-rotation angle realizing G(p0)
  Split split = Split::ZeroOnly;
  double mass() const { return t0 + t1; }
};

/**
 * Per-node masses and zero-probabilities of a reduced DD.
 *
 * An edge skipping e levels into a child contributes 2^e times the
 * child's subtree mass; a terminal's mass is |amplitude|^2.
 */
class AngleTable {
 public:
  const NodeAngle& operator[](NodeId id) const { return table_[id]; }
  /// Subtree mass of any node, terminal or internal.
  double subtree_mass(NodeId id) const { return mass_[id]; }
  /// 2^leading_skips * subtree_mass(root); 1 for a normalized state.
  double total_mass() const { return total_; }
  /// Internal nodes evaluated by the post-order pass.
  std::size_t visits() const { return visits_; }

 private:
  friend AngleTable compute_angles(const DecisionDiagram& dd);
  std::vector<NodeAngle> table_;
  std::vector<double> mass_;
  double total_ = 0.0;
  std::size_t visits_ = 0;
};

AngleTable compute_angles(const DecisionDiagram& dd);

/// theta = 2 acos(sqrt(p0)). Values within 1e-12 outside [0, 1] are
/// clamped; anything farther throws std::invalid_argument.
double g_rotation_angle(double p0);

}  // namespace ddprep
