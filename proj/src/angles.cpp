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


#include "ddprep/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ddprep {

double g_rotation_angle(double p0) {
  constexpr double kSlack = 1e-12;
  if (!(p0 >= -kSlack && p0 <= 1.0 + kSlack)) {
    throw std::invalid_argument("p0 = " + std::to_string(p0) +
                                " outside [0, 1]");
  }
  p0 = std::clamp(p0, 0.0, 1.0);
  return 2.0 * std::acos(std::sqrt(p0));
}

AngleTable compute_angles(const DecisionDiagram& dd) {
  AngleTable t;
  t.table_.assign(dd.size(), NodeAngle{});
  t.mass_.assign(dd.size(), 0.0);
  std::vector<bool> done(dd.size(), false);

  // Post-order over the DAG, each node evaluated once.
  auto edge_mass = [&](NodeId parent, NodeId child) {
    return std::ldexp(t.mass_[child], static_cast<int>(dd.skips(parent, child)));
  };
  std::vector<std::pair<NodeId, bool>> stack{{dd.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (done[id]) continue;
    const Node& nd = dd.node(id);
    if (dd.is_terminal(id)) {
      t.mass_[id] = std::norm(nd.value);
      done[id] = true;
      continue;
    }
    if (!expanded) {
      stack.push_back({id, true});
      if (nd.zero != kNoNode && !done[nd.zero]) stack.push_back({nd.zero, false});
      if (nd.one != kNoNode && !done[nd.one]) stack.push_back({nd.one, false});
      continue;
    }
    NodeAngle& a = t.table_[id];
    a.t0 = nd.zero != kNoNode ? edge_mass(id, nd.zero) : 0.0;
    a.t1 = nd.one != kNoNode ? edge_mass(id, nd.one) : 0.0;
    if (nd.zero == kNoNode) {
      a.split = Split::OneOnly;
      a.p0 = 0.0;
    } else if (nd.one == kNoNode) {
      a.split = Split::ZeroOnly;
      a.p0 = 1.0;
    } else {
      a.split = Split::Both;
      a.p0 = a.t0 / (a.t0 + a.t1);
    }
    a.theta = g_rotation_angle(a.p0);
    t.mass_[id] = a.mass();
    done[id] = true;
    ++t.visits_;
  }
  t.total_ = std::ldexp(t.mass_[dd.root()], static_cast<int>(dd.leading_skips()));
  return t;
}

}  // namespace ddprep
