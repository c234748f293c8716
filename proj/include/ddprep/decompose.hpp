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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ddprep/circuit.hpp"

namespace ddprep {

/**
 * CNOT accounting for doubly-controlled gates.
 *
 * Cc6 lowers a doubly-controlled RY/RZ through a full 3-qubit diagonal
 * phase network (6 CNOTs). Cc4 uses the 4-CNOT uniformly-controlled
 * rotation instead. Doubly-controlled X and P cost 6 CNOTs in both.
 */
enum class CostModel { Cc6, Cc4 };

std::string_view to_string(CostModel model);
CostModel cost_model_from_string(std::string_view name);

struct DecomposeReport {
  /// Multi-controlled X gates that had no idle wire to borrow and went
  /// through the quadratic construction.
  std::size_t quadratic_fallbacks = 0;
};

/// Lowers every gate to CX plus uncontrolled single-qubit gates. Never
/// widens the circuit; idle wires are borrowed and restored.
Circuit decompose(const Circuit& circuit, CostModel model = CostModel::Cc6,
                  DecomposeReport* report = nullptr);

/// CNOT count of decompose(circuit, model), computed from closed forms.
std::uint64_t count_cnots(const Circuit& circuit,
                          CostModel model = CostModel::Cc6,
                          DecomposeReport* report = nullptr);

/// CNOTs of a single gate inside a circuit of the given width.
std::uint64_t gate_cnots(const Gate& gate, unsigned width, CostModel model);

/// X on `target` controlled positively by all `controls`, using the
/// wires in `borrowable` as dirty ancillas (restored on exit).
/// Strategy by the number b of borrowable wires and c of controls:
///   c <= 2         CX / Toffoli
///   b >= c - 2     exact ladder, 8c - 6 CNOTs
///   1 <= b < c-2   split on one borrowed wire into two ladders
///   b == 0         quadratic construction through a multi-controlled
///                  phase
void mcx_decompose(std::span<const unsigned> controls, unsigned target,
                   std::span<const unsigned> borrowable,
                   std::vector<Gate>& out, DecomposeReport* report = nullptr);

/// CNOT count of mcx_decompose for c controls and b borrowable wires.
std::uint64_t mcx_cnots(std::size_t c, std::size_t b);

}  // namespace ddprep
