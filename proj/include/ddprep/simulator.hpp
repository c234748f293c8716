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

#include "ddprep/circuit.hpp"
#include "ddprep/state.hpp"

namespace ddprep {

/// Memory guard for dense simulation.
inline constexpr unsigned kMaxSimWidth = 26;

/**
 * Dense statevector over `width` wires. Wire w is bit (width - 1 - w) of
 * the index, so with wire 0 as the ancilla the index reads
 * a * 2^n + s for data basis state s.
 */
class StateVector {
 public:
  /// Basis state |initial>; throws std::invalid_argument above
  /// kMaxSimWidth wires.
  explicit StateVector(unsigned width, BasisIndex initial = 0);

  unsigned width() const { return width_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }

  void apply(const Gate& g);
  void apply(const Circuit& c);
  double norm() const;

 private:
  unsigned width_;
  std::vector<Amplitude> amps_;
};

StateVector simulate(const Circuit& c, BasisIndex initial = 0);

struct FidelityReport {
  double fidelity = 0.0;        // |<0_A, phi | sv>|
  double ancilla_purity = 0.0;  // Tr(rho_A^2)
  double max_leakage = 0.0;     // largest |amplitude| on data states not in S
  double max_prob_delta = 0.0;  // max_s | P(s) - |a_s|^2 | over s in S
  double norm = 0.0;
};

/// Compares a width n+1 statevector (wire 0 = ancilla) against the target.
FidelityReport check_preparation(const StateVector& sv,
                                 const SparseState& target);

/// Exhaustive comparison on every basis input, up to one global phase.
/// Widths above 10 are rejected.
bool equivalent(const Circuit& a, const Circuit& b, double tolerance = 1e-10);

}  // namespace ddprep
