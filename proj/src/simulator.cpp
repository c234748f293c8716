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


#include "ddprep/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ddprep {

StateVector::StateVector(unsigned width, BasisIndex initial) : width_(width) {
  if (width > kMaxSimWidth) {
    throw std::invalid_argument("width " + std::to_string(width) +
                                " exceeds simulation limit " +
                                std::to_string(kMaxSimWidth));
  }
  const std::size_t dim = std::size_t{1} << width;
  if (initial >= dim) throw std::invalid_argument("initial state out of range");
  amps_.assign(dim, Amplitude{});
  amps_[initial] = 1.0;
}

namespace {

using Matrix = std::array<Amplitude, 4>;  // row-major 2x2

Matrix gate_matrix(const Gate& g) {
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  const Amplitude i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::RY: return {c, -s, s, c};
    case GateKind::RZ: return {std::exp(-i * (g.angle / 2)), 0.0, 0.0,
                               std::exp(i * (g.angle / 2))};
    case GateKind::P: return {1.0, 0.0, 0.0, std::exp(i * g.angle)};
    case GateKind::U: {
      // RZ(phi) RY(theta) RZ(lambda)
      const Amplitude a = std::exp(-i * ((g.phi + g.lambda) / 2));
      const Amplitude b = std::exp(-i * ((g.phi - g.lambda) / 2));
      return {a * c, -b * s, std::conj(b) * s, std::conj(a) * c};
    }
  }
  return {};
}

}  // namespace

void StateVector::apply(const Gate& g) {
  if (g.target >= width_) throw std::invalid_argument("gate outside width");
  const auto bit = [this](unsigned wire) {
    return std::size_t{1} << (width_ - 1 - wire);
  };
  std::size_t pos = 0, neg = 0;
  for (const auto& c : g.controls) {
    if (c.wire >= width_) throw std::invalid_argument("gate outside width");
    (c.positive ? pos : neg) |= bit(c.wire);
  }
  const std::size_t t = bit(g.target);
  const Matrix m = gate_matrix(g);
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    if (idx & t) continue;
    if ((idx & pos) != pos || (idx & neg) != 0) continue;
    const Amplitude a0 = amps_[idx], a1 = amps_[idx | t];
    amps_[idx] = m[0] * a0 + m[1] * a1;
    amps_[idx | t] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply(const Circuit& c) {
  if (c.width() > width_) throw std::invalid_argument("circuit is wider");
  for (const auto& g : c.gates()) apply(g);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector simulate(const Circuit& c, BasisIndex initial) {
  StateVector sv(c.width(), initial);
  sv.apply(c);
  return sv;
}

FidelityReport check_preparation(const StateVector& sv,
                                 const SparseState& target) {
  const unsigned n = target.num_qubits();
  if (sv.width() != n + 1) {
    throw std::invalid_argument("statevector width " +
                                std::to_string(sv.width()) + " != n + 1 = " +
                                std::to_string(n + 1));
  }
  const std::size_t half = std::size_t{1} << n;
  const auto& amp = sv.amplitudes();
  FidelityReport r;
  r.norm = sv.norm();

  Amplitude overlap{};
  std::vector<bool> in_support(half, false);
  for (const auto& e : target.entries()) {
    in_support[e.index] = true;
    overlap += std::conj(e.amplitude) * amp[e.index];
    const double p = std::norm(amp[e.index]) + std::norm(amp[half + e.index]);
    r.max_prob_delta =
        std::max(r.max_prob_delta, std::abs(p - std::norm(e.amplitude)));
  }
  r.fidelity = std::abs(overlap);

  double r00 = 0.0, r11 = 0.0;
  Amplitude r01{};
  for (std::size_t s = 0; s < half; ++s) {
    r00 += std::norm(amp[s]);
    r11 += std::norm(amp[half + s]);
    r01 += amp[s] * std::conj(amp[half + s]);
    if (!in_support[s]) {
      r.max_leakage = std::max(
          {r.max_leakage, std::abs(amp[s]), std::abs(amp[half + s])});
    }
  }
  r.ancilla_purity = r00 * r00 + r11 * r11 + 2 * std::norm(r01);
  return r;
}

bool equivalent(const Circuit& a, const Circuit& b, double tolerance) {
  if (a.width() != b.width()) return false;
  if (a.width() > 10) {
    throw std::invalid_argument("exhaustive check limited to 10 wires");
  }
  const std::size_t dim = std::size_t{1} << a.width();
  Amplitude phase{};
  bool have_phase = false;
  for (std::size_t in = 0; in < dim; ++in) {
    const StateVector sa = simulate(a, in), sb = simulate(b, in);
    for (std::size_t i = 0; i < dim; ++i) {
      const Amplitude x = sa[i], y = sb[i];
      if (!have_phase && std::abs(x) > 0.5 / std::sqrt(double(dim))) {
        if (std::abs(y) < 1e-300) return false;
        phase = y / x;
        phase /= std::abs(phase);
        have_phase = true;
      }
      if (have_phase) {
        if (std::abs(x * phase - y) > tolerance) return false;
      } else if (std::abs(std::abs(x) - std::abs(y)) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ddprep
