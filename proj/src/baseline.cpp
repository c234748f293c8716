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


#include "ddprep/baseline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ddprep {

std::pair<BasisIndex, BasisIndex> pick_merge_pair(
    std::span<const BasisIndex> support) {
  if (support.size() < 2) {
    throw std::invalid_argument("need at least two basis states");
  }
  std::vector<BasisIndex> s(support.begin(), support.end());
  std::sort(s.begin(), s.end());
  int best = 65;
  std::pair<BasisIndex, BasisIndex> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const int d = std::popcount(s[i] ^ s[j]);
      if (d < best) {
        best = d;
        out = {s[i], s[j]};
      }
    }
  }
  return out;
}

namespace {

using Pair = std::pair<BasisIndex, BasisIndex>;

class Residual {
 public:
  Residual(const SparseState& state) : n_(state.num_qubits()) {
    for (const auto& e : state.entries()) insert(e.index, e.amplitude);
    rebuild_pairs();
  }

  std::size_t size() const { return states_.size(); }
  const std::vector<BasisIndex>& states() const { return states_; }
  Amplitude& amp(BasisIndex s) { return amps_.at(s); }

  Pair pick() {
    if (!near_.empty()) return *near_.begin();
    std::vector<BasisIndex> s = states_;
    std::sort(s.begin(), s.end());
    int best = 65;
    Pair out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const int d = std::popcount(s[i] ^ s[j]);
        if (d < best) {
          best = d;
          out = {s[i], s[j]};
        }
      }
    }
    return out;
  }

  // Every state with bit `pivot` set gets `flip` XORed in.
  void conjugate(BasisIndex pivot, BasisIndex flip) {
    std::unordered_map<BasisIndex, Amplitude> next;
    next.reserve(amps_.size());
    for (auto& s : states_) {
      const Amplitude a = amps_[s];
      if (s & pivot) s ^= flip;
      next.emplace(s, a);
    }
    amps_ = std::move(next);
    rebuild_pairs();
  }

  void erase(BasisIndex s) {
    for (unsigned b = 0; b < n_; ++b) {
      const BasisIndex t = s ^ (BasisIndex{1} << b);
      if (amps_.count(t)) near_.erase(std::minmax(s, t));
    }
    amps_.erase(s);
    auto it = std::find(states_.begin(), states_.end(), s);
    *it = states_.back();
    states_.pop_back();
  }

 private:
  void insert(BasisIndex s, Amplitude a) {
    states_.push_back(s);
    amps_.emplace(s, a);
  }

  void rebuild_pairs() {
    near_.clear();
    for (BasisIndex s : states_) {
      for (unsigned b = 0; b < n_; ++b) {
        const BasisIndex t = s ^ (BasisIndex{1} << b);
        if (t > s && amps_.count(t)) near_.insert({s, t});
      }
    }
  }

  unsigned n_;
  std::vector<BasisIndex> states_;
  std::unordered_map<BasisIndex, Amplitude> amps_;
  std::set<Pair> near_;  // residual pairs at Hamming distance 1
};

double wrap_angle(double a) {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  a = std::fmod(a, kTwoPi);
  if (a > std::numbers::pi) a -= kTwoPi;
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

}  // namespace

Circuit synthesize_baseline(const SparseState& state,
                            std::vector<MergeStep>* steps) {
  const unsigned n = state.num_qubits();
  const auto wire = [n](unsigned pos) { return n - pos; };  // bit -> wire
  Circuit undo(n + 1);  // |phi> -> |0...0>
  Residual r(state);
  if (steps) steps->clear();

  while (r.size() > 1) {
    const auto [x, y] = r.pick();
    MergeStep step{x, y, 0, 0};
    const BasisIndex diff = x ^ y;
    const unsigned p = static_cast<unsigned>(std::countr_zero(diff));
    const BasisIndex pivot = BasisIndex{1} << p;
    const BasisIndex flip = diff & ~pivot;
    if (flip) {
      for (unsigned j = n; j-- > 0;) {
        if ((flip >> j) & 1U) {
          undo.cx(wire(p), wire(j));
          ++step.cx_count;
        }
      }
      r.conjugate(pivot, flip);
    }
    const BasisIndex low = (x & pivot) ? y : x;
    const BasisIndex high = low | pivot;

    // Greedily pick bits that separate the pair from every other state.
    std::vector<BasisIndex> rest;
    rest.reserve(r.size());
    for (BasisIndex s : r.states()) {
      if (s != low && s != high) rest.push_back(s);
    }
    std::vector<Control> controls;
    BasisIndex used = pivot;
    while (!rest.empty()) {
      std::vector<std::size_t> hits(n, 0);
      for (BasisIndex s : rest) {
        BasisIndex d = (s ^ low) & ~used;
        while (d) {
          ++hits[static_cast<unsigned>(std::countr_zero(d))];
          d &= d - 1;
        }
      }
      // most eliminated; ties to the lowest wire, i.e. the highest bit
      unsigned best = n;
      for (unsigned b = n; b-- > 0;) {
        if (!((used >> b) & 1U) && (best == n || hits[b] > hits[best])) {
          best = b;
        }
      }
      const BasisIndex m = BasisIndex{1} << best;
      used |= m;
      controls.push_back({wire(best), (low & m) != 0});
      std::erase_if(rest, [&](BasisIndex s) { return (s ^ low) & m; });
    }
    std::sort(controls.begin(), controls.end(),
              [](const Control& a, const Control& b) { return a.wire < b.wire; });
    step.controls = controls.size();

    const Amplitude a0 = r.amp(low), a1 = r.amp(high);
    const double r0 = std::abs(a0), r1 = std::abs(a1);
    const Amplitude cross = a1 * std::conj(a0);
    Amplitude survivor;
    if (std::abs(cross.imag()) <= 1e-12 * std::abs(cross)) {
      // relative phase 0 or pi: a signed y-rotation suffices
      const double theta = 2 * std::atan2(cross.real() / r0, r0);
      undo.ry(-theta, wire(p), controls);
      survivor = std::cos(theta / 2) * a0 + std::sin(theta / 2) * a1;
    } else {
      const double theta = 2 * std::atan2(r1, r0);
      const double delta = wrap_angle(std::arg(a0) - std::arg(a1));
      undo.u(-theta, 0.0, delta, wire(p), controls);
      // RZ(delta) then RY(-theta), first row
      const Amplitude i{0.0, 1.0};
      survivor = std::cos(theta / 2) * std::exp(-i * (delta / 2)) * a0 +
                 std::sin(theta / 2) * std::exp(i * (delta / 2)) * a1;
    }
    r.erase(high);
    r.amp(low) = survivor;
    if (steps) steps->push_back(step);
  }

  const BasisIndex last = r.states().front();
  for (unsigned j = n; j-- > 0;) {
    if ((last >> j) & 1U) undo.x(wire(j));
  }
  return undo.inverse();
}

}  // namespace ddprep
