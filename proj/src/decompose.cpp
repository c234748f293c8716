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


#include "ddprep/decompose.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ddprep {

std::string_view to_string(CostModel model) {
  return model == CostModel::Cc6 ? "cc6" : "cc4";
}

CostModel cost_model_from_string(std::string_view name) {
  if (name == "cc6") return CostModel::Cc6;
  if (name == "cc4") return CostModel::Cc4;
  throw std::invalid_argument("unknown cost model '" + std::string(name) +
                              "'");
}

namespace {

using Wires = std::vector<unsigned>;
constexpr double kPi = std::numbers::pi;

std::uint64_t ladder_cnots(std::size_t m) {
  if (m == 1) return 1;
  if (m == 2) return 6;
  return 8 * m - 6;
}

std::uint64_t relative_ladder_cnots(std::size_t m) {
  if (m == 1) return 1;
  if (m == 2) return 3;
  return 8 * m - 14;
}

std::uint64_t mcp_cnots(std::size_t c, std::size_t b) {
  if (c == 0) return 0;
  if (c == 1) return 2;
  if (c == 2) return 6;
  return 4 + 2 * mcx_cnots(c - 1, b + 1) + mcp_cnots(c - 1, b + 1);
}

class Emitter {
 public:
  Emitter(std::vector<Gate>& out, DecomposeReport* report)
      : out_(out), report_(report) {}

  void one(GateKind k, double angle, unsigned t) {
    out_.push_back(Gate{k, angle, t, {}});
  }
  void cx(unsigned c, unsigned t) {
    out_.push_back(Gate{GateKind::X, 0.0, t, {{c, true}}});
  }

  // A of the relative-phase Toffoli; its X-part flips t when q = 1.
  void rccx_half(unsigned q, unsigned t, bool dagger) {
    const double a = dagger ? -kPi / 4 : kPi / 4;
    one(GateKind::RY, a, t);
    cx(q, t);
    one(GateKind::RY, a, t);
  }

  // Toffoli up to a diagonal (Z on t when p = 1, q = 0).
  void rccx(unsigned p, unsigned q, unsigned t) {
    rccx_half(q, t, false);
    cx(p, t);
    rccx_half(q, t, true);
  }

  void cp(double phi, unsigned c, unsigned t) {
    one(GateKind::P, phi / 2, c);
    one(GateKind::P, phi / 2, t);
    cx(c, t);
    one(GateKind::P, -phi / 2, t);
    cx(c, t);
  }

  void ccp(double phi, unsigned c1, unsigned c2, unsigned t) {
    const double a = phi / 4;
    one(GateKind::P, a, c1);
    one(GateKind::P, a, c2);
    one(GateKind::P, a, t);
    cx(c1, t);
    one(GateKind::P, -a, t);
    cx(c2, t);
    one(GateKind::P, a, t);
    cx(c1, t);
    one(GateKind::P, -a, t);
    cx(c2, t);
    cx(c1, c2);
    one(GateKind::P, -a, c2);
    cx(c1, c2);
  }

  void ccx(unsigned c1, unsigned c2, unsigned t) {
    one(GateKind::H, 0.0, t);
    ccp(kPi, c1, c2, t);
    one(GateKind::H, 0.0, t);
  }

  // Diagonal network over all parities of (c1, c2, t); only the four
  // parities containing t carry a phase.
  void ccrz_network(double theta, unsigned c1, unsigned c2, unsigned t) {
    const double a = theta / 4;
    phase(a, t);
    cx(c1, t);
    phase(-a, t);
    cx(c2, t);
    phase(a, t);
    cx(c1, t);
    phase(-a, t);
    cx(c2, t);
    cx(c1, c2);  // c1 ^ c2 carries no phase here
    cx(c1, c2);
  }

  void ccr_cc6(GateKind k, double theta, unsigned c1, unsigned c2,
               unsigned t) {
    if (k == GateKind::RZ) {
      ccrz_network(theta, c1, c2, t);
      return;
    }
    // RY = S H RZ H S^dagger
    one(GateKind::P, -kPi / 2, t);
    one(GateKind::H, 0.0, t);
    ccrz_network(theta, c1, c2, t);
    one(GateKind::H, 0.0, t);
    one(GateKind::P, kPi / 2, t);
  }

  void ccr_cc4(GateKind k, double theta, unsigned c1, unsigned c2,
               unsigned t) {
    one(k, theta / 4, t);
    cx(c1, t);
    one(k, -theta / 4, t);
    cx(c2, t);
    one(k, theta / 4, t);
    cx(c1, t);
    one(k, -theta / 4, t);
    cx(c2, t);
  }

  void cr(GateKind k, double theta, unsigned c, unsigned t) {
    one(k, theta / 2, t);
    cx(c, t);
    one(k, -theta / 2, t);
    cx(c, t);
  }

  // a[m-3] ^= x[0] & ... & x[m-2], up to a diagonal; an involution.
  void s_rel(const Wires& x, const Wires& a) {
    const std::size_t m = x.size();
    for (std::size_t j = m - 3; j >= 1; --j) {
      rccx_half(x[j + 1], a[j], false);
      cx(a[j - 1], a[j]);
    }
    rccx(x[0], x[1], a[0]);
    for (std::size_t j = 1; j + 3 <= m; ++j) {
      cx(a[j - 1], a[j]);
      rccx_half(x[j + 1], a[j], true);
    }
  }

  // y ^= AND(x), exact. Needs x.size() - 2 dirty wires in a.
  void ladder(const Wires& x, const Wires& a, unsigned y) {
    const std::size_t m = x.size();
    if (m == 1) return cx(x[0], y);
    if (m == 2) return ccx(x[0], x[1], y);
    ccx(x[m - 1], a[m - 3], y);
    s_rel(x, a);
    ccx(x[m - 1], a[m - 3], y);
    s_rel(x, a);
  }

  // y ^= AND(x) up to a diagonal on the touched wires.
  void relative_ladder(const Wires& x, const Wires& a, unsigned y) {
    const std::size_t m = x.size();
    if (m == 1) return cx(x[0], y);
    if (m == 2) return rccx(x[0], x[1], y);
    rccx_half(x[m - 1], y, false);
    cx(a[m - 3], y);
    s_rel(x, a);
    cx(a[m - 3], y);
    rccx_half(x[m - 1], y, true);
    s_rel(x, a);
  }

  void mcx(const Wires& c, unsigned t, const Wires& free) {
    const std::size_t n = c.size();
    if (n == 0) return one(GateKind::X, 0.0, t);
    if (n == 1) return cx(c[0], t);
    if (n == 2) return ccx(c[0], c[1], t);
    if (free.size() >= n - 2) return ladder(c, free, t);
    if (free.empty()) {
      if (report_) ++report_->quadratic_fallbacks;
      one(GateKind::H, 0.0, t);
      mcp(kPi, c, t, free);
      one(GateKind::H, 0.0, t);
      return;
    }
    // Split on one borrowed wire b: t ^= AND(cb) & b around b ^= AND(ca).
    const std::size_t m1 = (n + 1) / 2;
    const Wires ca(c.begin(), c.begin() + static_cast<long>(m1));
    const Wires cb(c.begin() + static_cast<long>(m1), c.end());
    const unsigned b = free[0];
    Wires g_ctrl = cb;
    g_ctrl.push_back(b);
    Wires g_dirty = ca;
    g_dirty.insert(g_dirty.end(), free.begin() + 1, free.end());
    Wires m_dirty = cb;
    m_dirty.insert(m_dirty.end(), free.begin() + 1, free.end());

    std::vector<Gate> m_gates;
    Emitter(m_gates, report_).relative_ladder(ca, m_dirty, b);

    ladder(g_ctrl, g_dirty, t);
    out_.insert(out_.end(), m_gates.begin(), m_gates.end());
    ladder(g_ctrl, g_dirty, t);
    for (auto it = m_gates.rbegin(); it != m_gates.rend(); ++it) {
      out_.push_back(it->inverse());
    }
  }

  void mc_rotation(GateKind k, double theta, const Wires& c, unsigned t,
                   const Wires& free, CostModel model) {
    switch (c.size()) {
      case 0: return one(k, theta, t);
      case 1: return cr(k, theta, c[0], t);
      case 2:
        if (model == CostModel::Cc4) return ccr_cc4(k, theta, c[0], c[1], t);
        return ccr_cc6(k, theta, c[0], c[1], t);
      default:
        one(k, theta / 2, t);
        mcx(c, t, free);
        one(k, -theta / 2, t);
        mcx(c, t, free);
    }
  }

  // U = A X B X C with ABC = I, X the multi-controlled NOT.
  void mc_u(const Gate& g, const Wires& c, const Wires& free) {
    const unsigned t = g.target;
    if (c.empty()) {
      out_.push_back(Gate{GateKind::U, g.angle, t, {}, g.phi, g.lambda});
      return;
    }
    rotation(GateKind::RZ, (g.lambda - g.phi) / 2, t);
    mcx(c, t, free);
    rotation(GateKind::RZ, -(g.phi + g.lambda) / 2, t);
    rotation(GateKind::RY, -g.angle / 2, t);
    mcx(c, t, free);
    rotation(GateKind::RY, g.angle / 2, t);
    rotation(GateKind::RZ, g.phi, t);
  }

  void mcp(double phi, const Wires& c, unsigned t, const Wires& free) {
    switch (c.size()) {
      case 0: return one(GateKind::P, phi, t);
      case 1: return cp(phi, c[0], t);
      case 2: return ccp(phi, c[0], c[1], t);
      default: break;
    }
    const unsigned last = c.back();
    const Wires head(c.begin(), c.end() - 1);
    Wires free_t = free;
    free_t.insert(std::upper_bound(free_t.begin(), free_t.end(), t), t);
    Wires free_last = free;
    free_last.insert(std::upper_bound(free_last.begin(), free_last.end(), last),
                     last);
    cp(phi / 2, last, t);
    mcx(head, last, free_t);
    cp(-phi / 2, last, t);
    mcx(head, last, free_t);
    mcp(phi / 2, head, t, free_last);
  }

 private:
  void phase(double a, unsigned t) {
    if (a != 0.0) one(GateKind::P, a, t);
  }
  void rotation(GateKind k, double a, unsigned t) {
    if (a != 0.0) one(k, a, t);
  }

  std::vector<Gate>& out_;
  DecomposeReport* report_;
};

Wires idle_wires(const Gate& g, unsigned width) {
  std::vector<bool> busy(width, false);
  busy[g.target] = true;
  for (const auto& c : g.controls) busy[c.wire] = true;
  Wires out;
  for (unsigned w = 0; w < width; ++w) {
    if (!busy[w]) out.push_back(w);
  }
  return out;
}

void check_controllable(const Gate& g) {
  if (g.kind == GateKind::H && !g.controls.empty()) {
    throw std::invalid_argument("controlled H is not supported");
  }
}

}  // namespace

std::uint64_t mcx_cnots(std::size_t c, std::size_t b) {
  if (c <= 2) return c == 0 ? 0 : c == 1 ? 1 : 6;
  if (b >= c - 2) return ladder_cnots(c);
  if (b == 0) return mcp_cnots(c, 0);
  const std::size_t m1 = (c + 1) / 2;
  const std::size_t m2 = c - m1;
  return 2 * ladder_cnots(m2 + 1) + 2 * relative_ladder_cnots(m1);
}

void mcx_decompose(std::span<const unsigned> controls, unsigned target,
                   std::span<const unsigned> borrowable,
                   std::vector<Gate>& out, DecomposeReport* report) {
  Wires free(borrowable.begin(), borrowable.end());
  std::sort(free.begin(), free.end());
  Emitter(out, report).mcx(Wires(controls.begin(), controls.end()), target,
                           free);
}

std::uint64_t gate_cnots(const Gate& g, unsigned width, CostModel model) {
  check_controllable(g);
  const std::size_t c = g.controls.size();
  const std::size_t b = width - c - 1;
  switch (g.kind) {
    case GateKind::H: return 0;
    case GateKind::X: return mcx_cnots(c, b);
    case GateKind::P: return mcp_cnots(c, b);
    case GateKind::RY:
    case GateKind::RZ:
      if (c <= 1) return 2 * c;
      if (c == 2) return model == CostModel::Cc4 ? 4 : 6;
      return 2 * mcx_cnots(c, b);
    case GateKind::U: return c == 0 ? 0 : 2 * mcx_cnots(c, b);
  }
  return 0;
}

Circuit decompose(const Circuit& circuit, CostModel model,
                  DecomposeReport* report) {
  Circuit out(circuit.width());
  std::vector<Gate> buf;
  Emitter em(buf, report);
  for (const Gate& g : circuit.gates()) {
    check_controllable(g);
    buf.clear();
    // negative controls become positive between two X gates
    Wires neg, pos;
    for (const auto& c : g.controls) {
      pos.push_back(c.wire);
      if (!c.positive) neg.push_back(c.wire);
    }
    for (unsigned w : neg) em.one(GateKind::X, 0.0, w);
    const Wires free = idle_wires(g, circuit.width());
    switch (g.kind) {
      case GateKind::H: em.one(GateKind::H, 0.0, g.target); break;
      case GateKind::X: em.mcx(pos, g.target, free); break;
      case GateKind::P: em.mcp(g.angle, pos, g.target, free); break;
      case GateKind::U: em.mc_u(g, pos, free); break;
      case GateKind::RY:
      case GateKind::RZ:
        em.mc_rotation(g.kind, g.angle, pos, g.target, free, model);
        break;
    }
    for (unsigned w : neg) em.one(GateKind::X, 0.0, w);
    for (auto& d : buf) out.add(std::move(d));
  }
  return out;
}

std::uint64_t count_cnots(const Circuit& circuit, CostModel model,
                          DecomposeReport* report) {
  std::uint64_t total = 0;
  for (const Gate& g : circuit.gates()) {
    total += gate_cnots(g, circuit.width(), model);
    if (report && g.controls.size() >= 3 &&
        circuit.width() == g.controls.size() + 1) {
      if (g.kind == GateKind::X) report->quadratic_fallbacks += 1;
      if (g.kind == GateKind::RY || g.kind == GateKind::RZ ||
          g.kind == GateKind::U) {
        report->quadratic_fallbacks += 2;
      }
    }
  }
  return total;
}

}  // namespace ddprep
