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

#include "ddprep/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_set>

namespace ddprep {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(
          line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Amplitude SparseState::amplitude(BasisIndex index) const {
  // entries are sorted descending
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const BasisEntry& e, BasisIndex i) { return e.index > i; });
  if (it != entries_.end() && it->index == index) return it->amplitude;
  return {};
}

std::string SparseState::bitstring(BasisIndex index) const {
  return format_bits(index, num_qubits_);
}

SparseState normalize(unsigned num_qubits, std::vector<BasisEntry> entries) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument(
        "qubit count must be in 1.." + std::to_string(kMaxQubits));
  }
  const BasisIndex limit = BasisIndex{1} << num_qubits;
  std::erase_if(entries, [](const BasisEntry& e) {
    return e.amplitude == Amplitude{};
  });
  if (entries.empty()) {
    throw std::invalid_argument("state has no nonzero amplitude");
  }
  double norm2 = 0.0;
  for (const auto& e : entries) {
    if (e.index >= limit) {
      throw std::invalid_argument(
          "basis index " + std::to_string(e.index) + " does not fit in " +
          std::to_string(num_qubits) + " qubits");
    }
    if (!std::isfinite(e.amplitude.real()) ||
        !std::isfinite(e.amplitude.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
    norm2 += std::norm(e.amplitude);
  }
  std::sort(entries.begin(), entries.end(),
            [](const BasisEntry& a, const BasisEntry& b) {
              return a.index > b.index;
            });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].index == entries[i - 1].index) {
      throw std::invalid_argument(
          "duplicate basis state " +
          format_bits(entries[i].index, num_qubits));
    }
  }

  SparseState s;
  s.num_qubits_ = num_qubits;
  s.renormalized_ = std::abs(norm2 - 1.0) > kRenormWarning;
  if (std::abs(norm2 - 1.0) > 1e-15) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& e : entries) e.amplitude *= scale;
  }
  s.entries_ = std::move(entries);
  return s;
}

SparseState normalize(const SparseState& state) {
  return normalize(state.num_qubits(),
                   {state.entries().begin(), state.entries().end()});
}

BasisIndex parse_bits(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxQubits) {
    throw std::invalid_argument("bitstring length must be in 1.." +
                                std::to_string(kMaxQubits));
  }
  BasisIndex v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring contains '" + std::string(1, c) +
                                  "'");
    }
    v = (v << 1) | static_cast<BasisIndex>(c == '1');
  }
  return v;
}

std::string format_bits(BasisIndex index, unsigned num_qubits) {
  std::string out(num_qubits, '0');
  for (unsigned i = 0; i < num_qubits; ++i) {
    if ((index >> (num_qubits - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

namespace {

double parse_double(std::string_view token, std::size_t line) {
  // strtod accepts the usual exponent/inf forms; from_chars for double is
  // not available on every toolchain we build with.
  std::string buf(token);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) {
    throw ParseError(line, "malformed number '" + buf + "'");
  }
  if (!std::isfinite(v)) throw ParseError(line, "non-finite number");
  return v;
}

}  // namespace

SparseState parse_state(std::string_view text) {
  std::vector<BasisEntry> entries;
  std::unordered_set<BasisIndex> seen;
  unsigned width = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected '<bits> <re> [<im>]'");
    }
    BasisIndex index = 0;
    try {
      index = parse_bits(tokens[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (width == 0) {
      width = static_cast<unsigned>(tokens[0].size());
    } else if (tokens[0].size() != width) {
      throw ParseError(line_no, "expected " + std::to_string(width) +
                                    " bits, got " +
                                    std::to_string(tokens[0].size()));
    }
    if (!seen.insert(index).second) {
      throw ParseError(line_no, "duplicate basis state " + tokens[0]);
    }
    const double re = parse_double(tokens[1], line_no);
    const double im = tokens.size() == 3 ? parse_double(tokens[2], line_no) : 0;
    entries.push_back({index, {re, im}});
  }
  if (width == 0) throw ParseError(0, "state file has no entries");
  try {
    return normalize(width, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_state(const SparseState& state) {
  std::string out;
  char buf[96];
  for (const auto& e : state.entries()) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g\n", e.amplitude.real(),
                  e.amplitude.imag());
    out += state.bitstring(e.index);
    out += buf;
  }
  return out;
}

AmplitudeMode amplitude_mode_from_string(std::string_view name) {
  if (name == "uniform") return AmplitudeMode::Uniform;
  if (name == "random-complex") return AmplitudeMode::RandomComplex;
  throw std::invalid_argument("unknown amplitude mode '" + std::string(name) +
                              "'");
}

std::string_view to_string(AmplitudeMode mode) {
  return mode == AmplitudeMode::Uniform ? "uniform" : "random-complex";
}

namespace {

// Unbiased integer in [0, bound] by rejection on the top bits.
std::uint64_t uniform_below_or_equal(std::mt19937_64& rng,
                                     std::uint64_t bound) {
  if (bound == ~std::uint64_t{0}) return rng();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SparseState random_sparse_state(unsigned num_qubits, std::size_t m,
                                std::uint64_t seed, AmplitudeMode mode) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  const BasisIndex space = BasisIndex{1} << num_qubits;
  if (m == 0 || m > space) {
    throw std::invalid_argument("m = " + std::to_string(m) +
                                " outside 1..2^" + std::to_string(num_qubits));
  }
  std::mt19937_64 rng(seed);

  // Floyd's sampling: m distinct values from [0, space).
  std::unordered_set<BasisIndex> chosen;
  chosen.reserve(m * 2);
  std::vector<BasisIndex> order;
  order.reserve(m);
  for (BasisIndex j = space - m; j < space; ++j) {
    BasisIndex t = uniform_below_or_equal(rng, j);
    if (!chosen.insert(t).second) {
      chosen.insert(j);
      t = j;
    }
    order.push_back(t);
  }
  std::sort(order.begin(), order.end(), std::greater<>());

  std::vector<BasisEntry> entries;
  entries.reserve(m);
  for (BasisIndex idx : order) {
    Amplitude a{1.0, 0.0};
    if (mode == AmplitudeMode::RandomComplex) {
      const double magnitude = 1.0 - unit_interval(rng);  // (0, 1]
      const double phase = 2.0 * std::numbers::pi * unit_interval(rng);
      a = std::polar(magnitude, phase);
    }
    entries.push_back({idx, a});
  }
  return normalize(num_qubits, std::move(entries));
}

SparseState qba_state(unsigned num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  const std::uint64_t m = std::uint64_t{num_qubits} * num_qubits * num_qubits;
  if (m > (std::uint64_t{1} << num_qubits)) {
    throw std::invalid_argument("n^3 = " + std::to_string(m) +
                                " exceeds 2^" + std::to_string(num_qubits));
  }
  std::vector<BasisEntry> entries;
  entries.reserve(m);
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::uint64_t i = m; i >= 1; --i) entries.push_back({i, {amp, 0.0}});
  return normalize(num_qubits, std::move(entries));
}

}  // namespace ddprep
