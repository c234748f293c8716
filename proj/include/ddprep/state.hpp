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

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddprep {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

/// Largest register handled anywhere in the library (basis states are
/// stored as 64-bit integers).
inline constexpr unsigned kMaxQubits = 62;

/// Squared-norm tolerance for a state to count as normalized.
inline constexpr double kNormTolerance = 1e-12;
/// Inputs farther than this from unit norm get the `renormalized` flag.
inline constexpr double kRenormWarning = 1e-6;

struct BasisEntry {
  BasisIndex index = 0;
  Amplitude amplitude{};
};

/// Thrown for malformed state files; carries the 1-based line number
/// (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * A normalized sparse n-qubit state sum_s a_s |s>.
 *
 * Bit convention: q1 is the most significant bit of the basis index and
 * the leftmost character of the textual bitstring. Entries are kept in
 * strictly descending order of their index, all amplitudes are nonzero,
 * and the squared norm is 1 within kNormTolerance.
 */
class SparseState {
 public:
  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const BasisEntry> entries() const { return entries_; }
  const BasisEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// True when the input was farther than kRenormWarning from unit norm.
  bool renormalized() const { return renormalized_; }

  /// Amplitude of |index>, zero when index is not in the support.
  Amplitude amplitude(BasisIndex index) const;

  std::string bitstring(BasisIndex index) const;

 private:
  friend SparseState normalize(unsigned, std::vector<BasisEntry>);
  SparseState() = default;

  unsigned num_qubits_ = 0;
  std::vector<BasisEntry> entries_;
  bool renormalized_ = false;
};

/// Validates, sorts and normalizes raw entries. Exact-zero amplitudes are
/// dropped. Throws std::invalid_argument on duplicate or out-of-range
/// indices, or when no nonzero amplitude remains.
SparseState normalize(unsigned num_qubits, std::vector<BasisEntry> entries);

/// Renormalizes an existing state; a no-op on already normalized input
/// up to rounding.
SparseState normalize(const SparseState& state);

/// Parses the line-oriented state format `<bits> <re> [<im>]`.
SparseState parse_state(std::string_view text);

/// Writes the state format, descending order, 17 significant digits.
std::string serialize_state(const SparseState& state);

/// Parses a bitstring of '0'/'1' characters, q1 first.
BasisIndex parse_bits(std::string_view bits);
std::string format_bits(BasisIndex index, unsigned num_qubits);

enum class AmplitudeMode { Uniform, RandomComplex };

AmplitudeMode amplitude_mode_from_string(std::string_view name);
std::string_view to_string(AmplitudeMode mode);

/// m distinct basis states drawn without replacement from {0,1}^n.
/// Deterministic in (n, m, seed, mode) on every platform: all randomness
/// comes from std::mt19937_64 through hand-written transforms.
SparseState random_sparse_state(unsigned num_qubits, std::size_t m,
                                std::uint64_t seed, AmplitudeMode mode);

/// Uniform superposition over |1>, ..., |n^3> on n qubits.
SparseState qba_state(unsigned num_qubits);

}  // namespace ddprep
