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
#include <span>
#include <utility>
#include <vector>

#include "ddprep/circuit.hpp"
#include "ddprep/state.hpp"

namespace ddprep {

/// One merge of two residual basis states into one.
struct MergeStep {
  BasisIndex first = 0;  // the pair as picked, smaller index first
  BasisIndex second = 0;
  std::size_t cx_count = 0;  // conjugating CNOTs
  std::size_t controls = 0;  // controls on the merging gate
};

/**
 * Merge-based preparation used as the comparison baseline.
 *
 * Works backwards from the target: repeatedly picks two residual basis
 * states, aligns them with CNOTs until they differ in one bit, and folds
 * one into the other with a multi-controlled single-qubit gate, until one
 * basis state remains; NOTs then reach |0...0>. The returned circuit is
 * the inverse of that sequence, on n+1 wires with wire 0 left idle so it
 * is directly comparable with the decision-diagram circuits.
 */
Circuit synthesize_baseline(const SparseState& state,
                            std::vector<MergeStep>* steps = nullptr);

/// Pair of minimum Hamming distance, ties broken by (smaller, larger)
/// ascending. Requires at least two states.
std::pair<BasisIndex, BasisIndex> pick_merge_pair(
    std::span<const BasisIndex> support);

}  // namespace ddprep
