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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddprep/decompose.hpp"
#include "ddprep/state.hpp"
#include "ddprep/synthesis.hpp"

namespace ddprep {

enum class Algorithm { Dd, Baseline };
std::string_view to_string(Algorithm a);

struct BenchRecord {
  unsigned n = 0;
  std::uint64_t m = 0;
  std::string m_label;  // formula the cell came from, or "qba"
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::Dd;
  std::size_t k = 0;  // DD figures are 0 for the baseline
  std::size_t node_count = 0;
  std::uint64_t eliminated_count = 0;
  std::uint64_t cnots = 0;
  double wall_time_ms = 0.0;
};

struct BenchConfig {
  std::vector<unsigned> ns;
  std::vector<std::string> m_formulas;  // n, 2n, n^2, 2n^2, 8n^2, n^3, or an integer
  std::vector<unsigned> qba;            // extra QBA rows
  unsigned samples = 10;
  std::uint64_t seed_base = 0;  // sample i uses seed_base + i
  AmplitudeMode amplitude_mode = AmplitudeMode::RandomComplex;
  CostModel cost_model = CostModel::Cc6;
  AncillaMode ancilla_mode = AncillaMode::Lean;
  bool baseline = true;
  unsigned threads = 0;  // 0: hardware concurrency, capped by DDPREP_THREADS
};

/// Evaluates an m formula for a given n; nullopt when unrecognised.
std::optional<std::uint64_t> eval_m_formula(std::string_view formula,
                                            unsigned n);

/// Worker count: DDPREP_THREADS when set, else `requested`, else the
/// hardware concurrency; always at least 1.
unsigned bench_threads(unsigned requested);

BenchRecord run_dd(const SparseState& state, CostModel model,
                   AncillaMode mode);
BenchRecord run_baseline(const SparseState& state, CostModel model);

/// Runs every feasible (n, m, sample, algorithm) job. Cells with m > 2^n
/// are skipped and reported in `warnings`. Records come back in a fixed
/// order regardless of threading.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::vector<std::string>* warnings = nullptr);

struct BenchCell {
  unsigned n = 0;
  std::uint64_t m = 0;
  std::string m_label;
  Algorithm algorithm = Algorithm::Dd;
  std::size_t samples = 0;
  double mean_k = 0, mean_nodes = 0, mean_eliminated = 0;
  double mean_cnots = 0, median_cnots = 0;
  double mean_time_ms = 0;
  bool non_sparse = false;  // m >= 2^n / n
};

std::vector<BenchCell> summarize(const std::vector<BenchRecord>& records);

std::string records_csv(const std::vector<BenchRecord>& records);
std::string cells_csv(const std::vector<BenchCell>& cells,
                      const BenchConfig& config);

/// gnuplot script plotting mean CNOTs against m for each n and algorithm,
/// reading the cell CSV at `csv_path`.
std::string gnuplot_script(const std::string& csv_path,
                           const std::vector<BenchCell>& cells);

}  // namespace ddprep
