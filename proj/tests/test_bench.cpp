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


#include <catch_amalgamated.hpp>

#include <algorithm>

#include "ddprep/bench.hpp"

using namespace ddprep;

TEST_CASE("m formulas", "[bench]") {
  CHECK(eval_m_formula("n", 16) == 16u);
  CHECK(eval_m_formula("2n", 16) == 32u);
  CHECK(eval_m_formula("n^2", 16) == 256u);
  CHECK(eval_m_formula("2n^2", 16) == 512u);
  CHECK(eval_m_formula("8n^2", 16) == 2048u);
  CHECK(eval_m_formula("n^3", 16) == 4096u);
  CHECK(eval_m_formula("123", 16) == 123u);
  CHECK_FALSE(eval_m_formula("", 16));
  CHECK_FALSE(eval_m_formula("n^4", 16));
  CHECK_FALSE(eval_m_formula("99999999999999999999999", 16));
}

TEST_CASE("empty sweep gives a header-only CSV", "[bench]") {
  BenchConfig cfg;
  const auto records = run_bench(cfg);
  CHECK(records.empty());
  const std::string csv = cells_csv(summarize(records), cfg);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
  CHECK(csv.rfind("n,m,m_formula,algorithm", 0) == 0);
  CHECK(records_csv(records).find('\n') == records_csv(records).size() - 1);
}

TEST_CASE("infeasible cells are skipped with a warning", "[bench]") {
  BenchConfig cfg;
  cfg.ns = {4};
  cfg.m_formulas = {"n^3", "bogus"};
  cfg.qba = {5};
  std::vector<std::string> warnings;
  CHECK(run_bench(cfg, &warnings).empty());
  CHECK(warnings.size() == 3);
}

TEST_CASE("sweeps are deterministic and thread-count independent",
          "[bench]") {
  BenchConfig cfg;
  cfg.ns = {6, 8};
  cfg.m_formulas = {"n", "2n"};
  cfg.qba = {10};
  cfg.samples = 3;
  cfg.seed_base = 100;
  cfg.threads = 1;
  const auto a = run_bench(cfg);
  cfg.threads = 3;
  const auto b = run_bench(cfg);
  REQUIRE(a.size() == (2 * 2 * 3 + 1) * 2);
  REQUIRE(b.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].algorithm == b[i].algorithm);
    CHECK(a[i].cnots == b[i].cnots);
    CHECK(a[i].k == b[i].k);
  }
  const auto cells = summarize(a);
  CHECK(cells.size() == 10);
  for (const auto& c : cells) {
    if (c.m_label == "qba") {
      CHECK(c.samples == 1);
      CHECK(c.m == 1000);
    } else {
      CHECK(c.samples == 3);
    }
    if (c.algorithm == Algorithm::Dd) CHECK(c.mean_k > 0);
  }
  const std::string gp = gnuplot_script("cells.csv", cells);
  CHECK(gp.find("n=6 dd") != std::string::npos);
  CHECK(gp.find("n=8 baseline") != std::string::npos);
}

TEST_CASE("run_dd reports DD figures", "[bench]") {
  const BenchRecord r =
      run_dd(qba_state(20), CostModel::Cc6, AncillaMode::Lean);
  CHECK(r.k == 18);
  CHECK(r.node_count == 32);
  CHECK(r.eliminated_count == 110);
  CHECK(r.cnots == 1485);
  const BenchRecord b = run_baseline(qba_state(10), CostModel::Cc6);
  CHECK(b.algorithm == Algorithm::Baseline);
  CHECK(b.k == 0);
  CHECK(b.cnots > 0);
}
