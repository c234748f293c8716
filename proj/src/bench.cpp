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


#include "ddprep/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <thread>
#include <tuple>

#include "ddprep/baseline.hpp"

namespace ddprep {

std::string_view to_string(Algorithm a) {
  return a == Algorithm::Dd ? "dd" : "baseline";
}

std::optional<std::uint64_t> eval_m_formula(std::string_view f, unsigned n) {
  const std::uint64_t N = n;
  if (f == "n") return N;
  if (f == "2n") return 2 * N;
  if (f == "n^2") return N * N;
  if (f == "2n^2") return 2 * N * N;
  if (f == "8n^2") return 8 * N * N;
  if (f == "n^3") return N * N * N;
  if (f.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : f) {
    if (c < '0' || c > '9') return std::nullopt;
    if (v > (UINT64_MAX - 9) / 10) return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

unsigned bench_threads(unsigned requested) {
  unsigned t = requested ? requested : std::thread::hardware_concurrency();
  if (const char* env = std::getenv("DDPREP_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) t = std::min<unsigned>(t ? t : 1, static_cast<unsigned>(cap));
  }
  return std::max(1U, t);
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

BenchRecord run_dd(const SparseState& state, CostModel model,
                   AncillaMode mode) {
  const auto start = std::chrono::steady_clock::now();
  const Compilation c = compile(state, {mode, true});
  const DDStats s = stats(c.dd);
  BenchRecord r;
  r.n = state.num_qubits();
  r.m = state.size();
  r.algorithm = Algorithm::Dd;
  r.k = s.path_count;
  r.node_count = s.node_count;
  r.eliminated_count = s.eliminated_count;
  r.cnots = count_cnots(c.circuit, model);
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

BenchRecord run_baseline(const SparseState& state, CostModel model) {
  const auto start = std::chrono::steady_clock::now();
  const Circuit c = synthesize_baseline(state);
  BenchRecord r;
  r.n = state.num_qubits();
  r.m = state.size();
  r.algorithm = Algorithm::Baseline;
  r.cnots = count_cnots(c, model);
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::vector<std::string>* warnings) {
  struct Job {
    unsigned n;
    std::uint64_t m;
    std::string label;
    std::uint64_t seed;
    Algorithm algorithm;
    bool qba;
  };
  std::vector<Job> jobs;
  std::vector<Algorithm> algos{Algorithm::Dd};
  if (config.baseline) algos.push_back(Algorithm::Baseline);

  for (unsigned n : config.ns) {
    for (const auto& f : config.m_formulas) {
      const auto m = eval_m_formula(f, n);
      if (!m) {
        if (warnings) warnings->push_back("unknown m formula '" + f + "'");
        continue;
      }
      if (n == 0 || n > kMaxQubits || *m == 0 ||
          (n < 64 && *m > (std::uint64_t{1} << n))) {
        if (warnings) {
          warnings->push_back("skipping n=" + std::to_string(n) + " m=" + f +
                              ": infeasible");
        }
        continue;
      }
      for (unsigned i = 0; i < config.samples; ++i) {
        for (Algorithm a : algos) {
          jobs.push_back({n, *m, f, config.seed_base + i, a, false});
        }
      }
    }
  }
  for (unsigned n : config.qba) {
    const std::uint64_t m = std::uint64_t{n} * n * n;
    if (n == 0 || n > kMaxQubits || m > (std::uint64_t{1} << n)) {
      if (warnings) {
        warnings->push_back("skipping qba n=" + std::to_string(n) +
                            ": n^3 > 2^n");
      }
      continue;
    }
    for (Algorithm a : algos) jobs.push_back({n, m, "qba", 0, a, true});
  }

  std::vector<BenchRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const Job& job = jobs[j];
      const SparseState s =
          job.qba ? qba_state(job.n)
                  : random_sparse_state(job.n, job.m, job.seed,
                                        config.amplitude_mode);
      BenchRecord r = job.algorithm == Algorithm::Dd
                          ? run_dd(s, config.cost_model, config.ancilla_mode)
                          : run_baseline(s, config.cost_model);
      r.seed = job.seed;
      r.m_label = job.label;
      out[j] = std::move(r);
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(
      bench_threads(config.threads), std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<BenchCell> summarize(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<unsigned, std::uint64_t, std::string, int>;
  std::map<Key, std::vector<const BenchRecord*>> groups;
  std::vector<Key> order;
  for (const auto& r : records) {
    Key key{r.n, r.m, r.m_label, static_cast<int>(r.algorithm)};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }
  std::vector<BenchCell> cells;
  for (const Key& key : order) {
    const auto& g = groups[key];
    BenchCell c;
    c.n = std::get<0>(key);
    c.m = std::get<1>(key);
    c.m_label = std::get<2>(key);
    c.algorithm = static_cast<Algorithm>(std::get<3>(key));
    c.samples = g.size();
    std::vector<double> cn;
    for (const BenchRecord* r : g) {
      c.mean_k += double(r->k);
      c.mean_nodes += double(r->node_count);
      c.mean_eliminated += double(r->eliminated_count);
      c.mean_cnots += double(r->cnots);
      c.mean_time_ms += r->wall_time_ms;
      cn.push_back(double(r->cnots));
    }
    const double s = double(g.size());
    c.mean_k /= s;
    c.mean_nodes /= s;
    c.mean_eliminated /= s;
    c.mean_cnots /= s;
    c.mean_time_ms /= s;
    std::sort(cn.begin(), cn.end());
    const std::size_t h = cn.size() / 2;
    c.median_cnots = cn.size() % 2 ? cn[h] : (cn[h - 1] + cn[h]) / 2;
    c.non_sparse =
        c.n < 64 && double(c.m) * c.n >= std::ldexp(1.0, static_cast<int>(c.n));
    cells.push_back(std::move(c));
  }
  return cells;
}

std::string records_csv(const std::vector<BenchRecord>& records) {
  std::string out =
      "n,m,m_formula,seed,algorithm,k,node_count,eliminated_count,cnots,"
      "wall_time_ms\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%u,%llu,%s,%llu,%s,%zu,%zu,%llu,%llu,%.3f\n",
                  r.n, static_cast<unsigned long long>(r.m), r.m_label.c_str(),
                  static_cast<unsigned long long>(r.seed),
                  std::string(to_string(r.algorithm)).c_str(), r.k,
                  r.node_count,
                  static_cast<unsigned long long>(r.eliminated_count),
                  static_cast<unsigned long long>(r.cnots), r.wall_time_ms);
    out += buf;
  }
  return out;
}

std::string cells_csv(const std::vector<BenchCell>& cells,
                      const BenchConfig& config) {
  std::string out =
      "n,m,m_formula,algorithm,samples,seed_base,amplitude_mode,cost_model,"
      "mean_k,mean_nodes,mean_eliminated,mean_cnots,median_cnots,"
      "mean_time_ms,non_sparse\n";
  char buf[512];
  for (const auto& c : cells) {
    std::snprintf(
        buf, sizeof buf,
        "%u,%llu,%s,%s,%zu,%llu,%s,%s,%.3f,%.3f,%.3f,%.3f,%.1f,%.3f,%d\n", c.n,
        static_cast<unsigned long long>(c.m), c.m_label.c_str(),
        std::string(to_string(c.algorithm)).c_str(), c.samples,
        static_cast<unsigned long long>(config.seed_base),
        std::string(to_string(config.amplitude_mode)).c_str(),
        std::string(to_string(config.cost_model)).c_str(), c.mean_k,
        c.mean_nodes, c.mean_eliminated, c.mean_cnots, c.median_cnots,
        c.mean_time_ms, c.non_sparse ? 1 : 0);
    out += buf;
  }
  return out;
}

std::string gnuplot_script(const std::string& csv_path,
                           const std::vector<BenchCell>& cells) {
  std::vector<unsigned> ns;
  for (const auto& c : cells) {
    if (c.m_label != "qba" &&
        std::find(ns.begin(), ns.end(), c.n) == ns.end()) {
      ns.push_back(c.n);
    }
  }
  std::string out =
      "set datafile separator ','\n"
      "set key top left\n"
      "set logscale xy\n"
      "set xlabel 'm'\n"
      "set ylabel 'mean CNOTs'\n"
      "set terminal pngcairo size 900,600\n"
      "set output 'cnots.png'\n"
      "plot ";
  bool first = true;
  for (unsigned n : ns) {
    for (const char* algo : {"dd", "baseline"}) {
      if (!first) out += ", \\\n     ";
      first = false;
      out += "'" + csv_path + "' using ($1==" + std::to_string(n) +
             " && strcol(4) eq '" + algo + "' && strcol(3) ne 'qba' ? $2 : "
             "1/0):12 with linespoints title 'n=" +
             std::to_string(n) + " " + algo + "'";
    }
  }
  if (first) out += "NaN notitle";
  out += "\n";
  return out;
}

}  // namespace ddprep
