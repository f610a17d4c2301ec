// Copyright 2026 The Authors.
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

#include "laminar_match/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "laminar_match/generator.hpp"
#include "laminar_match/solver.hpp"

namespace laminar_match {

namespace {

struct Task {
  int size = 0;
  int depth = 0;
  std::uint64_t seed = 0;
  bool doubled = false;
  double elapsed_ms = 0.0;
  int iterations = 0;
  int ground_contracts = 0;
};

GenParams instance_params(const BenchParams& bench, const Task& task) {
  GenParams p;
  p.contracts = task.size;
  p.workers = std::max(2, task.size / 8);
  p.firms = std::max(2, task.size / 8);
  p.tie_probability = bench.tie_probability;
  p.depth = task.depth;
  p.quota_min = bench.quota_min;
  p.quota_max = bench.quota_max;
  p.mode = Mode::kTwoSided;
  p.seed = task.seed;
  return p;
}

int pool_size(const BenchParams& params, std::size_t tasks) {
  int threads = params.threads;
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (const char* env = std::getenv("LAMINAR_MATCH_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) threads = std::min<long>(threads, cap);
  }
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), tasks));
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

BenchReport run_bench(const BenchParams& params) {
  BenchReport report;
  if (params.sizes.empty() || params.seeds_per_size <= 0) return report;

  std::vector<Task> tasks;
  for (int size : params.sizes) {
    for (int s = 0; s < params.seeds_per_size; ++s) {
      tasks.push_back({size, params.depth,
                       params.seed + static_cast<std::uint64_t>(s), false,
                       0.0, 0, 0});
    }
  }
  const int largest = *std::max_element(params.sizes.begin(),
                                        params.sizes.end());
  if (params.probe_doubled_depth) {
    for (int s = 0; s < params.seeds_per_size; ++s) {
      tasks.push_back({largest, 2 * params.depth,
                       params.seed + static_cast<std::uint64_t>(s), true, 0.0,
                       0, 0});
    }
  }

  std::atomic<std::size_t> cursor{0};
  auto run_tasks = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      Task& task = tasks[i];
      const Instance inst = generate(instance_params(params, task));
      const SolveResult result = solve_three_halves(inst);
      task.elapsed_ms = result.stats.elapsed_ms;
      task.iterations = result.stats.iterations;
      task.ground_contracts = result.stats.ground_contracts;
    }
  };
  const int threads = pool_size(params, tasks.size());
  if (threads <= 1) {
    run_tasks();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run_tasks);
    for (std::thread& th : pool) th.join();
  }

  for (int size : params.sizes) {
    std::vector<double> times;
    double iteration_sum = 0.0;
    int count = 0;
    int ground = 0;
    for (const Task& task : tasks) {
      if (task.size != size || task.doubled) continue;
      times.push_back(task.elapsed_ms);
      iteration_sum += task.iterations;
      ground = task.ground_contracts;
      ++count;
    }
    BenchRow row;
    row.size = size;
    row.median_ms = median(times);
    row.max_ms = *std::max_element(times.begin(), times.end());
    row.mean_iterations = iteration_sum / count;
    row.ground_contracts = ground;
    report.rows.push_back(row);
  }

  if (report.rows.size() >= 2) {
    // Slope of the least-squares line through (log size, log median time).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const BenchRow& row : report.rows) {
      if (row.median_ms <= 0.0) continue;
      const double x = std::log(static_cast<double>(row.size));
      const double y = std::log(row.median_ms);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    if (n >= 2 && n * sxx - sx * sx > 0) {
      report.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
  }

  if (params.probe_doubled_depth) {
    std::vector<double> base, doubled;
    for (const Task& task : tasks) {
      if (task.size != largest) continue;
      (task.doubled ? doubled : base).push_back(task.elapsed_ms);
    }
    const double base_median = median(base);
    if (base_median > 0.0 && !doubled.empty()) {
      report.depth_doubled_ratio = median(doubled) / base_median;
    }
  }
  return report;
}

}  // namespace laminar_match
