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

// Timing harness for the tripling solver across instance sizes.

#ifndef LAMINAR_MATCH_BENCH_HPP_
#define LAMINAR_MATCH_BENCH_HPP_

#include <cstdint>
#include <vector>

namespace laminar_match {

struct BenchParams {
  std::vector<int> sizes;
  int seeds_per_size = 5;
  int depth = 3;
  double tie_probability = 0.3;
  int quota_min = 1;
  int quota_max = 3;
  std::uint64_t seed = 1;
  // 0 = hardware concurrency, capped by LAMINAR_MATCH_THREADS.
  int threads = 0;
  // Also time the largest size with the depth doubled, for the report's
  // informational ratio.
  bool probe_doubled_depth = true;
};

struct BenchRow {
  int size = 0;
  double median_ms = 0.0;
  double max_ms = 0.0;
  double mean_iterations = 0.0;
  int ground_contracts = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Least-squares slope of log time against log size; 0 with fewer than two
  // rows.
  double fitted_exponent = 0.0;
  // Median time at doubled depth over median time at configured depth for
  // the largest size; 0 when not probed.
  double depth_doubled_ratio = 0.0;
};

BenchReport run_bench(const BenchParams& params);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_BENCH_HPP_
