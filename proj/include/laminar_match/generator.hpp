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

// Seeded random instance generation. All randomness flows through one
// documented generator so emitted documents are reproducible bit for bit
// across platforms and runs.

#ifndef LAMINAR_MATCH_GENERATOR_HPP_
#define LAMINAR_MATCH_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "laminar_match/core.hpp"

namespace laminar_match {

// Thin wrapper over std::mt19937_64 (fully specified by the standard, so
// sequences are platform-independent). Bounded draws use the multiply-shift
// reduction of the raw 64-bit output instead of distribution classes, whose
// streams vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(
                    (static_cast<unsigned __int128>(next()) * range) >> 64);
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_int(0, static_cast<int>(i) - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  int workers = 2;
  int firms = 2;
  int contracts = 4;
  // Chance that two adjacent positions of a shuffled list merge into one
  // tie group.
  double tie_probability = 0.0;
  // Bound on the nesting level of generated quota families; 1 gives a pure
  // per-agent capacity.
  int depth = 1;
  int quota_min = 1;
  int quota_max = 2;
  Mode mode = Mode::kTwoSided;
  std::uint64_t seed = 0;
};

// Emits a valid instance, deterministically for a fixed seed. Contracts
// cover every agent round-robin before random wiring, so `contracts` must be
// at least max(workers, firms). Quota families come from recursive random
// partitioning of each agent's contracts down to the depth bound. In
// one-sided mode firm lists stay strict (the mechanism guarantee needs
// them), and roughly one contract in seven is left off its worker's list.
Instance generate(const GenParams& params);

// Random laminar family over `elements` with nesting at most `depth`.
// Sets smaller than min_set_size are not emitted.
std::vector<ConstraintSet> random_laminar_family(
    Rng& rng, const std::vector<ContractId>& elements, int depth,
    int quota_min, int quota_max, int min_set_size = 1);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_GENERATOR_HPP_
