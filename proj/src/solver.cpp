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

#include "laminar_match/solver.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace laminar_match {

KernelResult fleiner_kernel(const OrderedMatroid& first,
                            const OrderedMatroid& second,
                            KernelTrace* trace) {
  const int n = first.ground_size();
  if (second.ground_size() != n) {
    throw InstanceError("the matroids must share one ground set");
  }
  std::vector<char> rejected(n, 0), proposed(n, 0), accepted(n, 0);
  std::vector<char> candidates(n, 0);
  std::vector<int> scratch1, scratch2;

  KernelResult result;
  for (;;) {
    if (++result.iterations > n + 1) {
      throw InternalError("kernel iteration exceeded the ground size bound");
    }
    for (int e = 0; e < n; ++e) candidates[e] = !rejected[e];
    first.greedy_choice_mask(candidates, &proposed, &scratch1);
    for (int e = 0; e < n; ++e) candidates[e] = proposed[e] | rejected[e];
    second.greedy_choice_mask(candidates, &accepted, &scratch2);
    bool changed = false;
    for (int e = 0; e < n; ++e) {
      const char r = candidates[e] && !accepted[e];
      if (r != rejected[e]) changed = true;
      rejected[e] = r;
    }
    if (trace) trace->rejected_by_round.push_back(rejected);
    if (!changed) break;
  }
  for (int e = 0; e < n; ++e) {
    if (accepted[e]) result.kernel.push_back(e);
  }
  return result;
}

KernelResult worker_optimal_aux_kernel(const AuxInstance& aux) {
  const OrderedMatroid worker_side =
      build_side_matroid(aux.inner, Side::kWorker);
  const OrderedMatroid firm_side = build_side_matroid(aux.inner, Side::kFirm);
  return fleiner_kernel(worker_side, firm_side);
}

Instance break_ties(const Instance& inst, TieBreakRule rule,
                    std::uint64_t seed) {
  Instance out = inst;
  std::mt19937_64 rng(seed);
  auto split = [&](PreferenceList& list) {
    PreferenceList strict;
    for (auto group : list) {
      if (rule == TieBreakRule::kIndexOrder) {
        std::sort(group.begin(), group.end());
      } else {
        for (std::size_t i = group.size(); i > 1; --i) {
          std::swap(group[i - 1], group[rng() % i]);
        }
      }
      for (ContractId e : group) strict.push_back({e});
    }
    list = std::move(strict);
  };
  for (auto& list : out.worker_prefs) split(list);
  for (auto& list : out.firm_prefs) split(list);
  out.rebuild_index();
  return out;
}

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

Matching map_back(const std::vector<ContractId>& ids,
                  const std::vector<ContractId>& back) {
  std::vector<ContractId> out;
  out.reserve(ids.size());
  for (ContractId e : ids) out.push_back(back[e]);
  return normalized(std::move(out));
}

}  // namespace

SolveResult solve_three_halves(const Instance& inst) {
  const Stopwatch timer;
  const AuxInstance aux = build_auxiliary(inst);
  const KernelResult kr = worker_optimal_aux_kernel(aux);

  SolveResult result;
  result.algorithm = "three-halves";
  result.matching = project(aux, kr.kernel);
  result.stats.iterations = kr.iterations;
  result.stats.ground_contracts = aux.inner.num_contracts();
  result.stable = is_stable(inst, result.matching);
  result.stats.elapsed_ms = timer.elapsed_ms();
  return result;
}

SolveResult solve_tiebreak(const Instance& inst, TieBreakRule rule,
                           std::uint64_t seed) {
  const Stopwatch timer;
  require_valid(inst);
  std::vector<ContractId> back;
  const Instance base = restrict_to_acceptable(inst, &back);
  const Instance strict = break_ties(base, rule, seed);
  const OrderedMatroid worker_side = build_side_matroid(strict, Side::kWorker);
  const OrderedMatroid firm_side = build_side_matroid(strict, Side::kFirm);
  const KernelResult kr = fleiner_kernel(worker_side, firm_side);

  SolveResult result;
  result.algorithm = "tiebreak";
  result.matching = map_back(kr.kernel, back);
  result.stats.iterations = kr.iterations;
  result.stats.ground_contracts = strict.num_contracts();
  result.stable = is_stable(inst, result.matching);
  result.stats.elapsed_ms = timer.elapsed_ms();
  return result;
}

SolveResult worker_optimal_mechanism(const Instance& inst) {
  const Stopwatch timer;
  if (inst.mode != Mode::kOneSidedOlc) {
    throw InstanceError("the mechanism requires a one-sided instance");
  }
  if (inst.has_ties(Side::kFirm)) {
    throw InstanceError(
        "the mechanism requires strict firm lists; its guarantee does not "
        "survive firm ties");
  }
  const AuxInstance aux = build_auxiliary(inst);
  const KernelResult kr = worker_optimal_aux_kernel(aux);
  for (ContractId c : kr.kernel) {
    if (aux.kind[c] == CopyKind::kZ) {
      throw InternalError(
          "worker-optimal matching selected a last-resort copy");
    }
  }

  SolveResult result;
  result.algorithm = "mechanism";
  result.matching = project(aux, kr.kernel);
  result.stats.iterations = kr.iterations;
  result.stats.ground_contracts = aux.inner.num_contracts();
  result.stable = is_stable(inst, result.matching);
  result.stats.elapsed_ms = timer.elapsed_ms();
  return result;
}

SolveResult strategyproof_tiebreak_mechanism(const Instance& inst) {
  if (inst.mode != Mode::kOneSidedOlc) {
    throw InstanceError("the mechanism requires a one-sided instance");
  }
  SolveResult result = solve_tiebreak(inst, TieBreakRule::kIndexOrder);
  result.algorithm = "mechanism-tiebreak";
  return result;
}

}  // namespace laminar_match
