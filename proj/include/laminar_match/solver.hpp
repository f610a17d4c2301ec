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

// Solvers: Fleiner's generalized deferred-acceptance kernel iteration over a
// pair of ordered matroids, the 3/2-approximation through the auxiliary
// instance, the tie-breaking 2-approximation baseline, and the one-sided
// worker-strategy-proof mechanisms.

#ifndef LAMINAR_MATCH_SOLVER_HPP_
#define LAMINAR_MATCH_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "laminar_match/auxiliary.hpp"
#include "laminar_match/core.hpp"
#include "laminar_match/laminar.hpp"

namespace laminar_match {

struct KernelTrace {
  // Rejected-set mask after each round; grows monotonically.
  std::vector<std::vector<char>> rejected_by_round;
};

struct KernelResult {
  std::vector<ContractId> kernel;  // sorted by id
  int iterations = 0;
};

// Deferred acceptance over matroid pairs: repeat S <- C1(E \ R),
// T <- C2(S u R), R <- (S u R) \ T until R stops changing, then return T.
// The result is a common independent set dominating every outside element in
// one of the matroids, and it is optimal for the side of `first`. Throws
// InternalError if the loop exceeds |E| + 1 rounds, which the monotone
// growth of R forbids.
KernelResult fleiner_kernel(const OrderedMatroid& first,
                            const OrderedMatroid& second,
                            KernelTrace* trace = nullptr);

// Worker-optimal stable matching of an auxiliary instance, before
// projection.
KernelResult worker_optimal_aux_kernel(const AuxInstance& aux);

enum class TieBreakRule { kIndexOrder, kSeededRandom };

// Splits every tie group into singletons. Index order keeps ascending
// contract ids; the seeded rule shuffles each group with a fixed generator.
Instance break_ties(const Instance& inst, TieBreakRule rule,
                    std::uint64_t seed = 0);

struct SolveStats {
  int iterations = 0;
  double elapsed_ms = 0.0;
  int ground_contracts = 0;  // contracts the kernel ran on (3|E| when tripled)
};

struct SolveResult {
  Matching matching;
  std::string algorithm;
  bool stable = false;
  SolveStats stats;
};

// Tripling algorithm: builds the auxiliary instance, computes the
// worker-side kernel, and projects. Output is stable and within 2/3 of the
// maximum-cardinality stable matching.
SolveResult solve_three_halves(const Instance& inst);

// Baseline: break ties, then solve the strict instance directly as a kernel
// of the two side matroids. Output is stable and within 1/2 of optimal.
SolveResult solve_tiebreak(const Instance& inst, TieBreakRule rule,
                           std::uint64_t seed = 0);

// One-sided mechanism for strict firm lists: the projection of the
// worker-optimal stable matching of the auxiliary instance. Worker-
// strategy-proof with the 2/3 guarantee; the pre-projection matching never
// uses a last-resort copy. Throws InstanceError on two-sided instances or
// tied firm lists.
SolveResult worker_optimal_mechanism(const Instance& inst);

// One-sided mechanism for arbitrary ties: index-order tie-breaking followed
// by the worker-optimal stable matching of the strict instance. Worker-
// strategy-proof with the 1/2 guarantee.
SolveResult strategyproof_tiebreak_mechanism(const Instance& inst);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_SOLVER_HPP_
