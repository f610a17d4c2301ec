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

// Exponential-time ground truth for desk-scale instances: stable-matching
// and kernel enumeration, optimum cardinality, ratio certificates, and
// exhaustive misreport testing. Size caps fail loudly instead of hanging.

#ifndef LAMINAR_MATCH_ORACLE_HPP_
#define LAMINAR_MATCH_ORACLE_HPP_

#include <functional>
#include <vector>

#include "laminar_match/core.hpp"
#include "laminar_match/laminar.hpp"

namespace laminar_match::oracle {

inline constexpr int kMaxOracleContracts = 16;
inline constexpr int kMaxMisreportContracts = 4;

// Every stable matching, in ascending bitmask order. Enumeration splits the
// subset space into contiguous mask ranges across threads on larger
// instances. Throws InstanceError above the size cap.
std::vector<Matching> enumerate_stable(const Instance& inst);

// Maximum cardinality over enumerate_stable; the enumeration is never empty
// for a valid instance.
int max_stable_cardinality(const Instance& inst);

// Every common independent set that dominates all outside elements in one
// of the matroids, in ascending bitmask order.
std::vector<std::vector<ContractId>> enumerate_kernels(
    const OrderedMatroid& first, const OrderedMatroid& second);

// True iff den * |m| >= num * OPT, in exact integer arithmetic.
bool verify_ratio(const Instance& inst, const Matching& m, int num, int den);

using Mechanism = std::function<Matching(const Instance&)>;

struct Deviation {
  int worker = -1;
  PreferenceList misreport;
  Matching truthful;
  Matching misreported;
};

struct MisreportReport {
  int alternatives = 0;
  std::vector<Deviation> deviations;
};

// Replays the mechanism against every alternative list of the worker (every
// ordering of every subset of the worker's contracts; tied orderings too
// when the mechanism admits them) and records each run the worker strictly
// prefers to the truthful one, judged by the true list. Throws InstanceError
// when the worker has more than kMaxMisreportContracts contracts.
MisreportReport test_strategyproofness(const Instance& inst, int worker,
                                       const Mechanism& mechanism,
                                       bool tied_misreports);

// The one-sided weak-preference relation between two outcomes: the worker
// either gains nothing they ranked in `other`, or holds ranked contracts in
// both without strictly preferring the other one.
bool worker_weakly_prefers(const Instance& inst, int worker, const Matching& m,
                           const Matching& other);

// Firm-optimal counterpart of the tie-breaking mechanism. Deliberately
// manipulable by workers; exists so misreport sweeps can prove they detect
// anything at all.
Matching firm_optimal_tiebreak_mechanism(const Instance& inst);

// Calls fn for every preference list over a subset of `elems` (nonempty
// groups, best first). With allow_ties the lists range over all ordered set
// partitions; otherwise over all permutations.
void for_each_preference_list(
    const std::vector<ContractId>& elems, bool allow_ties,
    const std::function<void(const PreferenceList&)>& fn);

}  // namespace laminar_match::oracle

#endif  // LAMINAR_MATCH_ORACLE_HPP_
