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

// Shared fixtures and brute-force reference implementations for the test
// and acceptance suites. The reference routines are deliberately naive and
// independent of the library's fast paths.

#ifndef LAMINAR_MATCH_TESTS_SUPPORT_HPP_
#define LAMINAR_MATCH_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "laminar_match/core.hpp"
#include "laminar_match/generator.hpp"
#include "laminar_match/laminar.hpp"

namespace laminar_match::testing {

// Two workers, two firms, three contracts, everything capacity one:
//   e1 = (w1, f1), e2 = (w1, f2), e3 = (w2, f1)
//   w1: (e1 e2)   w2: e3   f1: (e1 e3)   f2: e2
// Stable matchings are {e1} and {e2, e3}; index-order tie-breaking lands on
// the small one, the tripling solver on the large one.
Instance t2();

// The same market in one-sided form (unit workers, firm quotas only).
Instance t2_olc();

// A worker list (e2 e6) e1 (e3 e4) and a firm list e3 (e2 e4 e7) e5 inside
// one valid instance; exercises the exact unfolding order of the auxiliary
// lists.
Instance tie_rich_fixture();

// mode two-sided, one contract, no quota sets.
Instance one_contract();

// One contract whose both endpoints carry a quota-zero set.
Instance all_quota_zero();

// Four strict unit-capacity contracts in one-sided form where the
// firm-optimal matching differs from the worker-optimal one, so the
// firm-optimal mechanism is manipulable:
//   e1 = (w1,f1), e2 = (w1,f2), e3 = (w2,f1), e4 = (w2,f2)
//   w1: e1 e2   w2: e4 e3   f1: e3 e1   f2: e2 e4
Instance manipulable_olc();

// One-sided instance with a tie in a firm list (for the tie-breaking
// mechanism only).
Instance olc_with_firm_tie();

// Builds an instance from document text; fails the test on parse errors.
Instance from_json(const std::string& text);

// All subsets of [0, n) as sorted vectors, ascending mask order. n <= 20.
std::vector<std::vector<ContractId>> all_subsets(int n);

// Reference stability check: a subset is stable iff it is a matching and no
// outside acceptable contract is free on both sides. Uses only core-model
// primitives.
bool reference_stable(const Instance& inst, const Matching& m);

// Domination by definition: scans every candidate removal in the whole
// ground set.
bool reference_dominated(const OrderedMatroid& om,
                         const std::vector<ContractId>& s, ContractId e);

// Random ordered laminar matroid over [0, n): family from the generator
// helper, order a random permutation, single component.
OrderedMatroid random_matroid(Rng& rng, int n, int depth, int quota_min,
                              int quota_max, int min_set_size = 1);

// Random partition-style laminar matroid: disjoint blocks of two or three
// elements with small quotas, occasionally with a nested singleton. Pairs of
// these are rich in small maximal common independent sets, which the
// exchange-witness preconditions need.
OrderedMatroid exchange_probe_matroid(Rng& rng, int n);

// Enumerates up to `cap` pairs (s, t) of common independent sets with
// 3|s| < 2|t| and no element of t \ s augmenting s in both matroids, and
// calls fn on each. Ground size must be at most 16. Returns the number of
// pairs surveyed.
int for_each_exchange_pair(
    const OrderedMatroid& m1, const OrderedMatroid& m2, int cap,
    const std::function<void(const std::vector<ContractId>&,
                             const std::vector<ContractId>&)>& fn);

// Generator parameters for desk-scale sweeps, varied by index.
GenParams sweep_params(int index, int max_contracts, Mode mode);

}  // namespace laminar_match::testing

#endif  // LAMINAR_MATCH_TESTS_SUPPORT_HPP_
