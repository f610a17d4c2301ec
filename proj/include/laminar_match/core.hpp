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

// Problem model: instances of two-sided matching with tied preferences and
// laminar upper-quota constraints, plus the stability semantics (feasibility,
// free contracts, blocking, stability).

#ifndef LAMINAR_MATCH_CORE_HPP_
#define LAMINAR_MATCH_CORE_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace laminar_match {

// Dense contract index, 0..n-1 within one instance. Density keeps subsets
// bitmask-encodable for the exhaustive oracle.
using ContractId = int;

enum class Mode {
  kTwoSided,     // laminar constraints and full preference lists on both sides
  kOneSidedOlc,  // unit-capacity workers with possibly partial lists,
                 // laminar constraints on the firm side only
};

enum class Side { kWorker, kFirm };

inline Side opposite(Side s) {
  return s == Side::kWorker ? Side::kFirm : Side::kWorker;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input document.
struct ParseError : Error {
  using Error::Error;
};
// Structurally sound input that violates a model requirement.
struct InstanceError : Error {
  using Error::Error;
};
// A must-never-happen invariant breach inside the library.
struct InternalError : Error {
  using Error::Error;
};

struct Contract {
  std::string name;
  int worker = -1;  // index into Instance::workers
  int firm = -1;    // index into Instance::firms
};

// One upper quota: |assignment ∩ members| <= quota.
struct ConstraintSet {
  std::vector<ContractId> members;  // sorted ascending
  int quota = 0;
};

// Tie groups, best first. Order inside a group carries no preference.
using PreferenceList = std::vector<std::vector<ContractId>>;

// A set of contracts, kept sorted and duplicate-free.
using Matching = std::vector<ContractId>;

Matching normalized(std::vector<ContractId> ids);
bool contains(const Matching& m, ContractId e);

struct Instance {
  Mode mode = Mode::kTwoSided;
  std::vector<std::string> workers;
  std::vector<std::string> firms;
  std::vector<Contract> contracts;
  std::vector<std::vector<ConstraintSet>> worker_constraints;  // by worker
  std::vector<std::vector<ConstraintSet>> firm_constraints;    // by firm
  std::vector<PreferenceList> worker_prefs;
  std::vector<PreferenceList> firm_prefs;

  // Derived lookup tables; call rebuild_index() after mutating the fields
  // above. All operations below assume a current index.
  std::vector<std::vector<ContractId>> worker_contracts;
  std::vector<std::vector<ContractId>> firm_contracts;
  std::vector<int> worker_rank;  // contract -> tie-group index, -1 if absent
  std::vector<int> firm_rank;

  void rebuild_index();

  int num_contracts() const { return static_cast<int>(contracts.size()); }
  int agent_count(Side s) const {
    return static_cast<int>(s == Side::kWorker ? workers.size() : firms.size());
  }
  const std::string& agent_name(Side s, int agent) const {
    return s == Side::kWorker ? workers[agent] : firms[agent];
  }
  int agent_of(Side s, ContractId e) const {
    return s == Side::kWorker ? contracts[e].worker : contracts[e].firm;
  }
  const std::vector<ConstraintSet>& constraints_of(Side s, int agent) const {
    return s == Side::kWorker ? worker_constraints[agent]
                              : firm_constraints[agent];
  }
  const PreferenceList& preferences_of(Side s, int agent) const {
    return s == Side::kWorker ? worker_prefs[agent] : firm_prefs[agent];
  }
  const std::vector<ContractId>& contracts_of(Side s, int agent) const {
    return s == Side::kWorker ? worker_contracts[agent]
                              : firm_contracts[agent];
  }
  // Tie-group index of e in the list of its agent on side s; -1 when the
  // contract does not appear there.
  int rank(Side s, ContractId e) const {
    return s == Side::kWorker ? worker_rank[e] : firm_rank[e];
  }
  // Strict preference: a is in a strictly earlier tie group than b. Both
  // contracts must belong to the same agent on side s.
  bool prefers(Side s, ContractId a, ContractId b) const;
  // In one-sided mode a contract is acceptable when its worker lists it;
  // in two-sided mode every contract is acceptable.
  bool acceptable(ContractId e) const {
    return mode == Mode::kTwoSided || worker_rank[e] >= 0;
  }
  bool has_ties(Side s) const;
};

struct Violation {
  enum class Kind {
    kNonLaminarPair,
    kForeignConstraintMember,
    kForeignPreferenceEntry,
    kDuplicatePreferenceEntry,
    kMissingPreferenceEntry,
    kWorkerConstraintInOneSidedMode,
  };
  Kind kind;
  Side side;
  std::string agent;
  std::string detail;
};

const char* violation_kind_name(Violation::Kind k);

// Collects every model violation; an empty report means the instance is
// valid. Violations are data, not failures.
std::vector<Violation> validate(const Instance& inst);

// Throws InstanceError naming the first violations when validate() is
// nonempty.
void require_valid(const Instance& inst);

// True iff every constraint of the agent is respected by `assigned`
// (plus the implicit unit capacity of workers in one-sided mode).
// Throws InstanceError when an element of `assigned` is not incident to the
// agent.
bool is_feasible_for(const Instance& inst, Side side, int agent,
                     std::span<const ContractId> assigned);

// The agent's share of m.
std::vector<ContractId> assigned_to(const Instance& inst, const Matching& m,
                                    Side side, int agent);

bool is_matching(const Instance& inst, const Matching& m);

// A contract e not in m is free for its agent on `side` when the agent would
// take it: adding keeps the assignment feasible, or a strictly worse held
// contract can be dropped to make room. Throws InstanceError when e is in m.
bool is_free(const Instance& inst, const Matching& m, ContractId e, Side side);

// Exactly the contracts outside m that are free for both endpoints.
// Throws InstanceError when m is not a matching.
std::vector<ContractId> blocking_contracts(const Instance& inst,
                                           const Matching& m);

// True iff m is a matching and nothing blocks it.
bool is_stable(const Instance& inst, const Matching& m);

// One-sided mode helper: the subinstance on the acceptable contracts.
// back_map, when given, receives old ids indexed by new id. Two-sided
// instances are returned unchanged (identity map).
Instance restrict_to_acceptable(const Instance& inst,
                                std::vector<ContractId>* back_map = nullptr);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_CORE_HPP_
