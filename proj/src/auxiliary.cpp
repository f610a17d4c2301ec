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

#include "laminar_match/auxiliary.hpp"

#include <algorithm>
#include <map>

namespace laminar_match {

namespace {

// De-ties one list. Per tie group the promotion copies come first (all
// `lead` copies of the group, then all kY copies); the whole original list
// repeats at the end as `tail` copies, read group by group.
PreferenceList unfold_list(const PreferenceList& list,
                           const std::vector<std::array<ContractId, 3>>& copy,
                           CopyKind lead, CopyKind tail) {
  PreferenceList out;
  auto push = [&out](ContractId id) { out.push_back({id}); };
  for (const auto& group : list) {
    for (ContractId e : group) push(copy[e][static_cast<int>(lead)]);
    for (ContractId e : group) push(copy[e][static_cast<int>(CopyKind::kY)]);
  }
  for (const auto& group : list) {
    for (ContractId e : group) push(copy[e][static_cast<int>(tail)]);
  }
  return out;
}

// Copy-triple sets first, then the lifted original sets; duplicates merge
// into the earlier entry with the binding quota.
std::vector<ConstraintSet> lift_family(
    const std::vector<ContractId>& own,
    const std::vector<ConstraintSet>& family,
    const std::vector<std::array<ContractId, 3>>& copy) {
  std::vector<ConstraintSet> out;
  std::map<std::vector<ContractId>, std::size_t> index;
  auto emit = [&](std::vector<ContractId> members, int quota) {
    std::sort(members.begin(), members.end());
    auto [it, inserted] = index.emplace(members, out.size());
    if (inserted) {
      out.push_back({std::move(members), quota});
    } else {
      out[it->second].quota = std::min(out[it->second].quota, quota);
    }
  };
  for (ContractId e : own) {
    emit({copy[e][0], copy[e][1], copy[e][2]}, 1);
  }
  for (const ConstraintSet& cs : family) {
    std::vector<ContractId> lifted;
    lifted.reserve(cs.members.size() * 3);
    for (ContractId e : cs.members) {
      lifted.push_back(copy[e][0]);
      lifted.push_back(copy[e][1]);
      lifted.push_back(copy[e][2]);
    }
    emit(std::move(lifted), cs.quota);
  }
  return out;
}

}  // namespace

AuxInstance build_auxiliary(const Instance& inst) {
  require_valid(inst);

  std::vector<ContractId> back;
  const Instance base = restrict_to_acceptable(inst, &back);
  const int n = base.num_contracts();

  AuxInstance aux;
  aux.original_contract_count = inst.num_contracts();
  aux.copies.assign(inst.num_contracts(), {-1, -1, -1});
  aux.origin.reserve(3 * n);
  aux.kind.reserve(3 * n);

  aux.inner.mode = inst.mode;
  aux.inner.workers = base.workers;
  aux.inner.firms = base.firms;

  std::vector<std::array<ContractId, 3>> copy(n);  // by restricted id
  for (ContractId e = 0; e < n; ++e) {
    const Contract& c = base.contracts[e];
    for (CopyKind k : {CopyKind::kX, CopyKind::kY, CopyKind::kZ}) {
      const ContractId id = static_cast<ContractId>(aux.inner.contracts.size());
      aux.inner.contracts.push_back(
          {c.name + "." + copy_kind_letter(k), c.worker, c.firm});
      copy[e][static_cast<int>(k)] = id;
      aux.origin.push_back(back[e]);
      aux.kind.push_back(k);
    }
    aux.copies[back[e]] = copy[e];
  }

  aux.inner.worker_prefs.reserve(base.workers.size());
  aux.inner.worker_constraints.reserve(base.workers.size());
  for (std::size_t w = 0; w < base.workers.size(); ++w) {
    aux.inner.worker_prefs.push_back(
        unfold_list(base.worker_prefs[w], copy, CopyKind::kX, CopyKind::kZ));
    if (inst.mode == Mode::kOneSidedOlc) {
      // Unit worker capacity already bounds every copy triple.
      aux.inner.worker_constraints.push_back({});
    } else {
      aux.inner.worker_constraints.push_back(lift_family(
          base.worker_contracts[w], base.worker_constraints[w], copy));
    }
  }
  aux.inner.firm_prefs.reserve(base.firms.size());
  aux.inner.firm_constraints.reserve(base.firms.size());
  for (std::size_t f = 0; f < base.firms.size(); ++f) {
    aux.inner.firm_prefs.push_back(
        unfold_list(base.firm_prefs[f], copy, CopyKind::kZ, CopyKind::kX));
    aux.inner.firm_constraints.push_back(
        lift_family(base.firm_contracts[f], base.firm_constraints[f], copy));
  }

  aux.inner.rebuild_index();
  return aux;
}

Matching project(const AuxInstance& aux, const Matching& aux_set) {
  std::vector<ContractId> originals;
  originals.reserve(aux_set.size());
  for (ContractId a : aux_set) originals.push_back(aux.origin[a]);
  return normalized(std::move(originals));
}

std::pair<ContractId, CopyKind> preimage(const AuxInstance& aux,
                                         const Matching& aux_matching,
                                         ContractId original) {
  std::pair<ContractId, CopyKind> found{-1, CopyKind::kX};
  int hits = 0;
  for (ContractId c : aux.copies[original]) {
    if (c >= 0 && contains(aux_matching, c)) {
      found = {c, aux.kind[c]};
      ++hits;
    }
  }
  if (hits == 0) {
    throw InstanceError("contract #" + std::to_string(original) +
                        " is not matched");
  }
  if (hits > 1) {
    throw InstanceError("multiple copies of contract #" +
                        std::to_string(original) +
                        " are present; the set is infeasible");
  }
  return found;
}

}  // namespace laminar_match
