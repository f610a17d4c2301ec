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

#include "laminar_match/core.hpp"

#include <algorithm>

namespace laminar_match {

Matching normalized(std::vector<ContractId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const Matching& m, ContractId e) {
  return std::binary_search(m.begin(), m.end(), e);
}

void Instance::rebuild_index() {
  const int n = num_contracts();
  worker_contracts.assign(workers.size(), {});
  firm_contracts.assign(firms.size(), {});
  worker_constraints.resize(workers.size());
  firm_constraints.resize(firms.size());
  worker_prefs.resize(workers.size());
  firm_prefs.resize(firms.size());
  for (ContractId e = 0; e < n; ++e) {
    const Contract& c = contracts[e];
    if (c.worker < 0 || c.worker >= static_cast<int>(workers.size()) ||
        c.firm < 0 || c.firm >= static_cast<int>(firms.size())) {
      throw InstanceError("contract '" + c.name +
                          "' references an agent out of range");
    }
    worker_contracts[c.worker].push_back(e);
    firm_contracts[c.firm].push_back(e);
  }
  worker_rank.assign(n, -1);
  firm_rank.assign(n, -1);
  for (std::size_t w = 0; w < workers.size(); ++w) {
    for (std::size_t g = 0; g < worker_prefs[w].size(); ++g) {
      for (ContractId e : worker_prefs[w][g]) {
        if (e >= 0 && e < n && contracts[e].worker == static_cast<int>(w) &&
            worker_rank[e] < 0) {
          worker_rank[e] = static_cast<int>(g);
        }
      }
    }
  }
  for (std::size_t f = 0; f < firms.size(); ++f) {
    for (std::size_t g = 0; g < firm_prefs[f].size(); ++g) {
      for (ContractId e : firm_prefs[f][g]) {
        if (e >= 0 && e < n && contracts[e].firm == static_cast<int>(f) &&
            firm_rank[e] < 0) {
          firm_rank[e] = static_cast<int>(g);
        }
      }
    }
  }
}

bool Instance::prefers(Side s, ContractId a, ContractId b) const {
  const int ra = rank(s, a);
  const int rb = rank(s, b);
  if (ra < 0 || rb < 0) return false;
  return ra < rb;
}

bool Instance::has_ties(Side s) const {
  const auto& prefs = s == Side::kWorker ? worker_prefs : firm_prefs;
  for (const PreferenceList& list : prefs) {
    for (const auto& group : list) {
      if (group.size() > 1) return true;
    }
  }
  return false;
}

const char* violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::kNonLaminarPair:
      return "non-laminar pair";
    case Violation::Kind::kForeignConstraintMember:
      return "constraint member outside agent";
    case Violation::Kind::kForeignPreferenceEntry:
      return "preference entry outside agent";
    case Violation::Kind::kDuplicatePreferenceEntry:
      return "duplicate preference entry";
    case Violation::Kind::kMissingPreferenceEntry:
      return "preference list does not cover agent";
    case Violation::Kind::kWorkerConstraintInOneSidedMode:
      return "worker constraints not allowed in one-sided mode";
  }
  return "unknown";
}

namespace {

bool nested_or_disjoint(const std::vector<ContractId>& a,
                        const std::vector<ContractId>& b) {
  std::vector<ContractId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  if (common.empty()) return true;
  return common.size() == a.size() || common.size() == b.size();
}

void validate_agent(const Instance& inst, Side side, int agent,
                    std::vector<Violation>* out) {
  const std::string& name = inst.agent_name(side, agent);
  const auto& family = inst.constraints_of(side, agent);
  const auto& own = inst.contracts_of(side, agent);

  // One-sided workers carry only the implicit unit capacity.
  if (inst.mode == Mode::kOneSidedOlc && side == Side::kWorker &&
      !family.empty()) {
    out->push_back({Violation::Kind::kWorkerConstraintInOneSidedMode, side,
                    name, std::to_string(family.size()) + " set(s) declared"});
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (ContractId e : family[i].members) {
      if (e < 0 || e >= inst.num_contracts() ||
          inst.agent_of(side, e) != agent) {
        out->push_back({Violation::Kind::kForeignConstraintMember, side, name,
                        "set #" + std::to_string(i) + " contains contract #" +
                            std::to_string(e)});
      }
    }
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!nested_or_disjoint(family[i].members, family[j].members)) {
        out->push_back({Violation::Kind::kNonLaminarPair, side, name,
                        "sets #" + std::to_string(i) + " and #" +
                            std::to_string(j) + " overlap without nesting"});
      }
    }
  }

  const PreferenceList& list = inst.preferences_of(side, agent);
  std::vector<char> seen(inst.num_contracts(), 0);
  for (const auto& group : list) {
    for (ContractId e : group) {
      if (e < 0 || e >= inst.num_contracts() ||
          inst.agent_of(side, e) != agent) {
        out->push_back({Violation::Kind::kForeignPreferenceEntry, side, name,
                        "contract #" + std::to_string(e)});
        continue;
      }
      if (seen[e]) {
        out->push_back({Violation::Kind::kDuplicatePreferenceEntry, side, name,
                        inst.contracts[e].name});
      }
      seen[e] = 1;
    }
  }
  // Workers may truncate their lists in one-sided mode; everyone else must
  // rank all incident contracts.
  const bool may_omit =
      inst.mode == Mode::kOneSidedOlc && side == Side::kWorker;
  if (!may_omit) {
    for (ContractId e : own) {
      if (!seen[e]) {
        out->push_back({Violation::Kind::kMissingPreferenceEntry, side, name,
                        inst.contracts[e].name});
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  for (int w = 0; w < inst.agent_count(Side::kWorker); ++w) {
    validate_agent(inst, Side::kWorker, w, &out);
  }
  for (int f = 0; f < inst.agent_count(Side::kFirm); ++f) {
    validate_agent(inst, Side::kFirm, f, &out);
  }
  return out;
}

void require_valid(const Instance& inst) {
  const std::vector<Violation> report = validate(inst);
  if (report.empty()) return;
  std::string msg = "invalid instance:";
  const std::size_t shown = std::min<std::size_t>(report.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    msg += " [" + std::string(violation_kind_name(report[i].kind)) + " at " +
           report[i].agent + ": " + report[i].detail + "]";
  }
  if (report.size() > shown) {
    msg += " (+" + std::to_string(report.size() - shown) + " more)";
  }
  throw InstanceError(msg);
}

bool is_feasible_for(const Instance& inst, Side side, int agent,
                     std::span<const ContractId> assigned) {
  for (ContractId e : assigned) {
    if (e < 0 || e >= inst.num_contracts() ||
        inst.agent_of(side, e) != agent) {
      throw InstanceError("contract #" + std::to_string(e) +
                          " is not incident to the agent");
    }
  }
  if (inst.mode == Mode::kOneSidedOlc && side == Side::kWorker &&
      assigned.size() > 1) {
    return false;
  }
  for (const ConstraintSet& cs : inst.constraints_of(side, agent)) {
    int count = 0;
    for (ContractId e : assigned) {
      if (std::binary_search(cs.members.begin(), cs.members.end(), e)) {
        ++count;
      }
    }
    if (count > cs.quota) return false;
  }
  return true;
}

std::vector<ContractId> assigned_to(const Instance& inst, const Matching& m,
                                    Side side, int agent) {
  std::vector<ContractId> out;
  for (ContractId e : m) {
    if (inst.agent_of(side, e) == agent) out.push_back(e);
  }
  return out;
}

bool is_matching(const Instance& inst, const Matching& m) {
  for (ContractId e : m) {
    if (e < 0 || e >= inst.num_contracts()) return false;
    if (!inst.acceptable(e)) return false;
  }
  for (Side side : {Side::kWorker, Side::kFirm}) {
    for (int a = 0; a < inst.agent_count(side); ++a) {
      if (!is_feasible_for(inst, side, a, assigned_to(inst, m, side, a))) {
        return false;
      }
    }
  }
  return true;
}

bool is_free(const Instance& inst, const Matching& m, ContractId e,
             Side side) {
  if (contains(m, e)) {
    throw InstanceError("contract #" + std::to_string(e) +
                        " is already in the matching");
  }
  if (inst.mode == Mode::kOneSidedOlc && side == Side::kWorker &&
      !inst.acceptable(e)) {
    return false;
  }
  const int agent = inst.agent_of(side, e);
  const std::vector<ContractId> held = assigned_to(inst, m, side, agent);
  std::vector<ContractId> candidate = held;
  candidate.push_back(e);
  if (is_feasible_for(inst, side, agent, candidate)) return true;
  // Try swapping out one strictly worse held contract.
  for (std::size_t i = 0; i < held.size(); ++i) {
    if (!inst.prefers(side, e, held[i])) continue;
    candidate = held;
    candidate[i] = e;
    if (is_feasible_for(inst, side, agent, candidate)) return true;
  }
  return false;
}

std::vector<ContractId> blocking_contracts(const Instance& inst,
                                           const Matching& m) {
  if (!is_matching(inst, m)) {
    throw InstanceError("the given set is not a matching of the instance");
  }
  std::vector<ContractId> out;
  for (ContractId e = 0; e < inst.num_contracts(); ++e) {
    if (contains(m, e) || !inst.acceptable(e)) continue;
    if (is_free(inst, m, e, Side::kWorker) &&
        is_free(inst, m, e, Side::kFirm)) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_stable(const Instance& inst, const Matching& m) {
  if (!is_matching(inst, m)) return false;
  return blocking_contracts(inst, m).empty();
}

Instance restrict_to_acceptable(const Instance& inst,
                                std::vector<ContractId>* back_map) {
  if (back_map) back_map->clear();
  if (inst.mode == Mode::kTwoSided) {
    if (back_map) {
      back_map->resize(inst.num_contracts());
      for (ContractId e = 0; e < inst.num_contracts(); ++e) (*back_map)[e] = e;
    }
    return inst;
  }
  Instance out;
  out.mode = inst.mode;
  out.workers = inst.workers;
  out.firms = inst.firms;
  std::vector<ContractId> new_id(inst.num_contracts(), -1);
  for (ContractId e = 0; e < inst.num_contracts(); ++e) {
    if (!inst.acceptable(e)) continue;
    new_id[e] = static_cast<ContractId>(out.contracts.size());
    out.contracts.push_back(inst.contracts[e]);
    if (back_map) back_map->push_back(e);
  }
  auto map_family = [&](const std::vector<ConstraintSet>& family) {
    std::vector<ConstraintSet> mapped;
    for (const ConstraintSet& cs : family) {
      ConstraintSet ncs;
      ncs.quota = cs.quota;
      for (ContractId e : cs.members) {
        if (new_id[e] >= 0) ncs.members.push_back(new_id[e]);
      }
      std::sort(ncs.members.begin(), ncs.members.end());
      if (!ncs.members.empty()) mapped.push_back(std::move(ncs));
    }
    return mapped;
  };
  auto map_prefs = [&](const PreferenceList& list) {
    PreferenceList mapped;
    for (const auto& group : list) {
      std::vector<ContractId> g;
      for (ContractId e : group) {
        if (new_id[e] >= 0) g.push_back(new_id[e]);
      }
      if (!g.empty()) mapped.push_back(std::move(g));
    }
    return mapped;
  };
  out.worker_constraints.reserve(inst.workers.size());
  out.worker_prefs.reserve(inst.workers.size());
  for (std::size_t w = 0; w < inst.workers.size(); ++w) {
    out.worker_constraints.push_back(map_family(inst.worker_constraints[w]));
    out.worker_prefs.push_back(map_prefs(inst.worker_prefs[w]));
  }
  out.firm_constraints.reserve(inst.firms.size());
  out.firm_prefs.reserve(inst.firms.size());
  for (std::size_t f = 0; f < inst.firms.size(); ++f) {
    out.firm_constraints.push_back(map_family(inst.firm_constraints[f]));
    out.firm_prefs.push_back(map_prefs(inst.firm_prefs[f]));
  }
  out.rebuild_index();
  return out;
}

}  // namespace laminar_match
