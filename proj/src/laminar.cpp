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

#include "laminar_match/laminar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace laminar_match {

LaminarForest::LaminarForest(int ground_size,
                             const std::vector<ConstraintSet>& family)
    : ground_(ground_size) {
  deepest_.assign(ground_, -1);
  in_current_.assign(ground_, 0);

  // Merge duplicate member sets, keeping the binding (smaller) quota.
  std::map<std::vector<ContractId>, int> merged;
  std::vector<std::vector<ContractId>> order;  // first-seen order
  for (const ConstraintSet& cs : family) {
    std::vector<ContractId> members = cs.members;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (ContractId e : members) {
      if (e < 0 || e >= ground_) {
        throw InstanceError("constraint member #" + std::to_string(e) +
                            " outside the ground set");
      }
    }
    if (members.empty()) continue;
    auto [it, inserted] = merged.emplace(members, cs.quota);
    if (inserted) {
      order.push_back(members);
    } else {
      it->second = std::min(it->second, cs.quota);
    }
  }

  // Insert sets in decreasing size. Laminarity makes every element of a new
  // set share one current deepest node, which becomes the parent.
  std::vector<int> by_size(order.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    return order[a].size() > order[b].size();
  });
  for (int idx : by_size) {
    const std::vector<ContractId>& members = order[idx];
    const int expected_parent = deepest_[members.front()];
    for (ContractId e : members) {
      if (deepest_[e] != expected_parent) {
        throw InstanceError("constraint family is not laminar");
      }
    }
    const int node = node_count();
    quota_.push_back(merged[members]);
    parent_.push_back(expected_parent);
    count_.push_back(0);
    members_.push_back(members);
    for (ContractId e : members) deepest_[e] = node;
  }
}

bool LaminarForest::node_contains(int node, ContractId e) const {
  for (int v = deepest_[e]; v >= 0; v = parent_[v]) {
    if (v == node) return true;
  }
  return false;
}

int LaminarForest::nesting_depth() const {
  int best = 0;
  for (int v = 0; v < node_count(); ++v) {
    int depth = 0;
    for (int u = v; u >= 0; u = parent_[u]) ++depth;
    best = std::max(best, depth);
  }
  return best;
}

void LaminarForest::add(ContractId e) {
  if (in_current_[e]) {
    throw InstanceError("contract #" + std::to_string(e) +
                        " is already counted");
  }
  in_current_[e] = 1;
  add_in(count_, e);
}

void LaminarForest::remove(ContractId e) {
  if (!in_current_[e]) {
    throw InstanceError("contract #" + std::to_string(e) + " is not counted");
  }
  in_current_[e] = 0;
  remove_in(count_, e);
}

void LaminarForest::clear_counts() {
  std::fill(count_.begin(), count_.end(), 0);
  std::fill(in_current_.begin(), in_current_.end(), 0);
}

bool LaminarForest::can_add_in(std::span<const int> counts,
                               ContractId e) const {
  for (int v = deepest_[e]; v >= 0; v = parent_[v]) {
    if (counts[v] >= quota_[v]) return false;
  }
  return true;
}

void LaminarForest::add_in(std::span<int> counts, ContractId e) const {
  for (int v = deepest_[e]; v >= 0; v = parent_[v]) ++counts[v];
}

void LaminarForest::remove_in(std::span<int> counts, ContractId e) const {
  for (int v = deepest_[e]; v >= 0; v = parent_[v]) --counts[v];
}

bool LaminarForest::is_independent(std::span<const ContractId> s) const {
  return find_violated_node(s) < 0;
}

int LaminarForest::find_violated_node(std::span<const ContractId> s) const {
  std::vector<int> counts(node_count(), 0);
  for (ContractId e : s) {
    for (int v = deepest_[e]; v >= 0; v = parent_[v]) {
      if (++counts[v] > quota_[v]) return v;
    }
  }
  return -1;
}

std::string LaminarForest::debug_dump() const {
  std::vector<std::vector<int>> children(node_count());
  std::vector<int> roots;
  for (int v = 0; v < node_count(); ++v) {
    if (parent_[v] < 0) {
      roots.push_back(v);
    } else {
      children[parent_[v]].push_back(v);
    }
  }
  std::ostringstream out;
  auto render = [&](auto&& self, int v, int indent) -> void {
    out << std::string(indent, ' ') << "{";
    for (std::size_t i = 0; i < members_[v].size(); ++i) {
      if (i) out << ",";
      out << members_[v][i];
    }
    out << "} quota=" << quota_[v] << " count=" << count_[v] << "\n";
    for (int c : children[v]) self(self, c, indent + 2);
  };
  for (int r : roots) render(render, r, 0);
  return out.str();
}

OrderedMatroid::OrderedMatroid(std::vector<ContractId> order,
                               std::vector<int> component_of,
                               LaminarForest forest)
    : order_(std::move(order)),
      component_(std::move(component_of)),
      forest_(std::move(forest)) {
  position_.assign(forest_.ground_size(), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    position_[order_[i]] = static_cast<int>(i);
  }
  if (static_cast<int>(order_.size()) != forest_.ground_size()) {
    throw InstanceError("ground order must cover every contract exactly once");
  }
  for (int p : position_) {
    if (p < 0) {
      throw InstanceError(
          "ground order must cover every contract exactly once");
    }
  }
}

std::vector<ContractId> OrderedMatroid::greedy_choice(
    std::span<const ContractId> s) const {
  std::vector<char> candidates(ground_size(), 0);
  for (ContractId e : s) candidates[e] = 1;
  std::vector<char> chosen;
  std::vector<int> counts;
  greedy_choice_mask(candidates, &chosen, &counts);
  std::vector<ContractId> out;
  for (ContractId e = 0; e < ground_size(); ++e) {
    if (chosen[e]) out.push_back(e);
  }
  return out;
}

void OrderedMatroid::greedy_choice_mask(const std::vector<char>& candidates,
                                        std::vector<char>* chosen,
                                        std::vector<int>* count_scratch) const {
  chosen->assign(ground_size(), 0);
  count_scratch->assign(forest_.node_count(), 0);
  std::span<int> counts(*count_scratch);
  for (ContractId e : order_) {
    if (!candidates[e]) continue;
    if (forest_.can_add_in(counts, e)) {
      forest_.add_in(counts, e);
      (*chosen)[e] = 1;
    }
  }
}

bool OrderedMatroid::is_dominated(std::span<const ContractId> s,
                                  ContractId e) const {
  std::vector<int> counts(forest_.node_count(), 0);
  for (ContractId x : s) forest_.add_in(counts, x);
  if (forest_.can_add_in(counts, e)) return false;
  // The deepest saturated node on e's path is the binding one: a repairing
  // removal must come from inside it, and membership there implies
  // membership in every saturated ancestor.
  int binding = -1;
  for (int v = forest_.deepest_node(e); v >= 0; v = forest_.parent(v)) {
    if (counts[v] >= forest_.quota(v)) {
      binding = v;
      break;
    }
  }
  for (ContractId x : s) {
    if (component_[x] != component_[e]) continue;
    if (position_[e] < position_[x] && forest_.node_contains(binding, x)) {
      return false;
    }
  }
  return true;
}

OrderedMatroid build_side_matroid(const Instance& inst, Side side,
                                  std::span<const int> agent_order) {
  const int n = inst.num_contracts();
  std::vector<int> agents(inst.agent_count(side));
  std::iota(agents.begin(), agents.end(), 0);
  if (!agent_order.empty()) {
    agents.assign(agent_order.begin(), agent_order.end());
  } else {
    std::sort(agents.begin(), agents.end(), [&](int a, int b) {
      return inst.agent_name(side, a) < inst.agent_name(side, b);
    });
  }

  std::vector<ContractId> order;
  order.reserve(n);
  std::vector<ConstraintSet> family;
  for (int agent : agents) {
    for (const auto& group : inst.preferences_of(side, agent)) {
      if (group.size() != 1) {
        throw InstanceError("side has tied preferences; an ordered matroid "
                            "needs strict lists");
      }
      order.push_back(group.front());
    }
    for (const ConstraintSet& cs : inst.constraints_of(side, agent)) {
      family.push_back(cs);
    }
    if (inst.mode == Mode::kOneSidedOlc && side == Side::kWorker) {
      ConstraintSet unit;
      unit.members = inst.contracts_of(side, agent);
      std::sort(unit.members.begin(), unit.members.end());
      unit.quota = 1;
      if (!unit.members.empty()) family.push_back(std::move(unit));
    }
  }
  std::vector<int> component(n, -1);
  for (ContractId e = 0; e < n; ++e) component[e] = inst.agent_of(side, e);
  return OrderedMatroid(std::move(order), std::move(component),
                        LaminarForest(n, family));
}

namespace {

std::vector<ContractId> with(std::span<const ContractId> base, ContractId add,
                             ContractId drop = -1) {
  std::vector<ContractId> out;
  out.reserve(base.size() + 1);
  for (ContractId e : base) {
    if (e != drop) out.push_back(e);
  }
  out.push_back(add);
  return out;
}

std::vector<ContractId> difference(std::span<const ContractId> a,
                                   std::span<const ContractId> b) {
  std::vector<ContractId> out;
  for (ContractId e : a) {
    if (std::find(b.begin(), b.end(), e) == b.end()) out.push_back(e);
  }
  return out;
}

}  // namespace

bool exchange_triple_valid(const OrderedMatroid& m1, const OrderedMatroid& m2,
                           std::span<const ContractId> s,
                           std::span<const ContractId> t,
                           const ExchangeTriple& w) {
  const auto in = [](std::span<const ContractId> set, ContractId e) {
    return std::find(set.begin(), set.end(), e) != set.end();
  };
  if (w.enter_first == w.enter_second) return false;
  if (!in(t, w.enter_first) || in(s, w.enter_first)) return false;
  if (!in(t, w.enter_second) || in(s, w.enter_second)) return false;
  if (!in(s, w.leave) || in(t, w.leave)) return false;
  return m1.is_independent(with(s, w.enter_first)) &&
         m2.is_independent(with(s, w.enter_first, w.leave)) &&
         m2.is_independent(with(t, w.leave, w.enter_first)) &&
         m1.is_independent(with(s, w.enter_second, w.leave)) &&
         m1.is_independent(with(t, w.leave, w.enter_second)) &&
         m2.is_independent(with(s, w.enter_second));
}

ExchangeTriple find_exchange_triple(const OrderedMatroid& m1,
                                    const OrderedMatroid& m2,
                                    std::span<const ContractId> s,
                                    std::span<const ContractId> t) {
  if (!m1.is_independent(s) || !m2.is_independent(s) ||
      !m1.is_independent(t) || !m2.is_independent(t)) {
    throw InstanceError("both sets must be independent in both matroids");
  }
  if (3 * static_cast<int>(s.size()) >= 2 * static_cast<int>(t.size())) {
    throw InstanceError("requires 3|s| < 2|t|");
  }
  const std::vector<ContractId> t_minus_s = difference(t, s);
  const std::vector<ContractId> s_minus_t = difference(s, t);
  for (ContractId e : t_minus_s) {
    const std::vector<ContractId> grown = with(s, e);
    if (m1.is_independent(grown) && m2.is_independent(grown)) {
      throw InstanceError("an element of t\\s augments s in both matroids");
    }
  }

  for (ContractId enter_first : t_minus_s) {
    if (!m1.is_independent(with(s, enter_first))) continue;
    for (ContractId leave : s_minus_t) {
      if (!m2.is_independent(with(s, enter_first, leave))) continue;
      if (!m2.is_independent(with(t, leave, enter_first))) continue;
      for (ContractId enter_second : t_minus_s) {
        if (enter_second == enter_first) continue;
        if (!m2.is_independent(with(s, enter_second))) continue;
        if (!m1.is_independent(with(s, enter_second, leave))) continue;
        if (!m1.is_independent(with(t, leave, enter_second))) continue;
        return {enter_first, leave, enter_second};
      }
    }
  }
  throw InternalError("no exchange triple found for a precondition-"
                      "satisfying pair");
}

}  // namespace laminar_match
