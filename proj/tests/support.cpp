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

#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "laminar_match/json_io.hpp"

namespace laminar_match::testing {

Instance from_json(const std::string& text) { return parse_instance(text); }

Instance t2() {
  return from_json(R"json({
    "mode": "smti-lc",
    "workers": ["w1", "w2"], "firms": ["f1", "f2"],
    "contracts": [
      {"id": "e1", "worker": "w1", "firm": "f1"},
      {"id": "e2", "worker": "w1", "firm": "f2"},
      {"id": "e3", "worker": "w2", "firm": "f1"}
    ],
    "constraints": {
      "w1": [{"set": ["e1", "e2"], "quota": 1}],
      "w2": [{"set": ["e3"], "quota": 1}],
      "f1": [{"set": ["e1", "e3"], "quota": 1}],
      "f2": [{"set": ["e2"], "quota": 1}]
    },
    "preferences": {
      "w1": [["e1", "e2"]],
      "w2": [["e3"]],
      "f1": [["e1", "e3"]],
      "f2": [["e2"]]
    }
  })json");
}

Instance t2_olc() {
  return from_json(R"json({
    "mode": "smti-olc",
    "workers": ["w1", "w2"], "firms": ["f1", "f2"],
    "contracts": [
      {"id": "e1", "worker": "w1", "firm": "f1"},
      {"id": "e2", "worker": "w1", "firm": "f2"},
      {"id": "e3", "worker": "w2", "firm": "f1"}
    ],
    "constraints": {
      "f1": [{"set": ["e1", "e3"], "quota": 1}],
      "f2": [{"set": ["e2"], "quota": 1}]
    },
    "preferences": {
      "w1": [["e1", "e2"]],
      "w2": [["e3"]],
      "f1": [["e1", "e3"]],
      "f2": [["e2"]]
    }
  })json");
}

Instance tie_rich_fixture() {
  return from_json(R"json({
    "mode": "smti-lc",
    "workers": ["w1", "w2"], "firms": ["f1", "f2"],
    "contracts": [
      {"id": "e1", "worker": "w1", "firm": "f2"},
      {"id": "e2", "worker": "w1", "firm": "f1"},
      {"id": "e3", "worker": "w1", "firm": "f1"},
      {"id": "e4", "worker": "w1", "firm": "f1"},
      {"id": "e5", "worker": "w2", "firm": "f1"},
      {"id": "e6", "worker": "w1", "firm": "f2"},
      {"id": "e7", "worker": "w2", "firm": "f1"}
    ],
    "constraints": {},
    "preferences": {
      "w1": [["e2", "e6"], ["e1"], ["e3", "e4"]],
      "w2": [["e5"], ["e7"]],
      "f1": [["e3"], ["e2", "e4", "e7"], ["e5"]],
      "f2": [["e1"], ["e6"]]
    }
  })json");
}

Instance one_contract() {
  return from_json(R"json({
    "mode": "smti-lc",
    "workers": ["w1"], "firms": ["f1"],
    "contracts": [{"id": "e1", "worker": "w1", "firm": "f1"}],
    "constraints": {},
    "preferences": {"w1": [["e1"]], "f1": [["e1"]]}
  })json");
}

Instance all_quota_zero() {
  return from_json(R"json({
    "mode": "smti-lc",
    "workers": ["w1"], "firms": ["f1"],
    "contracts": [{"id": "e1", "worker": "w1", "firm": "f1"}],
    "constraints": {
      "w1": [{"set": ["e1"], "quota": 0}],
      "f1": [{"set": ["e1"], "quota": 0}]
    },
    "preferences": {"w1": [["e1"]], "f1": [["e1"]]}
  })json");
}

Instance manipulable_olc() {
  return from_json(R"json({
    "mode": "smti-olc",
    "workers": ["w1", "w2"], "firms": ["f1", "f2"],
    "contracts": [
      {"id": "e1", "worker": "w1", "firm": "f1"},
      {"id": "e2", "worker": "w1", "firm": "f2"},
      {"id": "e3", "worker": "w2", "firm": "f1"},
      {"id": "e4", "worker": "w2", "firm": "f2"}
    ],
    "constraints": {
      "f1": [{"set": ["e1", "e3"], "quota": 1}],
      "f2": [{"set": ["e2", "e4"], "quota": 1}]
    },
    "preferences": {
      "w1": [["e1"], ["e2"]],
      "w2": [["e4"], ["e3"]],
      "f1": [["e3"], ["e1"]],
      "f2": [["e2"], ["e4"]]
    }
  })json");
}

Instance olc_with_firm_tie() {
  return from_json(R"json({
    "mode": "smti-olc",
    "workers": ["w1", "w2", "w3"], "firms": ["f1"],
    "contracts": [
      {"id": "e1", "worker": "w1", "firm": "f1"},
      {"id": "e2", "worker": "w2", "firm": "f1"},
      {"id": "e3", "worker": "w3", "firm": "f1"}
    ],
    "constraints": {
      "f1": [{"set": ["e1", "e2", "e3"], "quota": 2}]
    },
    "preferences": {
      "w1": [["e1"]],
      "w2": [["e2"]],
      "w3": [["e3"]],
      "f1": [["e1", "e2"], ["e3"]]
    }
  })json");
}

std::vector<std::vector<ContractId>> all_subsets(int n) {
  std::vector<std::vector<ContractId>> out;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<ContractId> s;
    for (int e = 0; e < n; ++e) {
      if (mask & (std::uint32_t{1} << e)) s.push_back(e);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool reference_stable(const Instance& inst, const Matching& m) {
  if (!is_matching(inst, m)) return false;
  for (ContractId e = 0; e < inst.num_contracts(); ++e) {
    if (contains(m, e) || !inst.acceptable(e)) continue;
    if (is_free(inst, m, e, Side::kWorker) &&
        is_free(inst, m, e, Side::kFirm)) {
      return false;
    }
  }
  return true;
}

bool reference_dominated(const OrderedMatroid& om,
                         const std::vector<ContractId>& s, ContractId e) {
  std::vector<ContractId> grown = s;
  grown.push_back(e);
  if (om.is_independent(grown)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (om.position(e) >= om.position(s[i])) continue;
    std::vector<ContractId> swapped = s;
    swapped[i] = e;
    if (om.is_independent(swapped)) return false;
  }
  return true;
}

OrderedMatroid random_matroid(Rng& rng, int n, int depth, int quota_min,
                              int quota_max, int min_set_size) {
  std::vector<ContractId> elements(n);
  std::iota(elements.begin(), elements.end(), 0);
  const std::vector<ConstraintSet> family = random_laminar_family(
      rng, elements, depth, quota_min, quota_max, min_set_size);
  std::vector<ContractId> order = elements;
  rng.shuffle(order);
  return OrderedMatroid(std::move(order), std::vector<int>(n, 0),
                        LaminarForest(n, family));
}

OrderedMatroid exchange_probe_matroid(Rng& rng, int n) {
  std::vector<ContractId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<ConstraintSet> family;
  std::size_t i = 0;
  while (i < perm.size()) {
    const int take = std::min<std::size_t>(rng.uniform_int(2, 3),
                                           perm.size() - i);
    ConstraintSet cs;
    for (int k = 0; k < take; ++k) cs.members.push_back(perm[i + k]);
    std::sort(cs.members.begin(), cs.members.end());
    cs.quota = rng.chance(0.85) ? 1 : 2;
    if (take >= 2 && rng.chance(0.25)) {
      family.push_back({{cs.members[0]}, rng.uniform_int(0, 1)});
    }
    family.push_back(std::move(cs));
    i += take;
  }
  std::vector<ContractId> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return OrderedMatroid(std::move(order), std::vector<int>(n, 0),
                        LaminarForest(n, family));
}

int for_each_exchange_pair(
    const OrderedMatroid& m1, const OrderedMatroid& m2, int cap,
    const std::function<void(const std::vector<ContractId>&,
                             const std::vector<ContractId>&)>& fn) {
  const int n = m1.ground_size();
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<char> common(total, 0);
  std::vector<std::vector<ContractId>> sets(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int e = 0; e < n; ++e) {
      if (mask & (std::uint32_t{1} << e)) sets[mask].push_back(e);
    }
    common[mask] =
        m1.is_independent(sets[mask]) && m2.is_independent(sets[mask]);
  }
  int surveyed = 0;
  for (std::uint32_t t_mask = 0; t_mask < total && surveyed < cap; ++t_mask) {
    if (!common[t_mask]) continue;
    const int t_size = static_cast<int>(sets[t_mask].size());
    if (t_size < 2) continue;
    for (std::uint32_t s_mask = 0; s_mask < total && surveyed < cap;
         ++s_mask) {
      if (!common[s_mask]) continue;
      if (3 * static_cast<int>(sets[s_mask].size()) >= 2 * t_size) continue;
      bool augmentable = false;
      for (ContractId e : sets[t_mask]) {
        const std::uint32_t bit = std::uint32_t{1} << e;
        if (s_mask & bit) continue;
        if (common[s_mask | bit]) {
          augmentable = true;
          break;
        }
      }
      if (augmentable) continue;
      fn(sets[s_mask], sets[t_mask]);
      ++surveyed;
    }
  }
  return surveyed;
}

GenParams sweep_params(int index, int max_contracts, Mode mode) {
  GenParams p;
  p.mode = mode;
  p.workers = 1 + index % 4;
  p.firms = 1 + (index / 4) % 4;
  const int floor = std::max(p.workers, p.firms);
  p.contracts = std::max(floor, 1 + (index * 7 + 3) % max_contracts);
  const double ties[] = {0.0, 0.3, 0.7};
  p.tie_probability = ties[index % 3];
  p.depth = 1 + index % 3;
  p.quota_min = index % 2;
  p.quota_max = p.quota_min + 1 + index % 2;
  p.seed = 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1);
  return p;
}

}  // namespace laminar_match::testing
