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

#include "laminar_match/generator.hpp"

#include <algorithm>
#include <string>

namespace laminar_match {

namespace {

std::string padded_name(char prefix, int index, int count) {
  std::string digits = std::to_string(index);
  std::size_t width = std::to_string(std::max(count - 1, 0)).size();
  width = std::max<std::size_t>(width, 3);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

void partition_into_blocks(Rng& rng, const std::vector<ContractId>& elements,
                           std::vector<std::vector<ContractId>>* blocks) {
  blocks->clear();
  const int max_blocks = std::min<int>(3, static_cast<int>(elements.size()));
  const int want = rng.uniform_int(2, std::max(2, max_blocks));
  blocks->assign(want, {});
  for (ContractId e : elements) {
    (*blocks)[rng.uniform_int(0, want - 1)].push_back(e);
  }
  blocks->erase(std::remove_if(blocks->begin(), blocks->end(),
                               [](const auto& b) { return b.empty(); }),
                blocks->end());
}

}  // namespace

std::vector<ConstraintSet> random_laminar_family(
    Rng& rng, const std::vector<ContractId>& elements, int depth,
    int quota_min, int quota_max, int min_set_size) {
  std::vector<ConstraintSet> family;
  auto emit = [&](const std::vector<ContractId>& set) {
    ConstraintSet cs;
    cs.members = set;
    std::sort(cs.members.begin(), cs.members.end());
    cs.quota = rng.uniform_int(quota_min, quota_max);
    for (const ConstraintSet& seen : family) {
      if (seen.members == cs.members) return;  // one quota per set
    }
    family.push_back(std::move(cs));
  };
  auto recurse = [&](auto&& self, const std::vector<ContractId>& set,
                     int level) -> void {
    if (static_cast<int>(set.size()) < std::max(min_set_size, 1)) return;
    if (level > depth) return;
    if (level == 1 || rng.chance(0.8)) emit(set);
    if (level == depth || set.size() <= 1) return;
    std::vector<std::vector<ContractId>> blocks;
    partition_into_blocks(rng, set, &blocks);
    if (blocks.size() < 2) return;  // no progress; stop to bound the nesting
    for (const auto& block : blocks) self(self, block, level + 1);
  };
  if (depth >= 1 && !elements.empty()) recurse(recurse, elements, 1);
  return family;
}

Instance generate(const GenParams& params) {
  if (params.workers < 1 || params.firms < 1) {
    throw InstanceError("generator needs at least one worker and one firm");
  }
  if (params.contracts < std::max(params.workers, params.firms)) {
    throw InstanceError(
        "generator needs contracts >= max(workers, firms) to cover every "
        "agent");
  }
  if (params.depth < 1) {
    throw InstanceError("generator needs depth >= 1");
  }
  if (params.quota_min < 0 || params.quota_max < params.quota_min) {
    throw InstanceError("generator needs 0 <= quota_min <= quota_max");
  }
  if (params.tie_probability < 0.0 || params.tie_probability > 1.0) {
    throw InstanceError("tie probability must lie in [0, 1]");
  }

  Rng rng(params.seed);
  Instance inst;
  inst.mode = params.mode;
  for (int w = 0; w < params.workers; ++w) {
    inst.workers.push_back(padded_name('w', w, params.workers));
  }
  for (int f = 0; f < params.firms; ++f) {
    inst.firms.push_back(padded_name('f', f, params.firms));
  }
  for (int e = 0; e < params.contracts; ++e) {
    Contract c;
    c.name = padded_name('e', e, params.contracts);
    if (e < std::max(params.workers, params.firms)) {
      c.worker = e % params.workers;
      c.firm = e % params.firms;
    } else {
      c.worker = rng.uniform_int(0, params.workers - 1);
      c.firm = rng.uniform_int(0, params.firms - 1);
    }
    inst.contracts.push_back(std::move(c));
  }
  inst.rebuild_index();

  auto make_list = [&](const std::vector<ContractId>& own, bool allow_ties,
                       bool may_drop) {
    std::vector<ContractId> pool = own;
    if (may_drop && pool.size() > 1) {
      std::vector<ContractId> kept;
      for (ContractId e : pool) {
        if (!rng.chance(1.0 / 7.0)) kept.push_back(e);
      }
      if (kept.empty()) kept.push_back(pool.front());
      pool = std::move(kept);
    }
    rng.shuffle(pool);
    PreferenceList list;
    for (ContractId e : pool) {
      if (allow_ties && !list.empty() && rng.chance(params.tie_probability)) {
        list.back().push_back(e);
      } else {
        list.push_back({e});
      }
    }
    return list;
  };

  const bool olc = params.mode == Mode::kOneSidedOlc;
  inst.worker_prefs.clear();
  for (int w = 0; w < params.workers; ++w) {
    inst.worker_prefs.push_back(make_list(inst.worker_contracts[w],
                                          /*allow_ties=*/true,
                                          /*may_drop=*/olc));
  }
  inst.firm_prefs.clear();
  for (int f = 0; f < params.firms; ++f) {
    inst.firm_prefs.push_back(make_list(inst.firm_contracts[f],
                                        /*allow_ties=*/!olc,
                                        /*may_drop=*/false));
  }

  inst.worker_constraints.assign(params.workers, {});
  if (!olc) {
    for (int w = 0; w < params.workers; ++w) {
      inst.worker_constraints[w] = random_laminar_family(
          rng, inst.worker_contracts[w], params.depth, params.quota_min,
          params.quota_max);
    }
  }
  inst.firm_constraints.assign(params.firms, {});
  for (int f = 0; f < params.firms; ++f) {
    inst.firm_constraints[f] = random_laminar_family(
        rng, inst.firm_contracts[f], params.depth, params.quota_min,
        params.quota_max);
  }

  inst.rebuild_index();
  return inst;
}

}  // namespace laminar_match
