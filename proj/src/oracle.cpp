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

#include "laminar_match/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>

#include "laminar_match/solver.hpp"

namespace laminar_match::oracle {

namespace {

std::vector<ContractId> mask_to_set(std::uint32_t mask) {
  std::vector<ContractId> out;
  for (int e = 0; mask; ++e, mask >>= 1) {
    if (mask & 1) out.push_back(e);
  }
  return out;
}

int thread_budget(std::uint64_t tasks) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("LAMINAR_MATCH_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  hw = std::min<unsigned>(hw, 8);
  return static_cast<int>(std::min<std::uint64_t>(hw, tasks));
}

// Applies `probe` to every mask in [0, 2^n), collecting accepted masks in
// ascending order. Contiguous prefix ranges keep the merge deterministic.
std::vector<std::uint32_t> scan_masks(
    int n, const std::function<bool(std::uint32_t)>& probe) {
  const std::uint64_t total = std::uint64_t{1} << n;
  if (n < 12) {
    std::vector<std::uint32_t> hits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (probe(static_cast<std::uint32_t>(mask))) {
        hits.push_back(static_cast<std::uint32_t>(mask));
      }
    }
    return hits;
  }
  const int workers = thread_budget(total);
  std::vector<std::vector<std::uint32_t>> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (probe(static_cast<std::uint32_t>(mask))) {
          partial[t].push_back(static_cast<std::uint32_t>(mask));
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  std::vector<std::uint32_t> hits;
  for (const auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
  return hits;
}

void require_oracle_size(int n) {
  if (n > kMaxOracleContracts) {
    throw InstanceError("instance too large for the oracle: " +
                        std::to_string(n) + " contracts, cap " +
                        std::to_string(kMaxOracleContracts));
  }
}

}  // namespace

std::vector<Matching> enumerate_stable(const Instance& inst) {
  const int n = inst.num_contracts();
  require_oracle_size(n);
  std::uint32_t acceptable = 0;
  for (ContractId e = 0; e < n; ++e) {
    if (inst.acceptable(e)) acceptable |= std::uint32_t{1} << e;
  }
  const auto hits = scan_masks(n, [&](std::uint32_t mask) {
    if ((mask & ~acceptable) != 0) return false;
    return is_stable(inst, mask_to_set(mask));
  });
  std::vector<Matching> out;
  out.reserve(hits.size());
  for (std::uint32_t mask : hits) out.push_back(mask_to_set(mask));
  return out;
}

int max_stable_cardinality(const Instance& inst) {
  const std::vector<Matching> all = enumerate_stable(inst);
  if (all.empty()) {
    throw InternalError("no stable matching found; one must always exist");
  }
  std::size_t best = 0;
  for (const Matching& m : all) best = std::max(best, m.size());
  return static_cast<int>(best);
}

std::vector<std::vector<ContractId>> enumerate_kernels(
    const OrderedMatroid& first, const OrderedMatroid& second) {
  const int n = first.ground_size();
  if (second.ground_size() != n) {
    throw InstanceError("the matroids must share one ground set");
  }
  require_oracle_size(n);
  const auto hits = scan_masks(n, [&](std::uint32_t mask) {
    const std::vector<ContractId> s = mask_to_set(mask);
    if (!first.is_independent(s) || !second.is_independent(s)) return false;
    for (ContractId e = 0; e < n; ++e) {
      if (mask & (std::uint32_t{1} << e)) continue;
      if (!first.is_dominated(s, e) && !second.is_dominated(s, e)) {
        return false;
      }
    }
    return true;
  });
  std::vector<std::vector<ContractId>> out;
  out.reserve(hits.size());
  for (std::uint32_t mask : hits) out.push_back(mask_to_set(mask));
  return out;
}

bool verify_ratio(const Instance& inst, const Matching& m, int num, int den) {
  const long long opt = max_stable_cardinality(inst);
  return static_cast<long long>(den) * static_cast<long long>(m.size()) >=
         static_cast<long long>(num) * opt;
}

bool worker_weakly_prefers(const Instance& inst, int worker, const Matching& m,
                           const Matching& other) {
  auto ranked_assignment = [&](const Matching& set) {
    int best = -1;
    for (ContractId e : set) {
      if (inst.contracts[e].worker != worker) continue;
      const int r = inst.rank(Side::kWorker, e);
      if (r < 0) continue;  // not on the worker's true list
      if (best < 0 || r < inst.rank(Side::kWorker, best)) best = e;
    }
    return best;
  };
  const int mine = ranked_assignment(m);
  const int theirs = ranked_assignment(other);
  if (theirs < 0) return true;
  if (mine < 0) return false;
  return inst.rank(Side::kWorker, theirs) >= inst.rank(Side::kWorker, mine);
}

void for_each_preference_list(
    const std::vector<ContractId>& elems, bool allow_ties,
    const std::function<void(const PreferenceList&)>& fn) {
  PreferenceList current;
  // Ordered set partitions of every subset: each step peels one nonempty
  // group (singletons only in the strict regime) off the remaining pool.
  auto recurse = [&](auto&& self, std::vector<ContractId> pool) -> void {
    fn(current);
    if (pool.empty()) return;
    const std::uint32_t subsets = std::uint32_t{1} << pool.size();
    for (std::uint32_t pick = 1; pick < subsets; ++pick) {
      if (!allow_ties && (pick & (pick - 1)) != 0) continue;
      std::vector<ContractId> group, rest;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pick & (std::uint32_t{1} << i)) {
          group.push_back(pool[i]);
        } else {
          rest.push_back(pool[i]);
        }
      }
      current.push_back(std::move(group));
      self(self, std::move(rest));
      current.pop_back();
    }
  };
  recurse(recurse, elems);
}

MisreportReport test_strategyproofness(const Instance& inst, int worker,
                                       const Mechanism& mechanism,
                                       bool tied_misreports) {
  const std::vector<ContractId>& own =
      inst.contracts_of(Side::kWorker, worker);
  if (static_cast<int>(own.size()) > kMaxMisreportContracts) {
    throw InstanceError("too many contracts for misreport enumeration: " +
                        std::to_string(own.size()) + ", cap " +
                        std::to_string(kMaxMisreportContracts));
  }
  const Matching truthful = mechanism(inst);
  MisreportReport report;
  for_each_preference_list(own, tied_misreports, [&](const PreferenceList& lie) {
    ++report.alternatives;
    Instance misreported = inst;
    misreported.worker_prefs[worker] = lie;
    misreported.rebuild_index();
    const Matching outcome = mechanism(misreported);
    if (!worker_weakly_prefers(inst, worker, truthful, outcome)) {
      report.deviations.push_back({worker, lie, truthful, outcome});
    }
  });
  return report;
}

Matching firm_optimal_tiebreak_mechanism(const Instance& inst) {
  if (inst.mode != Mode::kOneSidedOlc) {
    throw InstanceError("the mechanism requires a one-sided instance");
  }
  require_valid(inst);
  std::vector<ContractId> back;
  const Instance base = restrict_to_acceptable(inst, &back);
  const Instance strict = break_ties(base, TieBreakRule::kIndexOrder);
  const OrderedMatroid worker_side = build_side_matroid(strict, Side::kWorker);
  const OrderedMatroid firm_side = build_side_matroid(strict, Side::kFirm);
  const KernelResult kr = fleiner_kernel(firm_side, worker_side);
  std::vector<ContractId> mapped;
  mapped.reserve(kr.kernel.size());
  for (ContractId e : kr.kernel) mapped.push_back(back[e]);
  return normalized(std::move(mapped));
}

}  // namespace laminar_match::oracle
