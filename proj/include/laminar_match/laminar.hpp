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

// Laminar matroid engine: forest representation of a laminar quota family,
// independence and incremental occupancy queries, greedy choice functions
// over ordered ground sets, domination tests, and an exhaustive exchange
// witness finder for pairs of matroids.

#ifndef LAMINAR_MATCH_LAMINAR_HPP_
#define LAMINAR_MATCH_LAMINAR_HPP_

#include <span>
#include <string>
#include <vector>

#include "laminar_match/core.hpp"

namespace laminar_match {

// A laminar family as a parent-linked forest. Each node carries its quota
// and a live occupancy count; independence of an incremental set reduces to
// "no saturated node on the leaf-to-root path", so adding or removing one
// element costs O(nesting depth).
//
// The incremental interface (add/remove/can_add) mutates the live counts of
// this object; clone the forest when concurrent callers need their own
// occupancy. The pure queries never touch the live counts.
class LaminarForest {
 public:
  LaminarForest() = default;

  // Builds the forest for a family over ground [0, ground_size). Duplicate
  // member sets are merged keeping the smaller quota. Throws InstanceError
  // when the family is not laminar or a member is out of range.
  LaminarForest(int ground_size, const std::vector<ConstraintSet>& family);

  int ground_size() const { return ground_; }
  int node_count() const { return static_cast<int>(quota_.size()); }
  int parent(int node) const { return parent_[node]; }
  int quota(int node) const { return quota_[node]; }
  int count(int node) const { return count_[node]; }
  const std::vector<ContractId>& node_members(int node) const {
    return members_[node];
  }
  // Deepest node whose set contains e, or -1 when e is unconstrained.
  int deepest_node(ContractId e) const { return deepest_[e]; }
  bool node_contains(int node, ContractId e) const;
  // Maximum length of a strictly nested chain; 0 for an empty family.
  int nesting_depth() const;

  // --- incremental occupancy ---
  bool can_add(ContractId e) const { return can_add_in(count_, e); }
  void add(ContractId e);
  void remove(ContractId e);
  void clear_counts();
  bool in_current(ContractId e) const { return in_current_[e] != 0; }

  // --- stateless variants over caller-owned counts ---
  bool can_add_in(std::span<const int> counts, ContractId e) const;
  void add_in(std::span<int> counts, ContractId e) const;
  void remove_in(std::span<int> counts, ContractId e) const;

  // --- pure queries ---
  bool is_independent(std::span<const ContractId> s) const;
  // First node whose quota the set exceeds, or -1 when independent.
  int find_violated_node(std::span<const ContractId> s) const;

  // Indented text rendering of the forest (member names resolved by id).
  std::string debug_dump() const;

 private:
  int ground_ = 0;
  std::vector<int> quota_;
  std::vector<int> parent_;
  std::vector<int> count_;
  std::vector<std::vector<ContractId>> members_;
  std::vector<int> deepest_;       // per ground element
  std::vector<char> in_current_;   // per ground element
};

// A matroid given as the direct sum of per-agent laminar matroids (their
// union family is again laminar because agent ground sets are disjoint),
// paired with a strict total order on the ground set. Position 0 is best.
class OrderedMatroid {
 public:
  OrderedMatroid(std::vector<ContractId> order, std::vector<int> component_of,
                 LaminarForest forest);

  int ground_size() const { return forest_.ground_size(); }
  const std::vector<ContractId>& order() const { return order_; }
  int position(ContractId e) const { return position_[e]; }
  int component_of(ContractId e) const { return component_[e]; }
  const LaminarForest& forest() const { return forest_; }

  bool is_independent(std::span<const ContractId> s) const {
    return forest_.is_independent(s);
  }

  // The greedy scan over the ground order restricted to s: take an element
  // whenever the partial result stays independent. Elements outside s are
  // skipped in one pass. Result is sorted by id.
  std::vector<ContractId> greedy_choice(std::span<const ContractId> s) const;

  // Mask-based variant for hot loops; `chosen` is rewritten, `count_scratch`
  // is reused between calls.
  void greedy_choice_mask(const std::vector<char>& candidates,
                          std::vector<char>* chosen,
                          std::vector<int>* count_scratch) const;

  // e (not in the independent set s) is dominated when s + e is dependent
  // and no strictly worse element of s can be dropped to repair it. The
  // exchange search is confined to e's component: removals elsewhere cannot
  // affect e's agent.
  bool is_dominated(std::span<const ContractId> s, ContractId e) const;

 private:
  std::vector<ContractId> order_;
  std::vector<int> position_;
  std::vector<int> component_;
  LaminarForest forest_;
};

// Builds the one-side ordered matroid of an instance: the direct sum of the
// agents' laminar matroids (plus the implicit unit capacity of workers in
// one-sided mode) with the agents' strict lists concatenated in ascending
// identifier order. Preference lists on that side must be strict and cover
// every contract. `agent_order`, when nonempty, overrides the concatenation
// order with explicit agent indices.
OrderedMatroid build_side_matroid(const Instance& inst, Side side,
                                  std::span<const int> agent_order = {});

// Witness that an independent set can trade toward a larger one: enter_first
// augments s in the first matroid, enter_second augments it in the second,
// and leave exchanges with both in the opposite matroids.
struct ExchangeTriple {
  ContractId enter_first = -1;   // from t \ s
  ContractId leave = -1;         // from s \ t
  ContractId enter_second = -1;  // from t \ s
};

// Exhaustive search for an exchange triple between common independent sets
// s and t with 3|s| < 2|t| and no single element of t \ s augmenting s in
// both matroids. Throws InstanceError when the preconditions fail and
// InternalError when no witness exists (which would falsify the exchange
// property of laminar matroids, not the input).
ExchangeTriple find_exchange_triple(const OrderedMatroid& m1,
                                    const OrderedMatroid& m2,
                                    std::span<const ContractId> s,
                                    std::span<const ContractId> t);

// Re-checks all four witness conditions; used by harnesses that must not
// trust the finder.
bool exchange_triple_valid(const OrderedMatroid& m1, const OrderedMatroid& m2,
                           std::span<const ContractId> s,
                           std::span<const ContractId> t,
                           const ExchangeTriple& w);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_LAMINAR_HPP_
