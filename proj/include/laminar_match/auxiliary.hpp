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

// Auxiliary-instance construction: every contract is replaced by three
// copies with a joint quota of one, tied preference lists are unfolded into
// strict ones, and quota sets are lifted to the copies. Solving the strict
// auxiliary instance and projecting back yields the approximation guarantee.

#ifndef LAMINAR_MATCH_AUXILIARY_HPP_
#define LAMINAR_MATCH_AUXILIARY_HPP_

#include <array>
#include <utility>
#include <vector>

#include "laminar_match/core.hpp"

namespace laminar_match {

enum class CopyKind { kX = 0, kY = 1, kZ = 2 };

inline char copy_kind_letter(CopyKind k) {
  switch (k) {
    case CopyKind::kX:
      return 'x';
    case CopyKind::kY:
      return 'y';
    case CopyKind::kZ:
      return 'z';
  }
  return '?';
}

struct AuxInstance {
  Instance inner;  // strict-preference instance over the copies

  int original_contract_count = 0;
  // Copies by original id, indexed by CopyKind; {-1,-1,-1} for contracts
  // dropped in one-sided mode because no worker lists them.
  std::vector<std::array<ContractId, 3>> copies;
  std::vector<ContractId> origin;  // aux id -> original id
  std::vector<CopyKind> kind;      // aux id -> copy kind
};

// Builds the auxiliary instance. In one-sided mode unacceptable contracts
// are dropped before tripling and the inner instance stays one-sided (unit
// worker capacity implicit, copy triples constrained on the firm side only).
// The construction is deterministic: equal inputs give byte-equal inner
// documents. Throws InstanceError when the input does not validate.
AuxInstance build_auxiliary(const Instance& inst);

// The projection: original contracts with at least one copy selected.
// Well-defined for arbitrary subsets, feasible or not.
Matching project(const AuxInstance& aux, const Matching& aux_set);

// The unique copy of `original` inside a feasible auxiliary matching.
// Throws InstanceError when the contract is unmatched or several copies are
// present.
std::pair<ContractId, CopyKind> preimage(const AuxInstance& aux,
                                         const Matching& aux_matching,
                                         ContractId original);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_AUXILIARY_HPP_
