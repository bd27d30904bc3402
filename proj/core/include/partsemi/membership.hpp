// Copyright 2026 The partsemi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PARTSEMI_MEMBERSHIP_HPP_
#define PARTSEMI_MEMBERSHIP_HPP_

#include <optional>  // for optional

#include "partsemi/block_maps.hpp"      // for CharacterMap, BlockMapFamily
#include "partsemi/partition.hpp"       // for SetPartition, BlockIndex
#include "partsemi/transformation.hpp"  // for Transformation

// Membership in the three semigroups attached to a partition P of
// X = {0, ..., n-1}:
//
//   T(X, P)  maps sending every block into some block
//   Σ(X, P)  members of T(X, P) whose image meets every block
//   S(X, P)  the group of units of T(X, P)
//
// Several predicates decide the same property by different routes; they are
// kept independent of one another so that they can be cross-checked.
//
// Every function throws SizeMismatchError if f and p have different
// degrees. Functions whose precondition is f ∈ T(X, P) throw
// NotPreservingError rather than returning false, and those requiring
// f ∈ Σ(X, P) throw DomainError.

namespace partsemi {

  //! f ∈ T(X, P): each block is mapped into a single block.
  bool preserves(Transformation const& f, SetPartition const& p);

  //! A block whose image meets two blocks, if any.
  std::optional<BlockIndex> split_block(Transformation const& f,
                                        SetPartition const&   p);

  CharacterMap   character(Transformation const& f, SetPartition const& p);
  BlockMapFamily block_map_family(Transformation const& f,
                                  SetPartition const&   p);

  //! f ∈ Σ(X, P) by definition: f preserves P and its image meets every
  //! block.
  bool in_sigma(Transformation const& f, SetPartition const& p);

  //! f ∈ Σ(X, P) via surjectivity of the character. Requires f ∈ T(X, P).
  bool sigma_via_character(Transformation const& f, SetPartition const& p);

  //! f ∈ Σ(X, P) via the topology with basis P: every block has a nonempty
  //! preimage that is open, i.e. a union of blocks.
  bool sigma_via_topology(Transformation const& f, SetPartition const& p);

  //! x, y in the same block iff xf, yf in the same block, checked pairwise.
  bool is_e_star_preserving(Transformation const& f, SetPartition const& p);

  //! The character of f has no repeated entries. Requires f ∈ T(X, P).
  bool character_injective(Transformation const& f, SetPartition const& p);

  //! f ∈ S(X, P): f preserves P, every block map is a bijection onto its
  //! codomain block, and the character is a bijection.
  bool in_units(Transformation const& f, SetPartition const& p);

  //! f ∈ S(X, P) decided directly: f is a bijection and both f and its
  //! inverse preserve P.
  bool in_units_direct(Transformation const& f, SetPartition const& p);

  //! f f = f.
  bool is_idempotent(Transformation const& f);

  //! Every block map of f is an idempotent selfmap on its own block.
  //! Requires f ∈ Σ(X, P).
  bool sigma_idempotent_via_blocks(Transformation const& f,
                                   SetPartition const&   p);

}  // namespace partsemi

#endif  // PARTSEMI_MEMBERSHIP_HPP_
