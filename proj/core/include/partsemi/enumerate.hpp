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

#ifndef PARTSEMI_ENUMERATE_HPP_
#define PARTSEMI_ENUMERATE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "partsemi/block_maps.hpp"      // for CharacterMap
#include "partsemi/partition.hpp"       // for SetPartition
#include "partsemi/transformation.hpp"  // for Transformation

namespace partsemi {

  //! How an enumeration is produced. `brute` filters all n^n maps with the
  //! membership predicates; `constructive` assembles families of block maps
  //! directly. Both give the same sequence.
  enum class Strategy { brute, constructive };

  enum class Ambient { T, Sigma };

  inline constexpr std::uint64_t default_enumeration_guard = 10'000'000;

  struct EnumerationOptions {
    Strategy              strategy = Strategy::constructive;
    std::optional<size_t> limit;
    //! Cap on candidate maps: n^n for `brute`, the size of the result for
    //! `constructive`.
    std::uint64_t guard = default_enumeration_guard;
  };

  struct Enumeration {
    //! Lexicographic by image table.
    std::vector<Transformation> maps;
    //! True iff `limit` cut the sequence short.
    bool truncated = false;
  };

  // All of these throw GuardError when the guard is exceeded.

  //! T(X, P).
  Enumeration enumerate_t(SetPartition const& p, EnumerationOptions const& = {});
  //! Σ(X, P).
  Enumeration enumerate_sigma(SetPartition const&       p,
                              EnumerationOptions const& = {});
  //! S(X, P).
  Enumeration enumerate_units(SetPartition const&       p,
                              EnumerationOptions const& = {});
  //! E(T(X, P)) or E(Σ(X, P)). For T the constructive strategy filters the
  //! constructive enumeration of T(X, P).
  Enumeration enumerate_idempotents(SetPartition const&       p,
                                    Ambient                   ambient,
                                    EnumerationOptions const& = {});

  //! One class of Σ(X, P) under "equal character".
  struct ChiClass {
    CharacterMap                character;
    std::uint64_t               size;
    std::vector<Transformation> representatives;
  };

  //! Partition of Σ(X, P) by character, ordered by character. At most
  //! `max_representatives` maps (the least ones) are kept per class.
  //! `options.limit` is ignored.
  std::vector<ChiClass> chi_classes(SetPartition const&       p,
                                    size_t                    max_representatives = 0,
                                    EnumerationOptions const& options = {});

}  // namespace partsemi

#endif  // PARTSEMI_ENUMERATE_HPP_
