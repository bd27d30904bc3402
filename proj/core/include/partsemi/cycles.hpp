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

#ifndef PARTSEMI_CYCLES_HPP_
#define PARTSEMI_CYCLES_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <vector>      // for vector

#include "partsemi/partition.hpp"       // for SetPartition
#include "partsemi/transformation.hpp"  // for Transformation, Point

namespace partsemi {

  //! Disjoint cycles of a permutation. Each cycle starts at its least point,
  //! cycles are ordered by that point, and fixed points appear as cycles of
  //! length 1.
  struct CycleDecomposition {
    std::vector<std::vector<Point>> cycles;

    //! The permutation the cycles describe.
    Transformation permutation() const;

    friend bool operator==(CycleDecomposition const&,
                           CycleDecomposition const&)
        = default;
  };

  //! Throws DomainError if f is not a bijection.
  CycleDecomposition decompose(Transformation const& f);

  //! f is a single cycle through all n points (n >= 2).
  bool is_full_cycle(Transformation const& f);

  //! The partition into classes of equal image. Throws DomainError if f is
  //! a bijection (the kernel is discrete) or constant (the kernel is a
  //! single block; see find_preserved_partition).
  SetPartition kernel_partition(Transformation const& f);

  //! A nontrivial partition P preserved by f:
  //!
  //! * f not a permutation: the kernel, or {{0}, {1, ..., n-1}} for a
  //!   constant, with f ∈ T(X, P);
  //! * f a permutation that is not a full cycle: the support of the cycle
  //!   through the least moved point against the rest ({{0}, {1, ..., n-1}}
  //!   for the identity), with f ∈ S(X, P);
  //! * f a full cycle on a composite number of points: the residue classes
  //!   along the cycle modulo the least prime divisor of n, with
  //!   f ∈ S(X, P).
  //!
  //! Returns nullopt for a full cycle on a prime number of points, and when
  //! n <= 2 (no nontrivial partition exists).
  std::optional<SetPartition> find_preserved_partition(Transformation const& f);

  //! For a full cycle f on n points and 1 < m < n: the m blocks
  //! {c_i, c_{i+m}, c_{i+2m}, ...}, where c_j = 0 f^j, if m divides n, and
  //! nullopt otherwise. Throws DomainError if f is not a full cycle or m is
  //! out of range.
  std::optional<SetPartition> preserved_m_partition(Transformation const& f,
                                                    size_t                m);

  //! First nontrivial partition, in restricted growth string order,
  //! satisfying `accept`; restricted to m blocks if `blocks` is given.
  std::optional<SetPartition> search_partition(
      size_t                                          n,
      std::function<bool(SetPartition const&)> const& accept,
      std::optional<size_t>                           blocks = std::nullopt);

  //! Least prime divisor of n >= 2.
  size_t least_prime_divisor(size_t n);

}  // namespace partsemi

#endif  // PARTSEMI_CYCLES_HPP_
