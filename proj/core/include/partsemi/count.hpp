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

#ifndef PARTSEMI_COUNT_HPP_
#define PARTSEMI_COUNT_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t

#include <boost/multiprecision/cpp_int.hpp>

#include "partsemi/block_maps.hpp"  // for CharacterMap
#include "partsemi/partition.hpp"   // for SetPartition, PartitionProfile

namespace partsemi {

  using BigInt = boost::multiprecision::cpp_int;

  //! Default cap on the number of terms a counting sum may iterate over.
  inline constexpr std::uint64_t default_count_guard = 10'000'000;

  BigInt factorial(size_t n);
  BigInt binomial(size_t n, size_t k);
  BigInt power(size_t base, size_t exponent);

  //! Number of idempotents of the full transformation monoid on t points,
  //! sum over j of C(t, j) j^(t - j).
  BigInt full_transformation_idempotents(size_t t);

  //! |T(X, P)| = prod_i (sum_j m_j n_j^{n_i})^{m_i}.
  BigInt count_t(PartitionProfile const& profile);

  //! |S(X, P)| = prod_i m_i! (n_i!)^{m_i}.
  BigInt count_units(PartitionProfile const& profile);

  //! Size of the class of Σ(X, P) whose character is the permutation `phi`:
  //! prod_i |X_{i phi}|^{|X_i|}. Throws DomainError unless phi is a
  //! bijection on the blocks of p.
  BigInt sigma_class_size(SetPartition const& p, CharacterMap const& phi);

  //! |Σ(X, P)| as the sum of sigma_class_size over all m! block
  //! permutations. Deliberately naive. Throws GuardError if m! > guard.
  BigInt count_sigma_direct(SetPartition const& p,
                            std::uint64_t guard = default_count_guard);

  //! |Σ(X, P)| grouped by block size: m_1! ... m_k! times the sum, over all
  //! distinct arrangements of the domain-size multiset into codomain groups
  //! of m_1, ..., m_k slots, of prod_i n_i^{s_i} where s_i is the total
  //! domain size landing in group i. Throws GuardError if the number of
  //! arrangements exceeds `guard`.
  BigInt count_sigma_grouped(PartitionProfile const& profile,
                             std::uint64_t guard = default_count_guard);

  //! |E(Σ(X, P))| = prod_i (sum_j C(n_i, j) j^{n_i - j})^{m_i}.
  BigInt count_sigma_idempotents(PartitionProfile const& profile);

}  // namespace partsemi

#endif  // PARTSEMI_COUNT_HPP_
