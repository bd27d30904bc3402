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

#include "partsemi/count.hpp"

#include <algorithm>  // for next_permutation
#include <numeric>    // for iota
#include <vector>     // for vector

#include "partsemi/errors.hpp"

namespace partsemi {

  namespace {

    void check_guard(BigInt const& work, std::uint64_t guard, char const* what) {
      if (work > guard) {
        throw GuardError(std::string(what) + " needs " + work.str()
                             + " terms, above the guard of "
                             + std::to_string(guard),
                         work.str());
      }
    }

  }  // namespace

  BigInt factorial(size_t n) {
    BigInt result = 1;
    for (size_t i = 2; i <= n; ++i) {
      result *= i;
    }
    return result;
  }

  BigInt binomial(size_t n, size_t k) {
    if (k > n) {
      return 0;
    }
    k             = std::min(k, n - k);
    BigInt result = 1;
    for (size_t i = 1; i <= k; ++i) {
      result *= n - k + i;
      result /= i;
    }
    return result;
  }

  BigInt power(size_t base, size_t exponent) {
    return boost::multiprecision::pow(BigInt(base),
                                      static_cast<unsigned>(exponent));
  }

  BigInt full_transformation_idempotents(size_t t) {
    BigInt sum = 0;
    for (size_t j = 1; j <= t; ++j) {
      sum += binomial(t, j) * power(j, t - j);
    }
    return sum;
  }

  BigInt count_t(PartitionProfile const& profile) {
    BigInt result = 1;
    for (auto const& domain : profile.entries()) {
      BigInt maps_from_block = 0;
      for (auto const& codomain : profile.entries()) {
        maps_from_block += codomain.multiplicity
                           * power(codomain.size, domain.size);
      }
      result *= boost::multiprecision::pow(
          maps_from_block, static_cast<unsigned>(domain.multiplicity));
    }
    return result;
  }

  BigInt count_units(PartitionProfile const& profile) {
    BigInt result = 1;
    for (auto const& e : profile.entries()) {
      result *= factorial(e.multiplicity)
                * boost::multiprecision::pow(
                    factorial(e.size), static_cast<unsigned>(e.multiplicity));
    }
    return result;
  }

  BigInt sigma_class_size(SetPartition const& p, CharacterMap const& phi) {
    if (phi.number_of_blocks() != p.number_of_blocks()
        || !phi.is_bijective()) {
      throw DomainError("a Σ class is labelled by a permutation of the "
                        + std::to_string(p.number_of_blocks()) + " blocks");
    }
    BigInt size = 1;
    for (size_t i = 0; i < p.number_of_blocks(); ++i) {
      auto const b = static_cast<BlockIndex>(i);
      size *= power(p.block_size(phi[b]), p.block_size(b));
    }
    return size;
  }

  BigInt count_sigma_direct(SetPartition const& p, std::uint64_t guard) {
    size_t const m = p.number_of_blocks();
    check_guard(factorial(m), guard, "the direct Σ sum");
    std::vector<BlockIndex> phi(m);
    std::iota(phi.begin(), phi.end(), 0);
    BigInt total = 0;
    do {
      BigInt term = 1;
      for (size_t i = 0; i < m; ++i) {
        term *= power(p.block_size(phi[i]), p.block_size(static_cast<BlockIndex>(i)));
      }
      total += term;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return total;
  }

  BigInt count_sigma_grouped(PartitionProfile const& profile,
                             std::uint64_t           guard) {
    auto const& entries = profile.entries();

    BigInt arrangements = factorial(profile.number_of_blocks());
    BigInt scale        = 1;
    for (auto const& e : entries) {
      arrangements /= factorial(e.multiplicity);
      scale *= factorial(e.multiplicity);
    }
    check_guard(arrangements, guard, "the grouped Σ sum");

    // Slots are ordered codomain group by group: the first m_1 slots target
    // blocks of size n_1, the next m_2 target size n_2, and so on. Each
    // distinct permutation of the domain-size multiset fills the slots.
    std::vector<size_t> group_of_slot;
    for (size_t g = 0; g < entries.size(); ++g) {
      group_of_slot.insert(group_of_slot.end(), entries[g].multiplicity, g);
    }
    std::vector<size_t> domain_sizes = profile.block_sizes();  // ascending

    BigInt sum = 0;
    do {
      std::vector<size_t> mass(entries.size(), 0);  // s(m_i)
      for (size_t s = 0; s < domain_sizes.size(); ++s) {
        mass[group_of_slot[s]] += domain_sizes[s];
      }
      BigInt term = 1;
      for (size_t g = 0; g < entries.size(); ++g) {
        term *= power(entries[g].size, mass[g]);
      }
      sum += term;
    } while (std::next_permutation(domain_sizes.begin(), domain_sizes.end()));
    return scale * sum;
  }

  BigInt count_sigma_idempotents(PartitionProfile const& profile) {
    BigInt result = 1;
    for (auto const& e : profile.entries()) {
      result *= boost::multiprecision::pow(
          full_transformation_idempotents(e.size),
          static_cast<unsigned>(e.multiplicity));
    }
    return result;
  }

}  // namespace partsemi
