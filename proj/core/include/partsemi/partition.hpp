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

#ifndef PARTSEMI_PARTITION_HPP_
#define PARTSEMI_PARTITION_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <span>        // for span
#include <vector>      // for vector

#include "partsemi/transformation.hpp"  // for Point

namespace partsemi {

  //! Index of a block within a SetPartition.
  using BlockIndex = std::uint32_t;

  //! A partition of {0, ..., n-1} into nonempty blocks, held in canonical
  //! form: blocks ordered by their least element, points ascending inside
  //! each block.
  class SetPartition {
   public:
    //! Canonicalises `blocks`. Throws std::invalid_argument on an empty
    //! block, a repeated point, a point >= n, or a point left uncovered.
    SetPartition(size_t n, std::vector<std::vector<Point>> blocks);

    //! Block i holds every x with rgs[x] == i. `rgs` need not be a
    //! restricted growth string; labels only have to be < rgs.size().
    static SetPartition from_labels(std::span<Point const> labels);

    static SetPartition discrete(size_t n);
    static SetPartition single_block(size_t n);

    size_t degree() const noexcept {
      return _block_of.size();
    }
    size_t number_of_blocks() const noexcept {
      return _blocks.size();
    }
    std::span<Point const> block(BlockIndex i) const noexcept {
      return _blocks[i];
    }
    std::vector<std::vector<Point>> const& blocks() const noexcept {
      return _blocks;
    }
    //! Index of the block containing x.
    BlockIndex block_of(Point x) const noexcept {
      return _block_of[x];
    }
    size_t block_size(BlockIndex i) const noexcept {
      return _blocks[i].size();
    }

    //! Only singletons, or a single block.
    bool is_trivial() const noexcept;
    //! All blocks have the same size.
    bool is_uniform() const noexcept;

    friend bool operator==(SetPartition const& a, SetPartition const& b) {
      return a._blocks == b._blocks;
    }

   private:
    SetPartition() = default;
    void index();

    std::vector<std::vector<Point>> _blocks;
    std::vector<BlockIndex>         _block_of;
  };

  //! One (size, multiplicity) pair of a partition profile.
  struct ProfileEntry {
    size_t size;
    size_t multiplicity;

    friend bool operator==(ProfileEntry const&, ProfileEntry const&)
        = default;
  };

  //! The block-size data of a partition: distinct sizes n_i ascending, each
  //! with its multiplicity m_i.
  class PartitionProfile {
   public:
    //! Sorts by size. Throws std::invalid_argument on a zero size, a zero
    //! multiplicity, a repeated size, or an empty list.
    explicit PartitionProfile(std::vector<ProfileEntry> entries);

    std::vector<ProfileEntry> const& entries() const noexcept {
      return _entries;
    }
    //! Number of distinct block sizes, k.
    size_t distinct_sizes() const noexcept {
      return _entries.size();
    }
    //! Total number of blocks, m.
    size_t number_of_blocks() const noexcept;
    //! Size of the ground set, n.
    size_t degree() const noexcept;
    //! Block sizes ascending, each repeated by its multiplicity.
    std::vector<size_t> block_sizes() const;

    friend bool operator==(PartitionProfile const&, PartitionProfile const&)
        = default;

   private:
    std::vector<ProfileEntry> _entries;
  };

  PartitionProfile profile_of(SetPartition const& p);

  //! Calls `fn` on every set partition of {0, ..., n-1} in restricted
  //! growth string order. If `blocks` is given only partitions with exactly
  //! that many blocks are visited. Stops early when `fn` returns false.
  void for_each_set_partition(size_t                                    n,
                              std::function<bool(SetPartition const&)> fn,
                              std::optional<size_t> blocks = std::nullopt);

  std::vector<SetPartition> all_set_partitions(size_t n);

  //! Bell number B(n), as a 64-bit value (exact for n <= 25).
  std::uint64_t bell_number(size_t n);

}  // namespace partsemi

#endif  // PARTSEMI_PARTITION_HPP_
