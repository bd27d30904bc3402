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

#ifndef PARTSEMI_BLOCK_MAPS_HPP_
#define PARTSEMI_BLOCK_MAPS_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "partsemi/partition.hpp"       // for BlockIndex, SetPartition
#include "partsemi/transformation.hpp"  // for Point, Transformation

namespace partsemi {

  //! The selfmap induced on block indices by a partition-preserving map:
  //! entry i is the index of the block containing the image of block i.
  class CharacterMap {
   public:
    //! Throws std::invalid_argument if empty or an entry is out of range.
    explicit CharacterMap(std::vector<BlockIndex> images);

    static CharacterMap identity(size_t m);

    size_t number_of_blocks() const noexcept {
      return _images.size();
    }
    BlockIndex operator[](BlockIndex i) const noexcept {
      return _images[i];
    }
    std::span<BlockIndex const> images() const noexcept {
      return _images;
    }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const {
      return is_injective();
    }
    bool is_identity() const noexcept;
    bool is_idempotent() const noexcept;
    //! A permutation with a single orbit covering every index.
    bool is_full_cycle() const;

    friend bool operator==(CharacterMap const&, CharacterMap const&)
        = default;
    friend auto operator<=>(CharacterMap const&, CharacterMap const&)
        = default;

   private:
    std::vector<BlockIndex> _images;
  };

  //! Left-to-right product of characters. Throws SizeMismatchError.
  CharacterMap compose(CharacterMap const& a, CharacterMap const& b);

  //! The restriction of a map to one block, with an explicit codomain block.
  //! `images[r]` is the image of the r-th (ascending) point of the domain
  //! block.
  struct BlockMap {
    BlockIndex         domain;
    BlockIndex         codomain;
    std::vector<Point> images;

    friend bool operator==(BlockMap const&, BlockMap const&) = default;
  };

  //! The indexed family of block maps of a partition-preserving map; member
  //! i has domain block i.
  class BlockMapFamily {
   public:
    //! Throws std::invalid_argument unless member i has domain i, the right
    //! number of images, and every image inside its codomain block of `p`.
    BlockMapFamily(SetPartition const& p, std::vector<BlockMap> members);

    std::vector<BlockMap> const& members() const noexcept {
      return _members;
    }
    BlockMap const& operator[](BlockIndex i) const noexcept {
      return _members[i];
    }
    size_t size() const noexcept {
      return _members.size();
    }

    //! The unique map whose restrictions are the members.
    Transformation glue() const;

    //! Member i, as a map between blocks, is a bijection.
    bool is_bijective(BlockIndex i) const;
    //! Member i is a selfmap on block i and idempotent as such.
    bool is_idempotent(BlockIndex i) const;

    friend bool operator==(BlockMapFamily const& a, BlockMapFamily const& b) {
      return a._members == b._members;
    }

   private:
    SetPartition          _partition;
    std::vector<BlockMap> _members;
  };

}  // namespace partsemi

#endif  // PARTSEMI_BLOCK_MAPS_HPP_
