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

#include "partsemi/block_maps.hpp"

#include <algorithm>  // for find
#include <stdexcept>  // for invalid_argument
#include <string>     // for to_string

#include "partsemi/errors.hpp"

namespace partsemi {

  CharacterMap::CharacterMap(std::vector<BlockIndex> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw std::invalid_argument("a character map needs at least one block");
    }
    for (auto j : _images) {
      if (j >= _images.size()) {
        throw std::invalid_argument("block index " + std::to_string(j)
                                    + " out of range");
      }
    }
  }

  CharacterMap CharacterMap::identity(size_t m) {
    std::vector<BlockIndex> images(m);
    for (size_t i = 0; i < m; ++i) {
      images[i] = static_cast<BlockIndex>(i);
    }
    return CharacterMap(std::move(images));
  }

  bool CharacterMap::is_injective() const {
    std::vector<bool> hit(_images.size(), false);
    for (auto j : _images) {
      if (hit[j]) {
        return false;
      }
      hit[j] = true;
    }
    return true;
  }

  bool CharacterMap::is_surjective() const {
    std::vector<bool> hit(_images.size(), false);
    for (auto j : _images) {
      hit[j] = true;
    }
    return std::find(hit.cbegin(), hit.cend(), false) == hit.cend();
  }

  bool CharacterMap::is_identity() const noexcept {
    for (size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool CharacterMap::is_idempotent() const noexcept {
    for (auto j : _images) {
      if (_images[j] != j) {
        return false;
      }
    }
    return true;
  }

  bool CharacterMap::is_full_cycle() const {
    if (!is_injective()) {
      return false;
    }
    size_t     length = 1;
    BlockIndex i      = _images[0];
    while (i != 0) {
      i = _images[i];
      ++length;
    }
    return length == _images.size();
  }

  CharacterMap compose(CharacterMap const& a, CharacterMap const& b) {
    if (a.number_of_blocks() != b.number_of_blocks()) {
      throw SizeMismatchError("cannot compose character maps on "
                              + std::to_string(a.number_of_blocks()) + " and "
                              + std::to_string(b.number_of_blocks())
                              + " blocks");
    }
    std::vector<BlockIndex> images(a.number_of_blocks());
    for (size_t i = 0; i < images.size(); ++i) {
      images[i] = b[a[static_cast<BlockIndex>(i)]];
    }
    return CharacterMap(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockMapFamily
  ////////////////////////////////////////////////////////////////////////

  BlockMapFamily::BlockMapFamily(SetPartition const& p,
                                 std::vector<BlockMap> members)
      : _partition(p), _members(std::move(members)) {
    if (_members.size() != p.number_of_blocks()) {
      throw std::invalid_argument("expected one block map per block");
    }
    for (size_t i = 0; i < _members.size(); ++i) {
      auto const& bm = _members[i];
      if (bm.domain != i || bm.codomain >= p.number_of_blocks()) {
        throw std::invalid_argument("block map " + std::to_string(i)
                                    + " has a bad domain or codomain index");
      }
      if (bm.images.size() != p.block_size(bm.domain)) {
        throw std::invalid_argument("block map " + std::to_string(i)
                                    + " has the wrong number of images");
      }
      for (Point y : bm.images) {
        if (y >= p.degree() || p.block_of(y) != bm.codomain) {
          throw std::invalid_argument("block map " + std::to_string(i)
                                      + " leaves its codomain block");
        }
      }
    }
  }

  Transformation BlockMapFamily::glue() const {
    std::vector<Point> images(_partition.degree());
    for (auto const& bm : _members) {
      auto dom = _partition.block(bm.domain);
      for (size_t r = 0; r < dom.size(); ++r) {
        images[dom[r]] = bm.images[r];
      }
    }
    return Transformation(std::move(images));
  }

  bool BlockMapFamily::is_bijective(BlockIndex i) const {
    auto const& bm = _members[i];
    if (_partition.block_size(bm.codomain) != bm.images.size()) {
      return false;
    }
    std::vector<Point> sorted(bm.images);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.cbegin(), sorted.cend()) == sorted.cend();
  }

  bool BlockMapFamily::is_idempotent(BlockIndex i) const {
    auto const& bm = _members[i];
    if (bm.codomain != bm.domain) {
      return false;
    }
    auto dom = _partition.block(i);
    // position of each point within the block
    auto rank = [&dom](Point x) {
      return static_cast<size_t>(std::lower_bound(dom.begin(), dom.end(), x)
                                 - dom.begin());
    };
    for (Point y : bm.images) {
      if (bm.images[rank(y)] != y) {
        return false;
      }
    }
    return true;
  }

}  // namespace partsemi
