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

#include "partsemi/membership.hpp"

#include <string>  // for to_string
#include <vector>  // for vector

#include "partsemi/errors.hpp"

namespace partsemi {

  namespace {

    void check_degree(Transformation const& f, SetPartition const& p) {
      if (f.degree() != p.degree()) {
        throw SizeMismatchError("map of degree " + std::to_string(f.degree())
                                + " against a partition of degree "
                                + std::to_string(p.degree()));
      }
    }

    void require_preserving(Transformation const& f, SetPartition const& p) {
      check_degree(f, p);
      if (auto i = split_block(f, p)) {
        throw NotPreservingError("the map does not preserve the partition: "
                                 "the image of block "
                                     + std::to_string(*i)
                                     + " meets more than one block",
                                 *i);
      }
    }

  }  // namespace

  std::optional<BlockIndex> split_block(Transformation const& f,
                                        SetPartition const&   p) {
    check_degree(f, p);
    for (size_t i = 0; i < p.number_of_blocks(); ++i) {
      auto       block  = p.block(static_cast<BlockIndex>(i));
      BlockIndex target = p.block_of(f[block.front()]);
      for (Point x : block) {
        if (p.block_of(f[x]) != target) {
          return static_cast<BlockIndex>(i);
        }
      }
    }
    return std::nullopt;
  }

  bool preserves(Transformation const& f, SetPartition const& p) {
    return !split_block(f, p).has_value();
  }

  CharacterMap character(Transformation const& f, SetPartition const& p) {
    require_preserving(f, p);
    std::vector<BlockIndex> images(p.number_of_blocks());
    for (size_t i = 0; i < images.size(); ++i) {
      images[i] = p.block_of(f[p.block(static_cast<BlockIndex>(i)).front()]);
    }
    return CharacterMap(std::move(images));
  }

  BlockMapFamily block_map_family(Transformation const& f,
                                  SetPartition const&   p) {
    require_preserving(f, p);
    std::vector<BlockMap> members;
    members.reserve(p.number_of_blocks());
    for (size_t i = 0; i < p.number_of_blocks(); ++i) {
      auto     block = p.block(static_cast<BlockIndex>(i));
      BlockMap bm{static_cast<BlockIndex>(i), p.block_of(f[block.front()]), {}};
      for (Point x : block) {
        bm.images.push_back(f[x]);
      }
      members.push_back(std::move(bm));
    }
    return BlockMapFamily(p, std::move(members));
  }

  bool in_sigma(Transformation const& f, SetPartition const& p) {
    if (!preserves(f, p)) {
      return false;
    }
    std::vector<bool> met(p.number_of_blocks(), false);
    for (Point y : f.images()) {
      met[p.block_of(y)] = true;
    }
    for (bool b : met) {
      if (!b) {
        return false;
      }
    }
    return true;
  }

  bool sigma_via_character(Transformation const& f, SetPartition const& p) {
    return character(f, p).is_surjective();
  }

  bool sigma_via_topology(Transformation const& f, SetPartition const& p) {
    check_degree(f, p);
    size_t const m = p.number_of_blocks();
    // preimage_count[j][b]: points of block b whose image lies in block j.
    std::vector<std::vector<size_t>> preimage_count(m,
                                                    std::vector<size_t>(m, 0));
    for (Point x = 0; x < f.degree(); ++x) {
      ++preimage_count[p.block_of(f[x])][p.block_of(x)];
    }
    for (size_t j = 0; j < m; ++j) {
      bool nonempty = false;
      for (size_t b = 0; b < m; ++b) {
        size_t c = preimage_count[j][b];
        if (c != 0 && c != p.block_size(static_cast<BlockIndex>(b))) {
          return false;  // preimage of block j cuts block b: not open
        }
        nonempty = nonempty || c != 0;
      }
      if (!nonempty) {
        return false;
      }
    }
    return true;
  }

  bool is_e_star_preserving(Transformation const& f, SetPartition const& p) {
    check_degree(f, p);
    size_t const n = f.degree();
    for (Point x = 0; x < n; ++x) {
      for (Point y = x + 1; y < n; ++y) {
        bool related_before = p.block_of(x) == p.block_of(y);
        bool related_after  = p.block_of(f[x]) == p.block_of(f[y]);
        if (related_before != related_after) {
          return false;
        }
      }
    }
    return true;
  }

  bool character_injective(Transformation const& f, SetPartition const& p) {
    return character(f, p).is_injective();
  }

  bool in_units(Transformation const& f, SetPartition const& p) {
    if (!preserves(f, p)) {
      return false;
    }
    auto const family = block_map_family(f, p);
    for (size_t i = 0; i < family.size(); ++i) {
      if (!family.is_bijective(static_cast<BlockIndex>(i))) {
        return false;
      }
    }
    return character(f, p).is_bijective();
  }

  bool in_units_direct(Transformation const& f, SetPartition const& p) {
    check_degree(f, p);
    return f.is_bijection() && preserves(f, p) && preserves(f.inverse(), p);
  }

  bool is_idempotent(Transformation const& f) {
    return compose(f, f) == f;
  }

  bool sigma_idempotent_via_blocks(Transformation const& f,
                                   SetPartition const&   p) {
    if (!in_sigma(f, p)) {
      throw DomainError("the map is not in Σ(X, P)");
    }
    auto const family = block_map_family(f, p);
    for (size_t i = 0; i < family.size(); ++i) {
      if (!family.is_idempotent(static_cast<BlockIndex>(i))) {
        return false;
      }
    }
    return true;
  }

}  // namespace partsemi
