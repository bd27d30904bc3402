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

#include "partsemi/partition.hpp"

#include <algorithm>  // for sort, all_of
#include <map>        // for map
#include <stdexcept>  // for invalid_argument
#include <string>     // for to_string

namespace partsemi {

  SetPartition::SetPartition(size_t n, std::vector<std::vector<Point>> blocks)
      : _blocks(std::move(blocks)) {
    if (n == 0) {
      throw std::invalid_argument("a partition needs degree >= 1");
    }
    std::vector<bool> seen(n, false);
    for (auto& b : _blocks) {
      if (b.empty()) {
        throw std::invalid_argument("empty block");
      }
      for (Point x : b) {
        if (x >= n) {
          throw std::invalid_argument("point " + std::to_string(x)
                                      + " is out of range [0, "
                                      + std::to_string(n) + ")");
        }
        if (seen[x]) {
          throw std::invalid_argument("duplicate point " + std::to_string(x));
        }
        seen[x] = true;
      }
      std::sort(b.begin(), b.end());
    }
    for (size_t x = 0; x < n; ++x) {
      if (!seen[x]) {
        throw std::invalid_argument("missing point " + std::to_string(x));
      }
    }
    std::sort(_blocks.begin(), _blocks.end(), [](auto const& a, auto const& b) {
      return a.front() < b.front();
    });
    _block_of.resize(n);
    index();
  }

  void SetPartition::index() {
    for (size_t i = 0; i < _blocks.size(); ++i) {
      for (Point x : _blocks[i]) {
        _block_of[x] = static_cast<BlockIndex>(i);
      }
    }
  }

  SetPartition SetPartition::from_labels(std::span<Point const> labels) {
    if (labels.empty()) {
      throw std::invalid_argument("a partition needs degree >= 1");
    }
    // Relabel in order of first occurrence, which is the canonical order.
    std::vector<Point>   relabel(labels.size(), UINT32_MAX);
    SetPartition         p;
    p._block_of.resize(labels.size());
    for (size_t x = 0; x < labels.size(); ++x) {
      if (labels[x] >= labels.size()) {
        throw std::invalid_argument("label out of range");
      }
      Point& r = relabel[labels[x]];
      if (r == UINT32_MAX) {
        r = static_cast<Point>(p._blocks.size());
        p._blocks.emplace_back();
      }
      p._blocks[r].push_back(static_cast<Point>(x));
      p._block_of[x] = r;
    }
    return p;
  }

  SetPartition SetPartition::discrete(size_t n) {
    return from_labels(Transformation::identity(n).images());
  }

  SetPartition SetPartition::single_block(size_t n) {
    return from_labels(Transformation::constant(n, 0).images());
  }

  bool SetPartition::is_trivial() const noexcept {
    return _blocks.size() == 1 || _blocks.size() == degree();
  }

  bool SetPartition::is_uniform() const noexcept {
    return std::all_of(_blocks.cbegin(), _blocks.cend(), [this](auto const& b) {
      return b.size() == _blocks.front().size();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // PartitionProfile
  ////////////////////////////////////////////////////////////////////////

  PartitionProfile::PartitionProfile(std::vector<ProfileEntry> entries)
      : _entries(std::move(entries)) {
    if (_entries.empty()) {
      throw std::invalid_argument("a profile needs at least one entry");
    }
    std::sort(_entries.begin(),
              _entries.end(),
              [](ProfileEntry const& a, ProfileEntry const& b) {
                return a.size < b.size;
              });
    for (size_t i = 0; i < _entries.size(); ++i) {
      if (_entries[i].size == 0) {
        throw std::invalid_argument("block size must be >= 1");
      }
      if (_entries[i].multiplicity == 0) {
        throw std::invalid_argument("multiplicity of size "
                                    + std::to_string(_entries[i].size)
                                    + " must be >= 1");
      }
      if (i > 0 && _entries[i].size == _entries[i - 1].size) {
        throw std::invalid_argument("block size "
                                    + std::to_string(_entries[i].size)
                                    + " listed twice");
      }
    }
  }

  size_t PartitionProfile::number_of_blocks() const noexcept {
    size_t m = 0;
    for (auto const& e : _entries) {
      m += e.multiplicity;
    }
    return m;
  }

  size_t PartitionProfile::degree() const noexcept {
    size_t n = 0;
    for (auto const& e : _entries) {
      n += e.multiplicity * e.size;
    }
    return n;
  }

  std::vector<size_t> PartitionProfile::block_sizes() const {
    std::vector<size_t> result;
    for (auto const& e : _entries) {
      result.insert(result.end(), e.multiplicity, e.size);
    }
    return result;
  }

  PartitionProfile profile_of(SetPartition const& p) {
    std::map<size_t, size_t> counts;
    for (auto const& b : p.blocks()) {
      ++counts[b.size()];
    }
    std::vector<ProfileEntry> entries;
    for (auto const& [size, mult] : counts) {
      entries.push_back({size, mult});
    }
    return PartitionProfile(std::move(entries));
  }

  ////////////////////////////////////////////////////////////////////////
  // Set partition generation
  ////////////////////////////////////////////////////////////////////////

  void for_each_set_partition(size_t                                    n,
                              std::function<bool(SetPartition const&)> fn,
                              std::optional<size_t> blocks) {
    if (n == 0) {
      return;
    }
    // rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]); max_prefix[i] holds
    // that maximum over rgs[0..i].
    std::vector<Point> rgs(n, 0);
    std::vector<Point> max_prefix(n, 0);
    while (true) {
      size_t const m = max_prefix[n - 1] + 1;
      if (!blocks || *blocks == m) {
        if (!fn(SetPartition::from_labels(rgs))) {
          return;
        }
      }
      // Advance to the next restricted growth string.
      size_t i = n - 1;
      while (i > 0 && rgs[i] > max_prefix[i - 1]) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++rgs[i];
      max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
      for (size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        max_prefix[j] = max_prefix[i];
      }
    }
  }

  std::vector<SetPartition> all_set_partitions(size_t n) {
    std::vector<SetPartition> result;
    for_each_set_partition(n, [&result](SetPartition const& p) {
      result.push_back(p);
      return true;
    });
    return result;
  }

  std::uint64_t bell_number(size_t n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto v : row) {
        next.push_back(next.back() + v);
      }
      row = std::move(next);
    }
    return row.front();
  }

}  // namespace partsemi
