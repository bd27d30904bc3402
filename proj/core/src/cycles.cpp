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

#include "partsemi/cycles.hpp"

#include <map>     // for map
#include <string>  // for to_string

#include "partsemi/errors.hpp"

namespace partsemi {

  Transformation CycleDecomposition::permutation() const {
    size_t n = 0;
    for (auto const& c : cycles) {
      n += c.size();
    }
    std::vector<Point> images(n);
    for (auto const& c : cycles) {
      for (size_t r = 0; r < c.size(); ++r) {
        images[c[r]] = c[(r + 1) % c.size()];
      }
    }
    return Transformation(std::move(images));
  }

  CycleDecomposition decompose(Transformation const& f) {
    if (!f.is_bijection()) {
      throw DomainError("only a permutation has a cycle decomposition");
    }
    CycleDecomposition result;
    std::vector<bool>  seen(f.degree(), false);
    for (Point x = 0; x < f.degree(); ++x) {
      if (seen[x]) {
        continue;
      }
      auto& cycle = result.cycles.emplace_back();
      for (Point y = x; !seen[y]; y = f[y]) {
        seen[y] = true;
        cycle.push_back(y);
      }
    }
    return result;
  }

  bool is_full_cycle(Transformation const& f) {
    if (f.degree() < 2 || !f.is_bijection()) {
      return false;
    }
    size_t length = 1;
    for (Point y = f[0]; y != 0; y = f[y]) {
      ++length;
    }
    return length == f.degree();
  }

  SetPartition kernel_partition(Transformation const& f) {
    if (f.is_bijection()) {
      throw DomainError("the kernel of a bijection is the discrete partition");
    }
    if (f.is_constant()) {
      throw DomainError("the kernel of a constant map is a single block; "
                        "use find_preserved_partition instead");
    }
    // Labelling each point by its image gives the kernel classes.
    return SetPartition::from_labels(f.images());
  }

  namespace {

    SetPartition first_point_split(size_t n) {
      std::vector<Point> rest;
      for (Point x = 1; x < n; ++x) {
        rest.push_back(x);
      }
      return SetPartition(n, {{0}, std::move(rest)});
    }

    // Blocks {c_i, c_{i+m}, ...} along the cycle c_j = 0 f^j.
    SetPartition progression_blocks(Transformation const& f, size_t m) {
      size_t const       n = f.degree();
      std::vector<Point> labels(n);
      Point              x = 0;
      for (size_t j = 0; j < n; ++j, x = f[x]) {
        labels[x] = static_cast<Point>(j % m);
      }
      return SetPartition::from_labels(labels);
    }

  }  // namespace

  std::optional<SetPartition> find_preserved_partition(
      Transformation const& f) {
    size_t const n = f.degree();
    if (n <= 2) {
      return std::nullopt;
    }
    if (!f.is_bijection()) {
      if (f.is_constant()) {
        return first_point_split(n);
      }
      return kernel_partition(f);
    }
    if (f.is_identity()) {
      return first_point_split(n);
    }
    if (!is_full_cycle(f)) {
      // The cycle through the least moved point is invariant, and so is its
      // complement, which is nonempty because f is not a full cycle.
      Point start = 0;
      while (f[start] == start) {
        ++start;
      }
      std::vector<Point> labels(n, 1);
      for (Point y = start; labels[y] != 0; y = f[y]) {
        labels[y] = 0;
      }
      return SetPartition::from_labels(labels);
    }
    size_t const m = least_prime_divisor(n);
    if (m == n) {
      return std::nullopt;
    }
    return progression_blocks(f, m);
  }

  std::optional<SetPartition> preserved_m_partition(Transformation const& f,
                                                    size_t                m) {
    if (!is_full_cycle(f)) {
      throw DomainError("the map is not a full cycle");
    }
    size_t const n = f.degree();
    if (m <= 1 || m >= n) {
      throw DomainError("block count " + std::to_string(m)
                        + " is not strictly between 1 and "
                        + std::to_string(n));
    }
    if (n % m != 0) {
      return std::nullopt;
    }
    return progression_blocks(f, m);
  }

  std::optional<SetPartition> search_partition(
      size_t                                          n,
      std::function<bool(SetPartition const&)> const& accept,
      std::optional<size_t>                           blocks) {
    std::optional<SetPartition> found;
    for_each_set_partition(
        n,
        [&](SetPartition const& p) {
          if (!p.is_trivial() && accept(p)) {
            found = p;
            return false;
          }
          return true;
        },
        blocks);
    return found;
  }

  size_t least_prime_divisor(size_t n) {
    if (n < 2) {
      throw DomainError("least_prime_divisor needs n >= 2");
    }
    for (size_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return d;
      }
    }
    return n;
  }

}  // namespace partsemi
