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

#include "partsemi/enumerate.hpp"

#include <algorithm>   // for sort, next_permutation
#include <functional>  // for function
#include <map>         // for map
#include <numeric>     // for iota
#include <string>      // for to_string

#include "partsemi/count.hpp"
#include "partsemi/errors.hpp"
#include "partsemi/membership.hpp"

namespace partsemi {

  namespace {

    using BlockImages = std::vector<Point>;

    void check_guard(BigInt const& work, std::uint64_t guard, char const* what) {
      if (work > guard) {
        throw GuardError(std::string(what) + " would examine " + work.str()
                             + " maps, above the guard of "
                             + std::to_string(guard),
                         work.str());
      }
    }

    // Advances an odometer over {0, ..., base-1}^digits.size(); returns false
    // after the last value.
    bool advance(std::vector<Point>& digits, size_t base) {
      for (size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) {
          return true;
        }
        digits[i] = 0;
      }
      return false;
    }

    Enumeration finish(std::vector<Transformation> maps,
                       std::optional<size_t>       limit) {
      std::sort(maps.begin(), maps.end());
      Enumeration result;
      if (limit && maps.size() > *limit) {
        maps.erase(maps.begin() + static_cast<std::ptrdiff_t>(*limit), maps.end());
        result.truncated = true;
      }
      result.maps = std::move(maps);
      return result;
    }

    Enumeration brute(SetPartition const&                              p,
                      EnumerationOptions const&                        opts,
                      std::function<bool(Transformation const&)> const& keep) {
      size_t const n = p.degree();
      check_guard(power(n, n), opts.guard, "brute-force enumeration");
      Enumeration        result;
      std::vector<Point> images(n, 0);
      do {
        Transformation f(images);
        if (keep(f)) {
          if (opts.limit && result.maps.size() == *opts.limit) {
            result.truncated = true;
            break;
          }
          result.maps.push_back(std::move(f));
        }
      } while (advance(images, n));
      return result;
    }

    // All maps from a block of `size` points into `codomain`.
    std::vector<BlockImages> maps_into(size_t                 size,
                                       std::span<Point const> codomain) {
      std::vector<BlockImages> result;
      std::vector<Point>       idx(size, 0);
      do {
        BlockImages images(size);
        for (size_t r = 0; r < size; ++r) {
          images[r] = codomain[idx[r]];
        }
        result.push_back(std::move(images));
      } while (advance(idx, codomain.size()));
      return result;
    }

    // All bijections from a block of |codomain| points onto `codomain`.
    std::vector<BlockImages> bijections_onto(std::span<Point const> codomain) {
      std::vector<BlockImages> result;
      BlockImages images(codomain.begin(), codomain.end());  // ascending
      do {
        result.push_back(images);
      } while (std::next_permutation(images.begin(), images.end()));
      return result;
    }

    // All idempotent selfmaps of `block`: choose the nonempty image set S,
    // fix S pointwise, and send every other point anywhere in S.
    std::vector<BlockImages> idempotent_selfmaps(std::span<Point const> block) {
      size_t const             t = block.size();
      std::vector<BlockImages> result;
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << t); ++mask) {
        std::vector<Point> fixed;  // positions in S
        std::vector<Point> moved;  // positions outside S
        for (Point r = 0; r < t; ++r) {
          ((mask >> r) & 1 ? fixed : moved).push_back(r);
        }
        std::vector<Point> choice(moved.size(), 0);
        do {
          BlockImages images(t);
          for (Point r : fixed) {
            images[r] = block[r];
          }
          for (size_t s = 0; s < moved.size(); ++s) {
            images[moved[s]] = block[fixed[choice[s]]];
          }
          result.push_back(std::move(images));
        } while (advance(choice, fixed.size()));
      }
      return result;
    }

    // Appends every map whose restriction to block i is drawn from
    // choices[i].
    void product(SetPartition const&                          p,
                 std::vector<std::vector<BlockImages>> const& choices,
                 std::vector<Transformation>&                 out) {
      size_t const       m = p.number_of_blocks();
      std::vector<Point> pick(m, 0);
      std::vector<Point> images(p.degree());
      while (true) {
        for (size_t i = 0; i < m; ++i) {
          auto        block = p.block(static_cast<BlockIndex>(i));
          auto const& chosen = choices[i][pick[i]];
          for (size_t r = 0; r < block.size(); ++r) {
            images[block[r]] = chosen[r];
          }
        }
        out.emplace_back(images);
        size_t i = m;
        while (i-- > 0) {
          if (++pick[i] < choices[i].size()) {
            break;
          }
          pick[i] = 0;
        }
        if (i == static_cast<size_t>(-1)) {
          return;
        }
      }
    }

    // Calls fn on every permutation of the block indices.
    void for_each_block_permutation(
        size_t                                                 m,
        std::function<void(std::vector<BlockIndex> const&)> const& fn) {
      std::vector<BlockIndex> phi(m);
      std::iota(phi.begin(), phi.end(), 0);
      do {
        fn(phi);
      } while (std::next_permutation(phi.begin(), phi.end()));
    }

    std::vector<Transformation> construct_t(SetPartition const& p) {
      std::vector<std::vector<BlockImages>> choices;
      for (auto const& dom : p.blocks()) {
        auto& c = choices.emplace_back();
        for (auto const& cod : p.blocks()) {
          auto maps = maps_into(dom.size(), cod);
          c.insert(c.end(), maps.begin(), maps.end());
        }
      }
      std::vector<Transformation> out;
      product(p, choices, out);
      return out;
    }

  }  // namespace

  Enumeration enumerate_t(SetPartition const& p, EnumerationOptions const& opts) {
    if (opts.strategy == Strategy::brute) {
      return brute(p, opts, [&p](auto const& f) { return preserves(f, p); });
    }
    check_guard(count_t(profile_of(p)), opts.guard, "enumeration of T(X, P)");
    return finish(construct_t(p), opts.limit);
  }

  Enumeration enumerate_sigma(SetPartition const&       p,
                              EnumerationOptions const& opts) {
    if (opts.strategy == Strategy::brute) {
      return brute(p, opts, [&p](auto const& f) { return in_sigma(f, p); });
    }
    check_guard(count_sigma_grouped(profile_of(p)),
                opts.guard,
                "enumeration of Σ(X, P)");
    // One χ class per bijective character, each a free product of block maps.
    std::vector<Transformation> out;
    for_each_block_permutation(p.number_of_blocks(), [&](auto const& phi) {
      std::vector<std::vector<BlockImages>> choices;
      for (size_t i = 0; i < phi.size(); ++i) {
        choices.push_back(maps_into(p.block_size(static_cast<BlockIndex>(i)),
                                    p.block(phi[i])));
      }
      product(p, choices, out);
    });
    return finish(std::move(out), opts.limit);
  }

  Enumeration enumerate_units(SetPartition const&       p,
                              EnumerationOptions const& opts) {
    if (opts.strategy == Strategy::brute) {
      return brute(p, opts, [&p](auto const& f) { return in_units(f, p); });
    }
    check_guard(count_units(profile_of(p)), opts.guard, "enumeration of S(X, P)");
    std::vector<Transformation> out;
    for_each_block_permutation(p.number_of_blocks(), [&](auto const& phi) {
      std::vector<std::vector<BlockImages>> choices;
      for (size_t i = 0; i < phi.size(); ++i) {
        if (p.block_size(static_cast<BlockIndex>(i)) != p.block_size(phi[i])) {
          return;  // blocks may only be matched with blocks of equal size
        }
        choices.push_back(bijections_onto(p.block(phi[i])));
      }
      product(p, choices, out);
    });
    return finish(std::move(out), opts.limit);
  }

  Enumeration enumerate_idempotents(SetPartition const&       p,
                                    Ambient                   ambient,
                                    EnumerationOptions const& opts) {
    if (opts.strategy == Strategy::brute) {
      if (ambient == Ambient::T) {
        return brute(p, opts, [&p](auto const& f) {
          return preserves(f, p) && is_idempotent(f);
        });
      }
      return brute(p, opts, [&p](auto const& f) {
        return in_sigma(f, p) && is_idempotent(f);
      });
    }
    if (ambient == Ambient::T) {
      check_guard(count_t(profile_of(p)), opts.guard, "enumeration of T(X, P)");
      auto all = construct_t(p);
      std::erase_if(all, [](auto const& f) { return !is_idempotent(f); });
      return finish(std::move(all), opts.limit);
    }
    check_guard(count_sigma_idempotents(profile_of(p)),
                opts.guard,
                "enumeration of E(Σ(X, P))");
    std::vector<std::vector<BlockImages>> choices;
    for (auto const& block : p.blocks()) {
      choices.push_back(idempotent_selfmaps(block));
    }
    std::vector<Transformation> out;
    product(p, choices, out);
    return finish(std::move(out), opts.limit);
  }

  std::vector<ChiClass> chi_classes(SetPartition const&       p,
                                    size_t                    max_representatives,
                                    EnumerationOptions const& options) {
    EnumerationOptions opts = options;
    opts.limit.reset();
    auto sigma = enumerate_sigma(p, opts);

    std::map<CharacterMap, ChiClass> classes;
    for (auto& f : sigma.maps) {
      auto chi = character(f, p);
      auto it  = classes.find(chi);
      if (it == classes.end()) {
        it = classes.emplace(chi, ChiClass{chi, 0, {}}).first;
      }
      ++it->second.size;
      if (it->second.representatives.size() < max_representatives) {
        it->second.representatives.push_back(std::move(f));
      }
    }
    std::vector<ChiClass> result;
    for (auto& [chi, cls] : classes) {
      result.push_back(std::move(cls));
    }
    return result;
  }

}  // namespace partsemi
