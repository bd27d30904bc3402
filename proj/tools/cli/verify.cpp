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

#include "cli/verify.hpp"

#include <algorithm>   // for max, min
#include <functional>  // for function
#include <limits>      // for numeric_limits
#include <map>         // for map
#include <set>         // for set

#include "partsemi/count.hpp"
#include "partsemi/cycles.hpp"
#include "partsemi/enumerate.hpp"
#include "partsemi/membership.hpp"
#include "partsemi/text.hpp"

namespace partsemi::cli {

  namespace {

    constexpr std::size_t max_pairwise_degree = 4;

    class Suite {
     public:
      Suite(std::string name, std::string claim)
          : _result{std::move(name), std::move(claim), 0, 0, 0, {}} {}

      void check(bool ok, std::size_t n, std::function<std::string()> const& what) {
        ++_result.checks;
        _result.n_max = std::max(_result.n_max, n);
        if (!ok) {
          if (_result.failures++ == 0) {
            _result.first_failure = what();
          }
        }
      }

      SuiteResult const& result() const noexcept {
        return _result;
      }

     private:
      SuiteResult _result;
    };

    std::string at(SetPartition const& p, Transformation const& f) {
      return "p=" + to_string(p) + " f=" + to_string(f);
    }

    std::string at(SetPartition const& p) {
      return "p=" + to_string(p);
    }

    std::vector<Transformation> all_maps(std::size_t n) {
      return enumerate_t(SetPartition::single_block(n),
                         {Strategy::brute, std::nullopt,
                          std::numeric_limits<std::uint64_t>::max()})
          .maps;
    }

    Transformation canonical_cycle(std::size_t n) {
      std::vector<Point> images(n);
      for (std::size_t i = 0; i < n; ++i) {
        images[i] = static_cast<Point>((i + 1) % n);
      }
      return Transformation(std::move(images));
    }

    bool is_prime(std::size_t n) {
      return n >= 2 && least_prime_divisor(n) == n;
    }

    // Every block image is a block of the same size.
    bool blocks_map_onto_blocks(Transformation const& f, SetPartition const& p) {
      std::set<std::vector<Point>> blocks(p.blocks().begin(), p.blocks().end());
      for (auto const& b : p.blocks()) {
        std::vector<Point> image;
        for (Point x : b) {
          image.push_back(f[x]);
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image.size() != b.size() || !blocks.count(image)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::uint64_t verification_work(std::size_t n_max) {
    BigInt work = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      work += BigInt(bell_number(n)) * power(n, n);
      if (work > std::numeric_limits<std::uint64_t>::max()) {
        return std::numeric_limits<std::uint64_t>::max();
      }
    }
    return static_cast<std::uint64_t>(work);
  }

  std::vector<SuiteResult> run_verification(std::size_t n_max) {
    Suite t_count("count-T", "|T(X,P)| formula equals brute-force enumeration");
    Suite units_count("count-S",
                      "|S(X,P)| formula equals brute-force enumeration");
    Suite sigma_direct("count-Sigma-direct",
                       "permutation-sum |Σ(X,P)| equals brute-force enumeration");
    Suite sigma_grouped("count-Sigma-grouped",
                        "grouped |Σ(X,P)| formula equals the permutation sum");
    Suite idem_count("count-E-Sigma",
                     "|E(Σ(X,P))| formula equals brute-force enumeration");
    Suite strategies("strategy-agreement",
                     "brute and constructive enumerations are identical");
    Suite sigma_equiv("sigma-equivalence",
                      "image meets every block ⇔ surjective character ⇔ "
                      "E*-preserving ⇔ continuous with nonempty preimages");
    Suite injective("injective-character",
                    "injective character ⇔ E*-preserving, on T(X,P)");
    Suite homomorphism("character-homomorphism",
                       "character of fg = character of f then of g");
    Suite sigma_idem("sigma-idempotents",
                     "on Σ(X,P): idempotent ⇔ idempotent block maps; "
                     "idempotents have identity character");
    Suite t_idem("t-idempotents",
                 "idempotents of T(X,P) have idempotent characters and "
                 "idempotent block maps on the character's image");
    Suite units("units",
                "block-map criterion ⇔ f, f^-1 preserve P; units send blocks "
                "onto equal-size blocks");
    Suite quotient("chi-quotient",
                   "m! classes, each of size prod |X_{iφ}|^{|X_i|}, summing "
                   "to |Σ(X,P)|");
    Suite divisibility("cycle-divisibility",
                       "an n-cycle preserves a nontrivial m-partition as a "
                       "unit iff m divides n");
    Suite prime_cycles("prime-cycles",
                       "the n-cycle preserves no nontrivial partition iff n "
                       "is prime");
    Suite cycle_character("cycle-character",
                          "an n-cycle unit has an m-cycle character and a "
                          "uniform partition");
    Suite preserved("preserved-partition",
                    "find-partition returns a nontrivial partition with the "
                    "promised membership");

    EnumerationOptions brute{Strategy::brute, std::nullopt,
                             std::numeric_limits<std::uint64_t>::max()};
    EnumerationOptions constructive{Strategy::constructive, std::nullopt,
                                    std::numeric_limits<std::uint64_t>::max()};

    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const maps = all_maps(n);

      for_each_set_partition(n, [&](SetPartition const& p) {
        auto const profile = profile_of(p);
        auto const t       = enumerate_t(p, brute).maps;
        auto const sigma   = enumerate_sigma(p, brute).maps;
        auto const s       = enumerate_units(p, brute).maps;
        auto const es      = enumerate_idempotents(p, Ambient::Sigma, brute).maps;
        auto const et      = enumerate_idempotents(p, Ambient::T, brute).maps;

        t_count.check(count_t(profile) == t.size(), n, [&] { return at(p); });
        units_count.check(count_units(profile) == s.size(), n, [&] {
          return at(p);
        });
        sigma_direct.check(count_sigma_direct(p) == sigma.size(), n, [&] {
          return at(p);
        });
        sigma_grouped.check(count_sigma_grouped(profile) == count_sigma_direct(p),
                            n,
                            [&] { return at(p); });
        idem_count.check(count_sigma_idempotents(profile) == es.size(), n, [&] {
          return at(p);
        });

        strategies.check(enumerate_t(p, constructive).maps == t, n, [&] {
          return "T at " + at(p);
        });
        strategies.check(enumerate_sigma(p, constructive).maps == sigma, n, [&] {
          return "Σ at " + at(p);
        });
        strategies.check(enumerate_units(p, constructive).maps == s, n, [&] {
          return "S at " + at(p);
        });
        strategies.check(
            enumerate_idempotents(p, Ambient::Sigma, constructive).maps == es,
            n,
            [&] { return "E(Σ) at " + at(p); });
        strategies.check(
            enumerate_idempotents(p, Ambient::T, constructive).maps == et,
            n,
            [&] { return "E(T) at " + at(p); });

        for (auto const& f : maps) {
          bool const member = in_sigma(f, p);
          bool ok = member == sigma_via_topology(f, p)
                    && member == is_e_star_preserving(f, p);
          if (preserves(f, p)) {
            ok = ok && member == sigma_via_character(f, p);
            injective.check(character_injective(f, p) == is_e_star_preserving(f, p),
                            n,
                            [&] { return at(p, f); });
          }
          sigma_equiv.check(ok, n, [&] { return at(p, f); });

          bool const unit = in_units(f, p);
          units.check(unit == in_units_direct(f, p)
                          && (!unit || blocks_map_onto_blocks(f, p)),
                      n,
                      [&] { return at(p, f); });
        }

        if (n <= max_pairwise_degree) {
          for (auto const& f : t) {
            auto const chi_f = character(f, p);
            for (auto const& g : t) {
              homomorphism.check(
                  character(f * g, p) == compose(chi_f, character(g, p)),
                  n,
                  [&] { return at(p, f) + " g=" + to_string(g); });
            }
          }
        }

        for (auto const& f : sigma) {
          bool const idem = is_idempotent(f);
          sigma_idem.check(idem == sigma_idempotent_via_blocks(f, p)
                               && (!idem || character(f, p).is_identity()),
                           n,
                           [&] { return at(p, f); });
        }

        for (auto const& f : et) {
          auto const chi    = character(f, p);
          auto const family = block_map_family(f, p);
          bool       ok     = chi.is_idempotent();
          for (auto j : chi.images()) {
            ok = ok && family.is_idempotent(j);
          }
          t_idem.check(ok, n, [&] { return at(p, f); });
        }

        {
          auto const    classes = chi_classes(p, 0, brute);
          std::uint64_t total   = 0;
          bool          ok      = BigInt(classes.size())
                        == factorial(p.number_of_blocks());
          for (auto const& cls : classes) {
            total += cls.size;
            ok = ok && cls.character.is_bijective()
                 && sigma_class_size(p, cls.character) == cls.size;
          }
          quotient.check(ok && total == sigma.size(), n, [&] { return at(p); });
        }

        if (n >= 2) {
          for (auto const& f : s) {
            if (!is_full_cycle(f)) {
              continue;
            }
            auto const chi = character(f, p);
            cycle_character.check(chi.is_full_cycle() && p.is_uniform(), n, [&] {
              return at(p, f);
            });
          }
        }
        return true;
      });

      if (n >= 2) {
        auto const f = canonical_cycle(n);
        prime_cycles.check(
            find_preserved_partition(f).has_value() != is_prime(n), n, [&] {
              return "n=" + std::to_string(n);
            });
        for (std::size_t m = 2; m < n; ++m) {
          auto const witness = preserved_m_partition(f, m);
          auto const found   = search_partition(
              n, [&](SetPartition const& q) { return in_units(f, q); }, m);
          bool const divides = n % m == 0;
          divisibility.check(witness.has_value() == divides
                                 && found.has_value() == divides
                                 && (!witness || in_units(f, *witness)),
                             n,
                             [&] {
                               return "n=" + std::to_string(n)
                                      + " m=" + std::to_string(m);
                             });
        }
      }

      if (n >= 3) {
        for (auto const& f : maps) {
          auto const q  = find_preserved_partition(f);
          bool       ok = q.has_value() != (is_full_cycle(f) && is_prime(n));
          if (q) {
            ok = ok && !q->is_trivial()
                 && (f.is_bijection() ? in_units(f, *q) : preserves(f, *q));
          }
          preserved.check(ok, n, [&] { return "f=" + to_string(f); });
        }
      }
    }

    std::vector<SuiteResult> results;
    for (Suite const* suite : {&t_count,
                               &units_count,
                               &sigma_direct,
                               &sigma_grouped,
                               &idem_count,
                               &strategies,
                               &sigma_equiv,
                               &injective,
                               &homomorphism,
                               &sigma_idem,
                               &t_idem,
                               &units,
                               &quotient,
                               &divisibility,
                               &prime_cycles,
                               &cycle_character,
                               &preserved}) {
      results.push_back(suite->result());
    }
    return results;
  }

}  // namespace partsemi::cli
