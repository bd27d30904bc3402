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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "partsemi/count.hpp"
#include "partsemi/cycles.hpp"
#include "partsemi/enumerate.hpp"
#include "partsemi/membership.hpp"
#include "partsemi/text.hpp"

using namespace partsemi;

namespace {

  // Pinned thresholds.
  constexpr double        verify_time_limit_seconds = 30.0;
  constexpr std::uint64_t no_guard = std::numeric_limits<std::uint64_t>::max();

  EnumerationOptions const brute{Strategy::brute, std::nullopt, no_guard};

  struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t counterexamples = 0;
    std::string   first;

    void expect(bool ok, std::function<std::string()> const& where) {
      ++cases;
      if (!ok && counterexamples++ == 0) {
        first = where();
      }
    }
    bool ok() const {
      return counterexamples == 0;
    }
    std::string summary() const {
      std::string s = std::to_string(cases) + " cases, "
                      + std::to_string(counterexamples) + " counterexamples";
      if (!ok()) {
        s += "; first: " + first;
      }
      return s;
    }
  };

  std::string at(SetPartition const& p, Transformation const& f) {
    return "p=" + to_string(p) + " f=" + to_string(f);
  }

  std::vector<Transformation> all_maps(size_t n) {
    return enumerate_t(SetPartition::single_block(n), brute).maps;
  }

  Transformation canonical_cycle(size_t n) {
    std::vector<Point> images(n);
    for (size_t i = 0; i < n; ++i) {
      images[i] = static_cast<Point>((i + 1) % n);
    }
    return Transformation(std::move(images));
  }

  // Every cycle through all n points.
  std::vector<Transformation> all_full_cycles(size_t n) {
    std::vector<Transformation> out;
    std::vector<Point>          order(n - 1);
    std::iota(order.begin(), order.end(), 1);
    do {
      std::vector<Point> images(n);
      Point              x = 0;
      for (Point y : order) {
        images[x] = y;
        x         = y;
      }
      images[x] = 0;
      out.emplace_back(std::move(images));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
  }

  bool is_prime(size_t n) {
    return n >= 2 && least_prime_divisor(n) == n;
  }

  struct Criterion {
    std::string                         label;
    std::function<std::pair<bool, std::string>()> run;
  };

  ////////////////////////////////////////////////////////////////////////
  // Criteria
  ////////////////////////////////////////////////////////////////////////

  std::pair<bool, std::string> census() {
    Tally  t;
    size_t partitions = 0;
    for (size_t n = 1; n <= 6; ++n) {
      for_each_set_partition(n, [&](SetPartition const& p) {
        ++partitions;
        auto const profile = profile_of(p);
        auto const sigma   = enumerate_sigma(p, brute).maps.size();
        t.expect(enumerate_t(p, brute).maps.size() == count_t(profile),
                 [&] { return "T at " + to_string(p); });
        t.expect(sigma == count_sigma_direct(p),
                 [&] { return "Σ direct at " + to_string(p); });
        t.expect(sigma == count_sigma_grouped(profile),
                 [&] { return "Σ grouped at " + to_string(p); });
        t.expect(enumerate_units(p, brute).maps.size() == count_units(profile),
                 [&] { return "S at " + to_string(p); });
        t.expect(enumerate_idempotents(p, Ambient::Sigma, brute).maps.size()
                     == count_sigma_idempotents(profile),
                 [&] { return "E(Σ) at " + to_string(p); });
        return true;
      });
    }
    bool ok = t.ok() && partitions == 1 + 2 + 5 + 15 + 52 + 203;
    return {ok, std::to_string(partitions) + " partitions; " + t.summary()};
  }

  std::pair<bool, std::string> spot_values() {
    struct Spot {
      char const*   partition;
      std::uint64_t t, sigma, s, e_sigma;
    };
    // Frozen from a set-based brute force over all maps.
    Spot const spots[] = {{"0,1|2", 15, 6, 2, 3}, {"0,1|2,3", 64, 32, 8, 9}};
    Tally      t;
    for (auto const& spot : spots) {
      auto const p       = parse_partition(spot.partition);
      auto const profile = profile_of(p);
      auto where = [&] { return std::string(spot.partition); };
      t.expect(enumerate_t(p, brute).maps.size() == spot.t, where);
      t.expect(count_t(profile) == spot.t, where);
      t.expect(enumerate_sigma(p, brute).maps.size() == spot.sigma, where);
      t.expect(count_sigma_direct(p) == spot.sigma, where);
      t.expect(count_sigma_grouped(profile) == spot.sigma, where);
      t.expect(enumerate_units(p, brute).maps.size() == spot.s, where);
      t.expect(count_units(profile) == spot.s, where);
      t.expect(enumerate_idempotents(p, Ambient::Sigma, brute).maps.size()
                   == spot.e_sigma,
               where);
      t.expect(count_sigma_idempotents(profile) == spot.e_sigma, where);
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> four_way_equivalence() {
    Tally t;
    for (size_t n = 1; n <= 5; ++n) {
      auto const maps = all_maps(n);
      for_each_set_partition(n, [&](SetPartition const& p) {
        for (auto const& f : maps) {
          if (!preserves(f, p)) {
            continue;
          }
          bool const a = in_sigma(f, p);
          t.expect(a == sigma_via_character(f, p) && a == is_e_star_preserving(f, p)
                       && a == sigma_via_topology(f, p),
                   [&] { return at(p, f); });
        }
        return true;
      });
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> character_homomorphism() {
    Tally t;
    for (size_t n = 1; n <= 4; ++n) {
      for_each_set_partition(n, [&](SetPartition const& p) {
        auto const members = enumerate_t(p, brute).maps;
        for (auto const& f : members) {
          auto const chi_f = character(f, p);
          for (auto const& g : members) {
            t.expect(character(f * g, p) == compose(chi_f, character(g, p)),
                     [&] { return at(p, f) + " g=" + to_string(g); });
          }
        }
        return true;
      });
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> idempotent_characterization() {
    Tally t;
    for (size_t n = 1; n <= 5; ++n) {
      for_each_set_partition(n, [&](SetPartition const& p) {
        for (auto const& f : enumerate_sigma(p, brute).maps) {
          bool const idem = is_idempotent(f);
          t.expect(idem == sigma_idempotent_via_blocks(f, p),
                   [&] { return at(p, f); });
          if (idem) {
            t.expect(character(f, p).is_identity(), [&] { return at(p, f); });
          }
        }
        return true;
      });
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> units_characterization() {
    Tally t;
    for (size_t n = 1; n <= 5; ++n) {
      for_each_set_partition(n, [&](SetPartition const& p) {
        std::set<std::vector<Point>> blocks(p.blocks().begin(), p.blocks().end());
        for (auto const& f : enumerate_t(p, brute).maps) {
          bool const unit   = in_units(f, p);
          bool const direct = f.is_bijection() && preserves(f, p)
                              && preserves(f.inverse(), p);
          t.expect(unit == direct, [&] { return at(p, f); });
          if (!unit) {
            continue;
          }
          for (auto const& b : p.blocks()) {
            std::vector<Point> image;
            for (Point x : b) {
              image.push_back(f[x]);
            }
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            t.expect(blocks.count(image) == 1 && image.size() == b.size(),
                     [&] { return at(p, f); });
          }
        }
        return true;
      });
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> divisibility() {
    Tally        t;
    std::mt19937 rng(4031);
    for (size_t n = 2; n <= 8; ++n) {
      std::vector<Transformation> cycles{canonical_cycle(n)};
      std::vector<Point>          relabel(n);
      std::iota(relabel.begin(), relabel.end(), 0);
      for (int i = 0; i < 5; ++i) {
        std::shuffle(relabel.begin(), relabel.end(), rng);
        Transformation sigma(relabel);
        cycles.push_back(sigma.inverse() * canonical_cycle(n) * sigma);
      }
      for (auto const& f : cycles) {
        for (size_t m = 2; m < n; ++m) {
          bool const divides = n % m == 0;
          auto const witness = preserved_m_partition(f, m);
          auto where = [&] {
            return "f=" + to_string(f) + " m=" + std::to_string(m);
          };
          t.expect(witness.has_value() == divides, where);
          if (witness) {
            t.expect(witness->number_of_blocks() == m && in_units(f, *witness),
                     where);
          }
          auto const found = search_partition(
              n, [&](SetPartition const& q) { return in_units(f, q); }, m);
          t.expect(found.has_value() == divides, where);
        }
      }
    }
    std::set<size_t> none;
    for (size_t n = 3; n <= 8; ++n) {
      auto const q = find_preserved_partition(canonical_cycle(n));
      if (!q) {
        none.insert(n);
      }
      t.expect(q.has_value() != is_prime(n), [&] { return "n=" + std::to_string(n); });
    }
    t.expect(none == std::set<size_t>{3, 5, 7}, [] { return "prime set"; });
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> cycle_character() {
    Tally         t;
    std::uint64_t units_found = 0;
    for (size_t n = 2; n <= 8; ++n) {
      auto const cycles = all_full_cycles(n);
      for_each_set_partition(n, [&](SetPartition const& p) {
        for (auto const& f : cycles) {
          if (!in_units(f, p)) {
            continue;
          }
          ++units_found;
          auto const chi = character(f, p);
          t.expect(chi.is_full_cycle()
                       && chi.number_of_blocks() == p.number_of_blocks()
                       && p.is_uniform(),
                   [&] { return at(p, f); });
        }
        return true;
      });
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> quotient_structure() {
    Tally t;
    for (size_t n = 1; n <= 5; ++n) {
      for_each_set_partition(n, [&](SetPartition const& p) {
        auto const    classes = chi_classes(p, 0, brute);
        auto const    sigma   = enumerate_sigma(p, brute).maps.size();
        std::uint64_t total   = 0;
        t.expect(factorial(p.number_of_blocks()) == classes.size(),
                 [&] { return "class count at " + to_string(p); });
        for (auto const& cls : classes) {
          total += cls.size;
          t.expect(cls.character.is_bijective()
                       && sigma_class_size(p, cls.character) == cls.size,
                   [&] {
                     return "class " + to_string(cls.character) + " at "
                            + to_string(p);
                   });
        }
        t.expect(total == sigma, [&] { return "total at " + to_string(p); });
        return true;
      });
    }
    return {t.ok(), t.summary()};
  }

  std::pair<bool, std::string> verify_command() {
    std::ostringstream out, err;
    auto const         start = std::chrono::steady_clock::now();
    int const code = cli::run({"verify", "--n-max", "5"}, out, err);
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    bool const ok = code == 0 && seconds < verify_time_limit_seconds;
    char       buf[96];
    std::snprintf(buf, sizeof buf, "exit %d in %.2f s (limit %.0f s)", code,
                  seconds, verify_time_limit_seconds);
    return {ok, buf};
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {"AC1  formula-oracle census, all partitions n <= 6", census},
      {"AC2  spot values for 0,1|2 and 0,1|2,3", spot_values},
      {"AC3  four-way Σ equivalence, n <= 5", four_way_equivalence},
      {"AC4  character homomorphism, n <= 4", character_homomorphism},
      {"AC5  Σ idempotents via block maps, n <= 5", idempotent_characterization},
      {"AC6  units characterization, n <= 5", units_characterization},
      {"AC7  n-cycle divisibility and prime cycles, n <= 8", divisibility},
      {"AC8  n-cycle units: cyclic character, uniform partition, n <= 8",
       cycle_character},
      {"AC9  χ quotient structure, n <= 5", quotient_structure},
      {"AC10 verify --n-max 5 exits 0 within 30 s", verify_command},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    auto [ok, detail] = c.run();
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::printf("[%s] %s  (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.label.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
