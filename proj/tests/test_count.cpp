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

#include "catch_amalgamated.hpp"

#include "partsemi/count.hpp"
#include "partsemi/errors.hpp"
#include "partsemi/text.hpp"

#include "oracle.hpp"

namespace partsemi {

  TEST_CASE("count_t", "[count][quick]") {
    REQUIRE(count_t(parse_profile("1:1,2:1")) == 15);
    REQUIRE(count_t(parse_profile("2:2")) == 64);
    for (size_t n = 1; n <= 12; ++n) {
      REQUIRE(count_t(PartitionProfile({{1, n}})) == power(n, n));
    }
  }

  TEST_CASE("count_units", "[count][quick]") {
    REQUIRE(count_units(parse_profile("2:2")) == 8);
    REQUIRE(count_units(parse_profile("1:1,2:1")) == 2);
    for (size_t n = 1; n <= 12; ++n) {
      REQUIRE(count_units(PartitionProfile({{1, n}})) == factorial(n));
    }
  }

  TEST_CASE("count_sigma_direct", "[count][quick]") {
    REQUIRE(count_sigma_direct(SetPartition(3, {{0, 1}, {2}})) == 6);
    REQUIRE(count_sigma_direct(SetPartition(4, {{0, 1}, {2, 3}})) == 32);
    REQUIRE(count_sigma_direct(SetPartition::single_block(3)) == 27);
    REQUIRE(count_sigma_direct(SetPartition(4, {{0}, {1}, {2, 3}})) == 16);
    REQUIRE_THROWS_AS(count_sigma_direct(SetPartition::discrete(11)),
                      GuardError);
  }

  TEST_CASE("count_sigma_grouped", "[count][quick]") {
    REQUIRE(count_sigma_grouped(parse_profile("1:1,2:1")) == 6);
    REQUIRE(count_sigma_grouped(parse_profile("2:2")) == 32);
    // blocks 1, 1, 2: brute force over T_4 gives 16
    REQUIRE(count_sigma_grouped(parse_profile("1:2,2:1")) == 16);
    REQUIRE(count_sigma_grouped(parse_profile("1:1,4:1")) == 260);
    REQUIRE(count_sigma_grouped(parse_profile("2:1,3:1")) == 180);
    // discrete: |Σ| = |S_n|, with a single arrangement
    REQUIRE(count_sigma_grouped(PartitionProfile({{1, 30}})) == factorial(30));
    REQUIRE_THROWS_AS(count_sigma_grouped(parse_profile("1:6,2:6"), 100),
                      GuardError);
  }

  TEST_CASE("count_sigma_idempotents", "[count][quick]") {
    REQUIRE(count_sigma_idempotents(parse_profile("1:1,2:1")) == 3);
    REQUIRE(count_sigma_idempotents(parse_profile("2:2")) == 9);
    REQUIRE(count_sigma_idempotents(PartitionProfile({{1, 7}})) == 1);
    // idempotents of T_n: 1, 3, 10, 41, 196, 1057
    std::vector<int> expected{1, 3, 10, 41, 196, 1057};
    for (size_t t = 1; t <= expected.size(); ++t) {
      REQUIRE(full_transformation_idempotents(t) == expected[t - 1]);
    }
  }

  TEST_CASE("grouped and direct Σ counts agree up to n = 8", "[count]") {
    for (size_t n = 1; n <= 8; ++n) {
      for (auto const& p : all_set_partitions(n)) {
        REQUIRE(count_sigma_grouped(profile_of(p)) == count_sigma_direct(p));
      }
    }
  }

  TEST_CASE("counts agree with the set-based oracle up to n = 4",
            "[count][quick]") {
    for (size_t n = 1; n <= 4; ++n) {
      for (auto const& p : all_set_partitions(n)) {
        auto c       = oracle::brute_counts(p.blocks());
        auto profile = profile_of(p);
        REQUIRE(count_t(profile) == c.t);
        REQUIRE(count_sigma_direct(p) == c.sigma);
        REQUIRE(count_sigma_grouped(profile) == c.sigma);
        REQUIRE(count_units(profile) == c.units);
        REQUIRE(count_sigma_idempotents(profile) == c.sigma_idempotents);
      }
    }
  }

  TEST_CASE("counts respect containment and exceed 64 bits", "[count][quick]") {
    for (auto text : {"1:1,2:1", "2:3", "1:2,3:2,5:1", "4:3,7:2"}) {
      auto profile = parse_profile(text);
      auto t       = count_t(profile);
      auto sigma   = count_sigma_grouped(profile);
      auto units   = count_units(profile);
      REQUIRE(units <= sigma);
      REQUIRE(sigma <= t);
      REQUIRE(count_sigma_idempotents(profile) <= sigma);
    }
    REQUIRE(count_t(parse_profile("4:3,7:2"))
            > BigInt(std::numeric_limits<std::uint64_t>::max()));
  }

  TEST_CASE("sigma_class_size", "[count][quick]") {
    SetPartition p(3, {{0, 1}, {2}});
    REQUIRE(sigma_class_size(p, CharacterMap({0, 1})) == 4);
    REQUIRE(sigma_class_size(p, CharacterMap({1, 0})) == 2);
    REQUIRE_THROWS_AS(sigma_class_size(p, CharacterMap({0, 0})), DomainError);
  }

}  // namespace partsemi
