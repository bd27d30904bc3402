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

#include "partsemi/errors.hpp"
#include "partsemi/membership.hpp"

#include "oracle.hpp"

namespace partsemi {

  namespace {
    SetPartition const p21(3, {{0, 1}, {2}});
  }

  TEST_CASE("preserves", "[membership][quick]") {
    REQUIRE(preserves({1, 0, 2}, p21));
    REQUIRE_FALSE(preserves({0, 2, 1}, p21));
    REQUIRE(preserves({2, 2, 0}, p21));
    REQUIRE(split_block({0, 2, 1}, p21) == BlockIndex(0));
    REQUIRE_THROWS_AS(preserves({0, 1}, p21), SizeMismatchError);
  }

  TEST_CASE("character", "[membership][quick]") {
    REQUIRE(character({1, 0, 2}, p21) == CharacterMap({0, 1}));
    REQUIRE(character({2, 2, 0}, p21) == CharacterMap({1, 0}));
    REQUIRE(character({0, 0, 0}, p21) == CharacterMap({0, 0}));
    try {
      character({0, 2, 1}, p21);
      FAIL("expected NotPreservingError");
    } catch (NotPreservingError const& e) {
      REQUIRE(e.block() == 0);
    }
  }

  TEST_CASE("block_map_family", "[membership][quick]") {
    auto a = block_map_family({1, 0, 2}, p21);
    REQUIRE(a[0] == BlockMap{0, 0, {1, 0}});
    REQUIRE(a[1] == BlockMap{1, 1, {2}});

    auto b = block_map_family({2, 2, 0}, p21);
    REQUIRE(b[0] == BlockMap{0, 1, {2, 2}});
    REQUIRE(b[1] == BlockMap{1, 0, {0}});

    auto c = block_map_family({0, 0, 0}, p21);
    REQUIRE(c[0] == BlockMap{0, 0, {0, 0}});
    REQUIRE(c[1] == BlockMap{1, 0, {0}});

    REQUIRE_THROWS_AS(block_map_family({0, 2, 1}, p21), NotPreservingError);
  }

  TEST_CASE("block map families glue back to the map", "[membership][quick]") {
    for (size_t n = 1; n <= 4; ++n) {
      for (auto const& p : all_set_partitions(n)) {
        for (auto const& images : oracle::all_maps(n)) {
          Transformation f(images);
          if (preserves(f, p)) {
            REQUIRE(block_map_family(f, p).glue() == f);
          }
        }
      }
    }
  }

  TEST_CASE("in_sigma and its equivalent forms", "[membership][quick]") {
    REQUIRE(in_sigma({1, 0, 2}, p21));
    REQUIRE_FALSE(in_sigma({0, 0, 0}, p21));
    REQUIRE(in_sigma({2, 2, 0}, p21));

    REQUIRE(sigma_via_character({2, 2, 0}, p21));
    REQUIRE_FALSE(sigma_via_character({0, 0, 0}, p21));
    REQUIRE(sigma_via_character(Transformation::identity(3), p21));
    REQUIRE_THROWS_AS(sigma_via_character({0, 2, 1}, p21), NotPreservingError);

    REQUIRE(sigma_via_topology({1, 0, 2}, p21));
    REQUIRE_FALSE(sigma_via_topology({0, 0, 0}, p21));
    REQUIRE_FALSE(sigma_via_topology({0, 2, 1}, p21));
  }

  TEST_CASE("E*-preservation and injective characters", "[membership][quick]") {
    REQUIRE(is_e_star_preserving({2, 2, 0}, p21));
    REQUIRE_FALSE(is_e_star_preserving({0, 0, 0}, p21));
    REQUIRE(is_e_star_preserving(Transformation::identity(3), p21));

    REQUIRE(character_injective({2, 2, 0}, p21));
    REQUIRE_FALSE(character_injective({0, 0, 0}, p21));
    REQUIRE(character_injective({1, 0, 2}, p21));
    REQUIRE_THROWS_AS(character_injective({0, 2, 1}, p21), NotPreservingError);
  }

  TEST_CASE("units", "[membership][quick]") {
    REQUIRE(in_units({1, 0, 2}, p21));
    REQUIRE_FALSE(in_units({2, 2, 0}, p21));
    REQUIRE_FALSE(in_units({1, 2, 0}, p21));
    REQUIRE(in_units_direct({1, 0, 2}, p21));
    REQUIRE_FALSE(in_units_direct({1, 2, 0}, p21));
    // Preserves P with bijective character, but block map 0 is not onto.
    SetPartition q(4, {{0, 1}, {2, 3}});
    REQUIRE(preserves({3, 3, 0, 1}, q));
    REQUIRE_FALSE(in_units({3, 3, 0, 1}, q));
    REQUIRE_FALSE(in_units_direct({3, 3, 0, 1}, q));
  }

  TEST_CASE("idempotents", "[membership][quick]") {
    REQUIRE(is_idempotent({0, 0, 2}));
    REQUIRE_FALSE(is_idempotent({1, 0, 2}));
    REQUIRE(is_idempotent({1, 1, 1}));

    REQUIRE(sigma_idempotent_via_blocks({0, 0, 2}, p21));
    REQUIRE_FALSE(sigma_idempotent_via_blocks({1, 0, 2}, p21));
    REQUIRE(sigma_idempotent_via_blocks(Transformation::identity(3), p21));
    REQUIRE_THROWS_AS(sigma_idempotent_via_blocks({0, 0, 0}, p21),
                      DomainError);
  }

  TEST_CASE("predicates agree with the set-based oracle", "[membership]") {
    for (size_t n = 1; n <= 5; ++n) {
      for (auto const& p : all_set_partitions(n)) {
        for (auto const& images : oracle::all_maps(n)) {
          Transformation f(images);
          REQUIRE(preserves(f, p) == oracle::preserves(images, p.blocks()));
          REQUIRE(in_sigma(f, p) == oracle::in_sigma(images, p.blocks()));
          REQUIRE(in_units(f, p) == oracle::is_unit(images, p.blocks()));
          REQUIRE(is_idempotent(f) == oracle::is_idempotent(images));
        }
      }
    }
  }

  TEST_CASE("character is a homomorphism on T(X, P)", "[membership]") {
    for (size_t n = 1; n <= 3; ++n) {
      for (auto const& p : all_set_partitions(n)) {
        std::vector<Transformation> t;
        for (auto const& images : oracle::all_maps(n)) {
          if (preserves(Transformation(images), p)) {
            t.emplace_back(images);
          }
        }
        for (auto const& f : t) {
          for (auto const& g : t) {
            REQUIRE(character(f * g, p)
                    == compose(character(f, p), character(g, p)));
          }
        }
      }
    }
  }

  TEST_CASE("idempotents of T(X, P) have idempotent characters",
            "[membership]") {
    for (size_t n = 1; n <= 5; ++n) {
      for (auto const& p : all_set_partitions(n)) {
        for (auto const& images : oracle::all_maps(n)) {
          Transformation f(images);
          if (!preserves(f, p) || !is_idempotent(f)) {
            continue;
          }
          auto chi = character(f, p);
          REQUIRE(chi.is_idempotent());
          auto family = block_map_family(f, p);
          for (auto j : chi.images()) {
            REQUIRE(family.is_idempotent(j));
          }
        }
      }
    }
  }

}  // namespace partsemi
