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

#ifndef PARTSEMI_TEXT_HPP_
#define PARTSEMI_TEXT_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view

#include "partsemi/block_maps.hpp"      // for CharacterMap, BlockMapFamily
#include "partsemi/partition.hpp"       // for SetPartition, PartitionProfile
#include "partsemi/transformation.hpp"  // for Transformation

// Text formats shared by the library and the command line tool. Points are
// 0-based decimals.
//
//   partition       "0,1|2"     blocks separated by '|', points by ','
//   transformation  "1,0,2"     the image table
//   profile         "2:1,1:1"   size:multiplicity pairs
//   character map   "1,0"       same format as a transformation

namespace partsemi {

  //! Block order in `text` is irrelevant; the result is canonical. Throws
  //! ParseError naming the offending token.
  SetPartition parse_partition(std::string_view text, size_t n);

  //! Throws ParseError on wrong arity or an out-of-range image.
  Transformation parse_transformation(std::string_view text, size_t n);

  //! As parse_transformation, with the degree taken from the entry count.
  Transformation parse_transformation(std::string_view text);

  //! As parse_partition, with n = 1 + largest point mentioned.
  SetPartition parse_partition(std::string_view text);

  //! Throws ParseError on zero sizes or multiplicities, or repeated sizes.
  PartitionProfile parse_profile(std::string_view text);

  std::string to_string(SetPartition const& p);
  std::string to_string(Transformation const& f);
  std::string to_string(PartitionProfile const& profile);
  std::string to_string(CharacterMap const& chi);

}  // namespace partsemi

#endif  // PARTSEMI_TEXT_HPP_
