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

#include "partsemi/text.hpp"

#include <algorithm>     // for max
#include <charconv>      // for from_chars
#include <system_error>  // for errc
#include <vector>        // for vector

#include "partsemi/errors.hpp"

namespace partsemi {

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> parts;
      size_t                        start = 0;
      while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
          parts.push_back(s.substr(start));
          return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
      }
    }

    size_t parse_number(std::string_view token, char const* what) {
      auto   t     = trim(token);
      size_t value = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ParseError(std::string("invalid ") + what + " '"
                             + std::string(token) + "'",
                         std::string(token));
      }
      return value;
    }

    std::vector<size_t> parse_list(std::string_view text, char const* what) {
      std::vector<size_t> values;
      for (auto tok : split(text, ',')) {
        values.push_back(parse_number(tok, what));
      }
      return values;
    }

    template <typename Seq>
    std::string join(Seq const& seq, char sep) {
      std::string out;
      bool        first = true;
      for (auto const& v : seq) {
        if (!first) {
          out += sep;
        }
        out += std::to_string(v);
        first = false;
      }
      return out;
    }

  }  // namespace

  SetPartition parse_partition(std::string_view text, size_t n) {
    if (n == 0) {
      throw ParseError("partition degree must be >= 1", std::string(text));
    }
    std::vector<std::vector<Point>> blocks;
    std::vector<bool>               seen(n, false);
    for (auto block_text : split(text, '|')) {
      if (trim(block_text).empty()) {
        throw ParseError("empty block in '" + std::string(text) + "'",
                         std::string(block_text));
      }
      auto& block = blocks.emplace_back();
      for (auto tok : split(block_text, ',')) {
        size_t x = parse_number(tok, "point");
        if (x >= n) {
          throw ParseError("point " + std::to_string(x)
                               + " out of range [0, " + std::to_string(n)
                               + ")",
                           std::string(trim(tok)));
        }
        if (seen[x]) {
          throw ParseError("duplicate point " + std::to_string(x),
                           std::string(trim(tok)));
        }
        seen[x] = true;
        block.push_back(static_cast<Point>(x));
      }
    }
    for (size_t x = 0; x < n; ++x) {
      if (!seen[x]) {
        throw ParseError("missing point " + std::to_string(x),
                         std::to_string(x));
      }
    }
    return SetPartition(n, std::move(blocks));
  }

  SetPartition parse_partition(std::string_view text) {
    size_t max_point = 0;
    for (auto block_text : split(text, '|')) {
      if (trim(block_text).empty()) {
        continue;  // reported by the sized overload
      }
      for (auto tok : split(block_text, ',')) {
        max_point = std::max(max_point, parse_number(tok, "point"));
      }
    }
    return parse_partition(text, max_point + 1);
  }

  Transformation parse_transformation(std::string_view text, size_t n) {
    auto values = parse_list(text, "image");
    if (values.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " images, got "
                           + std::to_string(values.size()),
                       std::string(text));
    }
    std::vector<Point> images(n);
    for (size_t i = 0; i < n; ++i) {
      if (values[i] >= n) {
        throw ParseError("image " + std::to_string(values[i])
                             + " out of range [0, " + std::to_string(n) + ")",
                         std::to_string(values[i]));
      }
      images[i] = static_cast<Point>(values[i]);
    }
    return Transformation(std::move(images));
  }

  Transformation parse_transformation(std::string_view text) {
    return parse_transformation(text, split(text, ',').size());
  }

  PartitionProfile parse_profile(std::string_view text) {
    std::vector<ProfileEntry> entries;
    for (auto tok : split(text, ',')) {
      auto parts = split(tok, ':');
      if (parts.size() != 2) {
        throw ParseError("expected size:multiplicity, got '"
                             + std::string(trim(tok)) + "'",
                         std::string(trim(tok)));
      }
      size_t size = parse_number(parts[0], "block size");
      size_t mult = parse_number(parts[1], "multiplicity");
      if (size == 0 || mult == 0) {
        throw ParseError("size and multiplicity must be >= 1 in '"
                             + std::string(trim(tok)) + "'",
                         std::string(trim(tok)));
      }
      for (auto const& e : entries) {
        if (e.size == size) {
          throw ParseError("block size " + std::to_string(size)
                               + " listed twice",
                           std::string(trim(tok)));
        }
      }
      entries.push_back({size, mult});
    }
    return PartitionProfile(std::move(entries));
  }

  std::string to_string(SetPartition const& p) {
    std::string out;
    for (size_t i = 0; i < p.number_of_blocks(); ++i) {
      if (i > 0) {
        out += '|';
      }
      out += join(p.block(static_cast<BlockIndex>(i)), ',');
    }
    return out;
  }

  std::string to_string(Transformation const& f) {
    return join(f.images(), ',');
  }

  std::string to_string(PartitionProfile const& profile) {
    std::string out;
    for (auto const& e : profile.entries()) {
      if (!out.empty()) {
        out += ',';
      }
      out += std::to_string(e.size) + ':' + std::to_string(e.multiplicity);
    }
    return out;
  }

  std::string to_string(CharacterMap const& chi) {
    return join(chi.images(), ',');
  }

}  // namespace partsemi
