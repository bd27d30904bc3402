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

#include "partsemi/transformation.hpp"

#include <algorithm>  // for sort, unique, all_of
#include <string>     // for to_string

#include "partsemi/errors.hpp"

namespace partsemi {

  Transformation::Transformation(std::vector<Point> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw std::invalid_argument("a transformation needs degree >= 1");
    }
    size_t const n = _images.size();
    for (size_t i = 0; i < n; ++i) {
      if (_images[i] >= n) {
        throw std::invalid_argument("image " + std::to_string(_images[i])
                                    + " of point " + std::to_string(i)
                                    + " is out of range [0, "
                                    + std::to_string(n) + ")");
      }
    }
  }

  Transformation Transformation::identity(size_t n) {
    std::vector<Point> images(n);
    for (size_t i = 0; i < n; ++i) {
      images[i] = static_cast<Point>(i);
    }
    return Transformation(std::move(images));
  }

  Transformation Transformation::constant(size_t n, Point value) {
    return Transformation(std::vector<Point>(n, value));
  }

  bool Transformation::is_bijection() const {
    std::vector<bool> seen(_images.size(), false);
    for (Point y : _images) {
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  bool Transformation::is_constant() const noexcept {
    return std::all_of(_images.cbegin(), _images.cend(), [this](Point y) {
      return y == _images.front();
    });
  }

  bool Transformation::is_identity() const noexcept {
    for (size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  Transformation Transformation::inverse() const {
    if (!is_bijection()) {
      throw DomainError("only a bijection has an inverse");
    }
    std::vector<Point> inv(_images.size());
    for (size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = static_cast<Point>(i);
    }
    return Transformation(std::move(inv), Unchecked{});
  }

  std::vector<Point> Transformation::image_set() const {
    std::vector<Point> result(_images);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw SizeMismatchError("cannot compose maps of degree "
                              + std::to_string(f.degree()) + " and "
                              + std::to_string(g.degree()));
    }
    std::vector<Point> images(f.degree());
    for (size_t x = 0; x < images.size(); ++x) {
      images[x] = g._images[f._images[x]];
    }
    return Transformation(std::move(images), Transformation::Unchecked{});
  }

}  // namespace partsemi
