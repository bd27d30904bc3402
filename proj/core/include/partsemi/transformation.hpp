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

#ifndef PARTSEMI_TRANSFORMATION_HPP_
#define PARTSEMI_TRANSFORMATION_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <vector>            // for vector

namespace partsemi {

  //! A point of the ground set {0, ..., n-1}.
  using Point = std::uint32_t;

  //! A total selfmap on {0, ..., n-1}, stored as its image table.
  //!
  //! Maps act on the right and compose left to right, so that
  //! `x (f * g) = (x f) g`.
  class Transformation {
   public:
    //! Throws std::invalid_argument if the table is empty or has an entry
    //! outside [0, size).
    explicit Transformation(std::vector<Point> images);
    Transformation(std::initializer_list<Point> images)
        : Transformation(std::vector<Point>(images)) {}

    static Transformation identity(size_t n);
    static Transformation constant(size_t n, Point value);

    size_t degree() const noexcept {
      return _images.size();
    }

    Point operator[](Point x) const noexcept {
      return _images[x];
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    bool is_bijection() const;
    bool is_constant() const noexcept;
    bool is_identity() const noexcept;

    //! Throws DomainError if this is not a bijection.
    Transformation inverse() const;

    //! Sorted, duplicate-free image set.
    std::vector<Point> image_set() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    //! Lexicographic on image tables.
    friend std::strong_ordering operator<=>(Transformation const&,
                                            Transformation const&)
        = default;

   private:
    struct Unchecked {};
    Transformation(std::vector<Point> images, Unchecked)
        : _images(std::move(images)) {}

    friend Transformation compose(Transformation const&,
                                  Transformation const&);

    std::vector<Point> _images;
  };

  //! Left-to-right product: x (f g) = (x f) g.
  //! Throws SizeMismatchError if the degrees differ.
  Transformation compose(Transformation const& f, Transformation const& g);

  inline Transformation operator*(Transformation const& f,
                                  Transformation const& g) {
    return compose(f, g);
  }

}  // namespace partsemi

#endif  // PARTSEMI_TRANSFORMATION_HPP_
