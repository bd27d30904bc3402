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

#ifndef PARTSEMI_ERRORS_HPP_
#define PARTSEMI_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error, invalid_argument
#include <string>     // for string

namespace partsemi {

  //! Malformed text input. `token()` is the offending piece of the input.
  class ParseError : public std::invalid_argument {
   public:
    ParseError(std::string const& message, std::string token)
        : std::invalid_argument(message), _token(std::move(token)) {}

    std::string const& token() const noexcept {
      return _token;
    }

   private:
    std::string _token;
  };

  //! Two values over ground sets of different sizes were combined.
  class SizeMismatchError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! An operation was called outside its domain, e.g. a character-based
  //! predicate on a map that does not preserve the partition.
  class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! The map does not preserve the partition; `block()` is a block whose
  //! image meets two different blocks.
  class NotPreservingError : public DomainError {
   public:
    NotPreservingError(std::string const& message, size_t block)
        : DomainError(message), _block(block) {}

    size_t block() const noexcept {
      return _block;
    }

   private:
    size_t _block;
  };

  //! A resource guard (candidate count, permutation count, ...) was exceeded.
  class GuardError : public std::runtime_error {
   public:
    GuardError(std::string const& message, std::string bound)
        : std::runtime_error(message), _bound(std::move(bound)) {}

    //! Decimal string of the work estimate that exceeded the guard.
    std::string const& bound() const noexcept {
      return _bound;
    }

   private:
    std::string _bound;
  };

}  // namespace partsemi

#endif  // PARTSEMI_ERRORS_HPP_
