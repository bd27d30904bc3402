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

#ifndef PARTSEMI_TOOLS_CLI_VERIFY_HPP_
#define PARTSEMI_TOOLS_CLI_VERIFY_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace partsemi::cli {

  //! Outcome of one family of checks in the verification harness.
  struct SuiteResult {
    std::string   name;
    std::string   claim;
    std::size_t   n_max;   // largest degree the suite ran at
    std::uint64_t checks;  // individual comparisons made
    std::uint64_t failures;
    std::string   first_failure;  // empty if none

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  //! Brute-force work of verifying every partition of every n <= n_max:
  //! the sum of B(n) n^n.
  std::uint64_t verification_work(std::size_t n_max);

  //! Runs every formula-vs-enumeration and equivalence check over all set
  //! partitions of {0, ..., n-1} for 1 <= n <= n_max. Quadratic checks
  //! (products of pairs) stop at n = 4.
  std::vector<SuiteResult> run_verification(std::size_t n_max);

}  // namespace partsemi::cli

#endif  // PARTSEMI_TOOLS_CLI_VERIFY_HPP_
