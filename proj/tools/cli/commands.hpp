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

#ifndef PARTSEMI_TOOLS_CLI_COMMANDS_HPP_
#define PARTSEMI_TOOLS_CLI_COMMANDS_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace partsemi::cli {

  //! Process exit codes.
  enum ExitCode : int {
    success     = 0,  // or predicate true
    negative    = 1,  // predicate false, "none", failed verification
    input_error = 2,
    guard_error = 3,
  };

  //! Runs one command line (without the program name), writing results to
  //! `out` and diagnostics to `err`. Returns the exit code.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace partsemi::cli

#endif  // PARTSEMI_TOOLS_CLI_COMMANDS_HPP_
