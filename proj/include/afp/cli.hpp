// Copyright 2026 the afp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AFP_CLI_HPP_
#define AFP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace afp::cli {

/// Runs the afp command line. `args` excludes the program name. Exit codes:
/// 0 success / law holds / routes agree; 1 a counterexample or disagreement
/// was found; 2 usage, parse or input validation errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace afp::cli

#endif  // AFP_CLI_HPP_
