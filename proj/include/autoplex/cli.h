// Copyright 2026 The autoplex Authors
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

#ifndef AUTOPLEX_CLI_H_
#define AUTOPLEX_CLI_H_

#include <ostream>

namespace autoplex {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs the `autoplex` command line and returns its exit status: 0 on
// success, 1 when the input is well formed but cannot be processed (bad
// word, malformed file, exhausted budget), 2 on usage errors.
int Dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace autoplex

#endif  // AUTOPLEX_CLI_H_
