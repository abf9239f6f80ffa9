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

#ifndef AUTOPLEX_BUDGET_H_
#define AUTOPLEX_BUDGET_H_

#include <stdexcept>

namespace autoplex {

// Raised when an exhaustive enumeration or search would exceed its
// configured size. Searches never truncate silently.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace autoplex

#endif  // AUTOPLEX_BUDGET_H_
