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

#ifndef AUTOPLEX_DPLL_H_
#define AUTOPLEX_DPLL_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace autoplex {

// DIMACS-style literal: +v or -v for variable v >= 1.
using Lit = int;
using Clause = std::vector<Lit>;

struct Cnf {
  int num_variables = 0;
  std::vector<Clause> clauses;

  int NewVariable() { return ++num_variables; }
  void Add(Clause c);
  // Pairwise at-most-one.
  void AddAtMostOne(const std::vector<Lit>& lits);
};

// value[v] for v in 1..num_variables; value[0] unused.
using Assignment = std::vector<bool>;

struct DpllStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

// Plain DPLL: unit propagation over two watched literals, chronological
// backtracking, branching on the lowest-index unassigned variable with
// `true` tried first. Deterministic. Unmentioned variables come back false.
// An empty clause makes the formula unsatisfiable. Throws
// std::invalid_argument on a zero or out-of-range literal.
// With max_decisions > 0 the search throws BudgetExceeded after that many
// decisions.
std::optional<Assignment> DpllSolve(const Cnf& cnf, DpllStats* stats = nullptr,
                                    std::uint64_t max_decisions = 0);

// Convenience overload; the variable count is the largest |literal|.
std::optional<Assignment> DpllSolve(const std::vector<Clause>& clauses,
                                    DpllStats* stats = nullptr);

bool Satisfies(const std::vector<Clause>& clauses, const Assignment& value);

}  // namespace autoplex

#endif  // AUTOPLEX_DPLL_H_
