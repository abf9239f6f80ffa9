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

// Exact automatic complexity of words.
//
// A(x) is the least number of states of a total DFA that accepts x and no
// other word of length |x|. A_N(x) is the least number of states of an NFA
// that accepts x along exactly one path and accepts no other word of length
// |x|. Both solvers search witnesses along the run on x with states numbered
// in order of first visit, so that relabelled copies are never enumerated.

#ifndef AUTOPLEX_COMPLEXITY_H_
#define AUTOPLEX_COMPLEXITY_H_

#include <cstdint>
#include <optional>
#include <string>

#include "autoplex/automata.h"
#include "autoplex/budget.h"
#include "autoplex/word.h"

namespace autoplex {

enum class Measure { kDeterministic, kNondeterministic, kEquivalence };

// "A", "AN", "AE".
std::string MeasureName(Measure m);
Measure MeasureFromName(const std::string& name);

struct ComplexityWitness {
  Measure measure;
  int value;
  Automaton witness;
  bool verified;
};

// floor(n/2) + 1.
int BoundB(int n);

ComplexityWitness NondetComplexity(const Word& x);

enum class DfaKind { kTotal, kPartial };

// With DfaKind::kPartial the witness is a PartialDfa (a missing transition
// rejects); its value is at most one below the total one.
ComplexityWitness DetComplexity(const Word& x, DfaKind kind = DfaKind::kTotal);

enum class OracleMode { kDeterministic, kNondeterministic };

// Machines examined by ExhaustiveOracle before it refuses.
inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

// Least q <= q_max such that some automaton of the given kind with q states
// (any transition table / any edge set, any accepting set) uniquely accepts
// x; nullopt if there is none. Throws BudgetExceeded when the number of
// machines to enumerate exceeds `budget`.
std::optional<int> ExhaustiveOracle(const Word& x, OracleMode mode, int q_max,
                                    std::uint64_t budget = kDefaultOracleBudget);

// A_N(x) == BoundB(|x|).
bool IsMaximal(const Word& x);

// Re-checks a stored witness against x: measure-appropriate automaton kind,
// state count equal to `value`, unique acceptance.
bool VerifyWordWitness(const ComplexityWitness& w, const Word& x);

}  // namespace autoplex

#endif  // AUTOPLEX_COMPLEXITY_H_
