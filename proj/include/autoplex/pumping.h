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

// Word surgery around pumping decompositions s = uvwxy and automata that
// certify upper bounds on the complexity of pumped words.

#ifndef AUTOPLEX_PUMPING_H_
#define AUTOPLEX_PUMPING_H_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "autoplex/automata.h"
#include "autoplex/complexity.h"
#include "autoplex/word.h"

namespace autoplex {

struct PumpDecomposition {
  Word u, v, w, x, y;

  // Throws std::invalid_argument if |vx| = 0 or the parts use different
  // alphabets; with max_window > 0 also checks |vwx| <= max_window.
  void Validate(std::size_t max_window = 0) const;
  int alphabet() const { return u.alphabet(); }
};

// u v^N w x^N y.
Word Pump(const PumpDecomposition& d, int n);

// All nonnegative (x, y) with a x + b y = c, ascending in x. Throws
// std::invalid_argument unless a, b >= 1 and c >= 0.
std::vector<std::pair<long, long>> SolveDiophantine(long a, long b, long c);

// A single loop on the longer of v and x, pumped N times; the other parts
// are straight chains.
struct LoopCase1 {
  int n;
};

// |v| = |x| = d: a loop reading v^a, then a straggling chain v^i, the chain
// w, a loop reading x^b and the chain y. The certified word is the pump
// with N = b*i.
struct LoopCase2 {
  int a;
  int b;
  int i;
};

using LoopCase = std::variant<LoopCase1, LoopCase2>;

struct LoopCertificate {
  Word word;
  ComplexityWitness bound;   // measure A_N
  // The automaton is a total DFA as well, so it bounds A too.
  bool bounds_deterministic;
};

// Builds the loop automaton and verifies that it uniquely accepts the pumped
// word; nullopt when verification fails. Throws std::invalid_argument when
// the case's preconditions do not hold (Case 1: |v| != |x|; Case 2: |v| =
// |x| > 0, gcd(a,b) = 1, a > i >= 1).
std::optional<LoopCertificate> LoopUpperBound(const PumpDecomposition& d,
                                              const LoopCase& params);

// The unverified automaton behind LoopUpperBound, and the word it targets.
std::pair<Nfa, Word> BuildLoopAutomaton(const PumpDecomposition& d,
                                        const LoopCase& params);

}  // namespace autoplex

#endif  // AUTOPLEX_PUMPING_H_
