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

#include <doctest.h>

#include "autoplex/complexity.h"

namespace autoplex {
namespace {

int AN(const char* s) { return NondetComplexity(Word::Parse(s)).value; }
int A(const char* s) { return DetComplexity(Word::Parse(s)).value; }

TEST_CASE("bound b(n)") {
  CHECK(BoundB(7) == 4);
  CHECK(BoundB(0) == 1);
  CHECK(BoundB(8) == 5);
}

TEST_CASE("nondeterministic complexity examples") {
  CHECK(AN("00") == 1);
  CHECK(AN("011") == 2);
  CHECK(AN("0101") == 2);
  CHECK(AN("") == 1);
  CHECK(AN("0") == 1);
}

TEST_CASE("deterministic complexity examples") {
  CHECK(A("0") == 2);
  CHECK(A("") == 1);
  const Word x = Word::Parse("0011");
  CHECK(ExhaustiveOracle(x, OracleMode::kDeterministic, 4) == A("0011"));
}

TEST_CASE("partial DFAs save at most one state") {
  for (int n = 0; n <= 7; ++n) {
    for (const Word& x : Word::AllOfLength(n, 2)) {
      const ComplexityWitness partial = DetComplexity(x, DfaKind::kPartial);
      const int total = DetComplexity(x).value;
      CHECK(partial.value <= total);
      CHECK(partial.value >= total - 1);
      CHECK(VerifyWordWitness(partial, x));
    }
  }
}

TEST_CASE("oracle examples") {
  CHECK(ExhaustiveOracle(Word::Parse("0"), OracleMode::kDeterministic, 2) == 2);
  CHECK(ExhaustiveOracle(Word::Parse("00"), OracleMode::kNondeterministic, 1) == 1);
  CHECK_FALSE(ExhaustiveOracle(Word::Parse("01"), OracleMode::kNondeterministic, 1));
}

TEST_CASE("oracle refuses instead of truncating") {
  CHECK_THROWS_AS(
      ExhaustiveOracle(Word::Parse("01011010"), OracleMode::kDeterministic, 6, 1000),
      BudgetExceeded);
}

TEST_CASE("maximality") {
  CHECK(IsMaximal(Word::Parse("011")));
  CHECK_FALSE(IsMaximal(Word::Parse("00")));
  // The loop automaton gives A_N(010) <= 2 and one state is not enough.
  CHECK(IsMaximal(Word::Parse("010")));
}

TEST_CASE("witnesses verify and have the stated size") {
  for (int n = 0; n <= 8; ++n) {
    for (const Word& x : Word::AllOfLength(n, 2)) {
      const ComplexityWitness an = NondetComplexity(x);
      const ComplexityWitness a = DetComplexity(x);
      CHECK(an.verified);
      CHECK(a.verified);
      CHECK(VerifyWordWitness(an, x));
      CHECK(VerifyWordWitness(a, x));
      CHECK(std::holds_alternative<TotalDfa>(a.witness));
      CHECK(an.value <= a.value);
      CHECK(an.value <= BoundB(n));
    }
  }
}

TEST_CASE("solvers match the oracle on ternary words up to length 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const Word& x : Word::AllOfLength(n, 3)) {
      const int a = DetComplexity(x).value;
      const int an = NondetComplexity(x).value;
      CHECK(ExhaustiveOracle(x, OracleMode::kNondeterministic, an) == an);
      if (a <= 4) CHECK(ExhaustiveOracle(x, OracleMode::kDeterministic, a) == a);
    }
  }
}

TEST_CASE("complexity is invariant under swapping symbols") {
  for (int n = 0; n <= 8; ++n) {
    for (const Word& x : Word::AllOfLength(n, 2)) {
      std::vector<Symbol> flipped;
      for (Symbol s : x.symbols()) flipped.push_back(static_cast<Symbol>(1 - s));
      const Word y(2, flipped);
      CHECK(NondetComplexity(x).value == NondetComplexity(y).value);
      CHECK(DetComplexity(x).value == DetComplexity(y).value);
    }
  }
}

TEST_CASE("reversal preserves the nondeterministic complexity") {
  for (int n = 0; n <= 9; ++n) {
    for (const Word& x : Word::AllOfLength(n, 2)) {
      std::vector<Symbol> rev(x.symbols().rbegin(), x.symbols().rend());
      CHECK(NondetComplexity(x).value == NondetComplexity(Word(2, rev)).value);
    }
  }
}

TEST_CASE("tampered witnesses fail verification") {
  const Word x = Word::Parse("011");
  ComplexityWitness w = NondetComplexity(x);
  w.value += 1;
  CHECK_FALSE(VerifyWordWitness(w, x));
  ComplexityWitness d = DetComplexity(x);
  CHECK_FALSE(VerifyWordWitness(d, Word::Parse("010")));
  d.measure = Measure::kEquivalence;
  CHECK_FALSE(VerifyWordWitness(d, x));
}

TEST_CASE("measure names") {
  for (Measure m : {Measure::kDeterministic, Measure::kNondeterministic, Measure::kEquivalence}) {
    CHECK(MeasureFromName(MeasureName(m)) == m);
  }
  CHECK(MeasureName(Measure::kNondeterministic) == "AN");
  CHECK_THROWS(MeasureFromName("B"));
}

}  // namespace
}  // namespace autoplex
