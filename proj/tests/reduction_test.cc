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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "autoplex/eqrel.h"
#include "autoplex/reduction.h"

namespace autoplex {
namespace {

CnfLiteral Pos(int v) { return {v, false}; }
CnfLiteral Neg(int v) { return {v, true}; }

CnfFormula Sat() { return CnfFormula({{Pos(1), Pos(1), Pos(1)}}); }
CnfFormula Unsat() {
  return CnfFormula({{Pos(1), Pos(1), Pos(1)}, {Neg(1), Neg(1), Neg(1)}});
}

bool HasPair(const LabeledSample& s, const char* word, const char* label) {
  return std::any_of(s.pairs.begin(), s.pairs.end(), [&](const auto& p) {
    return p.first == Word::Parse(word, 2) && p.second == label;
  });
}

int IndexOf(const EquivalenceRelation& e, const char* word) {
  const auto& ws = e.words();
  return static_cast<int>(std::find(ws.begin(), ws.end(), Word::Parse(word, 2)) - ws.begin());
}

TEST_CASE("literal encoding") {
  CHECK(EncodeLiteral(Pos(1)).ToString() == "1000");
  CHECK(EncodeLiteral(Neg(2)).ToString() == "11010");
  CHECK(EncodeLiteral(Neg(1)).ToString() == "1010");
}

TEST_CASE("sample for one clause") {
  const LabeledSample s = BuildSample(Sat());
  CHECK(s.pairs.size() == 20);
  CHECK(HasPair(s, "11", "q0"));
  CHECK(HasPair(s, "0", "h"));
  CHECK(HasPair(s, "100010001000", "s"));
  CHECK(HasPair(s, "", "q0"));
  CHECK(HasPair(s, "1011", "r"));
  CHECK(BuildSample(Unsat()).pairs.size() == 23);
}

TEST_CASE("relation sizes") {
  CHECK(ReduceFormula(Sat()).class_count() == 9);
  const EquivalenceRelation e = ReduceFormula(Unsat());
  CHECK(e.class_count() == 10);
  CHECK(e.Equivalent(IndexOf(e, "000"), IndexOf(e, "011")));
  CHECK_FALSE(e.Equivalent(IndexOf(e, "000"), IndexOf(e, "001")));
}

TEST_CASE("gadget labels") {
  const auto labels = GadgetLabels(1);
  CHECK(labels.size() == 9);
  CHECK(labels.front() == "q0");
  CHECK(labels.back() == "s");
}

TEST_CASE("benevolent automaton") {
  const EquivalenceRelation e = ReduceFormula(Sat());
  const TotalDfa good = BenevolentAutomaton(Sat(), {true});
  CHECK(good.num_states() == 9);
  CHECK(Coheres(good, e));
  CHECK_FALSE(Coheres(BenevolentAutomaton(Sat(), {false}), e));
  CHECK_THROWS_AS(BenevolentAutomaton(Unsat(), {true}), std::invalid_argument);
}

TEST_CASE("malevolent automaton") {
  CHECK(MalevolentAutomaton(Sat()).num_states() == 10);
  const TotalDfa mal = MalevolentAutomaton(Unsat());
  CHECK(mal.num_states() == 11);
  CHECK(Coheres(mal, ReduceFormula(Unsat())));
  const State r = mal.Run(Word::Parse("0001", 2));
  CHECK(mal.Run(Word::Parse("1011", 2)) == r);
  CHECK(mal.Run(Word::Parse("11011", 2)) == r);
}

TEST_CASE("formula validation") {
  CHECK_THROWS_AS(CnfFormula({{Pos(2), Pos(1), Pos(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(CnfFormula({{Pos(0), Pos(1), Pos(1)}}), std::invalid_argument);
  CHECK(Sat().IsSatisfiable());
  CHECK_FALSE(Unsat().IsSatisfiable());
  CHECK(Unsat().SatisfiedBy({true, false}) == false);
}

TEST_CASE("dimacs") {
  std::istringstream in("c sample\np cnf 1 1\n1 1 1 0\n");
  const CnfFormula phi = ParseDimacs(in);
  CHECK(phi.clause_count() == 1);
  std::istringstream back(ToDimacs(phi));
  CHECK(ParseDimacs(back).clauses() == phi.clauses());

  std::istringstream shortc("p cnf 2 2\n1 0\n-1 -2 0\n");
  CHECK_THROWS_AS(ParseDimacs(shortc), std::invalid_argument);
  std::istringstream padded("p cnf 2 2\n1 0\n-1 -2 0\n");
  const CnfFormula p = ParseDimacs(padded, true);
  CHECK(p.clauses()[0] == Clause3{Pos(1), Pos(1), Pos(1)});
  CHECK(p.clauses()[1] == Clause3{Neg(1), Neg(2), Neg(2)});

  std::istringstream junk("p cnf 1 1\n1 x 1 0\n");
  CHECK_THROWS_AS(ParseDimacs(junk), std::invalid_argument);
  std::istringstream four("p cnf 1 1\n1 1 1 1 0\n");
  CHECK_THROWS_AS(ParseDimacs(four), std::invalid_argument);
}

// All formulas with m <= 2 clauses over variables 1..m; for m = 2 each
// clause is a sorted triple.
std::vector<CnfFormula> SmallFormulas() {
  std::vector<CnfFormula> out;
  for (int mask = 0; mask < 8; ++mask) {
    Clause3 c{CnfLiteral{1, (mask & 1) != 0}, CnfLiteral{1, (mask & 2) != 0},
              CnfLiteral{1, (mask & 4) != 0}};
    out.push_back(CnfFormula({c}));
  }
  const std::vector<CnfLiteral> lits = {Pos(1), Neg(1), Pos(2), Neg(2)};
  std::vector<Clause3> triples;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      for (int c = b; c < 4; ++c) triples.push_back({lits[a], lits[b], lits[c]});
    }
  }
  for (const Clause3& c1 : triples) {
    for (const Clause3& c2 : triples) out.push_back(CnfFormula({c1, c2}));
  }
  return out;
}

TEST_CASE("one extra state exactly when unsatisfiable") {
  int unsat = 0;
  for (const CnfFormula& phi : SmallFormulas()) {
    const EquivalenceRelation e = ReduceFormula(phi);
    const int a = EqrelComplexity(e).value;
    const bool sat = phi.IsSatisfiable();
    unsat += !sat;
    CHECK(a == e.class_count() + (sat ? 0 : 1));
    CHECK(Coheres(MalevolentAutomaton(phi), e));
  }
  CHECK(unsat > 0);
}

TEST_CASE("benevolent coherence tracks satisfaction") {
  for (const CnfFormula& phi : SmallFormulas()) {
    const int m = phi.clause_count();
    const EquivalenceRelation e = ReduceFormula(phi);
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<bool> value;
      for (int v = 0; v < m; ++v) value.push_back((mask >> v) & 1);
      CHECK(Coheres(BenevolentAutomaton(phi, value), e) == phi.SatisfiedBy(value));
    }
  }
}

TEST_CASE("composition") {
  CHECK_THROWS_AS(ComposeBh2(Sat(), Sat(), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ComposeBh2(Sat(), Sat(), 0, 1), std::invalid_argument);
  CHECK(CopyPrefix(2).ToString() == "110");
  CHECK(PredictedExtraStates(true, true, 2, 1) == 0);
  CHECK(PredictedExtraStates(true, false, 2, 1) == 2);
  CHECK(PredictedExtraStates(false, true, 2, 1) == 1);
  CHECK(PredictedExtraStates(false, false, 2, 1) == 3);

  for (int row = 0; row < 4; ++row) {
    const CnfFormula phi1 = row & 2 ? Sat() : Unsat();
    const CnfFormula phi2 = row & 1 ? Sat() : Unsat();
    const EquivalenceRelation e = ComposeBh2(phi1, phi2, 2, 1);
    const TotalDfa dfa = ComposeAutomaton(phi1, phi2, 2, 1);
    CHECK(dfa.num_states() ==
          e.class_count() + PredictedExtraStates(row & 2, row & 1, 2, 1));
    CHECK(Coheres(dfa, e));
  }
  CHECK(EqrelComplexity(ComposeBh2(Sat(), Sat(), 2, 1)).value ==
        ComposeBh2(Sat(), Sat(), 2, 1).class_count());
}

TEST_CASE("copies are renamed apart") {
  const LabeledSample s = ComposeSample(Sat(), Sat(), 2, 1);
  const EquivalenceRelation e = ClosureFromSample(s);
  // three copies of 9 classes plus routers 1^0..1^3
  CHECK(e.class_count() == 3 * 9 + 4);
}

}  // namespace
}  // namespace autoplex
