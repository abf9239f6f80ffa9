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

#include <stdexcept>

#include "autoplex/automata.h"

namespace autoplex {
namespace {

// s0:(0->s1, 1->s0), s1:(0->s0, 1->s0), accepting {s1}.
TotalDfa TwoStateDfa() {
  TotalDfa dfa(2, 2);
  dfa.set_next(0, 0, 1);
  dfa.set_next(0, 1, 0);
  dfa.set_next(1, 0, 0);
  dfa.set_next(1, 1, 0);
  dfa.set_accepting(1);
  return dfa;
}

TEST_CASE("counting accepted words") {
  TotalDfa all(1, 2);
  all.set_accepting(0);
  CHECK(CountAcceptedDfa(all, 3) == 8);

  TotalDfa none(3, 2);
  CHECK(CountAcceptedDfa(none, 5) == 0);

  CHECK(CountAcceptedDfa(TwoStateDfa(), 1) == 1);
}

TEST_CASE("counts are exact beyond 64 bits") {
  TotalDfa all(1, 2);
  all.set_accepting(0);
  BigCount expected = 1;
  expected <<= 100;
  CHECK(CountAcceptedDfa(all, 100) == expected);
}

TEST_CASE("partial runs that fall into a hole reject") {
  PartialDfa dfa(2, 2);
  dfa.set_next(0, 0, 1);
  dfa.set_accepting(1);
  CHECK(dfa.Run(Word::Parse("0")) == 1);
  CHECK_FALSE(dfa.Run(Word::Parse("1")).has_value());
  CHECK(CountAcceptedDfa(dfa, 1) == 1);
  CHECK(CountAcceptedDfa(dfa, 2) == 0);
  CHECK_FALSE(dfa.is_total());
  CHECK_THROWS_AS(TotalDfa{dfa}, std::invalid_argument);
}

TEST_CASE("nfa profile of the loop automaton for 010") {
  const Nfa nfa = HydeAutomaton(Word::Parse("010"));
  CHECK(nfa.num_states() == 2);
  CHECK(nfa.edges().size() == 3);
  const AcceptanceProfile p = NfaProfile(nfa, Word::Parse("010"));
  CHECK(p.word_count == 1);
  CHECK(p.path_count == 1);
}

TEST_CASE("nfa profile edge cases") {
  Nfa empty(1, 2);
  empty.set_accepting(0);
  const AcceptanceProfile p = NfaProfile(empty, Word::Parse("0"));
  CHECK(p.word_count == 0);
  CHECK(p.path_count == 0);

  Nfa loop(1, 2);
  loop.AddEdge(0, 0, 0);
  loop.set_accepting(0);
  const AcceptanceProfile q = NfaProfile(loop, Word::Parse("00"));
  CHECK(q.word_count == 1);
  CHECK(q.path_count == 1);
}

TEST_CASE("two paths for one word are not unique") {
  Nfa nfa(2, 2);
  nfa.AddEdge(0, 0, 0);
  nfa.AddEdge(0, 0, 1);
  nfa.AddEdge(1, 0, 1);
  nfa.set_accepting(1);
  const AcceptanceProfile p = NfaProfile(nfa, Word::Parse("00"));
  CHECK(p.word_count == 1);
  CHECK(p.path_count == 2);
  CHECK_FALSE(IsUniqueAcceptor(nfa, Word::Parse("00")));
}

TEST_CASE("unique acceptance") {
  CHECK(IsUniqueAcceptor(HydeAutomaton(Word::Parse("010")), Word::Parse("010")));
  TotalDfa all(1, 2);
  all.set_accepting(0);
  CHECK_FALSE(IsUniqueAcceptor(all, Word::Parse("01")));
  CHECK(IsUniqueAcceptor(TwoStateDfa(), Word::Parse("0")));
  CHECK_FALSE(IsUniqueAcceptor(TwoStateDfa(), Word::Parse("1")));
}

TEST_CASE("alphabet mismatch is an error") {
  CHECK_THROWS_AS(IsUniqueAcceptor(TwoStateDfa(), Word::Parse("012")),
                  std::invalid_argument);
  CHECK_THROWS_AS(NfaProfile(Nfa(1, 3), Word::Parse("01")), std::invalid_argument);
}

TEST_CASE("loop construction") {
  const Nfa one = HydeAutomaton(Word::Parse("0"));
  CHECK(one.num_states() == 1);
  CHECK(one.edges().size() == 1);
  CHECK(one.is_accepting(0));

  const Word x = Word::Parse("01100");
  const Nfa nfa = HydeAutomaton(x);
  CHECK(nfa.num_states() == 3);
  CHECK(IsUniqueAcceptor(nfa, x));

  CHECK_THROWS_AS(HydeAutomaton(Word::Parse("01")), std::invalid_argument);
}

TEST_CASE("loop construction is unique for every odd binary word up to 9") {
  for (int n = 1; n <= 9; n += 2) {
    for (const Word& x : Word::AllOfLength(n, 2)) {
      CHECK(IsUniqueAcceptor(HydeAutomaton(x), x));
    }
  }
}

TEST_CASE("dot export") {
  TotalDfa all(1, 2);
  const std::string dot = ExportDot(all);
  CHECK(dot.find("digraph dfa") == 0);
  CHECK(dot.find("q0 -> q0 [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("q0 -> q0 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("q1") == std::string::npos);

  const Automaton loop = HydeAutomaton(Word::Parse("010"));
  const std::string text = ExportDot(loop);
  CHECK(text == ExportDot(loop));
  std::size_t arrows = 0;
  for (std::size_t at = text.find("-> q"); at != std::string::npos; at = text.find("-> q", at + 1)) {
    ++arrows;
  }
  CHECK(arrows == 3 + 1);  // edges plus the start marker
  CHECK(text.find("q0 [label=\"q0\", shape=doublecircle]") != std::string::npos);
  CHECK(text.find("q1 [label=\"q1\", shape=circle]") != std::string::npos);
}

TEST_CASE("determinism of an nfa") {
  CHECK(Nfa::FromDfa(TwoStateDfa()).is_deterministic());
  CHECK_FALSE(HydeAutomaton(Word::Parse("000")).is_deterministic());
}

TEST_CASE("bad shapes and states throw") {
  CHECK_THROWS(PartialDfa(0, 2));
  CHECK_THROWS(Nfa(1, 11));
  TotalDfa dfa(2, 2);
  CHECK_THROWS_AS(dfa.set_next(0, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(dfa.set_next(0, 0, kNoState), std::invalid_argument);
}

}  // namespace
}  // namespace autoplex
