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

// Finite automata used as complexity witnesses: total and partial DFAs,
// NFAs without epsilon moves, exact acceptance counting and DOT/JSON export.

#ifndef AUTOPLEX_AUTOMATA_H_
#define AUTOPLEX_AUTOMATA_H_

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autoplex/word.h"

namespace autoplex {

using State = int;
using BigCount = boost::multiprecision::cpp_int;

inline constexpr State kNoState = -1;

// Deterministic automaton whose transition table may have holes. A run that
// hits a hole rejects.
class PartialDfa {
 public:
  PartialDfa(int states, int alphabet);

  int num_states() const { return states_; }
  int alphabet() const { return alphabet_; }
  State start() const { return start_; }
  const std::vector<bool>& accepting() const { return accepting_; }
  bool is_accepting(State s) const { return accepting_[s]; }

  // kNoState when undefined.
  State next(State s, Symbol a) const { return table_[s * alphabet_ + a]; }
  bool is_total() const;

  void set_next(State s, Symbol a, State t);
  void set_start(State s);
  void set_accepting(State s, bool accepting = true);

  // End state of the run on `w`, or nullopt if the run falls into a hole.
  std::optional<State> Run(const Word& w) const;

  friend bool operator==(const PartialDfa&, const PartialDfa&) = default;

 private:
  void CheckState(State s) const;

  int states_;
  int alphabet_;
  State start_ = 0;
  std::vector<State> table_;
  std::vector<bool> accepting_;
};

// A DFA whose transition function is total. Construction from a PartialDfa
// validates totality.
class TotalDfa {
 public:
  // All transitions initialised as self-loops.
  TotalDfa(int states, int alphabet);
  explicit TotalDfa(PartialDfa dfa);

  int num_states() const { return dfa_.num_states(); }
  int alphabet() const { return dfa_.alphabet(); }
  State start() const { return dfa_.start(); }
  const std::vector<bool>& accepting() const { return dfa_.accepting(); }
  bool is_accepting(State s) const { return dfa_.is_accepting(s); }
  State next(State s, Symbol a) const { return dfa_.next(s, a); }

  void set_next(State s, Symbol a, State t);
  void set_start(State s) { dfa_.set_start(s); }
  void set_accepting(State s, bool accepting = true) {
    dfa_.set_accepting(s, accepting);
  }

  State Run(const Word& w) const { return *dfa_.Run(w); }
  const PartialDfa& as_partial() const { return dfa_; }

  friend bool operator==(const TotalDfa&, const TotalDfa&) = default;

 private:
  PartialDfa dfa_;
};

struct Edge {
  State from;
  Symbol symbol;
  State to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Nfa {
 public:
  Nfa(int states, int alphabet);

  int num_states() const { return states_; }
  int alphabet() const { return alphabet_; }
  State start() const { return start_; }
  const std::vector<bool>& accepting() const { return accepting_; }
  bool is_accepting(State s) const { return accepting_[s]; }
  // Sorted lexicographically by (from, symbol, to).
  const std::set<Edge>& edges() const { return edges_; }

  void AddEdge(State from, Symbol symbol, State to);
  void set_start(State s);
  void set_accepting(State s, bool accepting = true);

  // True if no state has two successors on the same symbol.
  bool is_deterministic() const;

  static Nfa FromDfa(const PartialDfa& dfa);
  static Nfa FromDfa(const TotalDfa& dfa) { return FromDfa(dfa.as_partial()); }

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  void CheckState(State s) const;

  int states_;
  int alphabet_;
  State start_ = 0;
  std::set<Edge> edges_;
  std::vector<bool> accepting_;
};

using Automaton = std::variant<TotalDfa, PartialDfa, Nfa>;

int NumStates(const Automaton& m);
int AlphabetOf(const Automaton& m);

struct AcceptanceProfile {
  // Distinct words of the probed length accepted.
  BigCount word_count;
  // Accepting computation paths spelling the designated word.
  BigCount path_count;
};

// Number of words of length n accepted, by per-state counting DP.
BigCount CountAcceptedDfa(const PartialDfa& dfa, int n);
BigCount CountAcceptedDfa(const TotalDfa& dfa, int n);

// Throws std::invalid_argument on alphabet mismatch.
AcceptanceProfile NfaProfile(const Nfa& nfa, const Word& x);

// Accepts x, accepts no other word of length |x|, and (for NFAs) accepts x
// along exactly one path. Throws std::invalid_argument on alphabet mismatch.
bool IsUniqueAcceptor(const Automaton& m, const Word& x);

// The (m+1)-state NFA for a word of odd length n = 2m+1: a forward chain
// reading the first m symbols, a loop on the middle symbol, and a backward
// chain home reading the rest. Start and sole accepting state is 0.
// Throws std::invalid_argument for even lengths.
Nfa HydeAutomaton(const Word& x);

// Graphviz text. States ascending, then symbols ascending; byte-stable.
std::string ExportDot(const Automaton& m);

}  // namespace autoplex

#endif  // AUTOPLEX_AUTOMATA_H_
