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

#include "autoplex/automata.h"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace autoplex {

namespace {

void CheckShape(int states, int alphabet) {
  if (states < 1) throw std::invalid_argument("automaton needs >= 1 state");
  if (alphabet < 1 || alphabet > kMaxAlphabet) {
    throw std::invalid_argument("bad alphabet size");
  }
}

void CheckAlphabetMatch(int automaton_alphabet, const Word& x) {
  if (automaton_alphabet != x.alphabet()) {
    throw std::invalid_argument(
        "alphabet mismatch: automaton has " +
        std::to_string(automaton_alphabet) + " symbols, word '" +
        x.ToString() + "' has " + std::to_string(x.alphabet()));
  }
}

// Set of NFA states as a little bitset, usable as a map key.
using StateSet = std::vector<std::uint64_t>;

void Insert(StateSet& set, State s) { set[s / 64] |= std::uint64_t{1} << (s % 64); }
bool Contains(const StateSet& set, State s) {
  return (set[s / 64] >> (s % 64)) & 1;
}
bool IsEmpty(const StateSet& set) {
  for (auto w : set) {
    if (w != 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// PartialDfa

PartialDfa::PartialDfa(int states, int alphabet)
    : states_(states), alphabet_(alphabet) {
  CheckShape(states, alphabet);
  table_.assign(static_cast<std::size_t>(states) * alphabet, kNoState);
  accepting_.assign(states, false);
}

void PartialDfa::CheckState(State s) const {
  if (s < 0 || s >= states_) {
    throw std::out_of_range("state " + std::to_string(s) + " out of range");
  }
}

bool PartialDfa::is_total() const {
  for (State t : table_) {
    if (t == kNoState) return false;
  }
  return true;
}

void PartialDfa::set_next(State s, Symbol a, State t) {
  CheckState(s);
  if (t != kNoState) CheckState(t);
  if (a >= alphabet_) throw std::out_of_range("symbol out of range");
  table_[s * alphabet_ + a] = t;
}

void PartialDfa::set_start(State s) {
  CheckState(s);
  start_ = s;
}

void PartialDfa::set_accepting(State s, bool accepting) {
  CheckState(s);
  accepting_[s] = accepting;
}

std::optional<State> PartialDfa::Run(const Word& w) const {
  State s = start_;
  for (Symbol a : w.symbols()) {
    if (a >= alphabet_) return std::nullopt;
    s = next(s, a);
    if (s == kNoState) return std::nullopt;
  }
  return s;
}

// ---------------------------------------------------------------------------
// TotalDfa

TotalDfa::TotalDfa(int states, int alphabet) : dfa_(states, alphabet) {
  for (State s = 0; s < states; ++s) {
    for (int a = 0; a < alphabet; ++a) dfa_.set_next(s, a, s);
  }
}

TotalDfa::TotalDfa(PartialDfa dfa) : dfa_(std::move(dfa)) {
  if (!dfa_.is_total()) {
    throw std::invalid_argument("transition table is not total");
  }
}

void TotalDfa::set_next(State s, Symbol a, State t) {
  if (t == kNoState) throw std::invalid_argument("total DFA needs a target");
  dfa_.set_next(s, a, t);
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(int states, int alphabet) : states_(states), alphabet_(alphabet) {
  CheckShape(states, alphabet);
  accepting_.assign(states, false);
}

void Nfa::CheckState(State s) const {
  if (s < 0 || s >= states_) {
    throw std::out_of_range("state " + std::to_string(s) + " out of range");
  }
}

void Nfa::AddEdge(State from, Symbol symbol, State to) {
  CheckState(from);
  CheckState(to);
  if (symbol >= alphabet_) throw std::out_of_range("symbol out of range");
  edges_.insert(Edge{from, symbol, to});
}

void Nfa::set_start(State s) {
  CheckState(s);
  start_ = s;
}

void Nfa::set_accepting(State s, bool accepting) {
  CheckState(s);
  accepting_[s] = accepting;
}

bool Nfa::is_deterministic() const {
  const Edge* prev = nullptr;
  for (const Edge& e : edges_) {
    if (prev != nullptr && prev->from == e.from && prev->symbol == e.symbol) {
      return false;
    }
    prev = &e;
  }
  return true;
}

Nfa Nfa::FromDfa(const PartialDfa& dfa) {
  Nfa nfa(dfa.num_states(), dfa.alphabet());
  nfa.set_start(dfa.start());
  for (State s = 0; s < dfa.num_states(); ++s) {
    nfa.set_accepting(s, dfa.is_accepting(s));
    for (int a = 0; a < dfa.alphabet(); ++a) {
      if (State t = dfa.next(s, a); t != kNoState) nfa.AddEdge(s, a, t);
    }
  }
  return nfa;
}

int NumStates(const Automaton& m) {
  return std::visit([](const auto& a) { return a.num_states(); }, m);
}

int AlphabetOf(const Automaton& m) {
  return std::visit([](const auto& a) { return a.alphabet(); }, m);
}

// ---------------------------------------------------------------------------
// Counting

BigCount CountAcceptedDfa(const PartialDfa& dfa, int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<BigCount> count(dfa.num_states()), next(dfa.num_states());
  count[dfa.start()] = 1;
  for (int step = 0; step < n; ++step) {
    for (auto& c : next) c = 0;
    for (State s = 0; s < dfa.num_states(); ++s) {
      if (count[s] == 0) continue;
      for (int a = 0; a < dfa.alphabet(); ++a) {
        if (State t = dfa.next(s, a); t != kNoState) next[t] += count[s];
      }
    }
    count.swap(next);
  }
  BigCount total = 0;
  for (State s = 0; s < dfa.num_states(); ++s) {
    if (dfa.is_accepting(s)) total += count[s];
  }
  return total;
}

BigCount CountAcceptedDfa(const TotalDfa& dfa, int n) {
  return CountAcceptedDfa(dfa.as_partial(), n);
}

AcceptanceProfile NfaProfile(const Nfa& nfa, const Word& x) {
  CheckAlphabetMatch(nfa.alphabet(), x);
  const int q = nfa.num_states();
  const int n = static_cast<int>(x.size());

  // successors[s][a] as a state set.
  const std::size_t blocks = (q + 63) / 64;
  std::vector<std::vector<StateSet>> successors(
      q, std::vector<StateSet>(nfa.alphabet(), StateSet(blocks, 0)));
  for (const Edge& e : nfa.edges()) Insert(successors[e.from][e.symbol], e.to);

  AcceptanceProfile profile;

  // Words: count length-n words by the subset of states they reach.
  std::map<StateSet, BigCount> by_subset;
  StateSet init(blocks, 0);
  Insert(init, nfa.start());
  by_subset[init] = 1;
  for (int step = 0; step < n; ++step) {
    std::map<StateSet, BigCount> next;
    for (const auto& [subset, count] : by_subset) {
      for (int a = 0; a < nfa.alphabet(); ++a) {
        StateSet image(blocks, 0);
        for (State s = 0; s < q; ++s) {
          if (!Contains(subset, s)) continue;
          for (std::size_t b = 0; b < blocks; ++b) image[b] |= successors[s][a][b];
        }
        if (!IsEmpty(image)) next[image] += count;
      }
    }
    by_subset.swap(next);
  }
  for (const auto& [subset, count] : by_subset) {
    for (State s = 0; s < q; ++s) {
      if (nfa.is_accepting(s) && Contains(subset, s)) {
        profile.word_count += count;
        break;
      }
    }
  }

  // Paths spelling x.
  std::vector<BigCount> paths(q), next(q);
  paths[nfa.start()] = 1;
  for (int i = 0; i < n; ++i) {
    for (auto& c : next) c = 0;
    for (const Edge& e : nfa.edges()) {
      if (e.symbol == x[i] && paths[e.from] != 0) next[e.to] += paths[e.from];
    }
    paths.swap(next);
  }
  for (State s = 0; s < q; ++s) {
    if (nfa.is_accepting(s)) profile.path_count += paths[s];
  }
  return profile;
}

bool IsUniqueAcceptor(const Automaton& m, const Word& x) {
  CheckAlphabetMatch(AlphabetOf(m), x);
  const int n = static_cast<int>(x.size());
  if (const auto* nfa = std::get_if<Nfa>(&m)) {
    AcceptanceProfile p = NfaProfile(*nfa, x);
    return p.word_count == 1 && p.path_count == 1;
  }
  const PartialDfa& dfa = std::holds_alternative<TotalDfa>(m)
                              ? std::get<TotalDfa>(m).as_partial()
                              : std::get<PartialDfa>(m);
  std::optional<State> end = dfa.Run(x);
  if (!end || !dfa.is_accepting(*end)) return false;
  return CountAcceptedDfa(dfa, n) == 1;
}

Nfa HydeAutomaton(const Word& x) {
  const int n = static_cast<int>(x.size());
  if (n % 2 == 0) {
    throw std::invalid_argument("loop construction needs an odd-length word");
  }
  const int m = n / 2;
  Nfa nfa(m + 1, x.alphabet());
  for (int i = 0; i < m; ++i) nfa.AddEdge(i, x[i], i + 1);
  nfa.AddEdge(m, x[m], m);
  for (int j = 0; j < m; ++j) nfa.AddEdge(m - j, x[m + 1 + j], m - j - 1);
  nfa.set_start(0);
  nfa.set_accepting(0);
  return nfa;
}

// ---------------------------------------------------------------------------
// DOT

std::string ExportDot(const Automaton& m) {
  const bool is_nfa = std::holds_alternative<Nfa>(m);
  Nfa view = is_nfa ? std::get<Nfa>(m)
             : std::holds_alternative<TotalDfa>(m)
                 ? Nfa::FromDfa(std::get<TotalDfa>(m))
                 : Nfa::FromDfa(std::get<PartialDfa>(m));

  std::ostringstream out;
  out << "digraph " << (is_nfa ? "nfa" : "dfa") << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (State s = 0; s < view.num_states(); ++s) {
    out << "  q" << s << " [label=\"q" << s << "\", shape="
        << (view.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> q" << view.start() << ";\n";
  for (const Edge& e : view.edges()) {
    out << "  q" << e.from << " -> q" << e.to << " [label=\""
        << static_cast<int>(e.symbol) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace autoplex
