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

#include "autoplex/complexity.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace autoplex {

namespace {

// Counts saturate here; every search only asks "zero, one, or more".
constexpr std::uint8_t kMany = 2;

std::uint8_t AddCapped(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>(std::min<int>(kMany, a + b));
}

// Nondeterministic search. The edge set of a candidate is exactly the set of
// edges used by the run on x, and the run's last state is the only accepting
// state. Then x is uniquely accepted along a unique path iff there is exactly
// one length-n path from the start to the final state.
class NondetSearch {
 public:
  NondetSearch(const Word& x, int q)
      : x_(x),
        n_(static_cast<int>(x.size())),
        q_(q),
        k_(x.alphabet()),
        edge_uses_(static_cast<std::size_t>(q) * k_ * q, 0),
        run_(n_ + 1, 0) {}

  std::optional<Nfa> Solve() {
    if (!Extend(0, 1)) return std::nullopt;
    Nfa nfa(q_, k_);
    for (State s = 0; s < q_; ++s) {
      for (int a = 0; a < k_; ++a) {
        for (State t = 0; t < q_; ++t) {
          if (edge_uses_[Index(s, a, t)] > 0) nfa.AddEdge(s, a, t);
        }
      }
    }
    nfa.set_start(0);
    nfa.set_accepting(run_[n_]);
    return nfa;
  }

 private:
  std::size_t Index(State s, int a, State t) const {
    return (static_cast<std::size_t>(s) * k_ + a) * q_ + t;
  }

  // Paths of length `len` from state 0 to `target`, saturating at kMany.
  std::uint8_t PathsTo(int len, State target) const {
    std::vector<std::uint8_t> cur(q_, 0), next(q_);
    cur[0] = 1;
    for (int step = 0; step < len; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (State s = 0; s < q_; ++s) {
        if (cur[s] == 0) continue;
        for (int a = 0; a < k_; ++a) {
          for (State t = 0; t < q_; ++t) {
            if (edge_uses_[Index(s, a, t)] > 0) next[t] = AddCapped(next[t], cur[s]);
          }
        }
      }
      cur.swap(next);
    }
    return cur[target];
  }

  // run_[0..i] fixed; `used` states introduced so far.
  bool Extend(int i, int used) {
    if (i == n_) return used == q_ && PathsTo(n_, run_[n_]) == 1;
    const State from = run_[i];
    const int a = x_[i];
    const int limit = std::min(used, q_ - 1);
    for (State t = 0; t <= limit; ++t) {
      const int now_used = t == used ? used + 1 : used;
      // Each remaining step can introduce at most one new state.
      if (q_ - now_used > n_ - (i + 1)) continue;
      run_[i + 1] = t;
      ++edge_uses_[Index(from, a, t)];
      // Any second path into run_[i+1] extends to a second accepting path.
      if (PathsTo(i + 1, t) == 1 && Extend(i + 1, now_used)) return true;
      --edge_uses_[Index(from, a, t)];
    }
    return false;
  }

  const Word& x_;
  int n_;
  int q_;
  int k_;
  std::vector<int> edge_uses_;
  std::vector<State> run_;
};

// Deterministic search: first the transitions along the run on x, then (for
// total DFAs) the remaining slots. Adding transitions never removes an
// accepted word, so a candidate is abandoned as soon as two words of some
// length reach the run's state at that length.
class DetSearch {
 public:
  DetSearch(const Word& x, int q, DfaKind kind)
      : x_(x),
        n_(static_cast<int>(x.size())),
        q_(q),
        k_(x.alphabet()),
        kind_(kind),
        table_(static_cast<std::size_t>(q) * k_, kNoState),
        run_(n_ + 1, 0) {}

  std::optional<PartialDfa> Solve() {
    if (!Extend(0, 1)) return std::nullopt;
    PartialDfa dfa(q_, k_);
    for (State s = 0; s < q_; ++s) {
      for (int a = 0; a < k_; ++a) {
        State t = table_[s * k_ + a];
        // States past the last one introduced are unreachable.
        if (t == kNoState && kind_ == DfaKind::kTotal) t = s;
        dfa.set_next(s, a, t);
      }
    }
    dfa.set_start(0);
    dfa.set_accepting(run_[n_]);
    return dfa;
  }

 private:
  State& Slot(State s, int a) { return table_[s * k_ + a]; }

  // Words of length `len` leading from 0 to `target`, saturating at kMany.
  std::uint8_t WordsTo(int len, State target) const {
    std::vector<std::uint8_t> cur(q_, 0), next(q_);
    cur[0] = 1;
    for (int step = 0; step < len; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (State s = 0; s < q_; ++s) {
        if (cur[s] == 0) continue;
        for (int a = 0; a < k_; ++a) {
          if (State t = table_[s * k_ + a]; t != kNoState) {
            next[t] = AddCapped(next[t], cur[s]);
          }
        }
      }
      cur.swap(next);
    }
    return cur[target];
  }

  bool Extend(int i, int used) {
    if (i == n_) {
      if (kind_ == DfaKind::kPartial) return used == q_;
      return Complete(0, used);
    }
    const State from = run_[i];
    const int a = x_[i];
    if (State t = Slot(from, a); t != kNoState) {
      run_[i + 1] = t;
      return WordsTo(i + 1, t) == 1 && Extend(i + 1, used);
    }
    const int limit = std::min(used, q_ - 1);
    for (State t = 0; t <= limit; ++t) {
      const int now_used = t == used ? used + 1 : used;
      if (kind_ == DfaKind::kPartial && q_ - now_used > n_ - (i + 1)) continue;
      run_[i + 1] = t;
      Slot(from, a) = t;
      if (WordsTo(i + 1, t) == 1 && Extend(i + 1, now_used)) return true;
      Slot(from, a) = kNoState;
    }
    return false;
  }

  // Fills the first undefined slot among the introduced states, in
  // (state, symbol) order.
  bool Complete(int cursor, int used) {
    const int slots = used * k_;
    while (cursor < slots && table_[cursor] != kNoState) ++cursor;
    if (cursor == slots) return used == q_;
    const State from = cursor / k_;
    const int a = cursor % k_;
    const int limit = std::min(used, q_ - 1);
    for (State t = 0; t <= limit; ++t) {
      Slot(from, a) = t;
      if (WordsTo(n_, run_[n_]) == 1 &&
          Complete(cursor + 1, t == used ? used + 1 : used)) {
        return true;
      }
    }
    Slot(from, a) = kNoState;
    return false;
  }

  const Word& x_;
  int n_;
  int q_;
  int k_;
  DfaKind kind_;
  std::vector<State> table_;
  std::vector<State> run_;
};

// --- Oracle helpers: deliberately independent of the searches above. ---

class MachineCounter {
 public:
  explicit MachineCounter(std::uint64_t budget) : budget_(budget) {}
  void Tick() {
    if (++seen_ > budget_) {
      throw BudgetExceeded("exhaustive oracle: more than " +
                           std::to_string(budget_) + " machines");
    }
  }

 private:
  std::uint64_t budget_;
  std::uint64_t seen_ = 0;
};

// Every total table with start 0. Accepting sets are handled implicitly: x
// is uniquely accepted by some choice of F iff exactly one length-n word
// ends where x ends (take F = {that state}).
bool OracleDfaLevel(const Word& x, int q, MachineCounter& counter) {
  const int k = x.alphabet();
  const int n = static_cast<int>(x.size());
  const int slots = q * k;
  std::vector<int> table(slots, 0);
  std::vector<std::uint64_t> count(q), next(q);
  while (true) {
    counter.Tick();
    int end = 0;
    for (int i = 0; i < n; ++i) end = table[end * k + x[i]];
    std::fill(count.begin(), count.end(), 0);
    count[0] = 1;
    for (int step = 0; step < n; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (int s = 0; s < q; ++s) {
        for (int a = 0; a < k; ++a) next[table[s * k + a]] += count[s];
      }
      count.swap(next);
    }
    if (count[end] == 1) return true;

    int i = 0;
    while (i < slots && table[i] == q - 1) table[i++] = 0;
    if (i == slots) return false;
    ++table[i];
  }
}

// Every edge subset over q states with start 0, smallest subsets first.
// Singleton accepting sets suffice: if F works then so does {f} for the end
// f of x's accepting path.
bool OracleNfaLevel(const Word& x, int q, MachineCounter& counter) {
  const int k = x.alphabet();
  const int n = static_cast<int>(x.size());
  const int universe = q * k * q;

  std::vector<Word> others;
  for (Word& w : Word::AllOfLength(n, k)) {
    if (w != x) others.push_back(std::move(w));
  }

  std::vector<int> pick;
  std::vector<std::uint32_t> succ(static_cast<std::size_t>(q) * k);
  for (int size = 0; size <= universe; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      counter.Tick();
      std::fill(succ.begin(), succ.end(), 0);
      for (int e : pick) {
        const int from = e / (k * q);
        const int a = (e / q) % k;
        const int to = e % q;
        succ[from * k + a] |= std::uint32_t{1} << to;
      }
      // Paths spelling x, per end state.
      std::vector<int> paths(q, 0), nxt(q);
      paths[0] = 1;
      for (int i = 0; i < n; ++i) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (int s = 0; s < q; ++s) {
          if (paths[s] == 0) continue;
          for (int t = 0; t < q; ++t) {
            if ((succ[s * k + x[i]] >> t) & 1) nxt[t] = std::min(2, nxt[t] + paths[s]);
          }
        }
        paths.swap(nxt);
      }
      for (int f = 0; f < q; ++f) {
        if (paths[f] != 1) continue;
        bool unique = true;
        for (const Word& w : others) {
          std::uint32_t reach = 1;
          for (std::size_t i = 0; i < w.size() && reach != 0; ++i) {
            std::uint32_t step = 0;
            for (int s = 0; s < q; ++s) {
              if ((reach >> s) & 1) step |= succ[s * k + w[i]];
            }
            reach = step;
          }
          if ((reach >> f) & 1) {
            unique = false;
            break;
          }
        }
        if (unique) return true;
      }

      // Next combination of `size` out of `universe`.
      int i = size - 1;
      while (i >= 0 && pick[i] == universe - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace

std::string MeasureName(Measure m) {
  switch (m) {
    case Measure::kDeterministic:
      return "A";
    case Measure::kNondeterministic:
      return "AN";
    case Measure::kEquivalence:
      return "AE";
  }
  return "?";
}

Measure MeasureFromName(const std::string& name) {
  if (name == "A") return Measure::kDeterministic;
  if (name == "AN") return Measure::kNondeterministic;
  if (name == "AE") return Measure::kEquivalence;
  throw std::invalid_argument("unknown measure '" + name + "'");
}

int BoundB(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  return n / 2 + 1;
}

ComplexityWitness NondetComplexity(const Word& x) {
  const int bound = BoundB(static_cast<int>(x.size()));
  for (int q = 1; q <= bound; ++q) {
    if (auto nfa = NondetSearch(x, q).Solve()) {
      Automaton witness = std::move(*nfa);
      const bool ok = IsUniqueAcceptor(witness, x);
      return {Measure::kNondeterministic, q, std::move(witness), ok};
    }
  }
  throw std::logic_error("no witness within floor(n/2)+1 states for '" +
                         x.ToString() + "'");
}

ComplexityWitness DetComplexity(const Word& x, DfaKind kind) {
  // The prefix chain plus (for total DFAs) a dead state always works.
  const int limit = static_cast<int>(x.size()) + 2;
  for (int q = 1; q <= limit; ++q) {
    if (auto dfa = DetSearch(x, q, kind).Solve()) {
      Automaton witness = kind == DfaKind::kTotal
                              ? Automaton(TotalDfa(std::move(*dfa)))
                              : Automaton(std::move(*dfa));
      const bool ok = IsUniqueAcceptor(witness, x);
      return {Measure::kDeterministic, q, std::move(witness), ok};
    }
  }
  throw std::logic_error("deterministic search exhausted for '" +
                         x.ToString() + "'");
}

std::optional<int> ExhaustiveOracle(const Word& x, OracleMode mode, int q_max,
                                    std::uint64_t budget) {
  MachineCounter counter(budget);
  for (int q = 1; q <= q_max; ++q) {
    const bool found = mode == OracleMode::kDeterministic
                           ? OracleDfaLevel(x, q, counter)
                           : OracleNfaLevel(x, q, counter);
    if (found) return q;
  }
  return std::nullopt;
}

bool IsMaximal(const Word& x) {
  return NondetComplexity(x).value == BoundB(static_cast<int>(x.size()));
}

bool VerifyWordWitness(const ComplexityWitness& w, const Word& x) {
  if (NumStates(w.witness) != w.value) return false;
  if (AlphabetOf(w.witness) != x.alphabet()) return false;
  switch (w.measure) {
    case Measure::kNondeterministic:
      break;
    case Measure::kDeterministic:
      if (std::holds_alternative<Nfa>(w.witness)) return false;
      break;
    case Measure::kEquivalence:
      return false;
  }
  return IsUniqueAcceptor(w.witness, x);
}

}  // namespace autoplex
