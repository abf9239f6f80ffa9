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

#include "autoplex/eqrel.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "autoplex/budget.h"
#include "autoplex/dpll.h"

namespace autoplex {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// EquivalenceRelation

EquivalenceRelation::EquivalenceRelation(
    int alphabet, std::vector<Word> words,
    const std::vector<std::vector<int>>& classes) {
  std::vector<int> class_of(words.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument("empty class");
    for (int member : classes[c]) {
      if (member < 0 || static_cast<std::size_t>(member) >= words.size()) {
        throw std::invalid_argument("class member index out of range");
      }
      if (class_of[member] != -1) {
        throw std::invalid_argument("word in two classes");
      }
      class_of[member] = static_cast<int>(c);
    }
  }
  *this = FromClassIndex(alphabet, std::move(words), std::move(class_of));
}

EquivalenceRelation EquivalenceRelation::FromClassIndex(
    int alphabet, std::vector<Word> words, std::vector<int> class_of) {
  if (words.size() != class_of.size()) {
    throw std::invalid_argument("one class index per word required");
  }
  EquivalenceRelation e;
  e.alphabet_ = alphabet;
  std::set<Word> seen;
  for (Word& w : words) {
    w = w.WithAlphabet(alphabet);
    if (!seen.insert(w).second) {
      throw std::invalid_argument("repeated word '" + w.ToString() + "'");
    }
  }
  int count = 0;
  for (int c : class_of) {
    if (c < 0) throw std::invalid_argument("word without a class");
    count = std::max(count, c + 1);
  }
  std::vector<bool> used(count, false);
  for (int c : class_of) used[c] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("class indices must cover 0..c-1");
  }
  e.words_ = std::move(words);
  e.class_of_ = std::move(class_of);
  e.class_count_ = count;
  return e;
}

std::vector<std::vector<int>> EquivalenceRelation::Classes() const {
  std::vector<std::vector<int>> out(class_count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[class_of_[i]].push_back(static_cast<int>(i));
  }
  return out;
}

EquivalenceRelation ClosureFromSample(const LabeledSample& sample) {
  std::vector<Word> words;
  std::map<Word, std::size_t> index_of;
  std::vector<std::pair<std::size_t, std::string>> labeled;
  for (const auto& [word, label] : sample.pairs) {
    Word w = word.WithAlphabet(sample.alphabet);
    auto [it, inserted] = index_of.emplace(w, words.size());
    if (inserted) words.push_back(w);
    labeled.emplace_back(it->second, label);
  }

  UnionFind uf(words.size());
  std::unordered_map<std::string, std::size_t> first_with_label;
  for (const auto& [index, label] : labeled) {
    auto [it, inserted] = first_with_label.emplace(label, index);
    if (!inserted) uf.Union(it->second, index);
  }

  std::vector<int> class_of(words.size());
  std::unordered_map<std::size_t, int> class_of_root;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [it, inserted] =
        class_of_root.emplace(uf.Find(i), static_cast<int>(class_of_root.size()));
    class_of[i] = it->second;
  }
  return EquivalenceRelation::FromClassIndex(sample.alphabet, std::move(words),
                                             std::move(class_of));
}

// ---------------------------------------------------------------------------
// PrefixTree

PrefixTree::PrefixTree(const EquivalenceRelation& e) : alphabet_(e.alphabet()) {
  // Insertion order first, renumbered breadth-first below.
  std::vector<std::vector<int>> kids(1, std::vector<int>(alphabet_, -1));
  std::vector<int> cls(1, -1);
  std::vector<int> end_node(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    int node = 0;
    for (Symbol a : e.words()[i].symbols()) {
      if (kids[node][a] == -1) {
        kids[node][a] = static_cast<int>(kids.size());
        kids.emplace_back(alphabet_, -1);
        cls.push_back(-1);
      }
      node = kids[node][a];
    }
    cls[node] = e.class_of(i);
    end_node[i] = node;
  }

  const int total = static_cast<int>(kids.size());
  std::vector<int> renamed(total, -1);
  std::deque<int> queue{0};
  renamed[0] = 0;
  parent_.push_back(-1);
  symbol_.push_back(0);
  while (!queue.empty()) {
    int old = queue.front();
    queue.pop_front();
    for (int a = 0; a < alphabet_; ++a) {
      if (int kid = kids[old][a]; kid != -1) {
        renamed[kid] = static_cast<int>(parent_.size());
        parent_.push_back(renamed[old]);
        symbol_.push_back(static_cast<Symbol>(a));
        queue.push_back(kid);
      }
    }
  }
  child_.assign(static_cast<std::size_t>(total) * alphabet_, -1);
  word_class_.assign(total, -1);
  for (int old = 0; old < total; ++old) {
    word_class_[renamed[old]] = cls[old];
    for (int a = 0; a < alphabet_; ++a) {
      if (kids[old][a] != -1) child_[renamed[old] * alphabet_ + a] = renamed[kids[old][a]];
    }
  }
  node_of_word_.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) node_of_word_[i] = renamed[end_node[i]];
}

// ---------------------------------------------------------------------------
// Coherence

namespace {

std::optional<std::vector<State>> EndStates(const PartialDfa& dfa,
                                            const EquivalenceRelation& e,
                                            std::string* diagnostic) {
  if (dfa.alphabet() != e.alphabet()) {
    throw std::invalid_argument("alphabet mismatch between DFA and relation");
  }
  std::vector<State> g(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::optional<State> end = dfa.Run(e.words()[i]);
    if (!end) {
      if (diagnostic) {
        *diagnostic = "run on '" + e.words()[i].ToString() + "' is undefined";
      }
      return std::nullopt;
    }
    g[i] = *end;
  }
  return g;
}

}  // namespace

std::optional<StatePartition> InducingPartition(const PartialDfa& dfa,
                                                const EquivalenceRelation& e) {
  auto g = EndStates(dfa, e, nullptr);
  if (!g) return std::nullopt;
  UnionFind uf(dfa.num_states());
  std::vector<int> representative(e.class_count(), -1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    int& rep = representative[e.class_of(i)];
    if (rep == -1) {
      rep = (*g)[i];
    } else {
      uf.Union(rep, (*g)[i]);
    }
  }
  StatePartition d;
  d.block_of.resize(dfa.num_states());
  for (State s = 0; s < dfa.num_states(); ++s) {
    d.block_of[s] = static_cast<int>(uf.Find(s));
  }
  return d;
}

bool Coheres(const PartialDfa& dfa, const EquivalenceRelation& e,
             CoherenceEngine engine, std::string* diagnostic) {
  auto g = EndStates(dfa, e, diagnostic);
  if (!g) return false;

  if (engine == CoherenceEngine::kCharacterized) {
    std::vector<int> class_at(dfa.num_states(), -1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      int& c = class_at[(*g)[i]];
      if (c != -1 && c != e.class_of(i)) {
        if (diagnostic) {
          *diagnostic = "inequivalent words share state " +
                        std::to_string((*g)[i]);
        }
        return false;
      }
      c = e.class_of(i);
    }
    return true;
  }

  StatePartition d = *InducingPartition(dfa, e);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const bool related = d.block_of[(*g)[i]] == d.block_of[(*g)[j]];
      if (related != e.Equivalent(i, j)) {
        if (diagnostic) {
          *diagnostic = "induced relation differs on ('" +
                        e.words()[i].ToString() + "', '" +
                        e.words()[j].ToString() + "')";
        }
        return false;
      }
    }
  }
  return true;
}

bool Coheres(const TotalDfa& dfa, const EquivalenceRelation& e,
             CoherenceEngine engine, std::string* diagnostic) {
  return Coheres(dfa.as_partial(), e, engine, diagnostic);
}

// ---------------------------------------------------------------------------
// Solvers

namespace {

TotalDfa WitnessFromNodeStates(const PrefixTree& tree,
                               const std::vector<State>& node_state, int q) {
  TotalDfa dfa(q, tree.alphabet());
  for (int v = 1; v < tree.num_nodes(); ++v) {
    dfa.set_next(node_state[tree.parent(v)], tree.symbol(v), node_state[v]);
  }
  return dfa;
}

// Places prefix-tree nodes into states. Placing a node pulls every child
// whose transition is already fixed into place with it, and fixing a
// transition places every node waiting on it, so each branch point is a
// genuinely open transition. The open transition with the fewest targets
// that survive propagation is branched on; targets are the states
// introduced so far and the next fresh one. A state may only hold words of one class. All changes go
// through a trail and are undone on backtrack.
class MergeSearch {
 public:
  MergeSearch(const EquivalenceRelation& e, const PrefixTree& tree, int q,
              std::uint64_t budget)
      : tree_(tree),
        q_(q),
        k_(tree.alphabet()),
        budget_(budget),
        node_state_(tree.num_nodes(), kNoState),
        trans_(static_cast<std::size_t>(q) * k_, kNoState),
        waiting_(static_cast<std::size_t>(q) * k_),
        owner_(q, -1),
        states_of_class_(e.class_count(), 0),
        classless_(e.class_count()) {}

  std::optional<TotalDfa> Solve() {
    if (!Place(0, 0)) return std::nullopt;
    if (!Branch(1)) return std::nullopt;
    return WitnessFromNodeStates(tree_, node_state_, q_);
  }

 private:
  enum class Undo { kNode, kTrans, kOwner, kWait };
  struct Entry {
    Undo kind;
    int index;
  };

  std::size_t Slot(State s, int a) const {
    return static_cast<std::size_t>(s) * k_ + a;
  }

  bool Place(int v, State s) {
    node_state_[v] = s;
    trail_.push_back({Undo::kNode, v});
    if (const int c = tree_.word_class(v); c >= 0) {
      if (owner_[s] == -1) {
        owner_[s] = c;
        ++owned_;
        if (states_of_class_[c]++ == 0) --classless_;
        trail_.push_back({Undo::kOwner, s});
        if (classless_ > q_ - owned_) return false;
      } else if (owner_[s] != c) {
        return false;
      }
    }
    for (int a = 0; a < k_; ++a) {
      const int kid = tree_.child(v, a);
      if (kid < 0) continue;
      const std::size_t slot = Slot(s, a);
      if (trans_[slot] != kNoState) {
        if (!Place(kid, trans_[slot])) return false;
      } else {
        waiting_[slot].push_back(kid);
        trail_.push_back({Undo::kWait, static_cast<int>(slot)});
      }
    }
    return true;
  }

  bool Fix(std::size_t slot, State t) {
    trans_[slot] = t;
    trail_.push_back({Undo::kTrans, static_cast<int>(slot)});
    // Placing waiting nodes only appends to other slots' lists.
    for (std::size_t i = 0; i < waiting_[slot].size(); ++i) {
      if (!Place(waiting_[slot][i], t)) return false;
    }
    return true;
  }

  void UndoTo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Entry e = trail_.back();
      trail_.pop_back();
      switch (e.kind) {
        case Undo::kNode:
          node_state_[e.index] = kNoState;
          break;
        case Undo::kTrans:
          trans_[e.index] = kNoState;
          break;
        case Undo::kOwner: {
          const int c = owner_[e.index];
          owner_[e.index] = -1;
          --owned_;
          if (--states_of_class_[c] == 0) ++classless_;
          break;
        }
        case Undo::kWait:
          waiting_[e.index].pop_back();
          break;
      }
    }
  }

  // Targets for `slot` that survive propagation, ascending.
  std::vector<State> Viable(std::size_t slot, int used) {
    std::vector<State> out;
    const int limit = std::min(used, q_ - 1);
    for (State t = 0; t <= limit; ++t) {
      const std::size_t mark = trail_.size();
      if (Fix(slot, t)) out.push_back(t);
      UndoTo(mark);
    }
    return out;
  }

  bool Branch(int used) {
    if (budget_ != 0 && ++steps_ > budget_) {
      throw BudgetExceeded("merge search: node budget of " +
                           std::to_string(budget_) + " exhausted");
    }
    // Most constrained open transition; ties go to the earliest waiting node.
    std::size_t best = trans_.size();
    int best_node = tree_.num_nodes();
    std::vector<State> best_targets;
    for (std::size_t slot = 0; slot < trans_.size(); ++slot) {
      if (trans_[slot] != kNoState || waiting_[slot].empty()) continue;
      const int first = *std::min_element(waiting_[slot].begin(), waiting_[slot].end());
      std::vector<State> targets = Viable(slot, used);
      if (targets.empty()) return false;
      if (best == trans_.size() || targets.size() < best_targets.size() ||
          (targets.size() == best_targets.size() && first < best_node)) {
        best = slot;
        best_node = first;
        best_targets = std::move(targets);
      }
    }
    if (best == trans_.size()) return true;  // every node placed

    for (State t : best_targets) {
      const std::size_t mark = trail_.size();
      if (Fix(best, t) && Branch(t == used ? used + 1 : used)) return true;
      UndoTo(mark);
    }
    return false;
  }

  const PrefixTree& tree_;
  int q_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<State> node_state_;
  std::vector<State> trans_;
  std::vector<std::vector<int>> waiting_;
  std::vector<int> owner_;
  std::vector<int> states_of_class_;
  int classless_;
  int owned_ = 0;
  std::vector<Entry> trail_;
};

// Node-to-state assignment as CNF. Nodes may only use states numbered at
// most their breadth-first index, which any relabelling by first use meets.
std::optional<TotalDfa> SatSearch(const EquivalenceRelation& e,
                                  const PrefixTree& tree, int q,
                                  std::uint64_t budget) {
  const int t = tree.num_nodes();
  const int k = tree.alphabet();
  Cnf cnf;
  auto top = [q](int v) { return std::min(v, q - 1); };

  std::vector<std::vector<int>> x(t);
  for (int v = 0; v < t; ++v) {
    for (int i = 0; i <= top(v); ++i) x[v].push_back(cnf.NewVariable());
  }
  std::vector<int> y(static_cast<std::size_t>(q) * k * q);
  for (int& var : y) var = cnf.NewVariable();
  auto Y = [&](int i, int a, int j) { return y[(static_cast<std::size_t>(i) * k + a) * q + j]; };
  std::vector<int> z(static_cast<std::size_t>(q) * e.class_count());
  for (int& var : z) var = cnf.NewVariable();
  auto Z = [&](int i, int c) { return z[static_cast<std::size_t>(i) * e.class_count() + c]; };

  cnf.Add({x[0][0]});
  for (int v = 0; v < t; ++v) {
    cnf.Add(Clause(x[v].begin(), x[v].end()));
    cnf.AddAtMostOne(x[v]);
  }
  for (int i = 0; i < q; ++i) {
    for (int a = 0; a < k; ++a) {
      std::vector<Lit> row;
      for (int j = 0; j < q; ++j) row.push_back(Y(i, a, j));
      cnf.AddAtMostOne(row);
    }
  }
  for (int v = 1; v < t; ++v) {
    const int p = tree.parent(v);
    const int a = tree.symbol(v);
    for (int i = 0; i <= top(p); ++i) {
      for (int j = 0; j < q; ++j) {
        if (j <= top(v)) {
          cnf.Add({-x[p][i], -x[v][j], Y(i, a, j)});
          cnf.Add({-x[p][i], -Y(i, a, j), x[v][j]});
        } else {
          cnf.Add({-x[p][i], -Y(i, a, j)});
        }
      }
    }
  }
  for (int v = 0; v < t; ++v) {
    if (int c = tree.word_class(v); c >= 0) {
      for (int i = 0; i <= top(v); ++i) cnf.Add({-x[v][i], Z(i, c)});
    }
  }
  for (int i = 0; i < q; ++i) {
    std::vector<Lit> row;
    for (int c = 0; c < e.class_count(); ++c) row.push_back(Z(i, c));
    cnf.AddAtMostOne(row);
  }

  auto model = DpllSolve(cnf, nullptr, budget);
  if (!model) return std::nullopt;
  std::vector<State> node_state(t, kNoState);
  for (int v = 0; v < t; ++v) {
    for (int i = 0; i <= top(v); ++i) {
      if ((*model)[x[v][i]]) node_state[v] = i;
    }
  }
  return WitnessFromNodeStates(tree, node_state, q);
}

// Every total table with start 0, checked with the definitional engine.
std::optional<TotalDfa> ExhaustiveSearch(const EquivalenceRelation& e, int q,
                                         std::uint64_t budget,
                                         std::uint64_t& seen) {
  const int k = e.alphabet();
  const int slots = q * k;
  std::vector<State> table(slots, 0);
  while (true) {
    if (++seen > budget) {
      throw BudgetExceeded("exhaustive eqrel search: more than " +
                           std::to_string(budget) + " machines");
    }
    TotalDfa dfa(q, k);
    for (int i = 0; i < slots; ++i) dfa.set_next(i / k, i % k, table[i]);
    if (Coheres(dfa, e, CoherenceEngine::kDefinitional)) return dfa;
    int i = 0;
    while (i < slots && table[i] == q - 1) table[i++] = 0;
    if (i == slots) return std::nullopt;
    ++table[i];
  }
}

constexpr std::uint64_t kDefaultExhaustiveBudget = 50'000'000;

}  // namespace

std::optional<TotalDfa> FindCoherentDfa(const EquivalenceRelation& e, int q,
                                        const EqrelOptions& options) {
  if (q < 1) return std::nullopt;
  PrefixTree tree(e);
  switch (options.engine) {
    case EqrelEngine::kMerge:
      return MergeSearch(e, tree, q, options.budget).Solve();
    case EqrelEngine::kSat:
      return SatSearch(e, tree, q, options.budget);
    case EqrelEngine::kExhaustive: {
      std::uint64_t seen = 0;
      return ExhaustiveSearch(
          e, q, options.budget ? options.budget : kDefaultExhaustiveBudget, seen);
    }
  }
  return std::nullopt;
}

ComplexityWitness EqrelComplexity(const EquivalenceRelation& e,
                                  const EqrelOptions& options) {
  if (e.size() == 0) throw std::invalid_argument("empty relation");
  PrefixTree tree(e);
  std::uint64_t seen = 0;
  const std::uint64_t exhaustive_budget =
      options.budget ? options.budget : kDefaultExhaustiveBudget;
  // One state per prefix-tree node always coheres.
  for (int q = e.class_count(); q <= tree.num_nodes(); ++q) {
    std::optional<TotalDfa> dfa;
    switch (options.engine) {
      case EqrelEngine::kMerge:
        dfa = MergeSearch(e, tree, q, options.budget).Solve();
        break;
      case EqrelEngine::kSat:
        dfa = SatSearch(e, tree, q, options.budget);
        break;
      case EqrelEngine::kExhaustive:
        dfa = ExhaustiveSearch(e, q, exhaustive_budget, seen);
        break;
    }
    if (dfa) {
      const bool ok = Coheres(*dfa, e, CoherenceEngine::kDefinitional);
      return {Measure::kEquivalence, q, Automaton(std::move(*dfa)), ok};
    }
  }
  throw std::logic_error("prefix-tree automaton failed to cohere");
}

}  // namespace autoplex
