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

// Equivalence relations on finite word sets and their automatic complexity.
//
// A DFA coheres with a relation E on S when some equivalence on its states
// induces E through the end-state map g(w) = delta(start, w). A(E) is the
// least state count of a cohering DFA.

#ifndef AUTOPLEX_EQREL_H_
#define AUTOPLEX_EQREL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoplex/automata.h"
#include "autoplex/complexity.h"
#include "autoplex/word.h"

namespace autoplex {

class EquivalenceRelation {
 public:
  // `classes` lists member indices into `words`. Every word must belong to
  // exactly one class and no class may be empty. Throws
  // std::invalid_argument otherwise, or if words repeat or do not fit the
  // alphabet.
  EquivalenceRelation(int alphabet, std::vector<Word> words,
                      const std::vector<std::vector<int>>& classes);

  // From a class index per word; indices must cover 0..c-1.
  static EquivalenceRelation FromClassIndex(int alphabet,
                                            std::vector<Word> words,
                                            std::vector<int> class_of);

  int alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  int class_of(std::size_t word_index) const { return class_of_[word_index]; }
  const std::vector<int>& class_index() const { return class_of_; }
  int class_count() const { return class_count_; }
  std::size_t size() const { return words_.size(); }
  bool Equivalent(std::size_t i, std::size_t j) const {
    return class_of_[i] == class_of_[j];
  }

  // Members of each class, ascending.
  std::vector<std::vector<int>> Classes() const;

  friend bool operator==(const EquivalenceRelation&,
                         const EquivalenceRelation&) = default;

 private:
  EquivalenceRelation() = default;

  int alphabet_ = 2;
  std::vector<Word> words_;
  std::vector<int> class_of_;
  int class_count_ = 0;
};

// Words paired with state names; equal names force equivalence.
struct LabeledSample {
  int alphabet = 2;
  std::vector<std::pair<Word, std::string>> pairs;

  void Add(Word w, std::string label) {
    pairs.emplace_back(std::move(w), std::move(label));
  }
};

// Least equivalence relating words that share a label. Words keep the order
// of their first appearance; classes are numbered by first member.
EquivalenceRelation ClosureFromSample(const LabeledSample& sample);

// Trie of all prefixes of the words of a relation, nodes numbered in
// breadth-first order (children by ascending symbol). Node 0 is the empty
// word.
class PrefixTree {
 public:
  explicit PrefixTree(const EquivalenceRelation& e);

  int num_nodes() const { return static_cast<int>(parent_.size()); }
  int alphabet() const { return alphabet_; }
  int parent(int node) const { return parent_[node]; }
  Symbol symbol(int node) const { return symbol_[node]; }
  // -1 when absent.
  int child(int node, Symbol a) const { return child_[node * alphabet_ + a]; }
  // Class of the word ending here, or -1 if the node is only a prefix.
  int word_class(int node) const { return word_class_[node]; }
  int node_of_word(std::size_t word_index) const {
    return node_of_word_[word_index];
  }

 private:
  int alphabet_;
  std::vector<int> parent_;
  std::vector<Symbol> symbol_;
  std::vector<int> child_;
  std::vector<int> word_class_;
  std::vector<int> node_of_word_;
};

// An equivalence relation on states, as a block index per state.
struct StatePartition {
  std::vector<int> block_of;
};

enum class CoherenceEngine {
  // Finest state equivalence D containing the images of E, then compare the
  // relation D induces with E.
  kDefinitional,
  // g is class-injective: words reaching the same state are equivalent.
  kCharacterized,
};

// A PartialDfa on which some word of S has no run does not cohere; the
// reason is written to `diagnostic` when given. Throws
// std::invalid_argument on alphabet mismatch.
bool Coheres(const PartialDfa& dfa, const EquivalenceRelation& e,
             CoherenceEngine engine = CoherenceEngine::kCharacterized,
             std::string* diagnostic = nullptr);
bool Coheres(const TotalDfa& dfa, const EquivalenceRelation& e,
             CoherenceEngine engine = CoherenceEngine::kCharacterized,
             std::string* diagnostic = nullptr);

// The partition D built by the definitional engine, or nullopt when some
// run is undefined.
std::optional<StatePartition> InducingPartition(const PartialDfa& dfa,
                                                const EquivalenceRelation& e);

enum class EqrelEngine { kMerge, kSat, kExhaustive };

struct EqrelOptions {
  EqrelEngine engine = EqrelEngine::kMerge;
  // Merge engine: search nodes; sat engine: DPLL decisions; exhaustive
  // engine: machines. 0 means unlimited (exhaustive defaults to 5e7).
  std::uint64_t budget = 0;
};

// Witness is a TotalDfa with value states; transitions not fixed by the
// prefixes of S are self-loops and no state is accepting. Throws
// std::invalid_argument for an empty relation, BudgetExceeded when the
// engine's budget runs out.
ComplexityWitness EqrelComplexity(const EquivalenceRelation& e,
                                  const EqrelOptions& options = {});

// Decides whether some q-state DFA coheres with e, returning one if so.
std::optional<TotalDfa> FindCoherentDfa(const EquivalenceRelation& e, int q,
                                        const EqrelOptions& options = {});

}  // namespace autoplex

#endif  // AUTOPLEX_EQREL_H_
