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

// The 3-CNF to equivalence-relation reduction and its gadget automata.
//
// A formula with m clauses becomes a labelled sample over {0,1} whose labels
// are the m+8 names q0..qm, h, v_t, v_f, l_t, l_f, r, s. The relation E_phi
// it generates has A(E_phi) = |E_phi| exactly when the formula is
// satisfiable and A(E_phi) = |E_phi| + 1 otherwise.

#ifndef AUTOPLEX_REDUCTION_H_
#define AUTOPLEX_REDUCTION_H_

#include <array>
#include <istream>
#include <string>
#include <vector>

#include "autoplex/automata.h"
#include "autoplex/eqrel.h"
#include "autoplex/word.h"

namespace autoplex {

struct CnfLiteral {
  int variable;   // 1-based
  bool negated;
  friend bool operator==(const CnfLiteral&, const CnfLiteral&) = default;
};

using Clause3 = std::array<CnfLiteral, 3>;

class CnfFormula {
 public:
  // Throws std::invalid_argument unless every variable lies in 1..m, where m
  // is the number of clauses.
  explicit CnfFormula(std::vector<Clause3> clauses);

  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause3>& clauses() const { return clauses_; }

  // assignment[j-1] is the value of variable j.
  bool SatisfiedBy(const std::vector<bool>& assignment) const;
  // Brute force over all 2^m assignments (DPLL beyond 24 clauses).
  bool IsSatisfiable() const;

 private:
  std::vector<Clause3> clauses_;
};

// Reads DIMACS CNF ("p cnf V C", clauses terminated by 0, 'c' comments).
// Clauses must have exactly three literals; with pad_short_clauses, one- and
// two-literal clauses are padded by repeating their last literal. Throws
// std::invalid_argument on malformed input.
CnfFormula ParseDimacs(std::istream& in, bool pad_short_clauses = false);
std::string ToDimacs(const CnfFormula& phi);

// 1^j 0 b 0.
Word EncodeLiteral(const CnfLiteral& literal);

// Label names of the gadget states, in canonical state order: q0..qm, h, v_t,
// v_f, l_t, l_f, r, s.
std::vector<std::string> GadgetLabels(int m);

// The 17 + 3m labelled words.
LabeledSample BuildSample(const CnfFormula& phi);

// Closure of BuildSample; has m + 8 classes.
EquivalenceRelation ReduceFormula(const CnfFormula& phi);

// The (m+8)-state total DFA whose dotted edges q_i -0-> v_t / v_f follow the
// assignment. States are numbered as GadgetLabels. Throws
// std::invalid_argument if the assignment does not cover 1..m.
TotalDfa BenevolentAutomaton(const CnfFormula& phi,
                             const std::vector<bool>& assignment);

// The (m+9)-state DFA with an extra state e (last) taking every q_i -0-> e
// and e -0,1-> l_t. Coheres with E_phi whatever phi is.
TotalDfa MalevolentAutomaton(const CnfFormula& phi);

// Prefix routing word for copy i (1-based): 1^i 0.
Word CopyPrefix(int i);

// l copies of phi1's sample followed by k copies of phi2's, copy i prefixed
// with CopyPrefix(i) and with labels renamed apart, plus the router words
// 1^i (0 <= i <= k+l) each in a class of its own. Throws
// std::invalid_argument if k == l or either is < 1.
LabeledSample ComposeSample(const CnfFormula& phi1, const CnfFormula& phi2,
                            int k, int l);
EquivalenceRelation ComposeBh2(const CnfFormula& phi1, const CnfFormula& phi2,
                               int k, int l);

// States above |E| predicted for the composition: l if phi1 is
// unsatisfiable plus k if phi2 is.
int PredictedExtraStates(bool phi1_satisfiable, bool phi2_satisfiable, int k,
                         int l);

// Router chain of k+l+1 states followed by one gadget per copy: the
// benevolent automaton under a satisfying assignment when the copy's
// formula is satisfiable, the malevolent one otherwise.
TotalDfa ComposeAutomaton(const CnfFormula& phi1, const CnfFormula& phi2,
                          int k, int l);

}  // namespace autoplex

#endif  // AUTOPLEX_REDUCTION_H_
