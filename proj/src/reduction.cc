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

#include "autoplex/reduction.h"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "autoplex/dpll.h"

namespace autoplex {

namespace {

Word Ones(int i) { return Word(2, std::vector<Symbol>(i, 1)); }
Word Bits(const char* digits) { return Word::Parse(digits, 2); }

// Canonical state numbers of the gadget.
struct Gadget {
  explicit Gadget(int m)
      : m(m), h(m + 1), v_t(m + 2), v_f(m + 3), l_t(m + 4), l_f(m + 5),
        r(m + 6), s(m + 7), e(m + 8) {}
  int m, h, v_t, v_f, l_t, l_f, r, s, e;
};

// Solid edges shared by both gadgets; q_i -0-> for i >= 1 is left to the
// caller. `offset` shifts every state.
void AddSkeleton(TotalDfa& dfa, const Gadget& g, int offset) {
  auto set = [&](int from, int a, int to) { dfa.set_next(from + offset, a, to + offset); };
  for (int i = 0; i <= g.m; ++i) set(i, 1, (i + 1) % (g.m + 1));
  set(0, 0, g.h);
  set(g.h, 0, g.v_t);
  set(g.h, 1, g.v_f);
  set(g.v_t, 0, g.l_t);
  set(g.v_t, 1, g.l_f);
  set(g.v_f, 0, g.l_f);
  set(g.v_f, 1, g.l_t);
  set(g.l_t, 0, g.s);
  set(g.l_t, 1, g.r);
  set(g.l_f, 0, 0);
  set(g.l_f, 1, g.r);
  set(g.r, 0, 0);
  set(g.r, 1, 0);
  set(g.s, 0, g.s);
  set(g.s, 1, g.s);
}

void AddBenevolentChoices(TotalDfa& dfa, const Gadget& g,
                          const std::vector<bool>& assignment, int offset) {
  for (int i = 1; i <= g.m; ++i) {
    dfa.set_next(i + offset, 0, (assignment[i - 1] ? g.v_t : g.v_f) + offset);
  }
}

void AddMalevolentState(TotalDfa& dfa, const Gadget& g, int offset) {
  for (int i = 1; i <= g.m; ++i) dfa.set_next(i + offset, 0, g.e + offset);
  dfa.set_next(g.e + offset, 0, g.l_t + offset);
  dfa.set_next(g.e + offset, 1, g.l_t + offset);
}

std::optional<std::vector<bool>> SatisfyingAssignment(const CnfFormula& phi) {
  Cnf cnf;
  cnf.num_variables = phi.clause_count();
  for (const Clause3& c : phi.clauses()) {
    Clause clause;
    for (const CnfLiteral& l : c) clause.push_back(l.negated ? -l.variable : l.variable);
    cnf.Add(std::move(clause));
  }
  auto model = DpllSolve(cnf);
  if (!model) return std::nullopt;
  return std::vector<bool>(model->begin() + 1, model->end());
}

void CheckCopies(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("copy counts must be >= 1");
  if (k == l) throw std::invalid_argument("copy counts k and l must differ");
}

}  // namespace

CnfFormula::CnfFormula(std::vector<Clause3> clauses)
    : clauses_(std::move(clauses)) {
  const int m = clause_count();
  for (const Clause3& c : clauses_) {
    for (const CnfLiteral& l : c) {
      if (l.variable < 1 || l.variable > m) {
        throw std::invalid_argument(
            "variable x" + std::to_string(l.variable) +
            " outside 1.." + std::to_string(m) +
            " (variables may not exceed the clause count)");
      }
    }
  }
}

bool CnfFormula::SatisfiedBy(const std::vector<bool>& assignment) const {
  if (assignment.size() < static_cast<std::size_t>(clause_count())) {
    throw std::invalid_argument("assignment does not cover every variable");
  }
  for (const Clause3& c : clauses_) {
    bool sat = false;
    for (const CnfLiteral& l : c) sat = sat || (assignment[l.variable - 1] != l.negated);
    if (!sat) return false;
  }
  return true;
}

bool CnfFormula::IsSatisfiable() const {
  const int m = clause_count();
  if (m > 24) return SatisfyingAssignment(*this).has_value();
  std::vector<bool> assignment(m, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    for (int j = 0; j < m; ++j) assignment[j] = (bits >> j) & 1;
    if (SatisfiedBy(assignment)) return true;
  }
  return false;
}

CnfFormula ParseDimacs(std::istream& in, bool pad_short_clauses) {
  std::string line;
  int declared_vars = -1, declared_clauses = -1;
  std::vector<std::vector<int>> raw;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (!(tokens >> format >> declared_vars >> declared_clauses) ||
          format != "cnf") {
        throw std::invalid_argument("bad DIMACS header: " + line);
      }
      continue;
    }
    if (declared_vars < 0) throw std::invalid_argument("clause before header");
    std::istringstream lits(line);
    std::string tok;
    while (lits >> tok) {
      char* end = nullptr;
      long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw std::invalid_argument("bad literal '" + tok + "'");
      if (v == 0) {
        raw.push_back(current);
        current.clear();
      } else {
        if (std::labs(v) > declared_vars) {
          throw std::invalid_argument("literal " + tok + " exceeds declared variables");
        }
        current.push_back(static_cast<int>(v));
      }
    }
  }
  if (!current.empty()) throw std::invalid_argument("unterminated clause");
  if (declared_vars < 0) throw std::invalid_argument("missing DIMACS header");
  if (static_cast<int>(raw.size()) != declared_clauses) {
    throw std::invalid_argument("header declares " + std::to_string(declared_clauses) +
                                " clauses, found " + std::to_string(raw.size()));
  }
  std::vector<Clause3> clauses;
  for (std::vector<int>& c : raw) {
    if (c.empty()) throw std::invalid_argument("empty clause");
    if (c.size() < 3 && pad_short_clauses) {
      while (c.size() < 3) c.push_back(c.back());
    }
    if (c.size() != 3) {
      throw std::invalid_argument("clause with " + std::to_string(c.size()) +
                                  " literals; exactly 3 required");
    }
    Clause3 out;
    for (int i = 0; i < 3; ++i) out[i] = {std::abs(c[i]), c[i] < 0};
    clauses.push_back(out);
  }
  return CnfFormula(std::move(clauses));
}

std::string ToDimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.clause_count() << ' ' << phi.clause_count() << '\n';
  for (const Clause3& c : phi.clauses()) {
    for (const CnfLiteral& l : c) out << (l.negated ? -l.variable : l.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

Word EncodeLiteral(const CnfLiteral& literal) {
  if (literal.variable < 1) throw std::invalid_argument("variable index must be >= 1");
  Word w = Ones(literal.variable);
  w.Append(Word(2, {0, literal.negated ? 1 : 0, 0}));
  return w;
}

std::vector<std::string> GadgetLabels(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back("q" + std::to_string(i));
  for (const char* name : {"h", "v_t", "v_f", "l_t", "l_f", "r", "s"}) {
    labels.emplace_back(name);
  }
  return labels;
}

LabeledSample BuildSample(const CnfFormula& phi) {
  const int m = phi.clause_count();
  LabeledSample sample;
  sample.alphabet = 2;
  sample.Add(Ones(m + 1), "q0");
  const std::pair<const char*, const char*> fixed[] = {
      {"0", "h"},        {"00", "v_t"},     {"01", "v_f"},
      {"000", "l_t"},    {"001", "l_f"},    {"010", "l_f"},
      {"011", "l_t"},    {"0000", "s"},     {"0001", "r"},
      {"0010", "q0"},    {"0011", "r"},     {"00000", "s"},
      {"00001", "s"},    {"00010", "q0"},   {"00011", "q0"},
  };
  for (const auto& [word, label] : fixed) sample.Add(Bits(word), label);
  for (int i = 0; i <= m; ++i) sample.Add(Ones(i), "q" + std::to_string(i));
  for (int i = 1; i <= m; ++i) sample.Add(Ones(i) + Bits("011"), "r");
  for (const Clause3& c : phi.clauses()) {
    Word w(2);
    for (const CnfLiteral& l : c) w.Append(EncodeLiteral(l));
    sample.Add(std::move(w), "s");
  }
  return sample;
}

EquivalenceRelation ReduceFormula(const CnfFormula& phi) {
  return ClosureFromSample(BuildSample(phi));
}

TotalDfa BenevolentAutomaton(const CnfFormula& phi,
                             const std::vector<bool>& assignment) {
  const int m = phi.clause_count();
  if (assignment.size() < static_cast<std::size_t>(m)) {
    throw std::invalid_argument("assignment must give a value to x1..x" +
                                std::to_string(m));
  }
  Gadget g(m);
  TotalDfa dfa(m + 8, 2);
  AddSkeleton(dfa, g, 0);
  AddBenevolentChoices(dfa, g, assignment, 0);
  return dfa;
}

TotalDfa MalevolentAutomaton(const CnfFormula& phi) {
  const int m = phi.clause_count();
  Gadget g(m);
  TotalDfa dfa(m + 9, 2);
  AddSkeleton(dfa, g, 0);
  AddMalevolentState(dfa, g, 0);
  return dfa;
}

Word CopyPrefix(int i) { return Ones(i) + Word(2, {0}); }

LabeledSample ComposeSample(const CnfFormula& phi1, const CnfFormula& phi2,
                            int k, int l) {
  CheckCopies(k, l);
  const int copies = k + l;
  LabeledSample out;
  out.alphabet = 2;
  for (int i = 0; i <= copies; ++i) out.Add(Ones(i), "rt" + std::to_string(i));
  for (int i = 1; i <= copies; ++i) {
    const CnfFormula& phi = i <= l ? phi1 : phi2;
    const Word prefix = CopyPrefix(i);
    const std::string ns = "c" + std::to_string(i) + ".";
    for (const auto& [word, label] : BuildSample(phi).pairs) {
      out.Add(prefix + word, ns + label);
    }
  }
  return out;
}

EquivalenceRelation ComposeBh2(const CnfFormula& phi1, const CnfFormula& phi2,
                               int k, int l) {
  return ClosureFromSample(ComposeSample(phi1, phi2, k, l));
}

int PredictedExtraStates(bool phi1_satisfiable, bool phi2_satisfiable, int k,
                         int l) {
  return (phi1_satisfiable ? 0 : l) + (phi2_satisfiable ? 0 : k);
}

TotalDfa ComposeAutomaton(const CnfFormula& phi1, const CnfFormula& phi2,
                          int k, int l) {
  CheckCopies(k, l);
  const int copies = k + l;
  struct Part {
    const CnfFormula* phi;
    std::optional<std::vector<bool>> assignment;
    int offset;
  };
  std::vector<Part> parts;
  const auto a1 = SatisfyingAssignment(phi1);
  const auto a2 = SatisfyingAssignment(phi2);
  int states = copies + 1;
  for (int i = 1; i <= copies; ++i) {
    const CnfFormula& phi = i <= l ? phi1 : phi2;
    const auto& a = i <= l ? a1 : a2;
    parts.push_back({&phi, a, states});
    states += phi.clause_count() + (a ? 8 : 9);
  }

  TotalDfa dfa(states, 2);
  for (int i = 0; i < copies; ++i) dfa.set_next(i, 1, i + 1);
  for (int i = 1; i <= copies; ++i) dfa.set_next(i, 0, parts[i - 1].offset);
  for (const Part& part : parts) {
    Gadget g(part.phi->clause_count());
    AddSkeleton(dfa, g, part.offset);
    if (part.assignment) {
      AddBenevolentChoices(dfa, g, *part.assignment, part.offset);
    } else {
      AddMalevolentState(dfa, g, part.offset);
    }
  }
  return dfa;
}

}  // namespace autoplex
