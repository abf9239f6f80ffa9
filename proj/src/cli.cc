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

#include "autoplex/cli.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autoplex/automata.h"
#include "autoplex/cache.h"
#include "autoplex/complexity.h"
#include "autoplex/eqrel.h"
#include "autoplex/formats.h"
#include "autoplex/pumping.h"
#include "autoplex/reduction.h"
#include "autoplex/seqwords.h"

namespace autoplex {

namespace {

// Raised for input that parses but cannot be processed.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text) || !out.flush()) {
    throw DomainError("cannot write " + path);
  }
}

Json ReadJson(const std::string& path) {
  Json j = Json::parse(ReadFile(path), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw DomainError(path + ": not valid JSON");
  return j;
}

CnfFormula ReadCnf(const std::string& path, bool pad) {
  std::istringstream in(ReadFile(path));
  return ParseDimacs(in, pad);
}

// Emits text to a file when `path` is set, else to `out`.
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

std::vector<bool> ParseAssignment(const std::string& bits) {
  std::vector<bool> value;
  for (char c : bits) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1') {
      throw DomainError("assignment must be a string of 0/1, one per variable");
    }
    value.push_back(c == '1');
  }
  return value;
}

const char* Bool(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string cache_path;
  bool no_cache = false;

  // complexity
  std::string word;
  bool nfa = false;
  bool dfa = false;
  bool partial = false;
  int alphabet = 0;
  std::string dot_path;
  bool json = false;

  // eqrel
  std::string relation_path;
  std::string engine = "merge";
  std::uint64_t budget = 0;
  std::string dfa_path;

  // reduce / compose
  std::string cnf_path;
  std::string cnf_path2;
  std::string output_path;
  std::string gadget;
  std::string assign;
  bool pad = false;
  bool sample = false;
  int k = 0;
  int l = 0;
  bool report = false;

  // thue / survey / bound
  int length = 0;
  int survey_alphabet = 2;
  std::uint64_t survey_budget = kDefaultSurveyBudget;
  long n = 0;

  // simple
  std::string eps = "1/4";

  // pump
  std::string u, v, w, x, y;
  int pumps = 0;
  int case1 = -1;
  std::vector<int> case2;
  long a = 0, b = 0, c = 0;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out) {
    std::optional<std::string> path;
    if (!opt.cache_path.empty()) {
      path = opt.cache_path;
    } else {
      path = ResultCache::PathFromEnvironment();
    }
    if (path && !opt.no_cache) cache_ = std::make_unique<ResultCache>(*path, &err);
  }

  void Complexity() {
    if (opt_.nfa && opt_.dfa) throw CLI::ValidationError("--nfa and --dfa are exclusive");
    if (opt_.partial && opt_.nfa) throw CLI::ValidationError("--partial needs --dfa");
    const Word x = Word::Parse(opt_.word, opt_.alphabet);
    CacheRequest request;
    request.word = x;
    request.measure = opt_.dfa || opt_.partial ? Measure::kDeterministic
                                               : Measure::kNondeterministic;
    request.kind = opt_.partial ? DfaKind::kPartial : DfaKind::kTotal;
    const ComplexityWitness w = CacheLookupOrSolve(request, cache_.get(), [&] {
      return request.measure == Measure::kDeterministic
                 ? DetComplexity(x, request.kind)
                 : NondetComplexity(x);
    });
    if (!opt_.dot_path.empty()) WriteFile(opt_.dot_path, ExportDot(w.witness));
    if (opt_.json) {
      out_ << WitnessToJson(w, x).dump() << "\n";
      return;
    }
    out_ << MeasureName(w.measure) << "(" << x.ToString() << ") = " << w.value;
    if (request.kind == DfaKind::kPartial) out_ << " (partial DFA)";
    out_ << "\n";
  }

  void EqrelSolve() {
    const EquivalenceRelation e = RelationOrSampleFromJson(ReadJson(opt_.relation_path));
    EqrelOptions options;
    options.budget = opt_.budget;
    if (opt_.engine == "merge") {
      options.engine = EqrelEngine::kMerge;
    } else if (opt_.engine == "sat") {
      options.engine = EqrelEngine::kSat;
    } else {
      options.engine = EqrelEngine::kExhaustive;
    }
    CacheRequest request;
    request.measure = Measure::kEquivalence;
    request.relation = e;
    const ComplexityWitness w = CacheLookupOrSolve(
        request, cache_.get(), [&] { return EqrelComplexity(e, options); });
    if (!opt_.dot_path.empty()) WriteFile(opt_.dot_path, ExportDot(w.witness));
    if (opt_.json) {
      Json j = WitnessToJson(w, std::nullopt);
      j["classes"] = e.class_count();
      out_ << j.dump() << "\n";
      return;
    }
    out_ << "AE = " << w.value << "\n";
    out_ << "classes = " << e.class_count() << "\n";
    out_ << "extra = " << w.value - e.class_count() << "\n";
  }

  void EqrelCheck() {
    const EquivalenceRelation e = RelationOrSampleFromJson(ReadJson(opt_.relation_path));
    const Automaton m = AutomatonFromJson(ReadJson(opt_.dfa_path));
    if (std::holds_alternative<Nfa>(m)) throw DomainError("coherence needs a DFA");
    if (AlphabetOf(m) != e.alphabet()) throw DomainError("alphabet mismatch");
    std::string diagnostic;
    const bool ok = std::holds_alternative<TotalDfa>(m)
                        ? Coheres(std::get<TotalDfa>(m), e,
                                  CoherenceEngine::kCharacterized, &diagnostic)
                        : Coheres(std::get<PartialDfa>(m), e,
                                  CoherenceEngine::kCharacterized, &diagnostic);
    out_ << Bool(ok) << "\n";
    if (!ok && !diagnostic.empty()) out_ << diagnostic << "\n";
  }

  void Reduce() {
    const CnfFormula phi = ReadCnf(opt_.cnf_path, opt_.pad);
    if (!opt_.assign.empty() && opt_.gadget != "benevolent") {
      throw CLI::ValidationError("--assign goes with --gadget benevolent");
    }
    std::string text;
    if (opt_.gadget.empty()) {
      text = opt_.sample ? SampleToJson(BuildSample(phi)).dump()
                         : RelationToJson(ReduceFormula(phi)).dump();
    } else if (opt_.gadget == "benevolent") {
      if (opt_.assign.empty()) throw CLI::ValidationError("--gadget benevolent needs --assign");
      text = AutomatonToJson(BenevolentAutomaton(phi, ParseAssignment(opt_.assign))).dump();
    } else {
      text = AutomatonToJson(MalevolentAutomaton(phi)).dump();
    }
    Emit(text + "\n", opt_.output_path, out_);
  }

  void Compose() {
    const CnfFormula phi1 = ReadCnf(opt_.cnf_path, opt_.pad);
    const CnfFormula phi2 = ReadCnf(opt_.cnf_path2, opt_.pad);
    if (!opt_.report) {
      const std::string text = opt_.sample
                                   ? SampleToJson(ComposeSample(phi1, phi2, opt_.k, opt_.l)).dump()
                                   : RelationToJson(ComposeBh2(phi1, phi2, opt_.k, opt_.l)).dump();
      Emit(text + "\n", opt_.output_path, out_);
      return;
    }
    const EquivalenceRelation e = ComposeBh2(phi1, phi2, opt_.k, opt_.l);
    const bool sat1 = phi1.IsSatisfiable();
    const bool sat2 = phi2.IsSatisfiable();
    const TotalDfa dfa = ComposeAutomaton(phi1, phi2, opt_.k, opt_.l);
    if (!opt_.output_path.empty()) {
      WriteFile(opt_.output_path, RelationToJson(e).dump() + "\n");
    }
    out_ << "phi1 satisfiable = " << Bool(sat1) << "\n";
    out_ << "phi2 satisfiable = " << Bool(sat2) << "\n";
    out_ << "classes = " << e.class_count() << "\n";
    out_ << "predicted extra = " << PredictedExtraStates(sat1, sat2, opt_.k, opt_.l) << "\n";
    out_ << "constructed states = " << dfa.num_states() << "\n";
    out_ << "constructed coheres = " << Bool(Coheres(dfa, e)) << "\n";
  }

  void Thue() {
    if (opt_.length < 0) throw DomainError("length must be >= 0");
    out_ << ThuePrefix(static_cast<std::size_t>(opt_.length)).ToString() << "\n";
  }

  void SquareFree() {
    out_ << Bool(IsSquareFree(Word::Parse(opt_.word, opt_.alphabet))) << "\n";
  }

  void Survey() {
    const autoplex::Survey s = RunSurvey(opt_.length, opt_.survey_alphabet, opt_.survey_budget);
    out_ << (opt_.json ? s.SummaryJson() + "\n" : s.ToTsv());
  }

  void Bound() {
    if (opt_.n < 0) throw DomainError("length must be >= 0");
    out_ << opt_.n / 2 + 1 << "\n";
  }

  void Simple() {
    const auto slash = opt_.eps.find('/');
    Rational eps{0, 1};
    try {
      if (slash == std::string::npos) {
        eps = {std::stoll(opt_.eps), 1};
      } else {
        eps = {std::stoll(opt_.eps.substr(0, slash)), std::stoll(opt_.eps.substr(slash + 1))};
      }
    } catch (const std::exception&) {
      throw CLI::ValidationError("--eps must be a fraction p/q");
    }
    out_ << Bool(SomewhatSimple(Word::Parse(opt_.word, opt_.alphabet), eps)) << "\n";
  }

  void PumpWord() { out_ << Pump(Decomposition(), opt_.pumps).ToString() << "\n"; }

  void PumpCertify() {
    const bool has1 = opt_.case1 >= 0;
    const bool has2 = !opt_.case2.empty();
    if (has1 == has2) throw CLI::ValidationError("give exactly one of --case1, --case2");
    LoopCase params;
    if (has1) {
      params = LoopCase1{opt_.case1};
    } else {
      params = LoopCase2{opt_.case2[0], opt_.case2[1], opt_.case2[2]};
    }
    const std::optional<LoopCertificate> cert = LoopUpperBound(Decomposition(), params);
    if (!cert) throw DomainError("loop automaton does not uniquely accept the pumped word");
    if (opt_.json) {
      Json j = WitnessToJson(cert->bound, cert->word);
      j["bounds_deterministic"] = cert->bounds_deterministic;
      out_ << j.dump() << "\n";
      return;
    }
    out_ << "word = " << cert->word.ToString() << "\n";
    out_ << "AN <= " << cert->bound.value << "\n";
    if (cert->bounds_deterministic) out_ << "A <= " << cert->bound.value << "\n";
  }

  void PumpSolve() {
    const auto solutions = SolveDiophantine(opt_.a, opt_.b, opt_.c);
    for (const auto& [sx, sy] : solutions) out_ << sx << " " << sy << "\n";
  }

 private:
  PumpDecomposition Decomposition() const {
    int alphabet = opt_.alphabet;
    if (alphabet <= 0) {
      alphabet = 2;
      for (const std::string* part : {&opt_.u, &opt_.v, &opt_.w, &opt_.x, &opt_.y}) {
        alphabet = std::max(alphabet, Word::Parse(*part).alphabet());
      }
    }
    return PumpDecomposition{Word::Parse(opt_.u, alphabet), Word::Parse(opt_.v, alphabet),
                             Word::Parse(opt_.w, alphabet), Word::Parse(opt_.x, alphabet),
                             Word::Parse(opt_.y, alphabet)};
  }

  const Options& opt_;
  std::ostream& out_;
  std::unique_ptr<ResultCache> cache_;
};

}  // namespace

int Dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  Options opt;
  CLI::App app{"Exact automatic complexity toolkit", "autoplex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.option_defaults()->always_capture_default();
  app.add_option("--cache", opt.cache_path,
                 "Result cache file (default: $" + std::string(kCacheEnvironmentVariable) + ")");
  app.add_flag("--no-cache", opt.no_cache, "Ignore any configured cache");

  auto add_alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", opt.alphabet, "Alphabet size (default: max digit + 1, at least 2)")
        ->check(CLI::Range(1, kMaxAlphabet));
  };

  CLI::App* complexity = app.add_subcommand("complexity", "A_N(x) or A(x) of a word");
  complexity->add_option("word", opt.word, "Word over digits 0..k-1")->required();
  complexity->add_flag("--nfa", opt.nfa, "Nondeterministic complexity A_N (default)");
  complexity->add_flag("--dfa", opt.dfa, "Deterministic complexity A");
  complexity->add_flag("--partial", opt.partial, "With --dfa: allow missing transitions");
  complexity->add_option("--dot", opt.dot_path, "Write the witness as DOT");
  complexity->add_flag("--json", opt.json, "Print the witness as JSON");
  add_alphabet(complexity);

  CLI::App* eqrel = app.add_subcommand("eqrel", "Equivalence-relation complexity A(E)");
  eqrel->require_subcommand(1);
  CLI::App* eqrel_solve = eqrel->add_subcommand("solve", "Compute A(E)");
  eqrel_solve->add_option("file", opt.relation_path, "Relation or labelled sample JSON")
      ->required();
  eqrel_solve->add_option("--engine", opt.engine, "merge, sat or exhaustive")
      ->check(CLI::IsMember({"merge", "sat", "exhaustive"}));
  eqrel_solve->add_option("--budget", opt.budget, "Search budget (0: engine default)");
  eqrel_solve->add_option("--dot", opt.dot_path, "Write the witness as DOT");
  eqrel_solve->add_flag("--json", opt.json, "Print the witness as JSON");
  CLI::App* eqrel_check = eqrel->add_subcommand("check", "Does a DFA cohere with E?");
  eqrel_check->add_option("file", opt.relation_path, "Relation or labelled sample JSON")
      ->required();
  eqrel_check->add_option("--dfa", opt.dfa_path, "Automaton JSON")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "3-CNF to equivalence relation");
  reduce->add_option("file", opt.cnf_path, "DIMACS CNF")->required();
  reduce->add_option("-o,--output", opt.output_path, "Output file (default: stdout)");
  reduce->add_option("--gadget", opt.gadget, "Emit a gadget automaton instead")
      ->check(CLI::IsMember({"benevolent", "malevolent"}));
  reduce->add_option("--assign", opt.assign, "0/1 per variable for the benevolent gadget");
  reduce->add_flag("--pad", opt.pad, "Pad short clauses by repeating a literal");
  reduce->add_flag("--sample", opt.sample, "Emit the labelled sample instead of its closure");

  CLI::App* compose = app.add_subcommand("compose", "Difference composition of two formulas");
  compose->add_option("file1", opt.cnf_path, "DIMACS CNF for phi1")->required();
  compose->add_option("file2", opt.cnf_path2, "DIMACS CNF for phi2")->required();
  compose->add_option("--k", opt.k, "Copies of phi2")->required()->check(CLI::PositiveNumber);
  compose->add_option("--l", opt.l, "Copies of phi1")->required()->check(CLI::PositiveNumber);
  compose->add_option("-o,--output", opt.output_path, "Output file (default: stdout)");
  compose->add_flag("--pad", opt.pad, "Pad short clauses by repeating a literal");
  compose->add_flag("--sample", opt.sample, "Emit the labelled sample instead of its closure");
  compose->add_flag("--report", opt.report,
                    "Print satisfiability, predicted and constructed state counts");

  CLI::App* thue = app.add_subcommand("thue", "Prefix of the square-free Thue word");
  thue->add_option("--length", opt.length, "Number of symbols")->required();

  CLI::App* squarefree = app.add_subcommand("squarefree", "Is the word square-free?");
  squarefree->add_option("word", opt.word, "Word over digits")->required();
  add_alphabet(squarefree);

  CLI::App* survey = app.add_subcommand("survey", "A_N of every word of one length");
  survey->add_option("--length", opt.length, "Word length")->required()->check(CLI::NonNegativeNumber);
  survey->add_option("--alphabet", opt.survey_alphabet, "Alphabet size")
      ->check(CLI::Range(1, kMaxAlphabet));
  survey->add_option("--budget", opt.survey_budget, "Maximum number of words");
  survey->add_flag("--json", opt.json, "Print only the JSON summary");

  CLI::App* bound = app.add_subcommand("bound", "Upper bound floor(n/2)+1 on A_N");
  bound->add_option("n", opt.n, "Word length")->required();

  CLI::App* simple = app.add_subcommand("simple", "Is A(x) < |x|^(1/2 - eps)?");
  simple->add_option("word", opt.word, "Binary word")->required();
  simple->add_option("--eps", opt.eps, "Rational p/q in (0, 1/2)");
  add_alphabet(simple);

  CLI::App* pump = app.add_subcommand("pump", "Pumping decompositions and loop automata");
  pump->require_subcommand(1);
  auto add_parts = [&](CLI::App* sub) {
    sub->add_option("--u", opt.u, "Part u");
    sub->add_option("--v", opt.v, "Part v");
    sub->add_option("--w", opt.w, "Part w");
    sub->add_option("--x", opt.x, "Part x");
    sub->add_option("--y", opt.y, "Part y");
    add_alphabet(sub);
  };
  CLI::App* pump_word = pump->add_subcommand("word", "Print u v^N w x^N y");
  add_parts(pump_word);
  pump_word->add_option("--n", opt.pumps, "N")->required()->check(CLI::NonNegativeNumber);
  CLI::App* pump_certify = pump->add_subcommand("certify", "Verified loop-automaton bound");
  add_parts(pump_certify);
  pump_certify->add_option("--case1", opt.case1, "Single loop pumped N times")
      ->check(CLI::NonNegativeNumber);
  pump_certify->add_option("--case2", opt.case2, "Two loops: a,b,i")
      ->delimiter(',')
      ->expected(3);
  pump_certify->add_flag("--json", opt.json, "Print the certificate as JSON");
  CLI::App* pump_solve = pump->add_subcommand("solve", "Nonnegative solutions of a x + b y = c");
  pump_solve->add_option("a", opt.a, "a")->required();
  pump_solve->add_option("b", opt.b, "b")->required();
  pump_solve->add_option("c", opt.c, "c")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Runner run(opt, out, err);
    if (*complexity) {
      run.Complexity();
    } else if (*eqrel_solve) {
      run.EqrelSolve();
    } else if (*eqrel_check) {
      run.EqrelCheck();
    } else if (*reduce) {
      run.Reduce();
    } else if (*compose) {
      run.Compose();
    } else if (*thue) {
      run.Thue();
    } else if (*squarefree) {
      run.SquareFree();
    } else if (*survey) {
      run.Survey();
    } else if (*bound) {
      run.Bound();
    } else if (*simple) {
      run.Simple();
    } else if (*pump_word) {
      run.PumpWord();
    } else if (*pump_certify) {
      run.PumpCertify();
    } else if (*pump_solve) {
      run.PumpSolve();
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace autoplex
