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

#include "autoplex/formats.h"

#include <stdexcept>

namespace autoplex {

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Malformed(std::string("missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    Malformed(std::string("bad '") + key + "'");
  }
}

}  // namespace

Json AutomatonToJson(const Automaton& m) {
  const bool is_nfa = std::holds_alternative<Nfa>(m);
  Nfa view = is_nfa ? std::get<Nfa>(m)
             : std::holds_alternative<TotalDfa>(m)
                 ? Nfa::FromDfa(std::get<TotalDfa>(m))
                 : Nfa::FromDfa(std::get<PartialDfa>(m));
  Json j;
  j["kind"] = is_nfa ? "nfa" : "dfa";
  j["states"] = view.num_states();
  j["alphabet"] = view.alphabet();
  j["start"] = view.start();
  j["accepting"] = Json::array();
  for (State s = 0; s < view.num_states(); ++s) {
    if (view.is_accepting(s)) j["accepting"].push_back(s);
  }
  j["edges"] = Json::array();
  for (const Edge& e : view.edges()) {
    j["edges"].push_back({e.from, static_cast<int>(e.symbol), e.to});
  }
  return j;
}

Automaton AutomatonFromJson(const Json& j) {
  const auto kind = Field<std::string>(j, "kind");
  const int states = Field<int>(j, "states");
  const int alphabet = Field<int>(j, "alphabet");
  const int start = Field<int>(j, "start");
  const auto accepting = Field<std::vector<int>>(j, "accepting");
  const auto edges = Field<std::vector<std::vector<int>>>(j, "edges");
  try {
    if (kind == "nfa") {
      Nfa nfa(states, alphabet);
      nfa.set_start(start);
      for (int s : accepting) nfa.set_accepting(s);
      for (const auto& e : edges) {
        if (e.size() != 3 || e[1] < 0) Malformed("edge must be [from,symbol,to]");
        nfa.AddEdge(e[0], static_cast<Symbol>(e[1]), e[2]);
      }
      return nfa;
    }
    if (kind != "dfa") Malformed("kind must be \"dfa\" or \"nfa\"");
    PartialDfa dfa(states, alphabet);
    dfa.set_start(start);
    for (int s : accepting) dfa.set_accepting(s);
    for (const auto& e : edges) {
      if (e.size() != 3 || e[1] < 0 || e[1] >= alphabet || e[0] < 0 || e[0] >= states) {
        Malformed("edge must be [from,symbol,to]");
      }
      if (dfa.next(e[0], static_cast<Symbol>(e[1])) != kNoState) {
        Malformed("dfa has two transitions on one symbol");
      }
      dfa.set_next(e[0], static_cast<Symbol>(e[1]), e[2]);
    }
    if (dfa.is_total()) return TotalDfa(std::move(dfa));
    return dfa;
  } catch (const std::out_of_range& err) {
    Malformed(err.what());
  }
}

Json WitnessToJson(const ComplexityWitness& w, const std::optional<Word>& x) {
  Json j;
  j["measure"] = MeasureName(w.measure);
  if (x) j["word"] = x->ToString();
  j["value"] = w.value;
  j["automaton"] = AutomatonToJson(w.witness);
  j["verified"] = w.verified;
  return j;
}

ComplexityWitness WitnessFromJson(const Json& j) {
  ComplexityWitness w{MeasureFromName(Field<std::string>(j, "measure")),
                      Field<int>(j, "value"),
                      AutomatonFromJson(Field<Json>(j, "automaton")),
                      Field<bool>(j, "verified")};
  return w;
}

Json RelationToJson(const EquivalenceRelation& e) {
  Json j;
  j["alphabet"] = e.alphabet();
  j["words"] = Json::array();
  for (const Word& w : e.words()) j["words"].push_back(w.ToString());
  j["classes"] = e.Classes();
  return j;
}

EquivalenceRelation RelationFromJson(const Json& j) {
  const int alphabet = Field<int>(j, "alphabet");
  std::vector<Word> words;
  for (const auto& s : Field<std::vector<std::string>>(j, "words")) {
    words.push_back(Word::Parse(s, alphabet));
  }
  return EquivalenceRelation(alphabet, std::move(words),
                             Field<std::vector<std::vector<int>>>(j, "classes"));
}

Json SampleToJson(const LabeledSample& s) {
  Json j;
  j["alphabet"] = s.alphabet;
  j["pairs"] = Json::array();
  for (const auto& [word, label] : s.pairs) j["pairs"].push_back({word.ToString(), label});
  return j;
}

LabeledSample SampleFromJson(const Json& j) {
  LabeledSample s;
  s.alphabet = Field<int>(j, "alphabet");
  for (const auto& p : Field<std::vector<std::vector<std::string>>>(j, "pairs")) {
    if (p.size() != 2) Malformed("pair must be [word,label]");
    s.Add(Word::Parse(p[0], s.alphabet), p[1]);
  }
  return s;
}

EquivalenceRelation RelationOrSampleFromJson(const Json& j) {
  if (j.is_object() && j.contains("pairs")) return ClosureFromSample(SampleFromJson(j));
  return RelationFromJson(j);
}

}  // namespace autoplex
