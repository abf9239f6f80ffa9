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

// JSON forms of automata, witnesses, relations and samples.

#ifndef AUTOPLEX_FORMATS_H_
#define AUTOPLEX_FORMATS_H_

#include <optional>
#include <string>

#include <json.hpp>

#include "autoplex/automata.h"
#include "autoplex/complexity.h"
#include "autoplex/eqrel.h"

namespace autoplex {

using Json = nlohmann::ordered_json;

// {"kind":"dfa"|"nfa","states":q,"alphabet":k,"start":s,"accepting":[..],
//  "edges":[[from,symbol,to],..]} with edges sorted.
Json AutomatonToJson(const Automaton& m);
// A "dfa" comes back as a TotalDfa when every transition is present and as
// a PartialDfa otherwise. Throws std::invalid_argument on malformed input.
Automaton AutomatonFromJson(const Json& j);

// {"measure":"A"|"AN"|"AE","word":"..","value":v,"automaton":{..},
//  "verified":b}; "word" only for word measures.
Json WitnessToJson(const ComplexityWitness& w, const std::optional<Word>& x);
ComplexityWitness WitnessFromJson(const Json& j);

// {"alphabet":k,"words":[..],"classes":[[i,..],..]}
Json RelationToJson(const EquivalenceRelation& e);
EquivalenceRelation RelationFromJson(const Json& j);

// {"alphabet":k,"pairs":[["word","label"],..]}
Json SampleToJson(const LabeledSample& s);
LabeledSample SampleFromJson(const Json& j);

// Either of the two forms above; a sample is closed into its relation.
EquivalenceRelation RelationOrSampleFromJson(const Json& j);

}  // namespace autoplex

#endif  // AUTOPLEX_FORMATS_H_
