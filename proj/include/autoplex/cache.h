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

// Persistent result cache: one JSON object per line, append-only.
//
// Each entry carries the toolkit version, a SHA-256 key over the request,
// the value, the witness automaton and a digest of that automaton. Entries
// are trusted only after the witness verifies against the request again.
// Lines that fail to parse, carry another version or fail verification are
// skipped.

#ifndef AUTOPLEX_CACHE_H_
#define AUTOPLEX_CACHE_H_

#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "autoplex/complexity.h"
#include "autoplex/eqrel.h"
#include "autoplex/word.h"

namespace autoplex {

inline constexpr char kToolkitVersion[] = "1.0.0";
inline constexpr char kCacheEnvironmentVariable[] = "AUTOPLEX_CACHE";

// Lowercase hex.
std::string Sha256Hex(const std::string& data);

// What is being solved. Exactly one of word / relation is set.
struct CacheRequest {
  Measure measure = Measure::kNondeterministic;
  DfaKind kind = DfaKind::kTotal;  // deterministic measure only
  std::optional<Word> word;
  std::optional<EquivalenceRelation> relation;

  // Canonical text form; the cache key is its digest.
  std::string Canonical() const;
  // Re-checks a witness: kind, state count and unique acceptance for words;
  // a total DFA with `value` states that coheres for relations.
  bool Accepts(const ComplexityWitness& w) const;
};

class ResultCache {
 public:
  // Warnings about unreadable files or skipped lines go to `warnings`.
  ResultCache(std::string path, std::ostream* warnings);

  // Path named by AUTOPLEX_CACHE, if set and nonempty.
  static std::optional<std::string> PathFromEnvironment();

  const std::string& path() const { return path_; }

  // Latest entry for the request that still verifies.
  std::optional<ComplexityWitness> Lookup(const CacheRequest& request);
  // Appends an entry under an exclusive advisory lock. Failures only warn.
  void Store(const CacheRequest& request, const ComplexityWitness& w);

 private:
  void Warn(const std::string& message);

  std::string path_;
  std::ostream* warnings_;
};

// Returns the cached witness when one verifies, otherwise runs `solve` and
// stores its result. `cache` may be null.
ComplexityWitness CacheLookupOrSolve(
    const CacheRequest& request, ResultCache* cache,
    const std::function<ComplexityWitness()>& solve);

}  // namespace autoplex

#endif  // AUTOPLEX_CACHE_H_
