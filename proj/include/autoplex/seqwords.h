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

#ifndef AUTOPLEX_SEQWORDS_H_
#define AUTOPLEX_SEQWORDS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "autoplex/word.h"

namespace autoplex {

// A homomorphism of free monoids given by the image of each source symbol.
class Morphism {
 public:
  // images[a] is the image of symbol a; all images share one target
  // alphabet.
  explicit Morphism(std::vector<Word> images);

  int source_alphabet() const { return static_cast<int>(images_.size()); }
  int target_alphabet() const { return target_alphabet_; }
  const Word& image(Symbol a) const { return images_[a]; }

  Word Apply(const Word& w) const;

  bool IsUniform() const;
  // Images form a code: every word of the target has at most one
  // factorisation into images (Sardinas-Patterson).
  bool IsInjective() const;

 private:
  std::vector<Word> images_;
  int target_alphabet_;
};

// 0 -> 012, 1 -> 02, 2 -> 1.
const Morphism& ThueMorphism();

// First n symbols of the fixed point of ThueMorphism starting with 0.
Word ThuePrefix(std::size_t n);

// No factor uu with u nonempty.
bool IsSquareFree(const Word& w);

// A rational number num/den with den > 0.
struct Rational {
  std::int64_t num;
  std::int64_t den;
};

// A(x) < |x|^(1/2 - eps), decided in exact integer arithmetic. x must be
// binary. Throws std::invalid_argument unless 0 < eps < 1/2.
bool SomewhatSimple(const Word& x, Rational eps);
// Same comparison with A(x) already known.
bool BelowRootBound(int complexity, std::size_t length, Rational eps);

struct SurveyRow {
  Word word;
  int nondet_complexity;
  bool maximal;
};

struct Survey {
  int length;
  int alphabet;
  std::vector<SurveyRow> rows;       // lexicographic
  std::map<int, std::uint64_t> histogram;
  std::vector<Word> maximal;

  // word<TAB>A_N<TAB>true|false per row.
  std::string ToTsv() const;
  // {"n":..,"k":..,"histogram":{..},"maximal":[..]}
  std::string SummaryJson() const;
};

inline constexpr std::uint64_t kDefaultSurveyBudget = 1'000'000;

// A_N of every word of the given length. Throws BudgetExceeded when
// alphabet^length exceeds `budget`.
Survey RunSurvey(int length, int alphabet,
                 std::uint64_t budget = kDefaultSurveyBudget);

}  // namespace autoplex

#endif  // AUTOPLEX_SEQWORDS_H_
