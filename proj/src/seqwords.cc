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

#include "autoplex/seqwords.h"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "autoplex/budget.h"
#include "autoplex/complexity.h"

namespace autoplex {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("morphism needs images");
  target_alphabet_ = images_.front().alphabet();
  for (const Word& w : images_) {
    if (w.alphabet() != target_alphabet_) {
      throw std::invalid_argument("morphism images over different alphabets");
    }
  }
}

Word Morphism::Apply(const Word& w) const {
  if (w.alphabet() > source_alphabet()) {
    throw std::invalid_argument("word alphabet exceeds morphism domain");
  }
  Word out(target_alphabet_);
  for (Symbol a : w.symbols()) out.Append(images_[a]);
  return out;
}

bool Morphism::IsUniform() const {
  for (const Word& w : images_) {
    if (w.size() != images_.front().size()) return false;
  }
  return true;
}

bool Morphism::IsInjective() const {
  std::set<std::string> code;
  for (const Word& w : images_) {
    if (w.empty() || !code.insert(w.ToString()).second) return false;
  }
  auto starts_with = [](const std::string& s, const std::string& p) {
    return s.size() > p.size() && s.compare(0, p.size(), p) == 0;
  };
  // Sardinas-Patterson dangling suffixes.
  std::set<std::string> current;
  for (const auto& u : code) {
    for (const auto& v : code) {
      if (starts_with(v, u)) current.insert(v.substr(u.size()));
    }
  }
  std::set<std::set<std::string>> seen;
  while (!current.empty() && seen.insert(current).second) {
    for (const auto& s : current) {
      if (code.count(s)) return false;
    }
    std::set<std::string> next;
    for (const auto& s : current) {
      for (const auto& c : code) {
        if (starts_with(s, c)) next.insert(s.substr(c.size()));
        if (starts_with(c, s)) next.insert(c.substr(s.size()));
      }
    }
    current = std::move(next);
  }
  return true;
}

const Morphism& ThueMorphism() {
  static const Morphism kThue({Word::Parse("012", 3), Word::Parse("02", 3),
                               Word::Parse("1", 3)});
  return kThue;
}

Word ThuePrefix(std::size_t n) {
  Word w(3, {0});
  while (w.size() < n) w = ThueMorphism().Apply(w);
  return w.Substr(0, n);
}

bool IsSquareFree(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; 2 * len <= n; ++len) {
    for (std::size_t start = 0; start + 2 * len <= n; ++start) {
      bool square = true;
      for (std::size_t i = 0; i < len && square; ++i) {
        square = w[start + i] == w[start + len + i];
      }
      if (square) return false;
    }
  }
  return true;
}

bool BelowRootBound(int complexity, std::size_t length, Rational eps) {
  using boost::multiprecision::cpp_int;
  if (eps.den <= 0 || eps.num <= 0 || 2 * eps.num >= eps.den) {
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1/2");
  }
  // 1/2 - p/q = (q - 2p) / 2q = r/s.
  std::int64_t r = eps.den - 2 * eps.num;
  std::int64_t s = 2 * eps.den;
  const std::int64_t g = std::gcd(r, s);
  r /= g;
  s /= g;
  if (length == 0) return false;
  // A < n^(r/s)  <=>  A^s < n^r for positive A and n.
  cpp_int lhs = boost::multiprecision::pow(cpp_int(complexity), static_cast<unsigned>(s));
  cpp_int rhs = boost::multiprecision::pow(cpp_int(length), static_cast<unsigned>(r));
  return lhs < rhs;
}

bool SomewhatSimple(const Word& x, Rational eps) {
  if (x.alphabet() != 2) throw std::invalid_argument("binary word required");
  // Validate eps before running the solver.
  BelowRootBound(1, 1, eps);
  if (x.empty()) return false;
  return BelowRootBound(DetComplexity(x).value, x.size(), eps);
}

std::string Survey::ToTsv() const {
  std::ostringstream out;
  for (const SurveyRow& row : rows) {
    out << row.word.ToString() << '\t' << row.nondet_complexity << '\t'
        << (row.maximal ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string Survey::SummaryJson() const {
  nlohmann::ordered_json j;
  j["n"] = length;
  j["k"] = alphabet;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [value, count] : histogram) hist[std::to_string(value)] = count;
  j["histogram"] = hist;
  j["maximal"] = nlohmann::ordered_json::array();
  for (const Word& w : maximal) j["maximal"].push_back(w.ToString());
  return j.dump();
}

Survey RunSurvey(int length, int alphabet, std::uint64_t budget) {
  if (length < 0) throw std::invalid_argument("negative length");
  std::uint64_t total = 1;
  for (int i = 0; i < length; ++i) {
    total *= static_cast<std::uint64_t>(alphabet);
    if (total > budget) {
      throw BudgetExceeded("survey of " + std::to_string(alphabet) + "^" +
                           std::to_string(length) + " words exceeds budget of " +
                           std::to_string(budget));
    }
  }
  Survey survey{length, alphabet, {}, {}, {}};
  const int bound = BoundB(length);
  for (Word& w : Word::AllOfLength(length, alphabet)) {
    const int value = NondetComplexity(w).value;
    const bool maximal = value == bound;
    ++survey.histogram[value];
    if (maximal) survey.maximal.push_back(w);
    survey.rows.push_back({std::move(w), value, maximal});
  }
  return survey;
}

}  // namespace autoplex
