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

#include "autoplex/word.h"

#include <algorithm>
#include <stdexcept>

namespace autoplex {

namespace {

void CheckAlphabet(int alphabet) {
  if (alphabet < 1 || alphabet > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in 1.." +
                                std::to_string(kMaxAlphabet));
  }
}

}  // namespace

Word::Word(int alphabet) : alphabet_(alphabet) { CheckAlphabet(alphabet); }

Word::Word(int alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  CheckAlphabet(alphabet);
  for (Symbol s : symbols_) {
    if (s >= alphabet_) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_));
    }
  }
}

Word::Word(int alphabet, std::initializer_list<int> symbols)
    : Word(alphabet, std::vector<Symbol>(symbols.begin(), symbols.end())) {}

Word Word::Parse(std::string_view digits, int alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  int max_digit = -1;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a digit word: '" + std::string(digits) +
                                  "'");
    }
    symbols.push_back(static_cast<Symbol>(c - '0'));
    max_digit = std::max(max_digit, c - '0');
  }
  if (alphabet <= 0) alphabet = std::max(2, max_digit + 1);
  return Word(alphabet, std::move(symbols));
}

std::vector<Word> Word::AllOfLength(int length, int alphabet) {
  CheckAlphabet(alphabet);
  std::vector<Word> out;
  std::vector<Symbol> cur(static_cast<std::size_t>(length), 0);
  while (true) {
    out.emplace_back(alphabet, cur);
    int i = length - 1;
    while (i >= 0 && cur[i] + 1 == alphabet) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

Word Word::Substr(std::size_t pos, std::size_t len) const {
  Word w(alphabet_);
  w.symbols_.assign(symbols_.begin() + pos, symbols_.begin() + pos + len);
  return w;
}

Word Word::Repeat(int times) const {
  Word w(alphabet_);
  for (int i = 0; i < times; ++i) w.Append(*this);
  return w;
}

Word& Word::Append(const Word& other) {
  if (other.alphabet_ > alphabet_) alphabet_ = other.alphabet_;
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w.Append(other);
  return w;
}

Word Word::WithAlphabet(int alphabet) const {
  return Word(alphabet, symbols_);
}

std::string Word::ToString() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Symbol c : symbols_) s.push_back(static_cast<char>('0' + c));
  return s;
}

}  // namespace autoplex
