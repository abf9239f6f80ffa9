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

#ifndef AUTOPLEX_WORD_H_
#define AUTOPLEX_WORD_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autoplex {

using Symbol = std::uint8_t;

// Largest alphabet a word can be written in with single digit characters.
inline constexpr int kMaxAlphabet = 10;

// A finite word over the alphabet {0, ..., alphabet-1}.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet);
  Word(int alphabet, std::vector<Symbol> symbols);
  Word(int alphabet, std::initializer_list<int> symbols);

  // Parses a string of digit characters. With alphabet <= 0 the alphabet is
  // inferred as max digit + 1 (and 2 for the empty word). Throws
  // std::invalid_argument on a non-digit or an out-of-range digit.
  static Word Parse(std::string_view digits, int alphabet = 0);

  // All words of the given length in lexicographic order.
  static std::vector<Word> AllOfLength(int length, int alphabet);

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  Word Substr(std::size_t pos, std::size_t len) const;
  Word Repeat(int times) const;
  Word& Append(const Word& other);
  Word operator+(const Word& other) const;

  // Same symbols, reinterpreted over a (larger or equal) alphabet.
  Word WithAlphabet(int alphabet) const;

  // Digit string; the empty word prints as "".
  std::string ToString() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.alphabet_ <=> b.alphabet_;
  }

 private:
  int alphabet_ = 2;
  std::vector<Symbol> symbols_;
};

}  // namespace autoplex

template <>
struct std::hash<autoplex::Word> {
  std::size_t operator()(const autoplex::Word& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.alphabet());
    for (auto s : w.symbols()) h = h * 131 + s + 1;
    return h;
  }
};

#endif  // AUTOPLEX_WORD_H_
