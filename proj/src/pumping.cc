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

#include "autoplex/pumping.h"

#include <numeric>
#include <stdexcept>

namespace autoplex {

namespace {

// Grows an NFA out of chains and loops.
class LoopBuilder {
 public:
  explicit LoopBuilder(int alphabet) : alphabet_(alphabet) {}

  // Reads `w` along fresh states from `from`; returns the last state.
  int Chain(int from, const Word& w) {
    int cur = from;
    for (Symbol a : w.symbols()) {
      int next = Fresh();
      edges_.push_back({cur, a, next});
      cur = next;
    }
    return cur;
  }

  // A cycle through `base` spelling `w` (nonempty).
  void Loop(int base, const Word& w) {
    int cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? base : Fresh();
      edges_.push_back({cur, w[i], next});
      cur = next;
    }
  }

  Nfa Finish(int accepting) const {
    Nfa nfa(states_, alphabet_);
    for (const Edge& e : edges_) nfa.AddEdge(e.from, e.symbol, e.to);
    nfa.set_start(0);
    nfa.set_accepting(accepting);
    return nfa;
  }

 private:
  int Fresh() { return states_++; }

  int alphabet_;
  int states_ = 1;
  std::vector<Edge> edges_;
};

bool IsTotalDeterministic(const Nfa& nfa) {
  if (!nfa.is_deterministic()) return false;
  return nfa.edges().size() ==
         static_cast<std::size_t>(nfa.num_states()) * nfa.alphabet();
}

}  // namespace

void PumpDecomposition::Validate(std::size_t max_window) const {
  const int k = u.alphabet();
  for (const Word* part : {&v, &w, &x, &y}) {
    if (part->alphabet() != k) {
      throw std::invalid_argument("decomposition parts use different alphabets");
    }
  }
  if (v.size() + x.size() == 0) throw std::invalid_argument("|vx| must be >= 1");
  if (max_window > 0 && v.size() + w.size() + x.size() > max_window) {
    throw std::invalid_argument("|vwx| exceeds the pumping length");
  }
}

Word Pump(const PumpDecomposition& d, int n) {
  d.Validate();
  if (n < 0) throw std::invalid_argument("negative pump count");
  return d.u + d.v.Repeat(n) + d.w + d.x.Repeat(n) + d.y;
}

std::vector<std::pair<long, long>> SolveDiophantine(long a, long b, long c) {
  if (a < 1 || b < 1 || c < 0) {
    throw std::invalid_argument("need a, b >= 1 and c >= 0");
  }
  std::vector<std::pair<long, long>> out;
  for (long x = 0; a * x <= c; ++x) {
    if ((c - a * x) % b == 0) out.emplace_back(x, (c - a * x) / b);
  }
  return out;
}

std::pair<Nfa, Word> BuildLoopAutomaton(const PumpDecomposition& d,
                                        const LoopCase& params) {
  d.Validate();
  LoopBuilder builder(d.alphabet());
  if (const auto* c1 = std::get_if<LoopCase1>(&params)) {
    if (d.v.size() == d.x.size()) {
      throw std::invalid_argument("single-loop case needs |v| != |x|");
    }
    if (c1->n < 0) throw std::invalid_argument("negative pump count");
    Word target = Pump(d, c1->n);
    int end;
    if (d.v.size() > d.x.size()) {
      int base = builder.Chain(0, d.u);
      builder.Loop(base, d.v);
      end = builder.Chain(base, d.w + d.x.Repeat(c1->n) + d.y);
    } else {
      int base = builder.Chain(0, d.u + d.v.Repeat(c1->n) + d.w);
      builder.Loop(base, d.x);
      end = builder.Chain(base, d.y);
    }
    return {builder.Finish(end), std::move(target)};
  }

  const auto& c2 = std::get<LoopCase2>(params);
  if (d.v.size() != d.x.size() || d.v.empty()) {
    throw std::invalid_argument("two-loop case needs |v| = |x| > 0");
  }
  if (c2.i < 1 || c2.a <= c2.i || c2.b <= c2.i) {
    throw std::invalid_argument("two-loop case needs a > i, b > i, i >= 1");
  }
  if (std::gcd(c2.a, c2.b) != 1) {
    throw std::invalid_argument("two-loop case needs gcd(a, b) = 1");
  }
  Word target = Pump(d, c2.b * c2.i);
  int first = builder.Chain(0, d.u);
  builder.Loop(first, d.v.Repeat(c2.a));
  int second = builder.Chain(first, d.v.Repeat(c2.i) + d.w);
  builder.Loop(second, d.x.Repeat(c2.b));
  int end = builder.Chain(second, d.y);
  return {builder.Finish(end), std::move(target)};
}

std::optional<LoopCertificate> LoopUpperBound(const PumpDecomposition& d,
                                              const LoopCase& params) {
  auto [nfa, word] = BuildLoopAutomaton(d, params);
  if (!IsUniqueAcceptor(nfa, word)) return std::nullopt;
  const bool deterministic = IsTotalDeterministic(nfa);
  const int states = nfa.num_states();
  return LoopCertificate{
      std::move(word),
      ComplexityWitness{Measure::kNondeterministic, states, std::move(nfa), true},
      deterministic};
}

}  // namespace autoplex
