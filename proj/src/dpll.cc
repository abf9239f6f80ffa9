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

#include "autoplex/dpll.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "autoplex/budget.h"

namespace autoplex {

void Cnf::Add(Clause c) {
  for (Lit l : c) {
    if (l == 0) throw std::invalid_argument("zero literal");
    if (std::abs(l) > num_variables) num_variables = std::abs(l);
  }
  clauses.push_back(std::move(c));
}

void Cnf::AddAtMostOne(const std::vector<Lit>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    for (std::size_t j = i + 1; j < lits.size(); ++j) Add({-lits[i], -lits[j]});
  }
}

namespace {

class Dpll {
 public:
  Dpll(const Cnf& cnf, DpllStats* stats, std::uint64_t max_decisions)
      : vars_(cnf.num_variables),
        stats_(stats),
        max_decisions_(max_decisions),
        value_(vars_ + 1, kUnassigned),
        watches_(2 * (vars_ + 1)) {
    for (const Clause& c : cnf.clauses) {
      for (Lit l : c) {
        if (l == 0 || std::abs(l) > vars_) {
          throw std::invalid_argument("literal " + std::to_string(l) +
                                      " out of range");
        }
      }
      if (c.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      clauses_.push_back(c);
    }
  }

  std::optional<Assignment> Solve() {
    if (trivially_unsat_) return std::nullopt;
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      Clause& c = clauses_[ci];
      if (c.size() == 1) {
        if (!Enqueue(c[0])) return std::nullopt;
        continue;
      }
      watches_[Index(c[0])].push_back(ci);
      watches_[Index(c[1])].push_back(ci);
    }
    if (!Propagate()) return std::nullopt;

    std::size_t cursor = 1;
    while (true) {
      while (cursor <= static_cast<std::size_t>(vars_) &&
             value_[cursor] != kUnassigned) {
        ++cursor;
      }
      if (cursor > static_cast<std::size_t>(vars_)) break;
      if (max_decisions_ != 0 && decisions_ >= max_decisions_) {
        throw BudgetExceeded("DPLL: decision budget of " +
                             std::to_string(max_decisions_) + " exhausted");
      }
      ++decisions_;
      if (stats_) ++stats_->decisions;
      levels_.push_back({trail_.size(), static_cast<int>(cursor), false});
      Enqueue(static_cast<Lit>(cursor));
      while (!Propagate()) {
        if (stats_) ++stats_->conflicts;
        if (!Backtrack()) return std::nullopt;
      }
      // Backtracking may have unassigned lower variables.
      cursor = 1;
    }

    Assignment out(vars_ + 1, false);
    for (int v = 1; v <= vars_; ++v) out[v] = value_[v] == kTrue;
    return out;
  }

 private:
  static constexpr signed char kUnassigned = -1;
  static constexpr signed char kFalse = 0;
  static constexpr signed char kTrue = 1;

  struct Level {
    std::size_t trail_start;
    int variable;
    bool flipped;
  };

  static std::size_t Index(Lit l) {
    return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0);
  }

  signed char LitValue(Lit l) const {
    signed char v = value_[std::abs(l)];
    if (v == kUnassigned) return kUnassigned;
    return (l > 0) == (v == kTrue) ? kTrue : kFalse;
  }

  bool Enqueue(Lit l) {
    signed char v = LitValue(l);
    if (v == kFalse) return false;
    if (v == kTrue) return true;
    value_[std::abs(l)] = l > 0 ? kTrue : kFalse;
    trail_.push_back(l);
    return true;
  }

  bool Propagate() {
    while (head_ < trail_.size()) {
      const Lit falsified = -trail_[head_++];
      if (stats_) ++stats_->propagations;
      std::vector<std::size_t>& list = watches_[Index(falsified)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::size_t ci = list[i];
        Clause& c = clauses_[ci];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        // Now c[1] is the falsified watch.
        if (LitValue(c[0]) == kTrue) {
          list[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < c.size(); ++j) {
          if (LitValue(c[j]) != kFalse) {
            std::swap(c[1], c[j]);
            watches_[Index(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        list[keep++] = ci;
        if (!Enqueue(c[0])) {
          for (++i; i < list.size(); ++i) list[keep++] = list[i];
          list.resize(keep);
          return false;
        }
      }
      list.resize(keep);
    }
    return true;
  }

  void UndoTo(std::size_t trail_size) {
    while (trail_.size() > trail_size) {
      value_[std::abs(trail_.back())] = kUnassigned;
      trail_.pop_back();
    }
    head_ = trail_size;
  }

  // Flips the most recent decision still on its first branch.
  bool Backtrack() {
    while (!levels_.empty()) {
      Level level = levels_.back();
      UndoTo(level.trail_start);
      if (level.flipped) {
        levels_.pop_back();
        continue;
      }
      levels_.back().flipped = true;
      Enqueue(-level.variable);
      return true;
    }
    return false;
  }

  int vars_;
  DpllStats* stats_;
  std::uint64_t max_decisions_;
  std::uint64_t decisions_ = 0;
  bool trivially_unsat_ = false;
  std::vector<Clause> clauses_;
  std::vector<signed char> value_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
  std::vector<Level> levels_;
};

}  // namespace

std::optional<Assignment> DpllSolve(const Cnf& cnf, DpllStats* stats,
                                    std::uint64_t max_decisions) {
  return Dpll(cnf, stats, max_decisions).Solve();
}

std::optional<Assignment> DpllSolve(const std::vector<Clause>& clauses,
                                    DpllStats* stats) {
  Cnf cnf;
  for (const Clause& c : clauses) cnf.Add(c);
  return DpllSolve(cnf, stats);
}

bool Satisfies(const std::vector<Clause>& clauses, const Assignment& value) {
  for (const Clause& c : clauses) {
    bool sat = false;
    for (Lit l : c) {
      const std::size_t v = std::abs(l);
      if (v < value.size() && value[v] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace autoplex
