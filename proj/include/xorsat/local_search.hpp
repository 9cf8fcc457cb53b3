// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "xorsat/formula.hpp"

namespace xorsat {

/// Local-search state over one formula: a total assignment plus incremental
/// true-literal counts, make/break counters and the unsatisfied-clause set.
class SearchState {
 public:
  SearchState(const CnfFormula& f, bool initial_value);

  const CnfFormula& formula() const { return *formula_; }

  bool value(Var v) const { return values_[v] != 0; }
  Assignment assignment() const;

  /// makes(v) - breaks(v).
  int score(Var v) const { return make_[v] - break_[v]; }
  int makes(Var v) const { return make_[v]; }
  int breaks(Var v) const { return break_[v]; }

  std::uint64_t last_flip(Var v) const { return last_flip_[v]; }
  std::uint64_t flip_counter() const { return flip_counter_; }

  std::size_t num_unsat() const { return num_unsat_; }
  bool is_unsat(std::size_t clause_index) const {
    return (unsat_[clause_index >> 6] >> (clause_index & 63)) & 1U;
  }
  /// Unsatisfied clause indices, ascending.
  std::vector<std::size_t> unsat_clauses() const;

  /// Next unsatisfied clause at or after the cursor, wrapping around; the
  /// cursor moves just past it. Requires num_unsat() > 0.
  std::size_t select_clause();
  std::size_t cursor() const { return cursor_; }

  void flip(Var v);

  /// Recomputes every counter from scratch and compares. Returns false on
  /// any mismatch.
  bool audit() const;

 private:
  void mark(std::size_t ci, bool unsat);

  const CnfFormula* formula_;
  std::vector<std::uint8_t> values_;
  std::vector<std::vector<std::uint32_t>> pos_occ_;  // var -> clauses with positive literal
  std::vector<std::vector<std::uint32_t>> neg_occ_;
  std::vector<std::uint32_t> num_true_;
  std::vector<Var> true_xor_;  // xor of variables of true literals
  std::vector<int> make_;
  std::vector<int> break_;
  std::vector<std::uint64_t> last_flip_;
  std::vector<std::uint64_t> unsat_;
  std::size_t num_unsat_ = 0;
  std::uint64_t flip_counter_ = 0;
  std::size_t cursor_ = 0;
};

int score(Var v, const SearchState& s);

/// Deterministic Novelty+: rank the clause's variables by score (ties: older
/// last flip, then lower index). The best is taken unless it is the
/// clause's most recently flipped variable; then the best is taken on even
/// flip counters and the second best on odd ones.
Var novelty_pick(const Clause& c, const SearchState& s);

struct SearchOptions {
  std::uint32_t tries = 2;
  std::uint32_t flip_multiplier = 2;
  /// One line per flip: "t <try> f <flip#> c <clause id> v <var>".
  std::ostream* trace = nullptr;
  /// Run SearchState::audit() after every flip; throws std::logic_error on
  /// a mismatch.
  bool audit = false;
};

enum class SearchStatus { Found, NotFound };

struct SearchStats {
  std::uint32_t tries_run = 0;
  std::vector<std::uint64_t> flips_per_try;
  std::uint64_t total_flips = 0;
  std::uint64_t flip_budget = 0;  // per try
  std::size_t best_unsat = 0;
  std::uint32_t found_try = 0;  // 0 when not found
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  Assignment best;  // the model when found
  SearchStats stats;
};

/// Derandomized WalkSAT. Try i starts from all-false (odd i) or all-true
/// (even i) and performs at most flip_multiplier * #clauses flips, picking
/// unsatisfied clauses round-robin. When no try succeeds the assignment
/// with the fewest unsatisfied clauses is returned (earliest on ties).
SearchResult swalksat(const CnfFormula& f, const SearchOptions& opts = {});

}  // namespace xorsat
