// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace xorsat {

using Var = std::uint32_t;
using ClauseId = std::uint32_t;

/// A variable (1-based) with a polarity.
struct Lit {
  Var var = 0;
  bool negated = false;

  static Lit from_dimacs(int value) {
    return value < 0 ? Lit{static_cast<Var>(-value), true} : Lit{static_cast<Var>(value), false};
  }
  int to_dimacs() const { return negated ? -static_cast<int>(var) : static_cast<int>(var); }

  Lit operator~() const { return Lit{var, !negated}; }

  friend bool operator==(Lit, Lit) = default;
  friend auto operator<=>(Lit, Lit) = default;
};

class Clause {
 public:
  Clause(std::vector<Lit> lits, ClauseId id) : lits_(std::move(lits)), id_(id) {}

  ClauseId id() const { return id_; }
  std::span<const Lit> lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool contains_var(Var v) const;

 private:
  std::vector<Lit> lits_;
  ClauseId id_;
};

/// Outcome of adding a literal list to a formula.
enum class AddStatus { Added, Tautology, Empty };

/// Clause database over variables 1..num_vars with per-variable occurrence
/// counts (clauses mentioning the variable in either polarity).
class CnfFormula {
 public:
  explicit CnfFormula(Var num_vars = 0) : num_vars_(num_vars), occ_(num_vars + 1, 0) {}

  Var num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_clauses() const { return clauses_.size(); }

  std::uint32_t occurrences(Var v) const { return v < occ_.size() ? occ_[v] : 0; }
  const std::vector<std::uint32_t>& occurrence_counts() const { return occ_; }
  /// Number of variables that occur in at least one clause.
  Var num_active_vars() const;

  /// Removes duplicate literals (first occurrence kept), rejects tautologies
  /// and empty clauses. An empty clause is not stored; it marks the formula
  /// as containing one. Throws std::out_of_range when a literal exceeds
  /// num_vars or is zero.
  AddStatus add_clause(std::vector<Lit> lits, ClauseId id);
  AddStatus add_clause(std::initializer_list<int> dimacs);

  ClauseId next_id() const { return next_id_; }
  bool has_empty_clause() const { return has_empty_clause_; }
  void mark_empty_clause() { has_empty_clause_ = true; }

  /// Occurrence counts recomputed from the clause list.
  std::vector<std::uint32_t> recount_occurrences() const;

 private:
  Var num_vars_;
  std::vector<Clause> clauses_;
  std::vector<std::uint32_t> occ_;
  ClauseId next_id_ = 0;
  bool has_empty_clause_ = false;
};

enum class Truth : std::int8_t { False = 0, True = 1, Unassigned = -1 };

/// Possibly partial mapping from variables to truth values, O(1) queries.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Var num_vars) : values_(num_vars + 1, kUnset) {}

  static Assignment uniform(Var num_vars, bool value);

  Var num_vars() const { return values_.empty() ? 0 : static_cast<Var>(values_.size() - 1); }

  bool is_assigned(Var v) const { return v < values_.size() && values_[v] != kUnset; }
  std::optional<bool> value(Var v) const {
    if (!is_assigned(v)) return std::nullopt;
    return values_[v] == 1;
  }
  /// Value of an assigned variable; unassigned reads as false.
  bool get(Var v) const { return v < values_.size() && values_[v] == 1; }

  Truth truth(Lit l) const {
    if (!is_assigned(l.var)) return Truth::Unassigned;
    return (values_[l.var] == 1) != l.negated ? Truth::True : Truth::False;
  }

  void set(Var v, bool value);
  void unset(Var v) {
    if (v < values_.size()) values_[v] = kUnset;
  }
  void flip(Var v) { values_[v] = values_[v] == 1 ? 0 : 1; }
  /// Grows the domain to 1..n; new variables are unassigned.
  void resize(Var n) {
    if (n + 1 > values_.size()) values_.resize(n + 1, kUnset);
  }

  /// True when every variable in 1..n is assigned.
  bool covers(Var n) const;
  bool is_total() const { return covers(num_vars()); }
  std::size_t assigned_count() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> values_;
};

struct EvalReport {
  bool satisfied = false;
  std::vector<ClauseId> unsatisfied;  // sorted by id
};

/// Throws std::invalid_argument when `a` leaves a variable of `f` unassigned.
EvalReport evaluate(const CnfFormula& f, const Assignment& a);

/// True iff every clause has a true literal under `a` (unassigned counts as
/// not true). Cheap check with no allocation.
bool satisfies(const CnfFormula& f, const Assignment& a);

}  // namespace xorsat
