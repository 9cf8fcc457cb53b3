// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xorsat {

bool Clause::contains_var(Var v) const {
  return std::any_of(lits_.begin(), lits_.end(), [v](Lit l) { return l.var == v; });
}

Var CnfFormula::num_active_vars() const {
  return static_cast<Var>(std::count_if(occ_.begin() + 1, occ_.end(), [](auto c) { return c > 0; }));
}

AddStatus CnfFormula::add_clause(std::vector<Lit> lits, ClauseId id) {
  std::vector<Lit> kept;
  kept.reserve(lits.size());
  for (Lit l : lits) {
    if (l.var == 0 || l.var > num_vars_) {
      throw std::out_of_range("literal " + std::to_string(l.to_dimacs()) + " exceeds " +
                              std::to_string(num_vars_) + " variables");
    }
    bool duplicate = false;
    for (Lit k : kept) {
      if (k == l) duplicate = true;
      if (k == ~l) {
        next_id_ = std::max(next_id_, id + 1);
        return AddStatus::Tautology;
      }
    }
    if (!duplicate) kept.push_back(l);
  }
  next_id_ = std::max(next_id_, id + 1);
  if (kept.empty()) {
    has_empty_clause_ = true;
    return AddStatus::Empty;
  }
  for (Lit l : kept) ++occ_[l.var];
  clauses_.emplace_back(std::move(kept), id);
  return AddStatus::Added;
}

AddStatus CnfFormula::add_clause(std::initializer_list<int> dimacs) {
  std::vector<Lit> lits;
  lits.reserve(dimacs.size());
  for (int v : dimacs) lits.push_back(Lit::from_dimacs(v));
  return add_clause(std::move(lits), next_id_);
}

std::vector<std::uint32_t> CnfFormula::recount_occurrences() const {
  std::vector<std::uint32_t> occ(num_vars_ + 1, 0);
  for (const auto& c : clauses_) {
    for (Lit l : c.lits()) ++occ[l.var];
  }
  return occ;
}

Assignment Assignment::uniform(Var num_vars, bool value) {
  Assignment a(num_vars);
  for (Var v = 1; v <= num_vars; ++v) a.values_[v] = value ? 1 : 0;
  return a;
}

void Assignment::set(Var v, bool value) {
  if (v >= values_.size()) values_.resize(v + 1, kUnset);
  values_[v] = value ? 1 : 0;
}

bool Assignment::covers(Var n) const {
  if (n >= values_.size()) return n == 0;
  for (Var v = 1; v <= n; ++v) {
    if (values_[v] == kUnset) return false;
  }
  return true;
}

std::size_t Assignment::assigned_count() const {
  if (values_.empty()) return 0;
  return static_cast<std::size_t>(
      std::count_if(values_.begin() + 1, values_.end(), [](auto x) { return x != kUnset; }));
}

EvalReport evaluate(const CnfFormula& f, const Assignment& a) {
  if (!a.covers(f.num_vars())) {
    throw std::invalid_argument("evaluate requires a total assignment; use unit_resolution for partial states");
  }
  EvalReport report;
  for (const auto& c : f.clauses()) {
    const bool sat = std::any_of(c.lits().begin(), c.lits().end(),
                                 [&](Lit l) { return a.truth(l) == Truth::True; });
    if (!sat) report.unsatisfied.push_back(c.id());
  }
  std::sort(report.unsatisfied.begin(), report.unsatisfied.end());
  report.satisfied = report.unsatisfied.empty() && !f.has_empty_clause();
  return report;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (f.has_empty_clause()) return false;
  for (const auto& c : f.clauses()) {
    bool sat = false;
    for (Lit l : c.lits()) {
      if (a.truth(l) == Truth::True) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace xorsat
