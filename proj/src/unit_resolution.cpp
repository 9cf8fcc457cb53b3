// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/unit_resolution.hpp"

namespace xorsat {

namespace {
std::size_t code(Lit l) { return 2 * std::size_t{l.var} + (l.negated ? 1 : 0); }
}  // namespace

UnitPropagator::UnitPropagator(const CnfFormula& f) : formula_(&f), occ_(2 * (std::size_t{f.num_vars()} + 1)) {
  const auto& clauses = f.clauses();
  for (std::uint32_t i = 0; i < clauses.size(); ++i) {
    for (Lit l : clauses[i].lits()) occ_[code(l)].push_back(i);
  }
}

bool UnitPropagator::propagate(Assignment& a) const {
  const auto& clauses = formula_->clauses();
  if (formula_->has_empty_clause()) return false;
  a.resize(formula_->num_vars());

  std::vector<std::uint32_t> unfixed(clauses.size(), 0);
  std::vector<bool> sat(clauses.size(), false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < clauses.size(); ++i) {
    std::uint32_t open = 0;
    for (Lit l : clauses[i].lits()) {
      const Truth t = a.truth(l);
      if (t == Truth::True) {
        sat[i] = true;
        break;
      }
      if (t == Truth::Unassigned) ++open;
    }
    if (sat[i]) continue;
    if (open == 0) return false;
    unfixed[i] = open;
    if (open == 1) queue.push_back(i);
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t ci = queue[head];
    if (sat[ci]) continue;
    Lit unit{};
    bool have = false;
    for (Lit l : clauses[ci].lits()) {
      const Truth t = a.truth(l);
      if (t == Truth::True) {
        have = false;
        sat[ci] = true;
        break;
      }
      if (t == Truth::Unassigned) {
        unit = l;
        have = true;
      }
    }
    if (sat[ci]) continue;
    if (!have) return false;
    a.set(unit.var, !unit.negated);
    for (std::uint32_t cj : occ_[code(unit)]) sat[cj] = true;
    for (std::uint32_t cj : occ_[code(~unit)]) {
      if (sat[cj]) continue;
      if (--unfixed[cj] == 0) return false;
      if (unfixed[cj] == 1) queue.push_back(cj);
    }
  }
  return true;
}

PropagationResult unit_resolution(const CnfFormula& f, Assignment v) {
  UnitPropagator prop(f);
  PropagationResult r;
  r.conflict = !prop.propagate(v);
  r.assignment = std::move(v);
  return r;
}

}  // namespace xorsat
