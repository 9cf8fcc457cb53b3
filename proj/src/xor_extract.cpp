// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/xor_extract.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>

namespace xorsat {

XorEquation XorEquation::from(std::vector<Var> vars, bool rhs) {
  std::sort(vars.begin(), vars.end());
  XorEquation eq;
  eq.rhs = rhs;
  for (std::size_t i = 0; i < vars.size();) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    if ((j - i) % 2 == 1) eq.vars.push_back(vars[i]);
    i = j;
  }
  return eq;
}

bool XorEquation::holds(const Assignment& a) const {
  bool acc = false;
  for (Var v : vars) acc ^= a.get(v);
  return acc == rhs;
}

XorEquation merge(const XorEquation& a, const XorEquation& b) {
  XorEquation out;
  out.rhs = a.rhs != b.rhs;
  std::set_symmetric_difference(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                                std::back_inserter(out.vars));
  return out;
}

TernaryScan find_ternary_xors(const CnfFormula& f) {
  // Per triple: first clause index seen for each of the 8 sign patterns.
  struct Slots {
    std::array<std::int64_t, 8> clause{-1, -1, -1, -1, -1, -1, -1, -1};
  };
  std::map<VarTriple, Slots> groups;
  const auto& clauses = f.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto lits = clauses[i].lits();
    if (lits.size() != 3) continue;
    std::array<Lit, 3> sorted{lits[0], lits[1], lits[2]};
    std::sort(sorted.begin(), sorted.end());
    const VarTriple key{sorted[0].var, sorted[1].var, sorted[2].var};
    unsigned pattern = 0;
    for (unsigned k = 0; k < 3; ++k) {
      if (sorted[k].negated) pattern |= 1U << k;
    }
    auto& slot = groups[key].clause[pattern];
    if (slot < 0) slot = static_cast<std::int64_t>(i);
  }

  TernaryScan scan;
  for (const auto& [triple, slots] : groups) {
    bool complete[2] = {true, true};  // [0]: odd negations, [1]: even negations
    for (unsigned p = 0; p < 8; ++p) {
      if (slots.clause[p] < 0) complete[std::popcount(p) % 2 == 0 ? 1 : 0] = false;
    }
    if (complete[0] && complete[1]) {
      scan.contradictory.push_back(triple);
      continue;
    }
    for (int rhs = 0; rhs < 2; ++rhs) {
      if (!complete[rhs]) continue;
      TernaryXor t;
      t.equation.vars = {triple[0], triple[1], triple[2]};
      t.equation.rhs = rhs == 1;
      std::size_t k = 0;
      for (unsigned p = 0; p < 8; ++p) {
        if ((std::popcount(p) % 2 == 0) == (rhs == 1)) {
          t.source_clause_ids[k++] = clauses[static_cast<std::size_t>(slots.clause[p])].id();
        }
      }
      std::sort(t.source_clause_ids.begin(), t.source_clause_ids.end());
      scan.ternaries.push_back(t);
    }
  }
  return scan;
}

std::vector<Var> frequent_vars(const CnfFormula& f, std::uint32_t theta) {
  std::vector<Var> out;
  for (Var v = 1; v <= f.num_vars(); ++v) {
    if (f.occurrences(v) > theta) out.push_back(v);
  }
  return out;
}

std::vector<XorEquation> grow_chains(std::span<const TernaryXor> ternaries, std::span<const Var> frequent) {
  Var max_var = 0;
  for (const auto& t : ternaries) max_var = std::max(max_var, t.equation.vars.back());
  for (Var v : frequent) max_var = std::max(max_var, v);
  std::vector<bool> is_frequent(max_var + 1, false);
  for (Var v : frequent) is_frequent[v] = true;

  std::vector<bool> used(ternaries.size(), false);
  std::vector<bool> in_chain(max_var + 1, false);
  std::vector<XorEquation> chains;
  std::size_t remaining = ternaries.size();

  while (remaining > 0) {
    std::size_t seed = ternaries.size();
    for (std::size_t i = 0; i < ternaries.size(); ++i) {
      if (used[i]) continue;
      const auto& vs = ternaries[i].equation.vars;
      if (std::count_if(vs.begin(), vs.end(), [&](Var v) { return is_frequent[v]; }) >= 2) {
        seed = i;
        break;
      }
    }
    if (seed == ternaries.size()) {
      seed = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
    }
    used[seed] = true;
    --remaining;
    XorEquation chain = ternaries[seed].equation;
    for (Var v : chain.vars) in_chain[v] = true;

    bool grew = true;
    while (grew && remaining > 0) {
      grew = false;
      for (std::size_t i = 0; i < ternaries.size(); ++i) {
        if (used[i]) continue;
        const auto& vs = ternaries[i].equation.vars;
        int shared = 0;
        Var pivot = 0;
        for (Var v : vs) {
          if (in_chain[v]) {
            ++shared;
            pivot = v;
          }
        }
        if (shared != 1 || is_frequent[pivot]) continue;
        chain = merge(chain, ternaries[i].equation);
        for (Var v : vs) in_chain[v] = !in_chain[v];
        used[i] = true;
        --remaining;
        grew = true;
        break;
      }
    }
    for (Var v : chain.vars) in_chain[v] = false;
    chains.push_back(std::move(chain));
  }
  return chains;
}

Partition partition(const CnfFormula& f, std::span<const Var> frequent) {
  std::vector<bool> is_frequent(f.num_vars() + 1, false);
  for (Var v : frequent) {
    if (v <= f.num_vars()) is_frequent[v] = true;
  }
  Partition p{{}, CnfFormula(f.num_vars())};
  for (const auto& c : f.clauses()) {
    const bool structured =
        std::any_of(c.lits().begin(), c.lits().end(), [&](Lit l) { return is_frequent[l.var]; });
    if (structured) {
      p.structured_ids.push_back(c.id());
    } else {
      p.residual.add_clause({c.lits().begin(), c.lits().end()}, c.id());
    }
  }
  std::sort(p.structured_ids.begin(), p.structured_ids.end());
  return p;
}

ExtractionResult extract(const CnfFormula& f, std::uint32_t theta) {
  ExtractionResult r;
  r.theta = theta;
  auto scan = find_ternary_xors(f);
  r.ternaries = std::move(scan.ternaries);
  r.contradictory = std::move(scan.contradictory);
  r.frequent = frequent_vars(f, theta);
  r.equations = grow_chains(r.ternaries, r.frequent);

  for (const auto& t : r.ternaries) {
    r.consumed_clause_ids.insert(r.consumed_clause_ids.end(), t.source_clause_ids.begin(), t.source_clause_ids.end());
  }
  std::sort(r.consumed_clause_ids.begin(), r.consumed_clause_ids.end());

  CnfFormula kept(f.num_vars());
  for (const auto& c : f.clauses()) {
    if (!std::binary_search(r.consumed_clause_ids.begin(), r.consumed_clause_ids.end(), c.id())) {
      kept.add_clause({c.lits().begin(), c.lits().end()}, c.id());
    }
  }
  auto split = partition(kept, r.frequent);
  r.structured_ids = std::move(split.structured_ids);
  r.residual = std::move(split.residual);
  return r;
}

void dump_equations(std::ostream& out, std::span<const XorEquation> eqs) {
  for (const auto& e : eqs) {
    out << 'x';
    for (Var v : e.vars) out << ' ' << v;
    out << " = " << (e.rhs ? 1 : 0) << '\n';
  }
}

}  // namespace xorsat
