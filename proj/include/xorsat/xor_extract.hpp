// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "xorsat/formula.hpp"

namespace xorsat {

/// Parity constraint vars[0] ^ vars[1] ^ ... = rhs over positive variables.
/// vars is kept sorted and duplicate-free.
struct XorEquation {
  std::vector<Var> vars;
  bool rhs = false;

  /// Builds a normalized equation; repeated variables cancel in pairs.
  static XorEquation from(std::vector<Var> vars, bool rhs);

  bool empty() const { return vars.empty(); }
  /// Requires every variable to be assigned (unassigned reads as false).
  bool holds(const Assignment& a) const;

  friend bool operator==(const XorEquation&, const XorEquation&) = default;
};

/// Symmetric difference of the variable sets, XOR of the constants.
XorEquation merge(const XorEquation& a, const XorEquation& b);

struct TernaryXor {
  XorEquation equation;
  std::array<ClauseId, 4> source_clause_ids{};
};

using VarTriple = std::array<Var, 3>;

struct TernaryScan {
  std::vector<TernaryXor> ternaries;  // sorted by variable triple
  std::vector<VarTriple> contradictory;  // triples carrying both quadruples
};

/// Recovers A^B^C = c from complete 4-clause patterns over one variable
/// triple: the four clauses with an even number of negations encode c = 1,
/// the four with an odd number encode c = 0.
TernaryScan find_ternary_xors(const CnfFormula& f);

/// Variables occurring in strictly more than `theta` clauses, ascending.
std::vector<Var> frequent_vars(const CnfFormula& f, std::uint32_t theta);

/// Greedy chain growth. Each chain starts from the first unused ternary with
/// at least two frequent variables (else the first unused one) and absorbs,
/// one at a time, the first unused ternary sharing exactly one variable with
/// it, provided that variable is not frequent. Every ternary ends up in
/// exactly one returned equation.
std::vector<XorEquation> grow_chains(std::span<const TernaryXor> ternaries, std::span<const Var> frequent);

struct Partition {
  std::vector<ClauseId> structured_ids;  // clauses mentioning a frequent variable
  CnfFormula residual;                   // everything else, order preserved
};

Partition partition(const CnfFormula& f, std::span<const Var> frequent);

struct ExtractionResult {
  std::uint32_t theta = 0;
  std::vector<TernaryXor> ternaries;
  std::vector<VarTriple> contradictory;
  std::vector<XorEquation> equations;
  std::vector<Var> frequent;
  std::vector<ClauseId> consumed_clause_ids;  // sorted
  std::vector<ClauseId> structured_ids;       // S, sorted
  CnfFormula residual;                        // F - S without consumed clauses
};

/// Full extraction pass: ternaries, frequent set, chains, then the S /
/// residual split of the clauses not consumed by a ternary.
ExtractionResult extract(const CnfFormula& f, std::uint32_t theta);

/// One equation per line: "x <v1> <v2> ... = <0|1>".
void dump_equations(std::ostream& out, std::span<const XorEquation> eqs);

}  // namespace xorsat
