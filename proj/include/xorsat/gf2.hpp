// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "xorsat/bitvec.hpp"
#include "xorsat/formula.hpp"
#include "xorsat/xor_extract.hpp"

namespace xorsat {

enum class RowClass { Frequent, Other };

/// pivot = constant ^ sum_j coeffs[j] * free_vars[j]
struct EchelonRow {
  Var pivot = 0;
  BitVec coeffs;
  bool constant = false;
  RowClass cls = RowClass::Other;

  friend bool operator==(const EchelonRow&, const EchelonRow&) = default;
};

/// Reduced echelon form of an XOR system. Rows appear in pivot-selection
/// order; free variables are ascending.
struct EchelonSystem {
  std::vector<Var> free_vars;
  std::vector<EchelonRow> rows;
  bool inconsistent = false;
  std::size_t dropped_rows = 0;  // rows that reduced to 0 = 0

  std::size_t frequent_rows() const;
  std::size_t other_rows() const;

  friend bool operator==(const EchelonSystem&, const EchelonSystem&) = default;
};

/// Frequent variables by descending occurrence count (ties: lower index),
/// followed by every other variable in the same order.
std::vector<Var> pivot_preference(const CnfFormula& f, std::span<const Var> frequent);

/// Gauss-Jordan elimination over GF(2). Columns are processed in
/// `pivot_order`; variables of `eqs` missing from it come after, ascending.
/// Rows with a pivot in `frequent` are classed Frequent.
EchelonSystem gauss_jordan(std::span<const XorEquation> eqs, std::span<const Var> pivot_order,
                           std::span<const Var> frequent);

/// Rows of the system written back as equations (pivot plus its free terms).
std::vector<XorEquation> to_equations(const EchelonSystem& sys);

enum class RowSelection { Frequent, Other, Both };

/// Assigns the pivots of the selected rows from `y` (indexed like
/// sys.free_vars). Throws std::invalid_argument on an inconsistent system or
/// a size mismatch.
void eval_rows(const EchelonSystem& sys, const BitVec& y, RowSelection which, Assignment& out);
Assignment eval_rows(const EchelonSystem& sys, const BitVec& y, RowSelection which);

/// Augmented 0/1 matrix, header naming the free variables.
void dump_system(std::ostream& out, const EchelonSystem& sys);

}  // namespace xorsat
