// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>
#include <vector>

#include "xorsat/formula.hpp"

namespace xorsat {

struct FixedRecord {
  Var var;
  bool value;
  friend bool operator==(const FixedRecord&, const FixedRecord&) = default;
};

/// `var` was replaced by `representative` everywhere.
struct EquivRecord {
  Var var;
  Lit representative;
  friend bool operator==(const EquivRecord&, const EquivRecord&) = default;
};

using SubstitutionRecord = std::variant<FixedRecord, EquivRecord>;

/// Undo log of simplify(): replaying it backwards over a model of the
/// simplified formula yields a model of the original.
class ReconstructionMap {
 public:
  void add_fixed(Var v, bool value) { records_.emplace_back(FixedRecord{v, value}); }
  void add_equiv(Var v, Lit rep) { records_.emplace_back(EquivRecord{v, rep}); }

  const std::vector<SubstitutionRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

 private:
  std::vector<SubstitutionRecord> records_;
};

struct SimplifyStats {
  std::size_t fixed_vars = 0;
  std::size_t equivalences = 0;
  std::size_t removed_clauses = 0;
  std::size_t passes = 0;
};

struct SimplifyResult {
  CnfFormula formula;
  ReconstructionMap map;
  bool conflict = false;
  SimplifyStats stats;
};

/// Unit propagation and binary-equivalence substitution to a fixpoint.
/// Surviving clauses keep their original ids; the variable space is
/// unchanged. On conflict only the flag is meaningful.
SimplifyResult simplify(const CnfFormula& f);

/// Extends `a` to variables 1..num_vars by replaying `m` in reverse.
/// Variables untouched by both stay as in `a`, or false when unassigned.
/// Throws std::logic_error when an equivalence refers to an unassigned
/// representative.
Assignment reconstruct(const Assignment& a, const ReconstructionMap& m, Var num_vars);

}  // namespace xorsat
