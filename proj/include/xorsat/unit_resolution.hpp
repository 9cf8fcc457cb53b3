// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "xorsat/formula.hpp"

namespace xorsat {

/// Unit propagation over a fixed formula. Occurrence lists are built once,
/// so one propagator can be reused across many seed assignments.
class UnitPropagator {
 public:
  explicit UnitPropagator(const CnfFormula& f);

  /// Extends `a` to the unit-resolution fixpoint. Returns false when some
  /// clause becomes all-false; `a` then holds the values fixed so far.
  bool propagate(Assignment& a) const;

 private:
  const CnfFormula* formula_;
  std::vector<std::vector<std::uint32_t>> occ_;  // literal code -> clause indices
};

struct PropagationResult {
  Assignment assignment;
  bool conflict = false;
};

PropagationResult unit_resolution(const CnfFormula& f, Assignment v);

}  // namespace xorsat
