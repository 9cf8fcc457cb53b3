// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xorsat/formula.hpp"

namespace xorsat {

inline constexpr Var kBruteForceMaxVars = 26;

struct BruteForceResult {
  bool satisfiable = false;
  Assignment model;  // first model in canonical order when satisfiable
};

/// Exhaustive search in canonical order: assignment index i gives variable
/// v the value of bit v-1 of i. Throws std::invalid_argument above
/// kBruteForceMaxVars variables.
BruteForceResult brute_force(const CnfFormula& f);

}  // namespace xorsat
