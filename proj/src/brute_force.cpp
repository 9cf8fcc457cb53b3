// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/brute_force.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace xorsat {

BruteForceResult brute_force(const CnfFormula& f) {
  const Var n = f.num_vars();
  if (n > kBruteForceMaxVars) {
    throw std::invalid_argument("brute_force: " + std::to_string(n) + " variables exceed the cap of " +
                                std::to_string(kBruteForceMaxVars));
  }
  BruteForceResult result;
  if (f.has_empty_clause()) return result;

  // 64 assignments per block: the low six variables vary inside a word.
  static constexpr std::uint64_t kLowPattern[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
  };
  const Var low = n < 6 ? n : 6;
  const std::uint64_t valid = low == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << low)) - 1;
  const std::uint64_t blocks = n > 6 ? std::uint64_t{1} << (n - 6) : 1;

  for (std::uint64_t block = 0; block < blocks; ++block) {
    std::uint64_t models = valid;
    for (const auto& c : f.clauses()) {
      std::uint64_t sat = 0;
      for (Lit l : c.lits()) {
        std::uint64_t m;
        if (l.var <= 6) {
          m = kLowPattern[l.var - 1];
        } else {
          m = ((block >> (l.var - 7)) & 1U) ? ~std::uint64_t{0} : 0;
        }
        sat |= l.negated ? ~m : m;
      }
      models &= sat;
      if (models == 0) break;
    }
    if (models != 0) {
      const std::uint64_t index = block * 64 + static_cast<std::uint64_t>(std::countr_zero(models));
      result.satisfiable = true;
      result.model = Assignment(n);
      for (Var v = 1; v <= n; ++v) result.model.set(v, (index >> (v - 1)) & 1U);
      return result;
    }
  }
  return result;
}

}  // namespace xorsat
