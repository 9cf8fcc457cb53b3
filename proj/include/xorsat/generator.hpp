// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "xorsat/formula.hpp"
#include "xorsat/xor_extract.hpp"

namespace xorsat {

struct GeneratorParams {
  std::uint32_t bits = 8;     // secret length k, >= 2
  std::uint32_t samples = 16; // >= bits
  std::uint32_t noise = 1;    // noisy samples, also the noise budget
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  CnfFormula formula;
  Assignment planted;                       // satisfies formula
  std::vector<XorEquation> sample_equations;  // secret bits ^ noise var = label
  std::uint32_t ternaries_emitted = 0;
};

/// Planted noisy-parity instance. Each sample XORs a random subset of the
/// secret bits with its own noise variable; the sum is written as a chain of
/// ternary XORs through fresh intermediate variables, each ternary encoded
/// as its four clauses. An at-most-`noise` constraint over the noise
/// variables and a layer of random 3-clauses satisfied by the planted model
/// complete the formula. Same parameters, same formula.
/// Throws std::invalid_argument when bits < 2, samples < bits or
/// noise > samples.
GeneratedInstance generate_parity(const GeneratorParams& params);

}  // namespace xorsat
