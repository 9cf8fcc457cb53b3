// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

namespace xorsat {

struct SolverConfig {
  // theta = theta_multiplier * ceil(#clause / #var) + theta_offset
  std::uint32_t theta_multiplier = 3;
  std::uint32_t theta_offset = 2;
  std::optional<std::uint32_t> theta_override;
  std::uint32_t radius = 3;
  std::uint32_t flip_multiplier = 2;
  std::uint32_t tries = 2;
};

/// Frequent-variable threshold. With no variables the offset alone is used.
inline std::uint32_t compute_theta(const SolverConfig& cfg, std::uint64_t num_clauses, std::uint64_t num_vars) {
  if (cfg.theta_override) return *cfg.theta_override;
  if (num_vars == 0) return cfg.theta_offset;
  const std::uint64_t ratio = (num_clauses + num_vars - 1) / num_vars;
  return static_cast<std::uint32_t>(cfg.theta_multiplier * ratio + cfg.theta_offset);
}

}  // namespace xorsat
