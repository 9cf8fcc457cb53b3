// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "xorsat/config.hpp"
#include "xorsat/solver.hpp"

namespace xorsat {

struct BenchRow {
  std::string name;
  Var vars = 0;
  std::size_t clauses = 0;
  std::string status;  // SATISFIABLE, UNKNOWN or ERROR
  std::string error;
  double time = 0;     // minimum over repetitions, seconds
  std::vector<double> rep_times;
  SolveStats stats;    // from the fastest repetition
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Aligned table: instance, #var, #clause, status, time and phase times.
  void write_table(std::ostream& out) const;
  /// One flat "key=value ..." record per row.
  void write_records(std::ostream& out) const;
};

/// Solves each file `repetitions` times (at least once). Unreadable or
/// malformed files produce an ERROR row; the run continues.
BenchReport run_bench(const std::vector<std::filesystem::path>& files, const SolverConfig& cfg,
                      std::uint32_t repetitions);

}  // namespace xorsat
