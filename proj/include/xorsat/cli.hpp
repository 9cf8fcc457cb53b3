// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace xorsat {

inline constexpr int kExitSatisfied = 10;
inline constexpr int kExitUnknown = 0;
inline constexpr int kExitError = 1;

/// Subcommands: solve, bench, gen. Returns the process exit status:
/// 10 when a verified model was printed, 0 for UNKNOWN or a finished
/// bench/gen run, 1 on usage, I/O or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xorsat
