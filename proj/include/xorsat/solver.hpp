// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xorsat/config.hpp"
#include "xorsat/formula.hpp"
#include "xorsat/gf2.hpp"
#include "xorsat/hamming.hpp"
#include "xorsat/unit_resolution.hpp"

namespace xorsat {

enum class SolveStatus { Satisfied, Unknown };

enum class UnknownReason {
  None,
  SimplifyConflict,    // unit/equivalence reasoning derived the empty clause
  ContradictoryXor,    // a variable triple carries both parity quadruples
  InconsistentSystem,  // the extracted XOR system has no solution
  BallExhausted,       // no candidate within the radius was accepted
  VerificationFailed,  // assembled model rejected by the original formula
};

const char* to_string(SolveStatus s);
const char* to_string(UnknownReason r);

struct PhaseTimes {
  double simplify = 0;
  double extract = 0;
  double search = 0;
  double eliminate = 0;
  double repair = 0;
  double total = 0;
};

struct SolveStats {
  // simplification
  std::size_t fixed_vars = 0;
  std::size_t equivalences = 0;
  std::size_t simplified_clauses = 0;
  // extraction and elimination
  std::uint32_t theta = 0;
  std::size_t ternaries = 0;
  std::size_t contradictory_triples = 0;
  std::size_t equations = 0;
  std::size_t equation_vars = 0;
  std::size_t frequent_vars = 0;
  std::size_t structured_clauses = 0;
  std::size_t residual_clauses = 0;
  std::size_t free_vars = 0;       // |Y|
  std::size_t frequent_rows = 0;   // n
  std::size_t other_rows = 0;      // m
  std::size_t dropped_rows = 0;
  // local search
  std::uint32_t tries = 0;
  std::uint64_t flips = 0;
  std::uint64_t flip_budget = 0;
  bool search_found = false;
  std::size_t search_best_unsat = 0;
  // candidate repair
  std::uint64_t ball_size = 0;
  std::uint64_t candidates_tested = 0;
  std::uint64_t conflict_rejects = 0;   // unit resolution hit a conflict
  std::uint64_t unsat_rejects = 0;      // completed assignment falsified a clause
  std::int64_t hit_distance = -1;
  std::int64_t hit_index = -1;  // 0-based position in the ball order
  PhaseTimes times;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Flat key/value view of the stats. Keys under "time." carry wall-clock
/// seconds and are the only non-deterministic entries.
KeyValues report_stats(const SolveStats& stats, bool include_times = true);

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  UnknownReason reason = UnknownReason::None;
  Assignment model;  // total over the original variables iff Satisfied
  SolveStats stats;

  /// status, reason, then report_stats().
  KeyValues report(bool include_times = true) const;
};

enum class Rejection { None, Conflict, Unsatisfied };

struct CandidateOutcome {
  bool accepted = false;
  Rejection rejection = Rejection::None;
  Assignment assignment;  // partial after a conflict
};

/// Checks one free-variable vector against the residual formula: the
/// Z-class pivots are evaluated, unit resolution runs seeded with the free
/// and Z values, residual variables left open take their value from
/// `completion` (false when null or unassigned there), and the candidate is
/// accepted iff no conflict arose and every residual clause holds.
CandidateOutcome try_candidate(const YCandidate& y, const EchelonSystem& sys, const CnfFormula& residual,
                               const Assignment* completion = nullptr);

/// Candidate check used by the driver. All pivots (X and Z class) are
/// evaluated from `y`, unit resolution runs over the whole simplified
/// formula seeded with the free and pivot values, open variables take their
/// `completion` value when they occur in the residual (false otherwise), and
/// the candidate is accepted iff every clause of `full` holds. Propagators
/// are built once per tester.
class CandidateTester {
 public:
  CandidateTester(const EchelonSystem& sys, const CnfFormula& residual, const CnfFormula& full,
                  const Assignment* completion);

  CandidateOutcome check(const YCandidate& y) const;

 private:
  const EchelonSystem* sys_;
  const CnfFormula* residual_;
  const CnfFormula* full_;
  const Assignment* completion_;
  UnitPropagator full_prop_;
};

/// Simplify, extract XOR equations, run local search on the residual part,
/// eliminate, then search the Hamming ball around the local-search values of
/// the free variables. A Satisfied result always carries a model checked
/// against `f`. `trace` receives the local-search flip trace.
SolveResult solve(const CnfFormula& f, const SolverConfig& cfg = {}, std::ostream* trace = nullptr);

}  // namespace xorsat
