// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/solver.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "xorsat/local_search.hpp"
#include "xorsat/simplify.hpp"
#include "xorsat/xor_extract.hpp"

namespace xorsat {

const char* to_string(SolveStatus s) { return s == SolveStatus::Satisfied ? "SATISFIABLE" : "UNKNOWN"; }

const char* to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::None: return "none";
    case UnknownReason::SimplifyConflict: return "simplify_conflict";
    case UnknownReason::ContradictoryXor: return "contradictory_xor";
    case UnknownReason::InconsistentSystem: return "inconsistent_xor_system";
    case UnknownReason::BallExhausted: return "ball_exhausted";
    case UnknownReason::VerificationFailed: return "verification_failed";
  }
  return "?";
}

KeyValues report_stats(const SolveStats& s, bool include_times) {
  KeyValues kv;
  auto add = [&](const char* key, auto value) {
    std::ostringstream os;
    os << value;
    kv.emplace_back(key, os.str());
  };
  add("simplify.fixed_vars", s.fixed_vars);
  add("simplify.equivalences", s.equivalences);
  add("simplify.clauses", s.simplified_clauses);
  add("extract.theta", s.theta);
  add("extract.ternaries", s.ternaries);
  add("extract.contradictory_triples", s.contradictory_triples);
  add("extract.equations", s.equations);
  add("extract.equation_vars", s.equation_vars);
  add("extract.frequent_vars", s.frequent_vars);
  add("extract.structured_clauses", s.structured_clauses);
  add("extract.residual_clauses", s.residual_clauses);
  add("gauss.free_vars", s.free_vars);
  add("gauss.frequent_rows", s.frequent_rows);
  add("gauss.other_rows", s.other_rows);
  add("gauss.dropped_rows", s.dropped_rows);
  add("search.tries", s.tries);
  add("search.flips", s.flips);
  add("search.flip_budget", s.flip_budget);
  add("search.found", s.search_found ? 1 : 0);
  add("search.best_unsat", s.search_best_unsat);
  add("repair.ball_size", s.ball_size);
  add("repair.candidates_tested", s.candidates_tested);
  add("repair.conflict_rejects", s.conflict_rejects);
  add("repair.unsat_rejects", s.unsat_rejects);
  add("repair.hit_distance", s.hit_distance);
  add("repair.hit_index", s.hit_index);
  if (include_times) {
    add("time.simplify", s.times.simplify);
    add("time.extract", s.times.extract);
    add("time.search", s.times.search);
    add("time.eliminate", s.times.eliminate);
    add("time.repair", s.times.repair);
    add("time.total", s.times.total);
  }
  return kv;
}

KeyValues SolveResult::report(bool include_times) const {
  KeyValues kv{{"status", to_string(status)}, {"reason", to_string(reason)}};
  auto rest = report_stats(stats, include_times);
  kv.insert(kv.end(), rest.begin(), rest.end());
  return kv;
}

namespace {

void seed_free_vars(const EchelonSystem& sys, const YCandidate& y, Assignment& a) {
  for (std::size_t j = 0; j < sys.free_vars.size(); ++j) a.set(sys.free_vars[j], y.bits.test(j));
}

void fill_open(const CnfFormula& f, const Assignment* completion, bool only_occurring, Assignment& a) {
  a.resize(f.num_vars());
  for (Var v = 1; v <= f.num_vars(); ++v) {
    if (a.is_assigned(v)) continue;
    if (only_occurring && f.occurrences(v) == 0) continue;
    a.set(v, completion != nullptr && completion->get(v));
  }
}

CandidateOutcome residual_stage(const YCandidate& y, const EchelonSystem& sys, const CnfFormula& residual,
                                 const UnitPropagator& prop, const Assignment* completion) {
  CandidateOutcome out;
  out.assignment = Assignment(residual.num_vars());
  seed_free_vars(sys, y, out.assignment);
  eval_rows(sys, y.bits, RowSelection::Other, out.assignment);
  if (!prop.propagate(out.assignment)) {
    out.rejection = Rejection::Conflict;
    return out;
  }
  fill_open(residual, completion, /*only_occurring=*/true, out.assignment);
  out.accepted = satisfies(residual, out.assignment);
  if (!out.accepted) out.rejection = Rejection::Unsatisfied;
  return out;
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

CandidateOutcome try_candidate(const YCandidate& y, const EchelonSystem& sys, const CnfFormula& residual,
                               const Assignment* completion) {
  UnitPropagator prop(residual);
  return residual_stage(y, sys, residual, prop, completion);
}

CandidateTester::CandidateTester(const EchelonSystem& sys, const CnfFormula& residual, const CnfFormula& full,
                                 const Assignment* completion)
    : sys_(&sys), residual_(&residual), full_(&full), completion_(completion), full_prop_(full) {}

CandidateOutcome CandidateTester::check(const YCandidate& y) const {
  CandidateOutcome out;
  Assignment& a = out.assignment;
  a = Assignment(full_->num_vars());
  seed_free_vars(*sys_, y, a);
  eval_rows(*sys_, y.bits, RowSelection::Both, a);
  if (!full_prop_.propagate(a)) {
    out.rejection = Rejection::Conflict;
    return out;
  }
  for (Var v = 1; v <= full_->num_vars(); ++v) {
    if (a.is_assigned(v)) continue;
    a.set(v, completion_ != nullptr && residual_->occurrences(v) > 0 && completion_->get(v));
  }
  out.accepted = satisfies(*full_, a);
  if (!out.accepted) out.rejection = Rejection::Unsatisfied;
  return out;
}

SolveResult solve(const CnfFormula& f, const SolverConfig& cfg, std::ostream* trace) {
  SolveResult result;
  SolveStats& st = result.stats;
  Stopwatch clock;
  Stopwatch total;
  auto finish = [&](UnknownReason reason) {
    result.status = SolveStatus::Unknown;
    result.reason = reason;
    result.model = Assignment();
    st.times.total = total.lap();
    return result;
  };

  auto simp = simplify(f);
  st.fixed_vars = simp.stats.fixed_vars;
  st.equivalences = simp.stats.equivalences;
  st.times.simplify = clock.lap();
  if (simp.conflict) return finish(UnknownReason::SimplifyConflict);
  const CnfFormula& formula = simp.formula;
  st.simplified_clauses = formula.num_clauses();

  st.theta = compute_theta(cfg, formula.num_clauses(), formula.num_active_vars());
  auto ex = extract(formula, st.theta);
  st.ternaries = ex.ternaries.size();
  st.contradictory_triples = ex.contradictory.size();
  st.equations = ex.equations.size();
  {
    std::vector<bool> seen(formula.num_vars() + 1, false);
    for (const auto& e : ex.equations) {
      for (Var v : e.vars) {
        if (!seen[v]) ++st.equation_vars;
        seen[v] = true;
      }
    }
  }
  st.frequent_vars = ex.frequent.size();
  st.structured_clauses = ex.structured_ids.size();
  st.residual_clauses = ex.residual.num_clauses();
  st.times.extract = clock.lap();
  if (!ex.contradictory.empty()) return finish(UnknownReason::ContradictoryXor);

  SearchOptions sopts;
  sopts.tries = cfg.tries;
  sopts.flip_multiplier = cfg.flip_multiplier;
  sopts.trace = trace;
  auto search = swalksat(ex.residual, sopts);
  st.tries = search.stats.tries_run;
  st.flips = search.stats.total_flips;
  st.flip_budget = search.stats.flip_budget;
  st.search_found = search.status == SearchStatus::Found;
  st.search_best_unsat = search.stats.best_unsat;
  st.times.search = clock.lap();

  const auto order = pivot_preference(formula, ex.frequent);
  const auto sys = gauss_jordan(ex.equations, order, ex.frequent);
  st.dropped_rows = sys.dropped_rows;
  st.times.eliminate = clock.lap();
  if (sys.inconsistent) return finish(UnknownReason::InconsistentSystem);
  st.free_vars = sys.free_vars.size();
  st.frequent_rows = sys.frequent_rows();
  st.other_rows = sys.other_rows();

  BitVec center(sys.free_vars.size());
  for (std::size_t j = 0; j < sys.free_vars.size(); ++j) {
    const Var y = sys.free_vars[j];
    center.set(j, ex.residual.occurrences(y) > 0 && search.best.get(y));
  }

  CandidateTester tester(sys, ex.residual, formula, &search.best);
  HammingBall ball(center, cfg.radius);
  st.ball_size = ball.size();
  YCandidate cand;
  std::optional<Assignment> hit;
  while (ball.next(cand)) {
    ++st.candidates_tested;
    auto outcome = tester.check(cand);
    if (!outcome.accepted) {
      ++(outcome.rejection == Rejection::Conflict ? st.conflict_rejects : st.unsat_rejects);
      continue;
    }
    hit = std::move(outcome.assignment);
    st.hit_distance = cand.distance;
    st.hit_index = static_cast<std::int64_t>(st.candidates_tested) - 1;
    break;
  }
  st.times.repair = clock.lap();
  if (!hit) return finish(UnknownReason::BallExhausted);

  Assignment model = reconstruct(*hit, simp.map, f.num_vars());
  if (!evaluate(f, model).satisfied) return finish(UnknownReason::VerificationFailed);
  result.status = SolveStatus::Satisfied;
  result.reason = UnknownReason::None;
  result.model = std::move(model);
  st.times.total = total.lap();
  return result;
}

}  // namespace xorsat
