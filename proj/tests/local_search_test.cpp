// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"
#include "xorsat/local_search.hpp"

using namespace xorsat;

namespace {

CnfFormula from_lists(Var n, const std::vector<std::vector<int>>& clauses) {
  CnfFormula f(n);
  ClauseId id = 0;
  for (const auto& c : clauses) {
    std::vector<Lit> lits;
    for (int l : c) lits.push_back(Lit::from_dimacs(l));
    f.add_clause(std::move(lits), id++);
  }
  return f;
}

// Makes and breaks of flipping v, counted from scratch.
std::pair<int, int> recount(const CnfFormula& f, const Assignment& a, Var v) {
  Assignment b = a;
  b.flip(v);
  int makes = 0, breaks = 0;
  for (const auto& c : f.clauses()) {
    bool before = false, after = false;
    for (Lit l : c.lits()) {
      before = before || (a.get(l.var) != l.negated);
      after = after || (b.get(l.var) != l.negated);
    }
    if (!before && after) ++makes;
    if (before && !after) ++breaks;
  }
  return {makes, breaks};
}

const std::vector<std::vector<int>> kFixture = {{4, 5, -3}, {-2, -1, -4}, {5, 2, -1}, {1, -2, -4},
                                                {-2, 4, 5}, {2, 3, 1},   {-5, -1, 4}, {-2, -1, -5}};

const char* const kFixtureTrace =
    "t 1 f 1 c 5 v 1\n"
    "t 1 f 2 c 2 v 2\n"
    "t 1 f 3 c 4 v 4\n"
    "t 1 f 4 c 1 v 1\n"
    "t 1 f 5 c 3 v 2\n"
    "t 1 f 6 c 5 v 3\n";

}  // namespace

//===----------------------------------------------------------------------===//
// score
//===----------------------------------------------------------------------===//

TEST(Score, UnusedVariableIsZero) {
  CnfFormula f(3);
  f.add_clause({1, 2});
  SearchState s(f, false);
  EXPECT_EQ(score(3, s), 0);
}

TEST(Score, LoneUnsatisfiedClause) {
  CnfFormula f(2);
  f.add_clause({1, 2});
  SearchState s(f, false);
  EXPECT_EQ(s.makes(1), 1);
  EXPECT_EQ(s.breaks(1), 0);
  EXPECT_EQ(score(1, s), 1);
}

TEST(Score, MatchesRecountAfterEveryFlip) {
  std::mt19937_64 rng(6);
  for (int iter = 0; iter < 200; ++iter) {
    auto f = xorsat::testing::random_formula(rng, 6, 4 + rng() % 20, 1, 4);
    SearchState s(f, (rng() & 1U) != 0);
    for (int step = 0; step < 30; ++step) {
      const Assignment a = s.assignment();
      for (Var v = 1; v <= 6; ++v) {
        auto [mk, br] = recount(f, a, v);
        ASSERT_EQ(s.makes(v), mk);
        ASSERT_EQ(s.breaks(v), br);
        ASSERT_EQ(score(v, s), mk - br);
      }
      ASSERT_EQ(s.num_unsat(), evaluate(f, a).unsatisfied.size());
      ASSERT_TRUE(s.audit());
      s.flip(static_cast<Var>(1 + rng() % 6));
    }
  }
}

//===----------------------------------------------------------------------===//
// novelty_pick
//===----------------------------------------------------------------------===//

TEST(NoveltyPick, UnitClause) {
  CnfFormula f(1);
  f.add_clause({1});
  SearchState s(f, false);
  EXPECT_EQ(novelty_pick(f.clauses()[0], s), 1U);
}

TEST(NoveltyPick, NeverFlippedBestIsTaken) {
  // x1 is best by score and never flipped; x2, x3 have been flipped.
  auto f = from_lists(4, {{1, 2, 3}, {-2}, {-3}, {1, 4}});
  SearchState s(f, false);
  s.flip(2);
  s.flip(2);
  s.flip(3);
  s.flip(3);
  ASSERT_EQ(s.flip_counter(), 4U);
  EXPECT_EQ(novelty_pick(f.clauses()[0], s), 1U);
}

TEST(NoveltyPick, HandTrace) {
  // c0 = {x1 x2 x3}, c1 = {-x2}, c2 = {-x3}, c3 = {x1 x4}; start all false.
  auto f = from_lists(4, {{1, 2, 3}, {-2}, {-3}, {1, 4}});
  SearchState s(f, false);
  EXPECT_EQ(s.num_unsat(), 2U);
  // Scores: x1 = 2, x2 = 0, x3 = 0. x1 never flipped, so it is taken.
  EXPECT_EQ(novelty_pick(f.clauses()[0], s), 1U);
  s.flip(1);  // counter 1, everything satisfied
  EXPECT_EQ(s.num_unsat(), 0U);
  s.flip(1);  // counter 2, last_flip(x1) = 2
  EXPECT_EQ(s.num_unsat(), 2U);
  // x1 is best and most recent; counter is even, so best.
  EXPECT_EQ(score(1, s), 2);
  EXPECT_EQ(novelty_pick(f.clauses()[0], s), 1U);
  s.flip(4);  // counter 3, c3 satisfied through x4
  EXPECT_EQ(score(1, s), 1);
  EXPECT_EQ(score(2, s), 0);
  EXPECT_EQ(score(3, s), 0);
  // Still best and most recent; counter is odd, so second best, which is
  // x2 by the index tie-break over x3.
  EXPECT_EQ(novelty_pick(f.clauses()[0], s), 2U);
}

TEST(NoveltyPick, ReturnsVariableOfClause) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 100; ++iter) {
    auto f = xorsat::testing::random_formula(rng, 8, 20, 1, 4);
    SearchState s(f, false);
    for (int step = 0; step < 20 && s.num_unsat() > 0; ++step) {
      const auto& c = f.clauses()[s.select_clause()];
      const Var v = novelty_pick(c, s);
      EXPECT_TRUE(c.contains_var(v));
      s.flip(v);
    }
  }
}

//===----------------------------------------------------------------------===//
// SearchState::select_clause
//===----------------------------------------------------------------------===//

TEST(SelectClause, RoundRobin) {
  auto f = from_lists(3, {{1}, {2}, {-1, 3}, {3}});
  SearchState s(f, false);
  // Unsatisfied under all false: c0, c1, c3.
  EXPECT_EQ(s.select_clause(), 0U);
  EXPECT_EQ(s.select_clause(), 1U);
  EXPECT_EQ(s.select_clause(), 3U);
  EXPECT_EQ(s.select_clause(), 0U);
}

//===----------------------------------------------------------------------===//
// swalksat
//===----------------------------------------------------------------------===//

TEST(Swalksat, EmptyFormula) {
  CnfFormula f(3);
  auto r = swalksat(f);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.stats.found_try, 1U);
  EXPECT_EQ(r.stats.total_flips, 0U);
  EXPECT_EQ(r.best, Assignment::uniform(3, false));
}

TEST(Swalksat, AllFalseModel) {
  auto f = from_lists(3, {{-1, 2}, {-2, -3}});
  auto r = swalksat(f);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.stats.found_try, 1U);
  EXPECT_EQ(r.stats.total_flips, 0U);
}

TEST(Swalksat, PositiveUnitsSolvedInFirstTry) {
  auto f = from_lists(2, {{1}, {2}});
  auto r = swalksat(f);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.stats.found_try, 1U);
  EXPECT_EQ(r.stats.total_flips, 2U);
  EXPECT_TRUE(evaluate(f, r.best).satisfied);
}

TEST(Swalksat, SecondTryStartsAllTrue) {
  auto f = from_lists(2, {{1}, {2}});
  SearchOptions opts;
  opts.flip_multiplier = 0;
  auto r = swalksat(f, opts);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.stats.found_try, 2U);
  EXPECT_EQ(r.stats.total_flips, 0U);
  EXPECT_EQ(r.best, Assignment::uniform(2, true));
}

TEST(Swalksat, FrozenTrace) {
  auto f = from_lists(5, kFixture);
  EXPECT_GT(SearchState(f, false).num_unsat(), 0U);
  EXPECT_GT(SearchState(f, true).num_unsat(), 0U);
  std::ostringstream t1, t2;
  SearchOptions opts;
  opts.audit = true;
  opts.trace = &t1;
  auto r1 = swalksat(f, opts);
  opts.trace = &t2;
  auto r2 = swalksat(f, opts);
  EXPECT_EQ(t1.str(), kFixtureTrace);
  EXPECT_EQ(t1.str(), t2.str());
  EXPECT_EQ(r1.best, r2.best);
  ASSERT_EQ(r1.status, SearchStatus::Found);
  EXPECT_EQ(r1.stats.total_flips, 6U);
  EXPECT_TRUE(evaluate(f, r1.best).satisfied);
}

TEST(Swalksat, UnsatisfiableUsesBothTriesAndBudget) {
  auto f = from_lists(2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}});
  auto r = swalksat(f);
  EXPECT_EQ(r.status, SearchStatus::NotFound);
  EXPECT_EQ(r.stats.tries_run, 2U);
  EXPECT_EQ(r.stats.flip_budget, 8U);
  EXPECT_EQ(r.stats.flips_per_try, (std::vector<std::uint64_t>{8, 8}));
  EXPECT_EQ(r.stats.best_unsat, 1U);
  EXPECT_EQ(evaluate(f, r.best).unsatisfied.size(), 1U);
}

TEST(Swalksat, BudgetAndAuditOnRandomRuns) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    const Var n = 3 + static_cast<Var>(rng() % 10);
    auto f = xorsat::testing::random_formula(rng, n, 1 + rng() % (5 * n), 2, 3);
    SearchOptions opts;
    opts.audit = true;
    SearchResult r;
    ASSERT_NO_THROW(r = swalksat(f, opts));
    for (auto flips : r.stats.flips_per_try) EXPECT_LE(flips, 2 * f.num_clauses());
    EXPECT_LE(r.stats.total_flips, 4 * f.num_clauses());
    if (r.status == SearchStatus::Found) {
      EXPECT_TRUE(evaluate(f, r.best).satisfied);
    } else {
      EXPECT_EQ(r.stats.tries_run, 2U);
      EXPECT_EQ(evaluate(f, r.best).unsatisfied.size(), r.stats.best_unsat);
    }
  }
}

TEST(Swalksat, Deterministic) {
  std::mt19937_64 rng(78);
  for (int iter = 0; iter < 20; ++iter) {
    auto f = xorsat::testing::random_formula(rng, 12, 50, 3, 3);
    std::ostringstream a, b;
    SearchOptions opts;
    opts.trace = &a;
    auto ra = swalksat(f, opts);
    opts.trace = &b;
    auto rb = swalksat(f, opts);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(ra.best, rb.best);
    EXPECT_EQ(ra.stats.flips_per_try, rb.stats.flips_per_try);
  }
}
