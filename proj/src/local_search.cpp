// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/local_search.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace xorsat {

SearchState::SearchState(const CnfFormula& f, bool initial_value)
    : formula_(&f),
      values_(f.num_vars() + 1, initial_value ? 1 : 0),
      pos_occ_(f.num_vars() + 1),
      neg_occ_(f.num_vars() + 1),
      num_true_(f.num_clauses(), 0),
      true_xor_(f.num_clauses(), 0),
      make_(f.num_vars() + 1, 0),
      break_(f.num_vars() + 1, 0),
      last_flip_(f.num_vars() + 1, 0),
      unsat_((f.num_clauses() + 63) / 64, 0) {
  const auto& clauses = f.clauses();
  for (std::uint32_t ci = 0; ci < clauses.size(); ++ci) {
    for (Lit l : clauses[ci].lits()) {
      (l.negated ? neg_occ_ : pos_occ_)[l.var].push_back(ci);
      if (value(l.var) != l.negated) {
        ++num_true_[ci];
        true_xor_[ci] ^= l.var;
      }
    }
    if (num_true_[ci] == 0) {
      mark(ci, true);
      for (Lit l : clauses[ci].lits()) ++make_[l.var];
    } else if (num_true_[ci] == 1) {
      ++break_[true_xor_[ci]];
    }
  }
}

void SearchState::mark(std::size_t ci, bool unsat) {
  const std::uint64_t bit = std::uint64_t{1} << (ci & 63);
  if (unsat) {
    unsat_[ci >> 6] |= bit;
    ++num_unsat_;
  } else {
    unsat_[ci >> 6] &= ~bit;
    --num_unsat_;
  }
}

Assignment SearchState::assignment() const {
  Assignment a(formula_->num_vars());
  for (Var v = 1; v <= formula_->num_vars(); ++v) a.set(v, values_[v] != 0);
  return a;
}

std::vector<std::size_t> SearchState::unsat_clauses() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < unsat_.size(); ++w) {
    std::uint64_t bits = unsat_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t SearchState::select_clause() {
  const std::size_t n = formula_->num_clauses();
  if (num_unsat_ == 0 || n == 0) throw std::logic_error("select_clause with no unsatisfied clause");
  if (cursor_ >= n) cursor_ = 0;
  auto scan = [&](std::size_t from, std::size_t to) -> std::size_t {
    // First set bit in [from, to), or `to`.
    std::size_t i = from;
    while (i < to) {
      const std::size_t w = i >> 6;
      std::uint64_t bits = unsat_[w] >> (i & 63);
      if (bits != 0) {
        const std::size_t hit = i + static_cast<std::size_t>(std::countr_zero(bits));
        return hit < to ? hit : to;
      }
      i = (w + 1) * 64;
    }
    return to;
  };
  std::size_t hit = scan(cursor_, n);
  if (hit == n) hit = scan(0, cursor_);
  cursor_ = hit + 1;
  return hit;
}

void SearchState::flip(Var v) {
  const auto& clauses = formula_->clauses();
  const bool now_true = values_[v] == 0;
  values_[v] = now_true ? 1 : 0;
  ++flip_counter_;
  last_flip_[v] = flip_counter_;

  // Clauses where v's literal becomes true.
  for (std::uint32_t ci : now_true ? pos_occ_[v] : neg_occ_[v]) {
    if (num_true_[ci] == 0) {
      mark(ci, false);
      for (Lit l : clauses[ci].lits()) --make_[l.var];
      ++break_[v];
    } else if (num_true_[ci] == 1) {
      --break_[true_xor_[ci]];
    }
    ++num_true_[ci];
    true_xor_[ci] ^= v;
  }
  // Clauses where v's literal becomes false.
  for (std::uint32_t ci : now_true ? neg_occ_[v] : pos_occ_[v]) {
    --num_true_[ci];
    true_xor_[ci] ^= v;
    if (num_true_[ci] == 0) {
      mark(ci, true);
      for (Lit l : clauses[ci].lits()) ++make_[l.var];
      --break_[v];
    } else if (num_true_[ci] == 1) {
      ++break_[true_xor_[ci]];
    }
  }
}

bool SearchState::audit() const {
  const auto& clauses = formula_->clauses();
  std::vector<int> make(make_.size(), 0);
  std::vector<int> brk(break_.size(), 0);
  std::size_t unsat = 0;
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    std::uint32_t n = 0;
    Var last_true = 0;
    for (Lit l : clauses[ci].lits()) {
      if (value(l.var) != l.negated) {
        ++n;
        last_true = l.var;
      }
    }
    if (n != num_true_[ci]) return false;
    if (n == 0) {
      ++unsat;
      if (!is_unsat(ci)) return false;
      for (Lit l : clauses[ci].lits()) ++make[l.var];
    } else {
      if (is_unsat(ci)) return false;
      if (n == 1) {
        if (true_xor_[ci] != last_true) return false;
        ++brk[last_true];
      }
    }
  }
  return unsat == num_unsat_ && make == make_ && brk == break_;
}

int score(Var v, const SearchState& s) { return s.score(v); }

Var novelty_pick(const Clause& c, const SearchState& s) {
  const auto lits = c.lits();
  if (lits.size() == 1) return lits[0].var;

  auto better = [&](Var a, Var b) {
    if (s.score(a) != s.score(b)) return s.score(a) > s.score(b);
    if (s.last_flip(a) != s.last_flip(b)) return s.last_flip(a) < s.last_flip(b);
    return a < b;
  };
  Var best = 0;
  Var second = 0;
  std::uint64_t youngest = 0;
  for (Lit l : lits) {
    const Var v = l.var;
    youngest = std::max(youngest, s.last_flip(v));
    if (best == 0 || better(v, best)) {
      second = best;
      best = v;
    } else if (second == 0 || better(v, second)) {
      second = v;
    }
  }
  const bool best_is_youngest = s.last_flip(best) != 0 && s.last_flip(best) == youngest;
  if (!best_is_youngest) return best;
  return s.flip_counter() % 2 == 0 ? best : second;
}

SearchResult swalksat(const CnfFormula& f, const SearchOptions& opts) {
  SearchResult result;
  const std::uint64_t budget = std::uint64_t{opts.flip_multiplier} * f.num_clauses();
  result.stats.flip_budget = budget;
  bool have_best = false;

  for (std::uint32_t t = 1; t <= opts.tries; ++t) {
    SearchState state(f, /*initial_value=*/t % 2 == 0);
    ++result.stats.tries_run;
    std::uint64_t flips = 0;

    auto consider = [&] {
      if (!have_best || state.num_unsat() < result.stats.best_unsat) {
        have_best = true;
        result.stats.best_unsat = state.num_unsat();
        result.best = state.assignment();
      }
    };

    consider();
    while (state.num_unsat() > 0 && flips < budget) {
      const std::size_t ci = state.select_clause();
      const Clause& clause = f.clauses()[ci];
      const Var v = novelty_pick(clause, state);
      state.flip(v);
      ++flips;
      if (opts.trace) *opts.trace << "t " << t << " f " << flips << " c " << clause.id() << " v " << v << '\n';
      if (opts.audit && !state.audit()) throw std::logic_error("local search bookkeeping diverged from recount");
      consider();
    }
    result.stats.flips_per_try.push_back(flips);
    result.stats.total_flips += flips;
    if (state.num_unsat() == 0) {
      result.status = SearchStatus::Found;
      result.stats.found_try = t;
      result.best = state.assignment();
      result.stats.best_unsat = 0;
      return result;
    }
  }
  if (opts.tries == 0) result.best = Assignment::uniform(f.num_vars(), false);
  return result;
}

}  // namespace xorsat
