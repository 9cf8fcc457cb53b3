// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/generator.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace xorsat {

namespace {

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return (rng_() >> 17) & 1U; }

  Var fresh(bool value) {
    values_.push_back(value);
    return static_cast<Var>(values_.size() - 1);
  }
  bool value(Var v) const { return values_[v]; }

  void clause(std::vector<Lit> lits) { clauses_.push_back(std::move(lits)); }

  // The four clauses of u ^ v ^ w = rhs.
  void ternary(Var u, Var v, Var w, bool rhs) {
    for (unsigned p = 0; p < 8; ++p) {
      const bool even = std::popcount(p) % 2 == 0;
      if (even != rhs) continue;
      clause({Lit{u, (p & 1U) != 0}, Lit{v, (p & 2U) != 0}, Lit{w, (p & 4U) != 0}});
    }
    ++ternaries_;
  }

  Var num_vars() const { return static_cast<Var>(values_.size() - 1); }
  const std::vector<std::vector<Lit>>& clauses() const { return clauses_; }
  std::uint32_t ternaries() const { return ternaries_; }

 private:
  std::mt19937_64 rng_;
  std::vector<bool> values_{false};  // index 0 unused
  std::vector<std::vector<Lit>> clauses_;
  std::uint32_t ternaries_ = 0;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// At most `limit` of `xs` true.
void at_most(Builder& b, const std::vector<Var>& xs, std::uint32_t limit) {
  const auto n = static_cast<std::uint32_t>(xs.size());
  if (limit >= n) return;
  if (limit == 0) {
    for (Var x : xs) b.clause({Lit{x, true}});
    return;
  }
  if (binomial(n, limit + 1) <= 64) {
    // One clause per (limit+1)-subset.
    std::vector<std::uint32_t> idx(limit + 1);
    for (std::uint32_t i = 0; i <= limit; ++i) idx[i] = i;
    while (true) {
      std::vector<Lit> c;
      for (auto i : idx) c.push_back(Lit{xs[i], true});
      b.clause(std::move(c));
      std::int64_t i = limit;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (limit + 1) + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j <= limit; ++j) idx[j] = idx[j - 1] + 1;
    }
    return;
  }
  // Sequential counter: s[i][j] <=> at least j+1 of xs[0..i] are true
  // (only the forward implications are encoded).
  std::vector<std::vector<Var>> s(n - 1, std::vector<Var>(limit));
  std::uint32_t count = 0;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    count += b.value(xs[i]) ? 1 : 0;
    for (std::uint32_t j = 0; j < limit; ++j) s[i][j] = b.fresh(count >= j + 1);
  }
  b.clause({Lit{xs[0], true}, Lit{s[0][0], false}});
  for (std::uint32_t j = 1; j < limit; ++j) b.clause({Lit{s[0][j], true}});
  for (std::uint32_t i = 1; i + 1 < n; ++i) {
    b.clause({Lit{xs[i], true}, Lit{s[i][0], false}});
    b.clause({Lit{s[i - 1][0], true}, Lit{s[i][0], false}});
    for (std::uint32_t j = 1; j < limit; ++j) {
      b.clause({Lit{xs[i], true}, Lit{s[i - 1][j - 1], true}, Lit{s[i][j], false}});
      b.clause({Lit{s[i - 1][j], true}, Lit{s[i][j], false}});
    }
    b.clause({Lit{xs[i], true}, Lit{s[i - 1][limit - 1], true}});
  }
  b.clause({Lit{xs[n - 1], true}, Lit{s[n - 2][limit - 1], true}});
}

}  // namespace

GeneratedInstance generate_parity(const GeneratorParams& p) {
  if (p.bits < 2) throw std::invalid_argument("generate_parity: bits must be >= 2");
  if (p.samples < p.bits) throw std::invalid_argument("generate_parity: samples must be >= bits");
  if (p.noise > p.samples) throw std::invalid_argument("generate_parity: noise must be <= samples");

  Builder b(p.seed);
  GeneratedInstance out;

  std::vector<Var> secret;
  for (std::uint32_t i = 0; i < p.bits; ++i) secret.push_back(b.fresh(b.coin()));

  std::vector<bool> noisy(p.samples, false);
  {
    std::vector<std::uint32_t> order(p.samples);
    for (std::uint32_t i = 0; i < p.samples; ++i) order[i] = i;
    for (std::uint32_t i = 0; i < p.noise; ++i) {
      std::swap(order[i], order[i + b.below(p.samples - i)]);
      noisy[order[i]] = true;
    }
  }
  std::vector<Var> noise_vars;
  for (std::uint32_t i = 0; i < p.samples; ++i) noise_vars.push_back(b.fresh(noisy[i]));

  const std::uint32_t max_subset = std::max<std::uint32_t>(2, (p.bits + 1) / 2);
  for (std::uint32_t s = 0; s < p.samples; ++s) {
    const auto size = static_cast<std::uint32_t>(2 + b.below(max_subset - 1));
    std::vector<Var> pool = secret;
    for (std::uint32_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + b.below(pool.size() - i)]);
    std::vector<Var> subset(pool.begin(), pool.begin() + size);
    std::sort(subset.begin(), subset.end());

    const Var e = noise_vars[s];
    bool label = b.value(e);
    for (Var v : subset) label = label != b.value(v);
    std::vector<Var> eq_vars = subset;
    eq_vars.push_back(e);
    out.sample_equations.push_back(XorEquation::from(std::move(eq_vars), label));

    if (size == 2) {
      b.ternary(subset[0], subset[1], e, label);
      continue;
    }
    Var acc = b.fresh(b.value(subset[0]) != b.value(subset[1]));
    b.ternary(subset[0], subset[1], acc, false);
    for (std::uint32_t i = 2; i + 1 < size; ++i) {
      const Var next = b.fresh(b.value(acc) != b.value(subset[i]));
      b.ternary(acc, subset[i], next, false);
      acc = next;
    }
    b.ternary(acc, subset[size - 1], e, label);
  }

  at_most(b, noise_vars, p.noise);

  // Random 3-clauses kept true by the planted model, one per sample.
  const Var n = b.num_vars();
  for (std::uint32_t i = 0; i < p.samples && n >= 3; ++i) {
    std::vector<Lit> c;
    while (c.size() < 3) {
      const Var v = static_cast<Var>(1 + b.below(n));
      if (std::any_of(c.begin(), c.end(), [v](Lit l) { return l.var == v; })) continue;
      c.push_back(Lit{v, b.coin()});
    }
    const bool sat = std::any_of(c.begin(), c.end(), [&](Lit l) { return b.value(l.var) != l.negated; });
    if (!sat) {
      auto& l = c[b.below(3)];
      l.negated = !l.negated;
    }
    b.clause(std::move(c));
  }

  out.formula = CnfFormula(n);
  ClauseId id = 0;
  for (const auto& c : b.clauses()) out.formula.add_clause(c, id++);
  out.planted = Assignment(n);
  for (Var v = 1; v <= n; ++v) out.planted.set(v, b.value(v));
  out.ternaries_emitted = b.ternaries();
  return out;
}

}  // namespace xorsat
