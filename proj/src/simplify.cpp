// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/simplify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

namespace xorsat {

namespace {

std::uint32_t encode(Lit l) { return 2 * l.var + (l.negated ? 1 : 0); }

std::uint64_t pair_key(Lit a, Lit b) {
  if (b < a) std::swap(a, b);
  return (std::uint64_t{encode(a)} << 32) | encode(b);
}

struct Equivalence {
  Var lo;
  Var hi;
  bool parity;  // value(hi) == value(lo) xor parity
  friend auto operator<=>(const Equivalence&, const Equivalence&) = default;
};

/// Union-find over variables where each node stores its parity to the parent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(Var n) : parent_(n + 1), parity_(n + 1, false) {
    for (Var v = 0; v <= n; ++v) parent_[v] = v;
  }

  std::pair<Var, bool> find(Var v) {
    bool parity = false;
    Var root = v;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // Path compression.
    bool acc = parity;
    while (parent_[v] != root) {
      const Var next = parent_[v];
      const bool step = parity_[v];
      parent_[v] = root;
      parity_[v] = acc;
      acc ^= step;
      v = next;
    }
    return {root, parity};
  }

  void attach(Var child_root, Var parent_root, bool parity) {
    parent_[child_root] = parent_root;
    parity_[child_root] = parity;
  }

 private:
  std::vector<Var> parent_;
  std::vector<bool> parity_;
};

class Simplifier {
 public:
  explicit Simplifier(const CnfFormula& f) : num_vars_(f.num_vars()), value_(f.num_vars()) {
    for (const auto& c : f.clauses()) {
      clauses_.emplace_back(c.lits().begin(), c.lits().end());
      ids_.push_back(c.id());
    }
    alive_.assign(clauses_.size(), true);
    conflict_ = f.has_empty_clause();
  }

  SimplifyResult run() {
    SimplifyResult result;
    while (!conflict_) {
      ++stats_.passes;
      const bool units = propagate_units();
      if (conflict_) break;
      const bool equivs = substitute_equivalences();
      if (!units && !equivs) break;
    }
    result.conflict = conflict_;
    result.map = std::move(map_);
    result.formula = CnfFormula(num_vars_);
    if (!conflict_) {
      for (std::size_t i = 0; i < clauses_.size(); ++i) {
        if (alive_[i]) result.formula.add_clause(clauses_[i], ids_[i]);
      }
    }
    stats_.removed_clauses = clauses_.size() - result.formula.num_clauses();
    result.stats = stats_;
    return result;
  }

 private:
  // Repeated scans until no unit clause remains.
  bool propagate_units() {
    bool changed = false;
    bool found = true;
    while (found && !conflict_) {
      found = false;
      for (std::size_t i = 0; i < clauses_.size() && !conflict_; ++i) {
        if (!alive_[i]) continue;
        auto& lits = clauses_[i];
        bool sat = false;
        std::size_t keep = 0;
        for (Lit l : lits) {
          const Truth t = value_.truth(l);
          if (t == Truth::True) {
            sat = true;
            break;
          }
          if (t == Truth::Unassigned) lits[keep++] = l;
        }
        if (sat) {
          alive_[i] = false;
          continue;
        }
        lits.resize(keep);
        if (lits.empty()) {
          conflict_ = true;
        } else if (lits.size() == 1) {
          const Lit unit = lits[0];
          value_.set(unit.var, !unit.negated);
          map_.add_fixed(unit.var, !unit.negated);
          ++stats_.fixed_vars;
          alive_[i] = false;
          found = true;
          changed = true;
        }
      }
    }
    return changed;
  }

  bool substitute_equivalences() {
    std::unordered_set<std::uint64_t> binaries;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (alive_[i] && clauses_[i].size() == 2) binaries.insert(pair_key(clauses_[i][0], clauses_[i][1]));
    }
    std::vector<Equivalence> found;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (!alive_[i] || clauses_[i].size() != 2) continue;
      Lit a = clauses_[i][0];
      Lit b = clauses_[i][1];
      if (b.var < a.var) std::swap(a, b);
      // (a | b) & (~a | ~b) means a == ~b.
      if (!binaries.contains(pair_key(~a, ~b))) continue;
      found.push_back({a.var, b.var, !(a.negated != b.negated)});
    }
    if (found.empty()) return false;
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    ParityUnionFind uf(num_vars_);
    bool merged = false;
    for (const auto& e : found) {
      auto [rl, pl] = uf.find(e.lo);
      auto [rh, ph] = uf.find(e.hi);
      const bool parity = pl ^ ph ^ e.parity;
      if (rl == rh) {
        if (parity) {
          conflict_ = true;
          return true;
        }
        continue;
      }
      const Var root = std::min(rl, rh);
      const Var child = std::max(rl, rh);
      uf.attach(child, root, parity);
      map_.add_equiv(child, Lit{root, parity});
      ++stats_.equivalences;
      merged = true;
    }
    if (!merged) return false;

    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (!alive_[i]) continue;
      std::vector<Lit> out;
      out.reserve(clauses_[i].size());
      bool tautology = false;
      for (Lit l : clauses_[i]) {
        auto [root, parity] = uf.find(l.var);
        const Lit mapped{root, l.negated != parity};
        if (std::find(out.begin(), out.end(), ~mapped) != out.end()) {
          tautology = true;
          break;
        }
        if (std::find(out.begin(), out.end(), mapped) == out.end()) out.push_back(mapped);
      }
      if (tautology) {
        alive_[i] = false;
      } else {
        clauses_[i] = std::move(out);
      }
    }
    return true;
  }

  Var num_vars_;
  Assignment value_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<ClauseId> ids_;
  std::vector<bool> alive_;
  ReconstructionMap map_;
  SimplifyStats stats_;
  bool conflict_ = false;
};

}  // namespace

SimplifyResult simplify(const CnfFormula& f) { return Simplifier(f).run(); }

Assignment reconstruct(const Assignment& a, const ReconstructionMap& m, Var num_vars) {
  Assignment out(std::max(num_vars, a.num_vars()));
  for (Var v = 1; v <= a.num_vars(); ++v) {
    if (auto val = a.value(v)) out.set(v, *val);
  }
  const auto& records = m.records();
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (const auto* fixed = std::get_if<FixedRecord>(&*it)) {
      out.set(fixed->var, fixed->value);
    } else {
      const auto& eq = std::get<EquivRecord>(*it);
      const auto rep = out.value(eq.representative.var);
      if (!rep) {
        throw std::logic_error("reconstruction: representative x" + std::to_string(eq.representative.var) +
                               " of x" + std::to_string(eq.var) + " is unassigned");
      }
      out.set(eq.var, *rep != eq.representative.negated);
    }
  }
  for (Var v = 1; v <= num_vars; ++v) {
    if (!out.is_assigned(v)) out.set(v, false);
  }
  return out;
}

}  // namespace xorsat
