// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/gf2.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace xorsat {

std::size_t EchelonSystem::frequent_rows() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.cls == RowClass::Frequent; }));
}

std::size_t EchelonSystem::other_rows() const { return rows.size() - frequent_rows(); }

std::vector<Var> pivot_preference(const CnfFormula& f, std::span<const Var> frequent) {
  std::vector<bool> is_frequent(f.num_vars() + 1, false);
  for (Var v : frequent) is_frequent[v] = true;
  std::vector<Var> order;
  order.reserve(f.num_vars());
  for (Var v = 1; v <= f.num_vars(); ++v) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](Var a, Var b) {
    if (is_frequent[a] != is_frequent[b]) return static_cast<bool>(is_frequent[a]);
    return f.occurrences(a) > f.occurrences(b);
  });
  return order;
}

EchelonSystem gauss_jordan(std::span<const XorEquation> eqs, std::span<const Var> pivot_order,
                           std::span<const Var> frequent) {
  // Column order: preferred variables first, then the rest ascending.
  std::vector<Var> present;
  for (const auto& e : eqs) present.insert(present.end(), e.vars.begin(), e.vars.end());
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  std::vector<Var> columns;
  std::unordered_map<Var, std::size_t> column_of;
  for (Var v : pivot_order) {
    if (std::binary_search(present.begin(), present.end(), v) && !column_of.contains(v)) {
      column_of.emplace(v, columns.size());
      columns.push_back(v);
    }
  }
  for (Var v : present) {
    if (!column_of.contains(v)) {
      column_of.emplace(v, columns.size());
      columns.push_back(v);
    }
  }

  const std::size_t ncols = columns.size();
  struct Row {
    BitVec bits;
    bool rhs;
  };
  std::vector<Row> rows;
  rows.reserve(eqs.size());
  for (const auto& e : eqs) {
    Row r{BitVec(ncols), e.rhs};
    for (Var v : e.vars) r.bits.flip(column_of.at(v));
    rows.push_back(std::move(r));
  }

  EchelonSystem sys;
  std::vector<std::size_t> pivot_col;  // per processed row
  std::vector<bool> is_pivot(ncols, false);
  std::size_t done = 0;  // rows[0, done) are pivot rows
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t hit = rows.size();
    for (std::size_t r = done; r < rows.size(); ++r) {
      if (rows[r].bits.test(c)) {
        hit = r;
        break;
      }
    }
    if (hit == rows.size()) continue;
    // Keep the remaining rows in input order.
    std::rotate(rows.begin() + static_cast<std::ptrdiff_t>(done), rows.begin() + static_cast<std::ptrdiff_t>(hit),
                rows.begin() + static_cast<std::ptrdiff_t>(hit) + 1);
    const Row& p = rows[done];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != done && rows[r].bits.test(c)) {
        rows[r].bits ^= p.bits;
        rows[r].rhs ^= p.rhs;
      }
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++done;
  }
  for (std::size_t r = done; r < rows.size(); ++r) {
    // All columns were processed, so leftover rows are empty.
    if (rows[r].rhs) {
      sys.inconsistent = true;
      sys.rows.clear();
      sys.free_vars.clear();
      return sys;
    }
    ++sys.dropped_rows;
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  std::sort(free_cols.begin(), free_cols.end(), [&](auto a, auto b) { return columns[a] < columns[b]; });
  for (auto c : free_cols) sys.free_vars.push_back(columns[c]);

  std::vector<bool> is_frequent_col(ncols, false);
  for (Var v : frequent) {
    if (auto it = column_of.find(v); it != column_of.end()) is_frequent_col[it->second] = true;
  }
  for (std::size_t r = 0; r < done; ++r) {
    EchelonRow row;
    row.pivot = columns[pivot_col[r]];
    row.constant = rows[r].rhs;
    row.coeffs = BitVec(free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      if (rows[r].bits.test(free_cols[j])) row.coeffs.set(j);
    }
    row.cls = is_frequent_col[pivot_col[r]] ? RowClass::Frequent : RowClass::Other;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::vector<XorEquation> to_equations(const EchelonSystem& sys) {
  std::vector<XorEquation> out;
  for (const auto& row : sys.rows) {
    std::vector<Var> vars{row.pivot};
    for (std::size_t j = 0; j < sys.free_vars.size(); ++j) {
      if (row.coeffs.test(j)) vars.push_back(sys.free_vars[j]);
    }
    out.push_back(XorEquation::from(std::move(vars), row.constant));
  }
  return out;
}

void eval_rows(const EchelonSystem& sys, const BitVec& y, RowSelection which, Assignment& out) {
  if (sys.inconsistent) throw std::invalid_argument("eval_rows on an inconsistent system");
  if (y.size() != sys.free_vars.size()) throw std::invalid_argument("eval_rows: y has wrong length");
  for (const auto& row : sys.rows) {
    if (which == RowSelection::Frequent && row.cls != RowClass::Frequent) continue;
    if (which == RowSelection::Other && row.cls != RowClass::Other) continue;
    out.set(row.pivot, row.constant != row.coeffs.dot(y));
  }
}

Assignment eval_rows(const EchelonSystem& sys, const BitVec& y, RowSelection which) {
  Assignment out;
  eval_rows(sys, y, which, out);
  return out;
}

void dump_system(std::ostream& out, const EchelonSystem& sys) {
  out << "pivot |";
  for (Var v : sys.free_vars) out << ' ' << v;
  out << " | const\n";
  if (sys.inconsistent) {
    out << "inconsistent\n";
    return;
  }
  for (const auto& row : sys.rows) {
    out << row.pivot << (row.cls == RowClass::Frequent ? " X |" : " Z |");
    for (std::size_t j = 0; j < sys.free_vars.size(); ++j) out << ' ' << (row.coeffs.test(j) ? 1 : 0);
    out << " | " << (row.constant ? 1 : 0) << '\n';
  }
}

}  // namespace xorsat
