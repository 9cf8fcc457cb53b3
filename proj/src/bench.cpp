// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

#include "xorsat/dimacs.hpp"

namespace xorsat {

BenchReport run_bench(const std::vector<std::filesystem::path>& files, const SolverConfig& cfg,
                      std::uint32_t repetitions) {
  BenchReport report;
  repetitions = std::max<std::uint32_t>(repetitions, 1);
  for (const auto& path : files) {
    BenchRow row;
    row.name = path.stem().string();
    try {
      const auto parsed = parse_dimacs_file(path);
      row.vars = parsed.formula.num_vars();
      row.clauses = parsed.formula.num_clauses();
      row.time = std::numeric_limits<double>::infinity();
      for (std::uint32_t r = 0; r < repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        auto result = solve(parsed.formula, cfg);
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        row.rep_times.push_back(t);
        if (t < row.time) {
          row.time = t;
          row.stats = result.stats;
          row.status = to_string(result.status);
        }
      }
    } catch (const std::exception& e) {
      row.status = "ERROR";
      row.error = e.what();
      row.time = 0;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void BenchReport::write_table(std::ostream& out) const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-16s %7s %8s %-12s %9s %9s %9s %9s %9s %5s\n", "instance", "#var", "#clause",
                "status", "time", "simplify", "search", "elim", "repair", "dist");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-16s %7u %8zu %-12s %9.3f %9.3f %9.3f %9.3f %9.3f %5lld\n", r.name.c_str(),
                  r.vars, r.clauses, r.status.c_str(), r.time, r.stats.times.simplify, r.stats.times.search,
                  r.stats.times.eliminate, r.stats.times.repair, static_cast<long long>(r.stats.hit_distance));
    out << buf;
  }
}

void BenchReport::write_records(std::ostream& out) const {
  for (const auto& r : rows) {
    out << "name=" << r.name << " vars=" << r.vars << " clauses=" << r.clauses << " status=" << r.status
        << " time=" << r.time;
    if (!r.error.empty()) {
      std::string e = r.error;
      std::replace(e.begin(), e.end(), ' ', '_');
      out << " error=" << e;
    } else {
      for (const auto& [k, v] : report_stats(r.stats)) out << ' ' << k << '=' << v;
    }
    out << '\n';
  }
}

}  // namespace xorsat
