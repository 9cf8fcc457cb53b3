// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "xorsat/bench.hpp"
#include "xorsat/dimacs.hpp"
#include "xorsat/generator.hpp"
#include "xorsat/solver.hpp"

namespace xorsat {

namespace {

struct SolveArgs {
  std::string file;
  std::uint32_t radius = 3;
  std::optional<std::uint32_t> theta;
  std::uint32_t theta_mult = 3;
  std::uint32_t theta_off = 2;
  std::uint32_t flip_mult = 2;
  std::uint32_t tries = 2;
  bool trace = false;
  std::string stats_path;
};

struct BenchArgs {
  std::vector<std::string> files;
  std::uint32_t reps = 1;
  std::string report_path;
};

struct GenArgs {
  std::uint32_t bits = 0;
  std::uint32_t samples = 0;
  std::uint32_t noise = 0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  ParsedCnf parsed;
  try {
    parsed = parse_dimacs_file(a.file);
  } catch (const std::exception& e) {
    err << "error: " << a.file << ": " << e.what() << '\n';
    return kExitError;
  }
  for (const auto& w : parsed.stats.warnings) err << "warning: " << a.file << ": " << w << '\n';

  SolverConfig cfg;
  cfg.radius = a.radius;
  cfg.theta_override = a.theta;
  cfg.theta_multiplier = a.theta_mult;
  cfg.theta_offset = a.theta_off;
  cfg.flip_multiplier = a.flip_mult;
  cfg.tries = a.tries;

  const auto result = solve(parsed.formula, cfg, a.trace ? &err : nullptr);
  out << "c vars " << parsed.formula.num_vars() << " clauses " << parsed.formula.num_clauses() << '\n';
  if (result.status == SolveStatus::Satisfied) {
    write_model(out, result.model, parsed.formula.num_vars());
  } else {
    out << "c reason " << to_string(result.reason) << '\n';
    write_unknown(out);
  }
  if (!a.stats_path.empty()) {
    std::ofstream stats(a.stats_path);
    if (!stats) {
      err << "error: cannot write " << a.stats_path << '\n';
      return kExitError;
    }
    for (const auto& [k, v] : result.report()) stats << k << '=' << v << '\n';
  }
  return result.status == SolveStatus::Satisfied ? kExitSatisfied : kExitUnknown;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::filesystem::path> files(a.files.begin(), a.files.end());
  SolverConfig cfg;
  const auto report = run_bench(files, cfg, a.reps);
  report.write_table(out);
  for (const auto& row : report.rows) {
    if (!row.error.empty()) err << "error: " << row.name << ": " << row.error << '\n';
  }
  if (!a.report_path.empty()) {
    std::ofstream rec(a.report_path);
    if (!rec) {
      err << "error: cannot write " << a.report_path << '\n';
      return kExitError;
    }
    report.write_records(rec);
  }
  return kExitUnknown;
}

int do_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  GeneratedInstance inst;
  try {
    inst = generate_parity({a.bits, a.samples, a.noise, a.seed});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  auto emit = [&](std::ostream& os) {
    os << "c noisy parity: bits " << a.bits << " samples " << a.samples << " noise " << a.noise << " seed "
       << a.seed << '\n';
    os << "c planted";
    for (Var v = 1; v <= inst.formula.num_vars(); ++v) os << ' ' << (inst.planted.get(v) ? "" : "-") << v;
    os << '\n';
    write_dimacs(os, inst.formula);
  };
  if (a.out_path.empty() || a.out_path == "-") {
    emit(out);
    return 0;
  }
  std::ofstream file(a.out_path);
  if (!file) {
    err << "error: cannot write " << a.out_path << '\n';
    return kExitError;
  }
  emit(file);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"xorsat: hybrid XOR / local-search SAT solver for parity instances"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a DIMACS CNF file");
  solve_cmd->add_option("file", solve_args.file, "DIMACS CNF input")->required();
  solve_cmd->add_option("--radius", solve_args.radius, "Hamming-ball radius");
  auto* theta_opt = solve_cmd->add_option("--theta", solve_args.theta, "Absolute frequent-variable threshold");
  auto* mult_opt = solve_cmd->add_option("--theta-mult", solve_args.theta_mult, "Threshold multiplier");
  auto* off_opt = solve_cmd->add_option("--theta-off", solve_args.theta_off, "Threshold offset");
  theta_opt->excludes(mult_opt)->excludes(off_opt);
  solve_cmd->add_option("--flip-mult", solve_args.flip_mult, "Flips per try as a multiple of #clauses");
  solve_cmd->add_option("--tries", solve_args.tries, "Local-search tries");
  solve_cmd->add_flag("--trace", solve_args.trace, "Write the local-search flip trace to stderr");
  solve_cmd->add_option("--stats", solve_args.stats_path, "Write key=value statistics to this file");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark a list of DIMACS files");
  bench_cmd->add_option("files", bench_args.files, "DIMACS CNF inputs");
  bench_cmd->add_option("--reps", bench_args.reps, "Repetitions per instance (minimum time is reported)");
  bench_cmd->add_option("--report", bench_args.report_path, "Write key=value records to this file");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a planted noisy-parity instance");
  gen_cmd->add_option("--bits", gen_args.bits, "Secret length")->required();
  gen_cmd->add_option("--samples", gen_args.samples, "Number of samples")->required();
  gen_cmd->add_option("--noise", gen_args.noise, "Noisy samples")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed");
  gen_cmd->add_option("--out", gen_args.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  if (*solve_cmd) return do_solve(solve_args, out, err);
  if (*bench_cmd) return do_bench(bench_args, out, err);
  return do_gen(gen_args, out, err);
}

}  // namespace xorsat
