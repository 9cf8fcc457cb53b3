// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace xorsat {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool to_long(std::string_view tok, long long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

ParsedCnf parse_dimacs(std::istream& in) {
  ParsedCnf result;
  ParseStats& stats = result.stats;
  CnfFormula& f = result.formula;
  bool have_header = false;
  long long num_vars = 0;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;
  ClauseId next_id = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == 'c') continue;
    // SATLIB files terminate the clause list with a '%' line.
    if (tokens[0] == "%") break;
    if (tokens[0] == "p") {
      long long nc = 0;
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf" || !to_long(tokens[2], num_vars) ||
          !to_long(tokens[3], nc) || num_vars < 0 || nc < 0 || num_vars > 0x7fffffff) {
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      f = CnfFormula(static_cast<Var>(num_vars));
      stats.declared_clauses = static_cast<std::size_t>(nc);
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");
    for (auto tok : tokens) {
      long long value = 0;
      if (!to_long(tok, value)) {
        throw ParseError(lineno, "non-integer token '" + std::string(tok) + "'");
      }
      if (value == 0) {
        const std::size_t before = pending.size();
        std::vector<Lit> unique;
        for (Lit l : pending) {
          bool dup = false;
          for (Lit u : unique) dup = dup || u == l;
          if (!dup) unique.push_back(l);
        }
        stats.duplicate_literals += before - unique.size();
        ++stats.read_clauses;
        switch (f.add_clause(std::move(pending), next_id++)) {
          case AddStatus::Tautology:
            ++stats.tautologies;
            break;
          case AddStatus::Empty:
            ++stats.empty_clauses;
            break;
          case AddStatus::Added:
            break;
        }
        pending.clear();
        continue;
      }
      const long long mag = value < 0 ? -value : value;
      if (mag > num_vars) {
        throw ParseError(lineno, "literal " + std::to_string(value) + " exceeds declared " +
                                     std::to_string(num_vars) + " vars");
      }
      if (pending.empty()) pending_line = lineno;
      pending.push_back(Lit::from_dimacs(static_cast<int>(value)));
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "unterminated final clause (missing 0)");
  if (stats.read_clauses != stats.declared_clauses) {
    stats.warnings.push_back("header declares " + std::to_string(stats.declared_clauses) +
                             " clauses, read " + std::to_string(stats.read_clauses));
  }
  return result;
}

ParsedCnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

ParsedCnf parse_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto& c : f.clauses()) {
    for (Lit l : c.lits()) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

void write_model(std::ostream& out, const Assignment& model, Var num_vars) {
  out << "s SATISFIABLE\n";
  std::string line = "v";
  for (Var v = 1; v <= num_vars; ++v) {
    std::string lit = ' ' + std::to_string(model.get(v) ? static_cast<long long>(v) : -static_cast<long long>(v));
    if (line.size() + lit.size() > 78) {
      out << line << '\n';
      line = "v";
    }
    line += lit;
  }
  out << line << " 0\n";
}

void write_unknown(std::ostream& out) { out << "s UNKNOWN\n"; }

}  // namespace xorsat
