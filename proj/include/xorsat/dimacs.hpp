// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xorsat/formula.hpp"

namespace xorsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseStats {
  std::size_t declared_clauses = 0;
  std::size_t read_clauses = 0;  // including filtered ones
  std::size_t tautologies = 0;
  std::size_t duplicate_literals = 0;
  std::size_t empty_clauses = 0;
  std::vector<std::string> warnings;
};

struct ParsedCnf {
  CnfFormula formula;
  ParseStats stats;
};

/// Reads DIMACS CNF. Clause ids are the 0-based position of the clause in
/// the input, so filtered tautologies leave gaps.
ParsedCnf parse_dimacs(std::istream& in);
ParsedCnf parse_dimacs(std::string_view text);
/// Throws std::runtime_error when the file cannot be opened.
ParsedCnf parse_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const CnfFormula& f);

/// SAT-competition answer: "s SATISFIABLE" plus "v" lines, or "s UNKNOWN".
void write_model(std::ostream& out, const Assignment& model, Var num_vars);
void write_unknown(std::ostream& out);

}  // namespace xorsat
