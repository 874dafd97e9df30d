#include "lpod/dimacs.hpp"

#include <cstdlib>
#include <sstream>

#include "lpod/errors.hpp"

namespace lpod {

CnfFormula parse_dimacs(std::string_view text, bool pad_short_clauses) {
  CnfFormula cnf;
  bool header_seen = false;
  std::size_t expected_clauses = 0;
  std::vector<int> pending;

  auto finish_clause = [&](std::size_t line_no) {
    if (pending.empty()) {
      throw ParseError(line_no, 1, "empty clause");
    }
    if (pending.size() > 3 || (pending.size() < 3 && !pad_short_clauses)) {
      throw ParseError(line_no, 1,
                       "clause with " + std::to_string(pending.size()) +
                           " literals (expected 3)");
    }
    while (pending.size() < 3) pending.push_back(pending.back());
    for (int lit : pending) {
      int var = std::abs(lit);
      if (var < 1 || var > cnf.num_vars) {
        throw ParseError(line_no, 1,
                         "literal " + std::to_string(lit) +
                             " out of range for " + std::to_string(cnf.num_vars) +
                             " variables");
      }
    }
    cnf.clauses.push_back({pending[0], pending[1], pending[2]});
    pending.clear();
  };

  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream fields(line);
    if (!header_seen) {
      std::string p, kind;
      long vars = 0, clauses = 0;
      if (!(fields >> p >> kind >> vars >> clauses) || p != "p" || kind != "cnf" ||
          vars < 1 || clauses < 0) {
        throw ParseError(line_no, 1, "expected header 'p cnf <vars> <clauses>'");
      }
      cnf.num_vars = static_cast<int>(vars);
      expected_clauses = static_cast<std::size_t>(clauses);
      header_seen = true;
      continue;
    }
    int lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        finish_clause(line_no);
      } else {
        pending.push_back(lit);
      }
    }
    if (!fields.eof()) {
      throw ParseError(line_no, 1, "expected integer literal");
    }
  }
  if (!header_seen) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'p cnf' header");
  }
  if (!pending.empty()) {
    throw ParseError(line_no, 1, "unterminated clause (missing 0)");
  }
  if (cnf.clauses.size() != expected_clauses) {
    throw ParseError(line_no, 1,
                     "header declares " + std::to_string(expected_clauses) +
                         " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string serialize_dimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    out << clause[0] << " " << clause[1] << " " << clause[2] << " 0\n";
  }
  return out.str();
}

}  // namespace lpod
