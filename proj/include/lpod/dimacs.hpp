#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace lpod {

/// A 3CNF instance in DIMACS sign convention: positive literal v, negative
/// literal -v, variables numbered 1..num_vars. Clauses have exactly three
/// literals; repeated literals are allowed.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

/// Standard DIMACS: a `p cnf <vars> <clauses>` header, `c` comment lines,
/// clauses terminated by 0. A clause with fewer than three literals is an
/// error unless `pad_short_clauses` is set, in which case its last literal is
/// repeated up to length three. Throws ParseError on malformed input.
CnfFormula parse_dimacs(std::string_view text, bool pad_short_clauses = false);

std::string serialize_dimacs(const CnfFormula& cnf);

}  // namespace lpod
