#pragma once

#include <string>
#include <string_view>

#include "lpod/program.hpp"

namespace lpod {

/// Parses the textual rule format:
///
///   rule    := head [ ("<-" | ":-") [ body ] ] "."
///   head    := atom { "x" atom }
///   body    := literal { "," literal }
///   literal := [ "not" ] atom
///   atom    := lowercase letter, then letters / digits / underscores
///
/// "%" starts a comment running to end of line. Duplicate rules are merged.
/// Throws ParseError with line/column on malformed input.
Program parse_program(std::string_view text);

/// Deterministic inverse of parse_program: one rule per line, insertion
/// order, facts without an arrow. parse_program(serialize_program(p)) == p.
std::string serialize_program(const Program& program);

std::string serialize_rule(const Rule& rule);

}  // namespace lpod
