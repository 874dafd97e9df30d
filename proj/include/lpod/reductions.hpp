#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpod/dimacs.hpp"
#include "lpod/interpretation.hpp"
#include "lpod/program.hpp"
#include "lpod/semantics.hpp"

namespace lpod {

/// The two programs a 3CNF formula maps to: the second extends the first by
/// the single fact for the marker atom, and the formula is satisfiable
/// exactly when the pair is not strongly equivalent.
struct ReductionOutput {
  Program p1;
  Program p2;
  std::string atom_a;
  std::string atom_b;
  std::vector<std::pair<int, std::string>> var_map;
};

/// Each clause becomes a rule deriving the marker atom from the clause's
/// literal translation; both programs add the ordered disjunction of the two
/// marker atoms, and the second also adds the first marker as a fact.
ReductionOutput reduce_3sat(const CnfFormula& cnf);

/// Exhaustive two-valued scan, capped at 20 variables. Returns the first
/// satisfying assignment in increasing bitmask order (variable 1 is the
/// lowest bit), indexed so assignment[i] is the value of variable i+1.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& cnf);

bool satisfies(const CnfFormula& cnf, const std::vector<bool>& assignment);

/// One end-to-end check of the reduction against the SAT oracle.
struct ReductionCheck {
  bool passed = false;
  bool satisfiable = false;
  bool equivalent = false;
  std::string detail;
};

/// Runs the SAT oracle and the equivalence decision on the reduced pair and
/// checks they agree; for a satisfiable formula additionally checks that the
/// interpretation built from the satisfying assignment separates the pair,
/// and for a non-equivalent pair that the assignment read back from the
/// witness satisfies the formula.
ReductionCheck verify_reduction(const CnfFormula& cnf,
                                const EnumOptions& opts = {});

}  // namespace lpod
