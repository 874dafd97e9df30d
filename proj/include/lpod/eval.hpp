#pragma once

#include "lpod/interpretation.hpp"
#include "lpod/program.hpp"
#include "lpod/truth_value.hpp"

namespace lpod {

/// Conjunction over the body literals; T for an empty body.
TruthValue eval_body(const Rule& rule, const Interpretation& interp);

/// Ordered disjunction folded over the head: the first non-F* head value,
/// or F* when every head atom is F*.
TruthValue eval_head(const Rule& rule, const Interpretation& interp);

/// Implications take only the values T and F: T exactly when the head value
/// is at least the body value in the total order.
TruthValue eval_rule(const Rule& rule, const Interpretation& interp);

/// True when every rule evaluates to T.
bool is_model(const Program& program, const Interpretation& interp);

}  // namespace lpod
