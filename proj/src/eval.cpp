#include "lpod/eval.hpp"

namespace lpod {

TruthValue eval_body(const Rule& rule, const Interpretation& interp) {
  TruthValue body = TruthValue::T;
  for (const auto& atom : rule.body_pos) {
    body = eval_and(body, interp.value(atom));
  }
  for (const auto& atom : rule.body_neg) {
    body = eval_and(body, eval_not(interp.value(atom)));
  }
  return body;
}

TruthValue eval_head(const Rule& rule, const Interpretation& interp) {
  TruthValue head = TruthValue::FStar;
  for (const auto& atom : rule.head) {
    TruthValue v = interp.value(atom);
    if (v != TruthValue::FStar) {
      head = v;
      break;
    }
  }
  return head;
}

TruthValue eval_rule(const Rule& rule, const Interpretation& interp) {
  return eval_head(rule, interp) >= eval_body(rule, interp) ? TruthValue::T
                                                            : TruthValue::F;
}

bool is_model(const Program& program, const Interpretation& interp) {
  for (const auto& rule : program.rules()) {
    if (eval_rule(rule, interp) != TruthValue::T) return false;
  }
  return true;
}

}  // namespace lpod
