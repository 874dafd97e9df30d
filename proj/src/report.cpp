#include "lpod/report.hpp"

#include <sstream>

#include "lpod/parser.hpp"

namespace lpod::report {

Json to_json(const Interpretation& interp) {
  Json out = Json::array();
  for (const auto& [atom, v] : interp.entries()) {
    out.push_back(Json::array({atom, std::string(to_string(v))}));
  }
  return out;
}

Json to_json(const AnswerSet& answer_set) {
  Json out;
  out["interpretation"] = to_json(answer_set.interpretation);
  out["fstar_set"] = answer_set.fstar_set;
  return out;
}

Json to_json(const EquivalenceVerdict& verdict) {
  Json out;
  out["equivalent"] = verdict.equivalent;
  if (verdict.mode) out["mode"] = std::string(to_string(*verdict.mode));
  if (verdict.witness) out["witness"] = to_json(*verdict.witness);
  if (verdict.separated) out["separated"] = std::string(to_string(*verdict.separated));
  if (verdict.context) out["context"] = serialize_program(*verdict.context);
  if (verdict.context_case) {
    out["context_case"] = std::string(to_string(*verdict.context_case));
  }
  if (verdict.discriminating) {
    out["discriminating_interpretation"] = to_json(*verdict.discriminating);
  }
  return out;
}

Json to_json(const ReductionOutput& reduction) {
  Json vars = Json::array();
  for (const auto& [var, atom] : reduction.var_map) {
    vars.push_back(Json::array({var, atom}));
  }
  Json out;
  out["p1"] = serialize_program(reduction.p1);
  out["p2"] = serialize_program(reduction.p2);
  out["a"] = reduction.atom_a;
  out["b"] = reduction.atom_b;
  out["var_map"] = vars;
  return out;
}

Json to_json(const ReductionCheck& check) {
  Json out;
  out["passed"] = check.passed;
  out["satisfiable"] = check.satisfiable;
  out["equivalent"] = check.equivalent;
  if (!check.detail.empty()) out["detail"] = check.detail;
  return out;
}

Json to_json(const CampaignReport& report) {
  Json cfg;
  cfg["num_atoms"] = report.cfg.num_atoms;
  cfg["num_rules"] = report.cfg.num_rules;
  cfg["max_head"] = report.cfg.max_head;
  cfg["neg_prob"] = report.cfg.neg_prob;
  cfg["seed"] = report.cfg.seed;
  cfg["iterations"] = report.cfg.iterations;
  cfg["contexts_per_pair"] = report.cfg.contexts_per_pair;

  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["check"] = v.check;
    item["iteration"] = v.iteration;
    item["seed"] = v.seed;
    item["p1"] = serialize_program(v.p1);
    if (v.p2) item["p2"] = serialize_program(*v.p2);
    if (v.context) item["context"] = serialize_program(*v.context);
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }

  Json out;
  out["config"] = std::move(cfg);
  out["iterations_run"] = report.iterations_run;
  out["equivalent_pairs"] = report.equivalent_pairs;
  out["nonequivalent_pairs"] = report.nonequivalent_pairs;
  out["contexts_sampled"] = report.contexts_sampled;
  out["contexts_verified"] = report.contexts_verified;
  out["mode_checks"] = report.mode_checks;
  out["normal_checks"] = report.normal_checks;
  out["violations"] = std::move(violations);
  return out;
}

Json document(std::string_view kind, Json payload) {
  Json out;
  out["schema"] = std::string(kSchema);
  out["kind"] = std::string(kind);
  out["result"] = std::move(payload);
  return out;
}

std::string render_interpretation(const Interpretation& interp) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [atom, v] : interp.entries()) {
    if (!first) out << ", ";
    out << "(" << atom << "," << to_string(v) << ")";
    first = false;
  }
  out << "}";
  return out.str();
}

namespace {

std::string dump(Json doc) { return doc.dump(2) + "\n"; }

std::string render_atom_set(const std::set<std::string>& fstar) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& atom : fstar) {
    if (!first) out << ", ";
    out << atom;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string models_report(const std::vector<Interpretation>& models,
                          Format format) {
  if (format == Format::structured) {
    Json payload = Json::array();
    for (const auto& m : models) payload.push_back(to_json(m));
    return dump(document("models", std::move(payload)));
  }
  std::ostringstream out;
  out << models.size() << " model" << (models.size() == 1 ? "" : "s") << "\n";
  for (const auto& m : models) out << render_interpretation(m) << "\n";
  return out.str();
}

std::string answer_sets_report(const std::vector<AnswerSet>& sets,
                               std::string_view kind, Format format) {
  if (format == Format::structured) {
    Json payload = Json::array();
    for (const auto& as : sets) payload.push_back(to_json(as));
    return dump(document(kind, std::move(payload)));
  }
  std::ostringstream out;
  out << sets.size() << " "
      << (kind == "most_preferred" ? "most-preferred answer set" : "answer set")
      << (sets.size() == 1 ? "" : "s") << "\n";
  for (const auto& as : sets) {
    out << render_interpretation(as.interpretation)
        << "  F*=" << render_atom_set(as.fstar_set) << "\n";
  }
  return out.str();
}

std::string stable_models_report(const std::vector<std::set<std::string>>& models,
                                 Format format) {
  if (format == Format::structured) {
    Json payload = Json::array();
    for (const auto& m : models) payload.push_back(m);
    return dump(document("stable_models", std::move(payload)));
  }
  std::ostringstream out;
  out << models.size() << " stable model" << (models.size() == 1 ? "" : "s")
      << "\n";
  for (const auto& m : models) {
    out << render_atom_set(m) << "\n";
  }
  return out.str();
}

std::string verdict_report(const EquivalenceVerdict& verdict, Format format) {
  if (format == Format::structured) {
    return dump(document("verdict", to_json(verdict)));
  }
  std::ostringstream out;
  if (verdict.equivalent) {
    out << "equivalent\n";
  } else {
    out << "not equivalent\n";
    out << "witness (model of " << (*verdict.separated == Separated::first_only
                                        ? "first program only"
                                        : "second program only")
        << "): " << render_interpretation(*verdict.witness) << "\n";
    if (verdict.discriminating) {
      out << "discriminating interpretation: "
          << render_interpretation(*verdict.discriminating) << "\n";
    }
    if (verdict.context_case) {
      out << "context (" << to_string(*verdict.context_case) << "):\n"
          << serialize_program(*verdict.context);
    }
  }
  if (verdict.mode) out << "mode: " << to_string(*verdict.mode) << "\n";
  return out.str();
}

std::string reduction_report(const ReductionOutput& reduction, Format format) {
  if (format == Format::structured) {
    return dump(document("reduction", to_json(reduction)));
  }
  std::ostringstream out;
  out << "% p1\n" << serialize_program(reduction.p1);
  out << "% p2\n" << serialize_program(reduction.p2);
  out << "% markers: " << reduction.atom_a << " " << reduction.atom_b << "\n";
  return out.str();
}

std::string reduction_check_report(const std::vector<ReductionCheck>& checks,
                                   Format format) {
  std::size_t passed = 0, sat = 0, unsat = 0;
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    (c.satisfiable ? sat : unsat) += 1;
  }
  if (format == Format::structured) {
    Json items = Json::array();
    for (const auto& c : checks) items.push_back(to_json(c));
    Json payload;
    payload["instances"] = checks.size();
    payload["passed"] = passed;
    payload["satisfiable"] = sat;
    payload["unsatisfiable"] = unsat;
    payload["checks"] = std::move(items);
    return dump(document("reduction_check", std::move(payload)));
  }
  std::ostringstream out;
  out << passed << "/" << checks.size() << " instances verified (" << sat
      << " satisfiable, " << unsat << " unsatisfiable)\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    out << (c.passed ? "ok " : "FAIL ") << "instance " << i
        << (c.satisfiable ? " sat" : " unsat")
        << (c.equivalent ? " equivalent" : " non-equivalent");
    if (!c.detail.empty()) out << " — " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::string campaign_report(const CampaignReport& report, Format format) {
  if (format == Format::structured) {
    return dump(document("campaign", to_json(report)));
  }
  std::ostringstream out;
  out << "campaign: " << report.iterations_run << " iterations, "
      << report.equivalent_pairs << " equivalent pairs, "
      << report.nonequivalent_pairs << " non-equivalent pairs, "
      << report.contexts_sampled << " contexts sampled, "
      << report.contexts_verified << " contexts verified, "
      << report.normal_checks << " stable-model checks\n";
  if (report.clean()) {
    out << "no violations\n";
  } else {
    out << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) {
      out << "violation [" << v.check << "] iteration " << v.iteration
          << " seed " << v.seed << ": " << v.detail << "\n";
      out << "p1:\n" << serialize_program(v.p1);
      if (v.p2) out << "p2:\n" << serialize_program(*v.p2);
      if (v.context) out << "context:\n" << serialize_program(*v.context);
    }
  }
  return out.str();
}

}  // namespace lpod::report
