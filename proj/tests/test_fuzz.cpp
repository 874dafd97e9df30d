#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lpod/fuzz.hpp"
#include "lpod/interpretation.hpp"
#include "lpod/parser.hpp"
#include "lpod/report.hpp"
#include "lpod/semantics.hpp"

using namespace lpod;

namespace {

GeneratorConfig small_cfg() {
  GeneratorConfig cfg;
  cfg.num_atoms = 4;
  cfg.num_rules = 3;
  cfg.max_head = 3;
  cfg.neg_prob = 0.4;
  cfg.seed = 42;
  cfg.iterations = 150;
  cfg.contexts_per_pair = 2;
  return cfg;
}

/// Broken answer-set evaluator: keeps every minimal model, dropping the
/// solidity requirement.
CampaignHooks without_solidity_filter() {
  CampaignHooks hooks = CampaignHooks::defaults();
  hooks.answer_sets_fn = [](const Program& p, const EnumOptions& o) {
    auto models = enumerate_models(p, o);
    std::vector<AnswerSet> out;
    for (const auto& m : models) {
      bool minimal = std::none_of(models.begin(), models.end(),
                                  [&](const Interpretation& n) {
                                    return interp_prec(n, m);
                                  });
      if (minimal) out.emplace_back(m);
    }
    return out;
  };
  return hooks;
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
  GeneratorConfig cfg = small_cfg();
  Rng a = rng_for_iteration(cfg.seed, 3);
  Rng b = rng_for_iteration(cfg.seed, 3);
  CHECK(serialize_program(random_program(cfg, a)) ==
        serialize_program(random_program(cfg, b)));
  Rng c = rng_for_iteration(cfg.seed, 4);
  CHECK(serialize_program(random_program(cfg, a)) !=
        serialize_program(random_program(cfg, c)));  // overwhelmingly likely
}

TEST_CASE("head length one forces normal programs") {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    Program p = random_program_over(default_atom_names(4), 4, 1, 0.5, rng);
    CHECK(p.is_normal());
  }
}

TEST_CASE("zero rules gives the empty program") {
  Rng rng(1);
  GeneratorConfig cfg;
  cfg.num_rules = 0;
  CHECK(random_program(cfg, rng).empty());
}

TEST_CASE("generated rules have distinct head atoms and distinct body atoms") {
  Rng rng(9);
  for (int i = 0; i < 80; ++i) {
    Program p = random_program_over(default_atom_names(5), 3, 4, 0.5, rng);
    for (const Rule& r : p.rules()) {
      std::set<std::string> heads(r.head.begin(), r.head.end());
      CHECK(heads.size() == r.head.size());
      std::set<std::string> body(r.body_pos.begin(), r.body_pos.end());
      body.insert(r.body_neg.begin(), r.body_neg.end());
      CHECK(body.size() == r.body_pos.size() + r.body_neg.size());
    }
  }
}

TEST_CASE("the default alphabet avoids the keyword letter") {
  auto names = default_atom_names(26);
  CHECK(std::find(names.begin(), names.end(), "x") == names.end());
  for (const auto& name : names) CHECK(is_valid_atom_name(name));
}

TEST_CASE("a clean campaign reports its branch coverage") {
  CampaignReport report = run_campaign(small_cfg());
  CHECK(report.clean());
  CHECK(report.iterations_run == 150);
  CHECK(report.equivalent_pairs >= 15);  // the identical draws at least
  CHECK(report.nonequivalent_pairs > 0);
  CHECK(report.contexts_sampled > 0);
  CHECK(report.contexts_verified > 0);
  CHECK(report.mode_checks == 150);
  CHECK(report.normal_checks == 150);
}

TEST_CASE("campaigns replay bit-for-bit from the seed") {
  CampaignReport a = run_campaign(small_cfg());
  CampaignReport b = run_campaign(small_cfg());
  CHECK(report::to_json(a) == report::to_json(b));
}

TEST_CASE("a mutant that drops the solidity filter is caught") {
  GeneratorConfig cfg = small_cfg();
  cfg.iterations = 60;
  cfg.neg_prob = 0.6;
  CampaignReport report = run_campaign(cfg, without_solidity_filter());
  REQUIRE_FALSE(report.clean());
  bool saw_oracle_violation = false;
  for (const auto& v : report.violations) {
    if (v.check == "gl_oracle_agreement" ||
        v.check == "equivalent_pairs_share_answer_sets") {
      saw_oracle_violation = true;
    }
  }
  CHECK(saw_oracle_violation);
}

TEST_CASE("shrunk counterexamples still violate the property") {
  GeneratorConfig cfg = small_cfg();
  cfg.iterations = 60;
  cfg.neg_prob = 0.6;
  CampaignHooks mutant = without_solidity_filter();
  CampaignReport report = run_campaign(cfg, mutant);
  REQUIRE_FALSE(report.clean());
  EnumOptions opts{std::size_t(cfg.num_atoms) * 3 + 1};
  for (const auto& v : report.violations) {
    if (v.check != "gl_oracle_agreement") continue;
    // Re-establish the mismatch on the shrunk reproducer.
    auto stables = mutant.stable_models_fn(v.p1, opts);
    auto answers = mutant.answer_sets_fn(v.p1, opts);
    std::set<std::map<std::string, TruthValue>> embedded, computed;
    for (const auto& s : stables) {
      embedded.insert(embed_stable_model(s, v.p1.atoms()).nondefault_entries());
    }
    for (const auto& as : answers) {
      computed.insert(as.interpretation.nondefault_entries());
    }
    CHECK(embedded != computed);
  }
}
