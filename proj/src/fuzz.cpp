#include "lpod/fuzz.hpp"

#include <algorithm>
#include <set>

#include "lpod/equivalence.hpp"
#include "lpod/errors.hpp"
#include "lpod/eval.hpp"
#include "packed_engine.hpp"

namespace lpod {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Distinct sample of `count` names via partial shuffle; deterministic.
std::vector<std::string> sample_distinct(const std::vector<std::string>& pool,
                                         int count, Rng& rng) {
  std::vector<std::string> scratch = pool;
  std::vector<std::string> out;
  for (int i = 0; i < count && i < int(scratch.size()); ++i) {
    int j = i + rng.below(int(scratch.size()) - i);
    std::swap(scratch[std::size_t(i)], scratch[std::size_t(j)]);
    out.push_back(scratch[std::size_t(i)]);
  }
  return out;
}

std::map<std::string, TruthValue> canonical(const AnswerSet& as) {
  return as.interpretation.nondefault_entries();
}

bool same_answer_sets(const std::vector<AnswerSet>& a,
                      const std::vector<AnswerSet>& b) {
  std::set<std::map<std::string, TruthValue>> ca, cb;
  for (const auto& as : a) ca.insert(canonical(as));
  for (const auto& as : b) cb.insert(canonical(as));
  return ca == cb;
}

/// Stable models embedded two-valued must be exactly the answer sets.
bool gl_embedding_matches(const Program& program, const CampaignHooks& hooks,
                          const EnumOptions& opts) {
  auto stables = hooks.stable_models_fn(program, opts);
  auto answers = hooks.answer_sets_fn(program, opts);
  std::set<std::map<std::string, TruthValue>> embedded, computed;
  for (const auto& s : stables) {
    embedded.insert(
        embed_stable_model(s, program.atoms()).nondefault_entries());
  }
  for (const auto& as : answers) computed.insert(canonical(as));
  return embedded == computed;
}

/// Greedy shrink: drop whole rules, then single body literals, as long as the
/// predicate keeps reporting a violation.
void shrink(std::vector<Program*> targets,
            const std::function<bool()>& violates) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Program* prog : targets) {
      const std::vector<Rule> rules = prog->rules();
      for (std::size_t i = 0; i < rules.size(); ++i) {
        std::vector<Rule> reduced = rules;
        reduced.erase(reduced.begin() + long(i));
        Program backup = *prog;
        *prog = Program(reduced);
        if (violates()) {
          changed = true;
          break;
        }
        *prog = backup;
      }
      if (changed) break;
    }
    if (changed) continue;
    for (Program* prog : targets) {
      const std::vector<Rule> rules = prog->rules();
      for (std::size_t i = 0; i < rules.size() && !changed; ++i) {
        for (int which = 0; which < 2 && !changed; ++which) {
          const auto& lits = which == 0 ? rules[i].body_pos : rules[i].body_neg;
          for (std::size_t j = 0; j < lits.size(); ++j) {
            std::vector<Rule> reduced = rules;
            auto& target_lits =
                which == 0 ? reduced[i].body_pos : reduced[i].body_neg;
            target_lits.erase(target_lits.begin() + long(j));
            Program backup = *prog;
            *prog = Program(reduced);
            if (violates()) {
              changed = true;
              break;
            }
            *prog = backup;
          }
        }
      }
      if (changed) break;
    }
  }
}

}  // namespace

Rng rng_for_iteration(std::uint64_t seed, int iteration) {
  return Rng(splitmix64(seed ^ splitmix64(std::uint64_t(iteration))));
}

std::vector<std::string> default_atom_names(int num_atoms) {
  std::vector<std::string> names;
  for (int i = 0; i < num_atoms; ++i) {
    if (i < 23) {
      names.emplace_back(1, char('a' + i));  // a..w; x is a keyword
    } else {
      names.push_back("a" + std::to_string(i));
    }
  }
  return names;
}

Program random_program_over(const std::vector<std::string>& atom_names,
                            int num_rules, int max_head, double neg_prob,
                            Rng& rng) {
  if (atom_names.empty() || num_rules <= 0) return Program();
  max_head = std::clamp(max_head, 1, int(atom_names.size()));

  std::vector<Rule> rules;
  int attempts = 0;
  while (int(rules.size()) < num_rules && attempts < num_rules * 100) {
    ++attempts;
    Rule rule;
    rule.head = sample_distinct(atom_names, 1 + rng.below(max_head), rng);
    int body_len = rng.below(int(atom_names.size()) + 1);
    for (const auto& atom : sample_distinct(atom_names, body_len, rng)) {
      (rng.chance(neg_prob) ? rule.body_neg : rule.body_pos).push_back(atom);
    }
    if (std::find(rules.begin(), rules.end(), rule) == rules.end()) {
      rules.push_back(std::move(rule));
    }
  }
  return Program(std::move(rules));
}

Program random_program(const GeneratorConfig& cfg, Rng& rng) {
  return random_program_over(default_atom_names(cfg.num_atoms), cfg.num_rules,
                             cfg.max_head, cfg.neg_prob, rng);
}

CampaignHooks CampaignHooks::defaults() {
  CampaignHooks hooks;
  hooks.answer_sets_fn = [](const Program& p, const EnumOptions& o) {
    return answer_sets(p, o);
  };
  hooks.most_preferred_fn = [](const Program& p, const EnumOptions& o) {
    return most_preferred(p, o);
  };
  hooks.stable_models_fn = [](const Program& p, const EnumOptions& o) {
    return gl_stable_models(p, o);
  };
  return hooks;
}

CampaignReport run_campaign(const GeneratorConfig& cfg,
                            const CampaignHooks& hooks) {
  CampaignReport report;
  report.cfg = cfg;

  // Room for the witness scaffold: one t-atom and one f-atom per program
  // atom, plus the case-2 atom.
  EnumOptions opts;
  opts.atom_cap = std::max<std::size_t>(std::size_t(cfg.num_atoms) * 3 + 1, 12);

  const std::vector<std::string> names = default_atom_names(cfg.num_atoms);

  for (int iteration = 0; iteration < cfg.iterations; ++iteration) {
    Rng rng = rng_for_iteration(cfg.seed, iteration);
    Program p1 = random_program(cfg, rng);
    // Every tenth pair is identical so the equivalent branch is always
    // exercised even when random draws rarely coincide.
    Program p2 = (iteration % 10 == 9) ? p1 : random_program(cfg, rng);
    ++report.iterations_run;

    auto record = [&](const std::string& check, Program rp1,
                      std::optional<Program> rp2, std::optional<Program> rctx,
                      const std::string& detail) {
      Violation v;
      v.check = check;
      v.iteration = iteration;
      v.seed = cfg.seed;
      v.p1 = std::move(rp1);
      v.p2 = std::move(rp2);
      v.context = std::move(rctx);
      v.detail = detail;
      report.violations.push_back(std::move(v));
    };

    bool equivalent = false;
    bool decided = false;
    try {
      EquivalenceVerdict v_mp = strong_eq(p1, p2, EqMode::most_preferred, opts);
      EquivalenceVerdict v_all = strong_eq(p1, p2, EqMode::all_answer_sets, opts);
      ++report.mode_checks;
      if (v_mp.equivalent != v_all.equivalent) {
        record("mode_coincidence", p1, p2, std::nullopt,
               "strong-equivalence modes disagree");
      }
      equivalent = v_mp.equivalent;
      decided = true;
      if (!equivalent) {
        ++report.nonequivalent_pairs;
        report.contexts_verified += 2;  // both mode runs verified a context
      } else {
        ++report.equivalent_pairs;
      }
    } catch (const VerificationError& err) {
      Program s1 = p1, s2 = p2;
      shrink({&s1, &s2}, [&]() {
        try {
          strong_eq(s1, s2, EqMode::most_preferred, opts);
          return false;
        } catch (const VerificationError&) {
          return true;
        } catch (...) {
          return false;
        }
      });
      record("context_validity", s1, s2, std::nullopt, err.what());
    }

    if (decided && equivalent) {
      // Context programs probe both programs: half of the alphabet is shared
      // with the pair, half is fresh.
      std::vector<std::string> shared = detail::sorted_union_atoms(p1, p2);
      if (shared.size() > std::size_t(std::max(1, cfg.num_atoms / 2))) {
        shared.resize(std::size_t(std::max(1, cfg.num_atoms / 2)));
      }
      std::vector<std::string> ctx_alphabet = shared;
      for (int i = 0; i < std::max(1, cfg.num_atoms / 2); ++i) {
        ctx_alphabet.push_back("ctx" + std::to_string(i));
      }
      for (int c = 0; c < cfg.contexts_per_pair; ++c) {
        Program ctx = random_program_over(ctx_alphabet, cfg.num_rules,
                                          cfg.max_head, cfg.neg_prob, rng);
        ++report.contexts_sampled;
        auto differs = [&](const Program& a, const Program& b,
                           const Program& context) {
          Program ua = a.union_with(context);
          Program ub = b.union_with(context);
          return !same_answer_sets(hooks.answer_sets_fn(ua, opts),
                                   hooks.answer_sets_fn(ub, opts)) ||
                 !same_answer_sets(hooks.most_preferred_fn(ua, opts),
                                   hooks.most_preferred_fn(ub, opts));
        };
        try {
          if (differs(p1, p2, ctx)) {
            Program s1 = p1, s2 = p2, sctx = ctx;
            shrink({&s1, &s2, &sctx}, [&]() {
              try {
                return logically_equivalent(s1, s2, opts).equivalent &&
                       differs(s1, s2, sctx);
              } catch (...) {
                return false;
              }
            });
            record("equivalent_pairs_share_answer_sets", s1, s2, sctx,
                   "answer sets diverge under a sampled context");
          }
        } catch (const CapExceededError& err) {
          record("cap", p1, p2, ctx, err.what());
        }
      }
    }

    // Stable-model oracle agreement on a normal draw.
    Program normal = random_program_over(names, cfg.num_rules, 1, cfg.neg_prob, rng);
    ++report.normal_checks;
    try {
      if (!gl_embedding_matches(normal, hooks, opts)) {
        Program s = normal;
        shrink({&s}, [&]() {
          try {
            return !gl_embedding_matches(s, hooks, opts);
          } catch (...) {
            return false;
          }
        });
        record("gl_oracle_agreement", s, std::nullopt, std::nullopt,
               "answer sets differ from embedded stable models");
      }
    } catch (const CapExceededError& err) {
      record("cap", normal, std::nullopt, std::nullopt, err.what());
    }
  }
  return report;
}

}  // namespace lpod
