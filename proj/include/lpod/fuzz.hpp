#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpod/program.hpp"
#include "lpod/semantics.hpp"

namespace lpod {

/// Knobs for the random-program generator and the differential campaign.
struct GeneratorConfig {
  int num_atoms = 4;
  int num_rules = 4;
  int max_head = 3;
  double neg_prob = 0.3;
  std::uint64_t seed = 0;
  int iterations = 100;
  int contexts_per_pair = 2;
};

/// Deterministic stream; all sampling goes through this so a (seed, iteration)
/// pair replays bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

/// Per-iteration stream derived from (seed, iteration index); iterations stay
/// reproducible under any execution order.
Rng rng_for_iteration(std::uint64_t seed, int iteration);

/// `num_rules` distinct rules over the given alphabet: head length uniform in
/// [1, max_head] with distinct head atoms, body atoms sampled without
/// duplication, each negated with probability neg_prob.
Program random_program_over(const std::vector<std::string>& atom_names,
                            int num_rules, int max_head, double neg_prob,
                            Rng& rng);

/// Same, over the default alphabet of cfg.num_atoms atoms.
Program random_program(const GeneratorConfig& cfg, Rng& rng);

std::vector<std::string> default_atom_names(int num_atoms);

struct Violation {
  std::string check;
  int iteration = 0;
  std::uint64_t seed = 0;
  Program p1;
  std::optional<Program> p2;
  std::optional<Program> context;
  std::string detail;
};

struct CampaignReport {
  GeneratorConfig cfg;
  int iterations_run = 0;
  int equivalent_pairs = 0;
  int nonequivalent_pairs = 0;
  int contexts_sampled = 0;
  int contexts_verified = 0;
  int mode_checks = 0;
  int normal_checks = 0;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
};

/// Replaceable evaluators for the campaign's properties. Tests inject broken
/// variants here to confirm the campaign actually detects violations.
struct CampaignHooks {
  std::function<std::vector<AnswerSet>(const Program&, const EnumOptions&)>
      answer_sets_fn;
  std::function<std::vector<AnswerSet>(const Program&, const EnumOptions&)>
      most_preferred_fn;
  std::function<std::vector<std::set<std::string>>(const Program&,
                                                   const EnumOptions&)>
      stable_models_fn;

  static CampaignHooks defaults();
};

/// Differential campaign. Per iteration it draws a pair of programs and
/// checks: (a) logically equivalent pairs have equal answer sets and equal
/// most-preferred answer sets under every sampled context program, (b)
/// non-equivalent pairs yield a verified separating context in both strong-
/// equivalence modes, whose verdicts must agree, and (c) a normal draw's
/// answer sets coincide with its stable models under the two-valued
/// embedding. Violations are greedily shrunk and reported with reproducers.
CampaignReport run_campaign(const GeneratorConfig& cfg,
                            const CampaignHooks& hooks = CampaignHooks::defaults());

}  // namespace lpod
