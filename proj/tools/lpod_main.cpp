#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lpod/equivalence.hpp"
#include "lpod/errors.hpp"
#include "lpod/fuzz.hpp"
#include "lpod/parser.hpp"
#include "lpod/reductions.hpp"
#include "lpod/report.hpp"
#include "lpod/semantics.hpp"

namespace {

using lpod::report::Format;

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 70;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

lpod::Program load_program(const std::string& path) {
  return lpod::parse_program(read_file(path));
}

struct CommonFlags {
  bool json = false;
  std::size_t cap = 12;

  Format format() const { return json ? Format::structured : Format::text; }
  lpod::EnumOptions options() const { return {cap}; }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json, "emit the structured lpod-lab/1 report");
  cmd->add_option("--cap", flags.cap,
                  "maximum atom count for exhaustive enumeration")
      ->capture_default_str();
}

lpod::CnfFormula random_3cnf(int num_vars, int num_clauses, lpod::Rng& rng) {
  lpod::CnfFormula cnf;
  cnf.num_vars = num_vars;
  int attempts = 0;
  while (int(cnf.clauses.size()) < num_clauses && attempts < num_clauses * 200) {
    ++attempts;
    int v1 = 1 + rng.below(num_vars);
    int v2 = 1 + rng.below(num_vars);
    int v3 = 1 + rng.below(num_vars);
    if (v1 == v2 || v1 == v3 || v2 == v3) continue;
    std::array<int, 3> clause = {rng.chance(0.5) ? v1 : -v1,
                                 rng.chance(0.5) ? v2 : -v2,
                                 rng.chance(0.5) ? v3 : -v3};
    // Canonical variable order so permuted duplicates dedupe as one clause.
    std::sort(clause.begin(), clause.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    if (std::find(cnf.clauses.begin(), cnf.clauses.end(), clause) ==
        cnf.clauses.end()) {
      cnf.clauses.push_back(clause);
    }
  }
  return cnf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LPOD four-valued semantics laboratory"};
  app.require_subcommand(1);

  std::function<int()> action;

  // models / answersets / preferred / stable
  struct SingleFileCmd {
    std::string name;
    std::string help;
  };
  const SingleFileCmd kSingles[] = {
      {"models", "all four-valued models of a program"},
      {"answersets", "answer sets (solid minimal models)"},
      {"preferred", "most-preferred answer sets"},
      {"stable", "classical stable models of a normal program"},
  };
  for (const auto& spec : kSingles) {
    auto* cmd = app.add_subcommand(spec.name, spec.help);
    auto flags = std::make_shared<CommonFlags>();
    auto path = std::make_shared<std::string>();
    cmd->add_option("file", *path, "program file (.lpod)")->required();
    add_common(cmd, *flags);
    std::string name = spec.name;
    cmd->callback([&action, name, path, flags] {
      action = [name, path, flags]() -> int {
        lpod::Program program = load_program(*path);
        if (name == "models") {
          std::cout << lpod::report::models_report(
              lpod::enumerate_models(program, flags->options()),
              flags->format());
        } else if (name == "answersets") {
          std::cout << lpod::report::answer_sets_report(
              lpod::answer_sets(program, flags->options()), "answer_sets",
              flags->format());
        } else if (name == "preferred") {
          std::cout << lpod::report::answer_sets_report(
              lpod::most_preferred(program, flags->options()), "most_preferred",
              flags->format());
        } else {
          std::cout << lpod::report::stable_models_report(
              lpod::gl_stable_models(program, flags->options()),
              flags->format());
        }
        return kExitOk;
      };
    });
  }

  // eq
  {
    auto* cmd = app.add_subcommand(
        "eq", "decide strong equivalence of two programs");
    auto flags = std::make_shared<CommonFlags>();
    auto paths = std::make_shared<std::pair<std::string, std::string>>();
    auto mode = std::make_shared<std::string>("most_preferred");
    cmd->add_option("first", paths->first, "first program")->required();
    cmd->add_option("second", paths->second, "second program")->required();
    cmd->add_option("--mode", *mode, "most_preferred or all_answer_sets")
        ->check(CLI::IsMember({"most_preferred", "all_answer_sets"}))
        ->capture_default_str();
    add_common(cmd, *flags);
    cmd->callback([&action, paths, mode, flags] {
      action = [paths, mode, flags]() -> int {
        lpod::EqMode eq_mode = *mode == "all_answer_sets"
                                   ? lpod::EqMode::all_answer_sets
                                   : lpod::EqMode::most_preferred;
        lpod::EquivalenceVerdict verdict =
            lpod::strong_eq(load_program(paths->first),
                            load_program(paths->second), eq_mode,
                            flags->options());
        std::cout << lpod::report::verdict_report(verdict, flags->format());
        return verdict.equivalent ? kExitOk : kExitNotEquivalent;
      };
    });
  }

  // normal-eq
  {
    auto* cmd = app.add_subcommand(
        "normal-eq",
        "decide strong equivalence of two normal programs via three-valued models");
    auto flags = std::make_shared<CommonFlags>();
    auto paths = std::make_shared<std::pair<std::string, std::string>>();
    cmd->add_option("first", paths->first, "first program")->required();
    cmd->add_option("second", paths->second, "second program")->required();
    add_common(cmd, *flags);
    cmd->callback([&action, paths, flags] {
      action = [paths, flags]() -> int {
        lpod::EquivalenceVerdict verdict =
            lpod::normal_strong_eq(load_program(paths->first),
                                   load_program(paths->second),
                                   flags->options());
        std::cout << lpod::report::verdict_report(verdict, flags->format());
        return verdict.equivalent ? kExitOk : kExitNotEquivalent;
      };
    });
  }

  // witness-context
  {
    auto* cmd = app.add_subcommand(
        "witness-context",
        "synthesize and verify a separating context for a non-equivalent pair");
    auto flags = std::make_shared<CommonFlags>();
    auto paths = std::make_shared<std::pair<std::string, std::string>>();
    cmd->add_option("first", paths->first, "first program")->required();
    cmd->add_option("second", paths->second, "second program")->required();
    add_common(cmd, *flags);
    cmd->callback([&action, paths, flags] {
      action = [paths, flags]() -> int {
        lpod::Program p1 = load_program(paths->first);
        lpod::Program p2 = load_program(paths->second);
        lpod::EquivalenceVerdict verdict =
            lpod::logically_equivalent(p1, p2, flags->options());
        if (!verdict.equivalent) {
          lpod::WitnessContext wc = lpod::build_witness_context(
              p1, p2, *verdict.witness, flags->options());
          verdict.context = wc.context;
          verdict.context_case = wc.context_case;
          verdict.discriminating = wc.m_prime;
        }
        std::cout << lpod::report::verdict_report(verdict, flags->format());
        return verdict.equivalent ? kExitOk : kExitNotEquivalent;
      };
    });
  }

  // reduce3sat
  {
    auto* cmd = app.add_subcommand(
        "reduce3sat", "map a DIMACS 3CNF to a strong-equivalence pair");
    auto flags = std::make_shared<CommonFlags>();
    auto path = std::make_shared<std::string>();
    auto out_prefix = std::make_shared<std::string>();
    auto pad = std::make_shared<bool>(false);
    cmd->add_option("file", *path, "DIMACS CNF file")->required();
    cmd->add_flag("--pad", *pad, "pad short clauses to three literals");
    cmd->add_option("-o,--output", *out_prefix,
                    "write <prefix>_p1.lpod, <prefix>_p2.lpod and a manifest");
    add_common(cmd, *flags);
    cmd->callback([&action, path, out_prefix, pad, flags] {
      action = [path, out_prefix, pad, flags]() -> int {
        lpod::CnfFormula cnf = lpod::parse_dimacs(read_file(*path), *pad);
        lpod::ReductionOutput reduction = lpod::reduce_3sat(cnf);
        if (!out_prefix->empty()) {
          write_file(*out_prefix + "_p1.lpod",
                     lpod::serialize_program(reduction.p1));
          write_file(*out_prefix + "_p2.lpod",
                     lpod::serialize_program(reduction.p2));
          write_file(*out_prefix + "_manifest.json",
                     lpod::report::document("reduction",
                                            lpod::report::to_json(reduction))
                             .dump(2) +
                         "\n");
        }
        std::cout << lpod::report::reduction_report(reduction, flags->format());
        return kExitOk;
      };
    });
  }

  // verify-reduction
  {
    auto* cmd = app.add_subcommand(
        "verify-reduction",
        "check the 3SAT reduction against the brute-force oracle");
    auto flags = std::make_shared<CommonFlags>();
    auto path = std::make_shared<std::string>();
    auto pad = std::make_shared<bool>(false);
    auto random_count = std::make_shared<int>(0);
    auto max_vars = std::make_shared<int>(8);
    auto max_clauses = std::make_shared<int>(12);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("file", *path, "DIMACS CNF file");
    cmd->add_flag("--pad", *pad, "pad short clauses to three literals");
    cmd->add_option("--random", *random_count,
                    "verify this many random instances instead of a file");
    cmd->add_option("--vars", *max_vars, "random mode: maximum variable count")
        ->capture_default_str();
    cmd->add_option("--clauses", *max_clauses,
                    "random mode: maximum clause count")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "random mode: generator seed")
        ->capture_default_str();
    add_common(cmd, *flags);
    cmd->callback([&action, path, pad, random_count, max_vars, max_clauses, seed,
                   flags] {
      action = [path, pad, random_count, max_vars, max_clauses, seed,
                flags]() -> int {
        std::vector<lpod::ReductionCheck> checks;
        if (*random_count > 0) {
          if (*max_vars < 3) throw lpod::PreconditionError("--vars must be >= 3");
          for (int i = 0; i < *random_count; ++i) {
            lpod::Rng rng = lpod::rng_for_iteration(*seed, i);
            int nv = 3 + rng.below(*max_vars - 2);
            int nc = std::max(3, nv) +
                     rng.below(std::max(1, *max_clauses - std::max(3, nv) + 1));
            checks.push_back(
                lpod::verify_reduction(random_3cnf(nv, nc, rng), flags->options()));
          }
        } else if (!path->empty()) {
          checks.push_back(lpod::verify_reduction(
              lpod::parse_dimacs(read_file(*path), *pad), flags->options()));
        } else {
          throw lpod::PreconditionError(
              "verify-reduction needs a CNF file or --random N");
        }
        std::cout << lpod::report::reduction_check_report(checks,
                                                          flags->format());
        bool all_passed = std::all_of(checks.begin(), checks.end(),
                                      [](const auto& c) { return c.passed; });
        return all_passed ? kExitOk : kExitNotEquivalent;
      };
    });
  }

  // fuzz
  {
    auto* cmd = app.add_subcommand(
        "fuzz", "randomized differential campaign over generated programs");
    auto flags = std::make_shared<CommonFlags>();
    auto cfg = std::make_shared<lpod::GeneratorConfig>();
    auto out_prefix = std::make_shared<std::string>();
    cmd->add_option("--iterations", cfg->iterations, "program pairs to draw")
        ->capture_default_str();
    cmd->add_option("--atoms", cfg->num_atoms, "alphabet size")
        ->capture_default_str();
    cmd->add_option("--rules", cfg->num_rules, "rules per program")
        ->capture_default_str();
    cmd->add_option("--max-head", cfg->max_head, "maximum head length")
        ->capture_default_str();
    cmd->add_option("--neg-prob", cfg->neg_prob,
                    "probability a body literal is negated")
        ->capture_default_str();
    cmd->add_option("--seed", cfg->seed, "campaign seed")->capture_default_str();
    cmd->add_option("--contexts", cfg->contexts_per_pair,
                    "context programs sampled per equivalent pair")
        ->capture_default_str();
    cmd->add_option("-o,--output", *out_prefix,
                    "write violation reproducers as <prefix>_violationN_*.lpod");
    add_common(cmd, *flags);
    cmd->callback([&action, cfg, out_prefix, flags] {
      action = [cfg, out_prefix, flags]() -> int {
        lpod::CampaignReport report = lpod::run_campaign(*cfg);
        std::cout << lpod::report::campaign_report(report, flags->format());
        if (!out_prefix->empty()) {
          for (std::size_t i = 0; i < report.violations.size(); ++i) {
            const auto& v = report.violations[i];
            std::string base = *out_prefix + "_violation" + std::to_string(i);
            write_file(base + "_p1.lpod", lpod::serialize_program(v.p1));
            if (v.p2) write_file(base + "_p2.lpod", lpod::serialize_program(*v.p2));
            if (v.context) {
              write_file(base + "_ctx.lpod", lpod::serialize_program(*v.context));
            }
          }
        }
        return report.clean() ? kExitOk : kExitNotEquivalent;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const lpod::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const lpod::VerificationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const lpod::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lpod::NotNormalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lpod::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
