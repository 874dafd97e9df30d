#include "lpod/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <thread>

#include "lpod/eval.hpp"
#include "lpod/errors.hpp"
#include "packed_engine.hpp"

namespace lpod {

std::string_view to_string(EqMode mode) {
  return mode == EqMode::most_preferred ? "most_preferred" : "all_answer_sets";
}

std::string_view to_string(Separated separated) {
  return separated == Separated::first_only ? "first_only" : "second_only";
}

std::string_view to_string(ContextCase context_case) {
  return context_case == ContextCase::case1 ? "case1" : "case2";
}

namespace {

using detail::Engine;
using detail::Word;

/// First packed word on which the two engines disagree about modelhood,
/// scanning the full four-valued space over the shared alphabet.
std::optional<Word> first_disagreement(const Engine& e1, const Engine& e2) {
  std::size_t n = e1.num_atoms();
  Word total = Word(1) << (2 * n);
  std::size_t workers = detail::worker_count();
  if (workers <= 1 || total < (Word(1) << 16)) {
    Word w = 0;
    do {
      if (e1.is_model_pinned(w) != e2.is_model_pinned(w)) return w;
    } while (e1.advance4(w));
    return std::nullopt;
  }

  std::atomic<Word> best{~Word(0)};
  std::vector<std::thread> threads;
  Word per = total / workers + 1;
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      Word begin = per * t;
      Word end = std::min(total, begin + per);
      for (Word w = begin; w < end; ++w) {
        if (best.load(std::memory_order_relaxed) < begin) return;
        if (e1.is_model_pinned(w) != e2.is_model_pinned(w)) {
          Word seen = best.load();
          while (w < seen && !best.compare_exchange_weak(seen, w)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  Word found = best.load();
  if (found == ~Word(0)) return std::nullopt;
  return found;
}

std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
  std::string candidate = base;
  for (int k = 0; taken.count(candidate); ++k) {
    candidate = base + "_" + std::to_string(k);
  }
  taken.insert(candidate);
  return candidate;
}

std::string fresh_d_atom(std::set<std::string>& taken) {
  for (int k = 0;; ++k) {
    std::string candidate = "d__" + std::to_string(k);
    if (!taken.count(candidate)) {
      taken.insert(candidate);
      return candidate;
    }
  }
}

bool contains(const std::vector<AnswerSet>& sets, const Interpretation& interp) {
  return std::any_of(sets.begin(), sets.end(), [&](const AnswerSet& as) {
    return as.interpretation == interp;
  });
}

void require(bool condition, const std::string& what) {
  if (!condition) {
    throw VerificationError("context verification failed: " + what);
  }
}

}  // namespace

EquivalenceVerdict logically_equivalent(const Program& p1, const Program& p2,
                                        const EnumOptions& opts) {
  std::vector<std::string> atoms = detail::sorted_union_atoms(p1, p2);
  detail::check_cap(atoms.size(), opts.atom_cap);
  Engine e1(p1.rules(), atoms, false);
  Engine e2(p2.rules(), atoms, false);

  EquivalenceVerdict verdict;
  if (auto w = first_disagreement(e1, e2)) {
    verdict.equivalent = false;
    verdict.witness = e1.to_interpretation(*w);
    verdict.separated =
        e1.is_model(*w) ? Separated::first_only : Separated::second_only;
  }
  return verdict;
}

WitnessContext build_witness_context(const Program& p1, const Program& p2,
                                     const Interpretation& witness,
                                     const EnumOptions& opts) {
  bool models_p1 = is_model(p1, witness);
  bool models_p2 = is_model(p2, witness);
  if (models_p1 == models_p2) {
    throw PreconditionError(
        models_p1 ? "witness is a model of both programs"
                  : "witness is a model of neither program");
  }
  std::vector<std::string> union_atoms = detail::sorted_union_atoms(p1, p2);
  for (const auto& [atom, v] : witness.entries()) {
    if (v != TruthValue::F &&
        !std::binary_search(union_atoms.begin(), union_atoms.end(), atom)) {
      throw PreconditionError("witness assigns " + std::string(to_string(v)) +
                              " to atom '" + atom +
                              "' outside the two programs");
    }
  }

  WitnessContext result;
  result.swapped = !models_p1;
  const Program& modeled = result.swapped ? p2 : p1;
  const Program& other = result.swapped ? p1 : p2;

  std::set<std::string> taken(union_atoms.begin(), union_atoms.end());
  for (const auto& [atom, v] : witness.entries()) taken.insert(atom);

  std::vector<std::string> fstar_atoms;
  std::vector<std::string> tstar_atoms;
  for (const auto& atom : union_atoms) {
    TruthValue v = witness.value(atom);
    if (v == TruthValue::FStar) fstar_atoms.push_back(atom);
    if (v == TruthValue::TStar) tstar_atoms.push_back(atom);
  }
  for (const auto& atom : fstar_atoms) {
    result.t_atoms.push_back(fresh_name("t__" + atom, taken));
    result.f_atoms.push_back(fresh_name("f__" + atom, taken));
  }

  // The discriminating interpretation: former T* atoms become T, the fresh
  // t-atoms are T, the fresh f-atoms are F*, everything else follows the
  // witness.
  std::map<std::string, TruthValue> prime;
  for (const auto& atom : union_atoms) {
    TruthValue v = witness.value(atom);
    prime.emplace(atom, v == TruthValue::TStar ? TruthValue::T : v);
  }
  for (const auto& t : result.t_atoms) prime.emplace(t, TruthValue::T);
  for (const auto& f : result.f_atoms) prime.emplace(f, TruthValue::FStar);
  result.m_prime = Interpretation(std::move(prime));

  require(is_model(modeled, result.m_prime),
          "discriminating interpretation must model the witnessed program");
  bool case1 = !is_model(other, result.m_prime);
  result.context_case = case1 ? ContextCase::case1 : ContextCase::case2;

  std::vector<Rule> rules;
  if (case1) {
    for (const auto& [atom, v] : result.m_prime.entries()) {
      if (v == TruthValue::T) rules.push_back({{atom}, {}, {}});
    }
  } else {
    for (const auto& atom : union_atoms) {
      if (witness.value(atom) == TruthValue::T) rules.push_back({{atom}, {}, {}});
    }
  }
  for (std::size_t i = 0; i < fstar_atoms.size(); ++i) {
    rules.push_back({{fstar_atoms[i], result.t_atoms[i]}, {}, {}});
    rules.push_back({{result.f_atoms[i]}, {fstar_atoms[i]}, {result.f_atoms[i]}});
  }
  if (!case1) {
    require(!tstar_atoms.empty(),
            "case 2 is only reachable through a T*-valued witness atom");
    for (const auto& from : tstar_atoms) {
      for (const auto& to : tstar_atoms) {
        if (from != to) rules.push_back({{to}, {from}, {}});
      }
    }
    result.d_atom = fresh_d_atom(taken);
    for (const auto& atom : tstar_atoms) {
      rules.push_back({{*result.d_atom}, {}, {atom}});
    }
  }
  result.context = Program(std::move(rules));

  if (!case1) {
    std::map<std::string, TruthValue> dprime;
    for (const auto& atom : union_atoms) dprime.emplace(atom, witness.value(atom));
    for (const auto& t : result.t_atoms) dprime.emplace(t, TruthValue::T);
    for (const auto& f : result.f_atoms) dprime.emplace(f, TruthValue::FStar);
    result.m_doubleprime = Interpretation(std::move(dprime));
  }

  // Mandatory verification of the separation this context claims.
  Program modeled_union = modeled.union_with(result.context);
  Program other_union = other.union_with(result.context);
  if (case1) {
    require(contains(most_preferred(modeled_union, opts), result.m_prime),
            "case 1: expected a most-preferred answer set of the witnessed "
            "program's union");
    require(!is_model(other_union, result.m_prime),
            "case 1: expected a non-model of the other program's union");
  } else {
    require(contains(most_preferred(other_union, opts), result.m_prime),
            "case 2: expected a most-preferred answer set of the other "
            "program's union");
    require(!contains(most_preferred(modeled_union, opts), result.m_prime),
            "case 2: expected no most-preferred answer set of the witnessed "
            "program's union");
    require(interp_prec(*result.m_doubleprime, result.m_prime),
            "case 2: the relaxed interpretation must sit strictly below");
    require(is_model(modeled_union, *result.m_doubleprime),
            "case 2: the relaxed interpretation must model the witnessed "
            "program's union");
  }

  // Every model of the auxiliary groups alone keeps the F*-marked atoms of
  // the discriminating interpretation away from F.
  if (!fstar_atoms.empty()) {
    std::vector<Rule> aux;
    for (std::size_t i = 0; i < fstar_atoms.size(); ++i) {
      aux.push_back({{fstar_atoms[i], result.t_atoms[i]}, {}, {}});
      aux.push_back({{result.f_atoms[i]}, {fstar_atoms[i]}, {result.f_atoms[i]}});
    }
    Program aux_program(std::move(aux));
    std::vector<std::string> marked;
    for (const auto& [atom, v] : result.m_prime.entries()) {
      if (v == TruthValue::FStar && std::binary_search(aux_program.atoms().begin(),
                                                       aux_program.atoms().end(),
                                                       atom)) {
        marked.push_back(atom);
      }
    }
    for (const auto& model : enumerate_models(aux_program, opts)) {
      for (const auto& atom : marked) {
        require(model.value(atom) != TruthValue::F,
                "auxiliary groups admit a model collapsing '" + atom + "' to F");
      }
    }
  }
  return result;
}

EquivalenceVerdict strong_eq(const Program& p1, const Program& p2, EqMode mode,
                             const EnumOptions& opts) {
  EquivalenceVerdict verdict = logically_equivalent(p1, p2, opts);
  verdict.mode = mode;
  if (!verdict.equivalent) {
    WitnessContext wc = build_witness_context(p1, p2, *verdict.witness, opts);
    verdict.context = wc.context;
    verdict.context_case = wc.context_case;
    verdict.discriminating = wc.m_prime;
  }
  return verdict;
}

EquivalenceVerdict normal_strong_eq(const Program& p1, const Program& p2,
                                    const EnumOptions& opts) {
  if (!p1.is_normal() || !p2.is_normal()) throw NotNormalError();
  std::vector<std::string> atoms = detail::sorted_union_atoms(p1, p2);
  detail::check_cap(atoms.size(), opts.atom_cap);
  Engine e1(p1.rules(), atoms, false);
  Engine e2(p2.rules(), atoms, false);

  std::optional<Word> disagreement;
  Word w = 0;
  do {
    if (e1.is_model_pinned(w) != e2.is_model_pinned(w)) {
      disagreement = w;
      break;
    }
  } while (e1.advance3(w));

  EquivalenceVerdict verdict;
  if (!disagreement) return verdict;

  verdict.equivalent = false;
  verdict.witness = e1.to_interpretation(*disagreement);
  bool models_p1 = e1.is_model(*disagreement);
  verdict.separated = models_p1 ? Separated::first_only : Separated::second_only;

  const Program& modeled = models_p1 ? p1 : p2;
  const Program& other = models_p1 ? p2 : p1;
  const Interpretation& witness = *verdict.witness;

  // Two-valued collapse: T* joins T, everything else drops to F.
  std::map<std::string, TruthValue> collapsed;
  std::vector<std::string> tstar_atoms;
  for (const auto& atom : atoms) {
    TruthValue v = witness.value(atom);
    collapsed.emplace(atom, v >= TruthValue::TStar ? TruthValue::T : TruthValue::F);
    if (v == TruthValue::TStar) tstar_atoms.push_back(atom);
  }
  Interpretation m_prime{std::move(collapsed)};
  verdict.discriminating = m_prime;

  require(is_model(modeled, m_prime),
          "two-valued collapse must model the witnessed program");
  bool case1 = !is_model(other, m_prime);
  verdict.context_case = case1 ? ContextCase::case1 : ContextCase::case2;

  std::set<std::string> taken(atoms.begin(), atoms.end());
  std::vector<Rule> rules;
  if (case1) {
    for (const auto& [atom, v] : m_prime.entries()) {
      if (v == TruthValue::T) rules.push_back({{atom}, {}, {}});
    }
  } else {
    require(!tstar_atoms.empty(),
            "case 2 is only reachable through a T*-valued witness atom");
    for (const auto& atom : atoms) {
      if (witness.value(atom) == TruthValue::T) rules.push_back({{atom}, {}, {}});
    }
    for (const auto& from : tstar_atoms) {
      for (const auto& to : tstar_atoms) {
        if (from != to) rules.push_back({{to}, {from}, {}});
      }
    }
    std::string d = fresh_d_atom(taken);
    for (const auto& atom : tstar_atoms) {
      rules.push_back({{d}, {}, {atom}});
    }
  }
  verdict.context = Program(std::move(rules));

  // Verify through the stable-model engine.
  std::set<std::string> collapse_set;
  for (const auto& [atom, v] : m_prime.entries()) {
    if (v == TruthValue::T) collapse_set.insert(atom);
  }
  Program modeled_union = modeled.union_with(*verdict.context);
  Program other_union = other.union_with(*verdict.context);
  auto stable_contains = [&](const Program& program) {
    auto stables = gl_stable_models(program, opts);
    return std::find(stables.begin(), stables.end(), collapse_set) != stables.end();
  };
  if (case1) {
    require(stable_contains(modeled_union),
            "normal case 1: expected a stable model of the witnessed union");
    require(!is_model(other_union, m_prime),
            "normal case 1: expected a non-model of the other union");
  } else {
    require(stable_contains(other_union),
            "normal case 2: expected a stable model of the other union");
    require(!stable_contains(modeled_union),
            "normal case 2: expected no stable model of the witnessed union");
    require(interp_prec(witness, m_prime),
            "normal case 2: witness must sit strictly below its collapse");
    require(is_model(modeled_union, witness),
            "normal case 2: witness must model the witnessed union");
  }
  return verdict;
}

}  // namespace lpod
