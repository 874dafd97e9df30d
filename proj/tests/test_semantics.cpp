#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lpod/equivalence.hpp"
#include "lpod/errors.hpp"
#include "lpod/fuzz.hpp"
#include "lpod/parser.hpp"
#include "lpod/semantics.hpp"
#include "oracle.hpp"

using namespace lpod;

namespace {
constexpr TruthValue F = TruthValue::F;
constexpr TruthValue Fs = TruthValue::FStar;
constexpr TruthValue Ts = TruthValue::TStar;
constexpr TruthValue T = TruthValue::T;

using Canon = std::set<std::map<std::string, TruthValue>>;

Canon canon_models(const std::vector<Interpretation>& models) {
  Canon out;
  for (const auto& m : models) out.insert(m.nondefault_entries());
  return out;
}

Canon canon_answers(const std::vector<AnswerSet>& sets) {
  Canon out;
  for (const auto& as : sets) out.insert(as.interpretation.nondefault_entries());
  return out;
}

Canon canon_oracle(const std::vector<std::map<std::string, TruthValue>>& ms) {
  Canon out;
  for (const auto& m : ms) out.insert(oracle::canonical(m));
  return out;
}

const char* kExample1 =
    "mercedes x bmw.\n"
    "gas_mercedes x diesel_mercedes <- mercedes.\n"
    "false <- gas_mercedes, not false.\n";
}  // namespace

TEST_CASE("models of a single ordered disjunction") {
  auto models = enumerate_models(parse_program("a x b."));
  // Either a is T and b is anything, or a is F* and b is T.
  Canon expected = {
      {{"a", T}},
      {{"a", T}, {"b", Fs}},
      {{"a", T}, {"b", Ts}},
      {{"a", Fs}, {"b", T}},
      {{"a", T}, {"b", T}},
  };
  CHECK(models.size() == 5);
  CHECK(canon_models(models) == expected);
}

TEST_CASE("model enumeration order is the packed order") {
  auto models = enumerate_models(parse_program("a x b."));
  REQUIRE(models.size() == 5);
  CHECK(models[0] == Interpretation({{"a", T}, {"b", F}}));
  CHECK(models[1] == Interpretation({{"a", T}, {"b", Fs}}));
  CHECK(models[2] == Interpretation({{"a", T}, {"b", Ts}}));
  CHECK(models[3] == Interpretation({{"a", Fs}, {"b", T}}));
  CHECK(models[4] == Interpretation({{"a", T}, {"b", T}}));
}

TEST_CASE("edge programs") {
  auto empty = enumerate_models(Program());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == Interpretation());

  auto fact = enumerate_models(parse_program("a."));
  REQUIRE(fact.size() == 1);
  CHECK(fact[0] == Interpretation({{"a", T}}));
}

TEST_CASE("answer sets of the car-preference example match the listing") {
  auto answers = answer_sets(parse_program(kExample1));
  Canon expected = {
      {{"mercedes", T},
       {"gas_mercedes", Fs},
       {"diesel_mercedes", T},
       {"false", Fs}},
      {{"mercedes", Fs},
       {"bmw", T},
       {"gas_mercedes", Fs},
       {"diesel_mercedes", Fs},
       {"false", Fs}},
  };
  CHECK(answers.size() == 2);
  CHECK(canon_answers(answers) == expected);
  for (const auto& as : answers) CHECK(as.interpretation.is_solid());
}

TEST_CASE("the car-preference example prefers the mercedes answer set") {
  auto preferred = most_preferred(parse_program(kExample1));
  REQUIRE(preferred.size() == 1);
  CHECK(preferred[0].interpretation ==
        Interpretation({{"mercedes", T},
                        {"bmw", F},
                        {"gas_mercedes", Fs},
                        {"diesel_mercedes", T},
                        {"false", Fs}}));
  CHECK(preferred[0].fstar_set == std::set<std::string>{"false", "gas_mercedes"});
}

TEST_CASE("answer sets of a bare ordered disjunction") {
  auto answers = answer_sets(parse_program("a x b."));
  Canon expected = {{{"a", T}}, {{"a", Fs}, {"b", T}}};
  CHECK(canon_answers(answers) == expected);

  auto preferred = most_preferred(parse_program("a x b."));
  REQUIRE(preferred.size() == 1);
  CHECK(preferred[0].interpretation == Interpretation({{"a", T}, {"b", F}}));
}

TEST_CASE("empty program has the empty answer set") {
  auto answers = answer_sets(Program());
  REQUIRE(answers.size() == 1);
  CHECK(answers[0].interpretation == Interpretation());
  CHECK(most_preferred(Program()).size() == 1);
}

TEST_CASE("a single answer set is trivially most preferred") {
  Program p = parse_program("a.\nb <- a.");
  auto answers = answer_sets(p);
  REQUIRE(answers.size() == 1);
  CHECK(most_preferred(p) == answers);
}

TEST_CASE("three-valued models") {
  auto fact = three_valued_models(parse_program("a."));
  REQUIRE(fact.size() == 1);
  CHECK(fact[0] == Interpretation({{"a", T}}));

  auto empty = three_valued_models(Program());
  REQUIRE(empty.size() == 1);

  // For `a <- not a.` exactly the T* and T assignments survive.
  auto self_blocker = three_valued_models(parse_program("a <- not a."));
  REQUIRE(self_blocker.size() == 2);
  CHECK(self_blocker[0] == Interpretation({{"a", Ts}}));
  CHECK(self_blocker[1] == Interpretation({{"a", T}}));
}

TEST_CASE("stable models of normal programs") {
  auto even_loop = gl_stable_models(parse_program("a <- not b.\nb <- not a."));
  CHECK(even_loop == std::vector<std::set<std::string>>{{"a"}, {"b"}});

  CHECK(gl_stable_models(parse_program("a.")) ==
        std::vector<std::set<std::string>>{{"a"}});
  CHECK(gl_stable_models(parse_program("a <- not a.")).empty());
  CHECK_THROWS_AS(gl_stable_models(parse_program("a x b.")), NotNormalError);
}

TEST_CASE("enumeration cap") {
  std::vector<Rule> rules;
  for (int i = 0; i < 13; ++i) {
    rules.push_back({{"p" + std::to_string(i)}, {}, {}});
  }
  Program wide(rules);
  CHECK_THROWS_AS(enumerate_models(wide), CapExceededError);
  CHECK_NOTHROW(enumerate_models(wide, {13}));
  CHECK_THROWS_AS(answer_sets(parse_program("a x b <- c, not d."), {3}),
                  CapExceededError);
}

TEST_CASE("engine agrees with the naive oracle on random programs") {
  Rng rng(99);
  auto names = default_atom_names(4);
  for (int i = 0; i < 60; ++i) {
    Program p = random_program_over(names, 3, 3, 0.4, rng);
    CHECK(canon_models(enumerate_models(p)) == canon_oracle(oracle::naive_models(p)));
    CHECK(canon_answers(answer_sets(p)) == canon_oracle(oracle::naive_answer_sets(p)));
    CHECK(canon_answers(most_preferred(p)) ==
          canon_oracle(oracle::naive_most_preferred(p)));
    CHECK(canon_models(three_valued_models(p)) ==
          canon_oracle(oracle::naive_models(p, {F, Ts, T})));
  }
}

TEST_CASE("answer sets are models and most-preferred sets are answer sets") {
  Rng rng(123);
  auto names = default_atom_names(4);
  for (int i = 0; i < 60; ++i) {
    Program p = random_program_over(names, 4, 3, 0.4, rng);
    auto models = canon_models(enumerate_models(p));
    auto answers = answer_sets(p);
    auto preferred = canon_answers(most_preferred(p));
    for (const auto& as : answers) {
      CHECK(as.interpretation.is_solid());
      CHECK(models.count(as.interpretation.nondefault_entries()) == 1);
      CHECK(as.fstar_set == as.interpretation.fstar_atoms());
    }
    auto answer_canon = canon_answers(answers);
    for (const auto& m : preferred) CHECK(answer_canon.count(m) == 1);
  }
}

TEST_CASE("stable models coincide with answer sets on normal programs") {
  Rng rng(321);
  auto names = default_atom_names(4);
  for (int i = 0; i < 120; ++i) {
    Program p = random_program_over(names, 3, 1, 0.5, rng);
    REQUIRE(p.is_normal());
    Canon embedded;
    for (const auto& s : gl_stable_models(p)) {
      embedded.insert(embed_stable_model(s, p.atoms()).nondefault_entries());
    }
    CHECK(embedded == canon_answers(answer_sets(p)));
    CHECK(gl_stable_models(p) == oracle::naive_stable_models(p));
  }
}

TEST_CASE("answer sets are invariant under atom renaming") {
  Rng rng(555);
  auto names = default_atom_names(4);
  std::map<std::string, std::string> renaming = {
      {"a", "p_one"}, {"b", "q_two"}, {"c", "r_three"}, {"d", "s_four"}};
  for (int i = 0; i < 40; ++i) {
    Program p = random_program_over(names, 3, 3, 0.4, rng);
    std::vector<Rule> renamed_rules;
    for (Rule r : p.rules()) {
      for (auto& a : r.head) a = renaming.at(a);
      for (auto& a : r.body_pos) a = renaming.at(a);
      for (auto& a : r.body_neg) a = renaming.at(a);
      renamed_rules.push_back(r);
    }
    Program renamed(renamed_rules);
    Canon expected;
    for (const auto& as : answer_sets(p)) {
      std::map<std::string, TruthValue> m;
      for (const auto& [atom, v] : as.interpretation.nondefault_entries()) {
        m.emplace(renaming.at(atom), v);
      }
      expected.insert(m);
    }
    CHECK(canon_answers(answer_sets(renamed)) == expected);
  }
}

TEST_CASE("worker count does not change results or order") {
  // Eight free atoms cross the parallel threshold.
  Program p = parse_program(
      "a x b <- c, not d.\n"
      "e x f <- g, not h.\n"
      "c <- not g.\n");
  Program q = parse_program(
      "a x b <- c, not d.\n"
      "e x f <- g.\n"
      "c <- not g.\n");
  setenv("LPOD_LAB_THREADS", "1", 1);
  auto serial_models = enumerate_models(p);
  auto serial_verdict = logically_equivalent(p, q);
  setenv("LPOD_LAB_THREADS", "4", 1);
  auto parallel_models = enumerate_models(p);
  auto parallel_verdict = logically_equivalent(p, q);
  unsetenv("LPOD_LAB_THREADS");
  CHECK(serial_models == parallel_models);
  CHECK(serial_verdict.equivalent == parallel_verdict.equivalent);
  REQUIRE_FALSE(serial_verdict.equivalent);
  CHECK(*serial_verdict.witness == *parallel_verdict.witness);
}

TEST_CASE("the cap error names the refusal") {
  std::vector<Rule> rules;
  for (int i = 0; i < 13; ++i) rules.push_back({{"p" + std::to_string(i)}, {}, {}});
  try {
    enumerate_models(Program(rules));
    FAIL("expected a cap error");
  } catch (const CapExceededError& e) {
    CHECK(std::string(e.what()).find("instance too large for exhaustive "
                                     "enumeration") != std::string::npos);
    CHECK(e.atoms() == 13);
    CHECK(e.cap() == 12);
  }
}

TEST_CASE("model enumeration ignores rule order") {
  Rng rng(777);
  auto names = default_atom_names(4);
  for (int i = 0; i < 40; ++i) {
    Program p = random_program_over(names, 4, 3, 0.4, rng);
    std::vector<Rule> reversed(p.rules().rbegin(), p.rules().rend());
    CHECK(enumerate_models(p) == enumerate_models(Program(reversed)));
  }
}
