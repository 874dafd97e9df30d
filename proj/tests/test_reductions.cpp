#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lpod/equivalence.hpp"
#include "lpod/errors.hpp"
#include "lpod/eval.hpp"
#include "lpod/fuzz.hpp"
#include "lpod/parser.hpp"
#include "lpod/reductions.hpp"

using namespace lpod;

namespace {

CnfFormula cnf_of(int num_vars, std::vector<std::array<int, 3>> clauses) {
  CnfFormula cnf;
  cnf.num_vars = num_vars;
  cnf.clauses = std::move(clauses);
  return cnf;
}

CnfFormula random_cnf(int num_vars, int num_clauses, Rng& rng) {
  CnfFormula cnf;
  cnf.num_vars = num_vars;
  while (int(cnf.clauses.size()) < num_clauses) {
    int v1 = 1 + rng.below(num_vars);
    int v2 = 1 + rng.below(num_vars);
    int v3 = 1 + rng.below(num_vars);
    if (v1 == v2 || v1 == v3 || v2 == v3) continue;
    std::array<int, 3> clause = {rng.chance(0.5) ? v1 : -v1,
                                 rng.chance(0.5) ? v2 : -v2,
                                 rng.chance(0.5) ? v3 : -v3};
    std::sort(clause.begin(), clause.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    if (std::find(cnf.clauses.begin(), cnf.clauses.end(), clause) ==
        cnf.clauses.end()) {
      cnf.clauses.push_back(clause);
    }
  }
  return cnf;
}

// All eight sign patterns over three variables; no assignment survives.
CnfFormula unsat_3var() {
  std::vector<std::array<int, 3>> clauses;
  for (int s = 0; s < 8; ++s) {
    clauses.push_back({s & 1 ? 1 : -1, s & 2 ? 2 : -2, s & 4 ? 3 : -3});
  }
  return cnf_of(3, std::move(clauses));
}

}  // namespace

TEST_CASE("reduction shape for a single clause") {
  ReductionOutput r = reduce_3sat(cnf_of(3, {{1, -2, 3}}));
  CHECK(serialize_program(r.p1) ==
        "sat_a <- v1, v3, not v2.\n"
        "sat_a x sat_b.\n");
  CHECK(serialize_program(r.p2) ==
        "sat_a <- v1, v3, not v2.\n"
        "sat_a x sat_b.\n"
        "sat_a.\n");
  CHECK(r.atom_a == "sat_a");
  CHECK(r.atom_b == "sat_b");
  CHECK(r.var_map.size() == 3);
  CHECK(r.var_map[0] == std::pair<int, std::string>{1, "v1"});
  // Marker atoms never collide with variable atoms.
  for (const auto& [var, atom] : r.var_map) {
    CHECK(atom != r.atom_a);
    CHECK(atom != r.atom_b);
  }
}

TEST_CASE("the second program extends the first by the single marker fact") {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    CnfFormula cnf = random_cnf(5, 6, rng);
    ReductionOutput r = reduce_3sat(cnf);
    CHECK(r.p1.size() == cnf.clauses.size() + 1);
    CHECK(r.p2.size() == cnf.clauses.size() + 2);
    for (const auto& rule : r.p1.rules()) {
      CHECK(std::find(r.p2.rules().begin(), r.p2.rules().end(), rule) !=
            r.p2.rules().end());
    }
    Rule marker_fact{{"sat_a"}, {}, {}};
    CHECK(std::find(r.p1.rules().begin(), r.p1.rules().end(), marker_fact) ==
          r.p1.rules().end());
    CHECK(r.p2.rules().back() == marker_fact);
  }
}

TEST_CASE("brute-force oracle") {
  auto single = brute_force_sat(cnf_of(1, {{1, 1, 1}}));
  REQUIRE(single.has_value());
  CHECK(*single == std::vector<bool>{true});

  CHECK_FALSE(brute_force_sat(cnf_of(1, {{1, 1, 1}, {-1, -1, -1}})).has_value());
  CHECK_FALSE(brute_force_sat(unsat_3var()).has_value());

  CnfFormula too_big;
  too_big.num_vars = 21;
  CHECK_THROWS_AS(brute_force_sat(too_big), CapExceededError);
}

TEST_CASE("oracle answers satisfy the formula they came from") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    CnfFormula cnf = random_cnf(6, 8, rng);
    auto model = brute_force_sat(cnf);
    if (model) CHECK(satisfies(cnf, *model));
  }
}

TEST_CASE("satisfiable formulas map to separable pairs") {
  CnfFormula cnf = cnf_of(3, {{1, -2, 3}});
  ReductionOutput r = reduce_3sat(cnf);
  EquivalenceVerdict v = logically_equivalent(r.p1, r.p2);
  CHECK_FALSE(v.equivalent);
  CHECK(*v.separated == Separated::first_only);
  // The canonical separating interpretation from a satisfying assignment:
  // markers at F*/T, true variables at F, false variables at T.
  auto j = brute_force_sat(cnf);
  REQUIRE(j.has_value());
  std::map<std::string, TruthValue> values{{"sat_a", TruthValue::FStar},
                                           {"sat_b", TruthValue::T}};
  for (int var = 1; var <= cnf.num_vars; ++var) {
    values.emplace("v" + std::to_string(var),
                   (*j)[std::size_t(var) - 1] ? TruthValue::F : TruthValue::T);
  }
  Interpretation forward{std::move(values)};
  CHECK(is_model(r.p1, forward));
  CHECK_FALSE(is_model(r.p2, forward));
}

TEST_CASE("unsatisfiable formulas map to equivalent pairs") {
  ReductionOutput r = reduce_3sat(unsat_3var());
  CHECK(logically_equivalent(r.p1, r.p2).equivalent);
  ReductionCheck check = verify_reduction(unsat_3var());
  CHECK(check.passed);
  CHECK(check.equivalent);
  CHECK_FALSE(check.satisfiable);
}

TEST_CASE("assignments extracted from witnesses satisfy the formula") {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    CnfFormula cnf = random_cnf(5, 7, rng);
    ReductionOutput r = reduce_3sat(cnf);
    EquivalenceVerdict v = logically_equivalent(r.p1, r.p2);
    if (v.equivalent) continue;
    std::vector<bool> back(std::size_t(cnf.num_vars));
    for (int var = 1; var <= cnf.num_vars; ++var) {
      back[std::size_t(var) - 1] =
          v.witness->value("v" + std::to_string(var)) <= TruthValue::FStar;
    }
    CHECK(satisfies(cnf, back));
  }
}

TEST_CASE("forward and backward maps invert each other on assignments") {
  Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    CnfFormula cnf = random_cnf(6, 8, rng);
    auto j = brute_force_sat(cnf);
    if (!j) continue;
    for (int var = 1; var <= cnf.num_vars; ++var) {
      TruthValue forward = (*j)[std::size_t(var) - 1] ? TruthValue::F : TruthValue::T;
      bool back = forward <= TruthValue::FStar;
      CHECK(back == (*j)[std::size_t(var) - 1]);
    }
  }
}

TEST_CASE("end-to-end verification agrees on random instances") {
  Rng rng(31);
  int sat_count = 0, unsat_count = 0;
  for (int i = 0; i < 20; ++i) {
    CnfFormula cnf = random_cnf(6, 8, rng);
    ReductionCheck check = verify_reduction(cnf);
    CHECK(check.passed);
    (check.satisfiable ? sat_count : unsat_count) += 1;
  }
  ReductionCheck dense = verify_reduction(unsat_3var());
  CHECK(dense.passed);
  CHECK(sat_count > 0);
}

TEST_CASE("padded duplicate-literal clauses flow through the reduction") {
  CnfFormula cnf = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 0\n", true);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.clauses[0] == std::array<int, 3>{1, -2, -2});
  CHECK(cnf.clauses[1] == std::array<int, 3>{-1, -1, -1});
  ReductionCheck check = verify_reduction(cnf);
  CHECK(check.passed);
}
