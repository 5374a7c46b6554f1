#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hyper/catalog.hpp"
#include "hyper/constructions.hpp"
#include "hyper/structure.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

FiniteHyperStructure two_element_no_inverse() {
  std::vector<ElemSet> add(4, ElemSet(2));
  add[0] = ElemSet::single(0, 2);
  add[1] = ElemSet::single(1, 2);
  add[2] = ElemSet::single(1, 2);
  add[3] = ElemSet::single(1, 2);  // 1+1 = {1}: no inverse for 1
  return FiniteHyperStructure::make({"0", "1"}, std::move(add));
}

bool has_violation(const CheckReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("extend_sum follows the union definition") {
  FiniteHyperStructure K = krasner();
  CHECK(K.extend_sum(ElemSet::single(1, 2), ElemSet::single(1, 2)) == ElemSet::of({0, 1}, 2));

  FiniteHyperStructure S = sign_hyperfield();
  // {1,-1} + {1} = (1+1) u (-1+1) = {1} u {0,1,-1}
  CHECK(S.extend_sum(ElemSet::of({1, 2}, 3), ElemSet::single(1, 3)) == ElemSet::of({0, 1, 2}, 3));

  // identity case: {0} + X = X
  ElemSet X = ElemSet::of({0, 2}, 3);
  CHECK(S.extend_sum(ElemSet::single(0, 3), X) == X);

  CHECK_THROWS_AS(S.extend_sum(ElemSet(3), X), std::invalid_argument);
}

TEST_CASE("extend_sum matches the naive oracle on catalog tables") {
  std::mt19937 rng(0);
  for (const char* name : {"K", "S", "GF(4)", "GF(5)"}) {
    FiniteHyperStructure T = std::get<FiniteHyperStructure>(builtin(name));
    for (int trial = 0; trial < 50; ++trial) {
      ElemSet A(T.n()), B(T.n());
      while (A.empty()) A = ElemSet::of({int(rng() % T.n()), int(rng() % T.n())}, T.n());
      while (B.empty()) B = ElemSet::of({int(rng() % T.n()), int(rng() % T.n())}, T.n());
      CHECK(oracle::to_set(T.extend_sum(A, B)) ==
            oracle::naive_extend_sum(T, oracle::to_set(A), oracle::to_set(B)));
    }
  }
}

TEST_CASE("hypergroup axioms accept K and S") {
  CHECK(check_hypergroup(krasner()).passed);
  CHECK(check_hypergroup(sign_hyperfield()).passed);
}

TEST_CASE("a missing hyperinverse is reported with its witness") {
  CheckReport r = check_hypergroup(two_element_no_inverse());
  CHECK_FALSE(r.passed);
  REQUIRE(has_violation(r, "NoInverse"));
  for (const auto& v : r.violations)
    if (v.axiom == "NoInverse") CHECK(v.witness == std::vector<int>{1});
}

TEST_CASE("extended sums associate on hypergroup tables") {
  std::mt19937 rng(1);
  for (const char* name : {"K", "S", "GF(7)"}) {
    FiniteHyperStructure T = std::get<FiniteHyperStructure>(builtin(name));
    for (int trial = 0; trial < 100; ++trial) {
      ElemSet A = ElemSet::single(int(rng() % T.n()), T.n());
      ElemSet B = ElemSet::single(int(rng() % T.n()), T.n());
      ElemSet C = ElemSet::single(int(rng() % T.n()), T.n());
      CHECK(T.extend_sum(T.extend_sum(A, B), C) == T.extend_sum(A, T.extend_sum(B, C)));
    }
  }
}

TEST_CASE("skew hyperring checks") {
  CHECK(check_skew_hyperring(std::get<FiniteHyperStructure>(builtin("GF(3)"))).passed);
  CHECK(check_skew_hyperring(product(krasner(), krasner())).passed);

  // K with 1*1 redefined to 0 breaks the monoid identity
  std::vector<ElemSet> add(4, ElemSet(2));
  add[0] = ElemSet::single(0, 2);
  add[1] = ElemSet::single(1, 2);
  add[2] = ElemSet::single(1, 2);
  add[3] = ElemSet::of({0, 1}, 2);
  FiniteHyperStructure bad =
      FiniteHyperStructure::make({"0", "1"}, std::move(add), std::vector<int>{0, 0, 0, 0}, 1);
  CheckReport r = check_skew_hyperring(bad);
  CHECK_FALSE(r.passed);
  CHECK(has_violation(r, "MonoidIdentity"));

  CHECK_THROWS_AS(check_skew_hyperring(two_element_no_inverse()), std::invalid_argument);
}

TEST_CASE("hyperfield checks") {
  CHECK(check_hyperfield(sign_hyperfield()).passed);
  CHECK(check_hyperfield(std::get<FiniteHyperStructure>(builtin("GF(4)"))).passed);

  CheckReport r = check_hyperfield(product(krasner(), krasner()));
  CHECK_FALSE(r.passed);
  CHECK(has_violation(r, "NoMultiplicativeInverse"));
}

TEST_CASE("double distributivity") {
  CHECK(is_doubly_distributive(krasner()).ok);
  CHECK(is_doubly_distributive(product(krasner(), krasner())).ok);
  CHECK(is_doubly_distributive(std::get<FiniteHyperStructure>(builtin("GF(5)"))).ok);

  for (const char* name : {"K", "S", "GF(4)"}) {
    FiniteHyperStructure T = std::get<FiniteHyperStructure>(builtin(name));
    CHECK(is_doubly_distributive(T).ok == oracle::naive_doubly_distributive(T));
  }
}

TEST_CASE("stringency") {
  CHECK(is_stringent(sign_hyperfield()).ok);
  CHECK(is_stringent(std::get<FiniteHyperStructure>(builtin("GF(7)"))).ok);

  FiniteHyperStructure KK = product(krasner(), krasner());
  WitnessResult w = is_stringent(KK);
  REQUIRE_FALSE(w.ok);
  // the witness must be a genuine violation: a != -b yet the sum is not a singleton
  int a = w.witness[0], b = w.witness[1];
  CHECK(a != KK.neg(b));
  CHECK(KK.add(a, b).size() > 1);
}

TEST_CASE("homomorphism checks") {
  FiniteHyperStructure S = sign_hyperfield(), K = krasner();
  CHECK(is_homomorphism({0, 1, 2}, S, S).ok);

  // collapse of signs onto K
  CHECK(is_homomorphism({0, 1, 1}, S, K).ok);

  // K does not embed in GF(2): 1+1 = {0,1} cannot land inside {0}
  FiniteHyperStructure F2 = std::get<FiniteHyperStructure>(builtin("GF(2)"));
  WitnessResult w = is_homomorphism({0, 1}, K, F2);
  CHECK_FALSE(w.ok);
  CHECK(w.witness == std::vector<int>{1, 1});

  CHECK_THROWS_AS(is_homomorphism({0, 5}, K, F2), std::invalid_argument);
}

TEST_CASE("dd implies stringent on the catalog hyperfields") {
  for (const char* name : {"K", "S", "GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"}) {
    FiniteHyperStructure T = std::get<FiniteHyperStructure>(builtin(name));
    if (is_doubly_distributive(T).ok) CHECK(is_stringent(T).ok);
  }
}
