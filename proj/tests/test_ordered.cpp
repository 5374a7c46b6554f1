#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hyper/errors.hpp"
#include "hyper/ordered.hpp"

using namespace hyper;

namespace {

std::vector<OrdElem> samples(const OrderedIndex& G, std::mt19937& rng, int count) {
  std::vector<OrdElem> out;
  for (int i = 0; i < count; ++i) {
    long long a = static_cast<long long>(rng() % 21) - 10;
    switch (G.kind()) {
      case OrderedIndex::Kind::Integers:
        out.push_back(G.element(a));
        break;
      case OrderedIndex::Kind::FiniteChain:
        out.push_back(G.element(static_cast<long long>(rng() % G.chain_size())));
        break;
      case OrderedIndex::Kind::LexPower: {
        std::vector<long long> t(G.arity());
        for (auto& v : t) v = static_cast<long long>(rng() % 21) - 10;
        out.push_back(G.element(t));
        break;
      }
      case OrderedIndex::Kind::Rationals:
        out.push_back(G.element(Fraction::of(a, 1 + static_cast<long long>(rng() % 6))));
        break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("comparison basics") {
  OrderedIndex Z = OrderedIndex::integers();
  CHECK(Z.cmp(Z.element(1), Z.element(2)) < 0);

  OrderedIndex L = OrderedIndex::lex_power(2);
  CHECK(L.cmp(L.element({0, -1}), L.element({0, 0})) < 0);
  CHECK(L.cmp(L.element({1, -5}), L.element({0, 100})) > 0);

  OrderedIndex Q = OrderedIndex::rationals();
  CHECK(Q.cmp(Q.element(Fraction::of(1, 3)), Q.element(Fraction::of(2, 5))) < 0);

  CHECK_THROWS_AS(Z.cmp(Z.element(1), OrdElem{Fraction::integer(1)}), std::invalid_argument);
}

TEST_CASE("group operations") {
  OrderedIndex Z = OrderedIndex::integers();
  CHECK(Z.equal(Z.op(Z.element(2), Z.element(3)), Z.element(5)));
  CHECK(Z.equal(Z.inv(Z.element(2)), Z.element(-2)));

  OrderedIndex L = OrderedIndex::lex_power(2);
  CHECK(L.equal(L.op(L.element({1, 0}), L.element({0, -1})), L.element({1, -1})));

  OrderedIndex Q = OrderedIndex::rationals();
  CHECK(Q.equal(Q.op(Q.element(Fraction::of(1, 2)), Q.element(Fraction::of(1, 3))),
                Q.element(Fraction::of(5, 6))));

  OrderedIndex C = OrderedIndex::finite_chain(4);
  CHECK_THROWS_AS(C.op(C.element(1), C.element(2)), std::domain_error);
}

TEST_CASE("total order properties on samples") {
  std::mt19937 rng(7);
  for (OrderedIndex G : {OrderedIndex::integers(), OrderedIndex::lex_power(2),
                         OrderedIndex::rationals(), OrderedIndex::finite_chain(9)}) {
    auto xs = samples(G, rng, 24);
    for (const auto& a : xs) {
      CHECK(G.cmp(a, a) == 0);
      for (const auto& b : xs) {
        CHECK(G.cmp(a, b) == -G.cmp(b, a));
        for (const auto& c : xs)
          if (G.cmp(a, b) < 0 && G.cmp(b, c) < 0) CHECK(G.cmp(a, c) < 0);
      }
    }
  }
}

TEST_CASE("translation invariance of the order on group variants") {
  std::mt19937 rng(11);
  for (OrderedIndex G :
       {OrderedIndex::integers(), OrderedIndex::lex_power(2), OrderedIndex::rationals()}) {
    auto xs = samples(G, rng, 12);
    for (const auto& a : xs) {
      CHECK(G.equal(G.op(a, G.identity()), a));
      CHECK(G.equal(G.op(a, G.inv(a)), G.identity()));
      for (const auto& b : xs)
        for (const auto& c : xs)
          if (G.less(a, b)) {
            CHECK(G.less(G.op(c, a), G.op(c, b)));
            CHECK(G.less(G.op(a, c), G.op(b, c)));
          }
    }
  }
}

TEST_CASE("density witnesses for the negative cone") {
  OrderedIndex Q = OrderedIndex::rationals();
  CHECK(Q.negatives_closed_under_sum());
  std::mt19937 rng(3);
  for (const auto& c : samples(Q, rng, 30)) {
    if (!Q.less(c, Q.identity())) continue;
    // halves witness the factorization c = a + b with a, b < 0
    Fraction half = std::get<Fraction>(c) * Fraction::of(1, 2);
    CHECK(Q.less(OrdElem{half}, Q.identity()));
    CHECK(Q.equal(Q.op(OrdElem{half}, OrdElem{half}), c));
  }

  // in Z and Z^k the largest element below 0 factors through no negative pair
  for (OrderedIndex G : {OrderedIndex::integers(), OrderedIndex::lex_power(2)}) {
    CHECK_FALSE(G.negatives_closed_under_sum());
    OrdElem top = *G.max_below_identity();
    CHECK(G.less(top, G.identity()));
    auto xs = samples(G, rng, 40);
    for (const auto& a : xs)
      for (const auto& b : xs)
        if (G.less(a, G.identity()) && G.less(b, G.identity()))
          CHECK_FALSE(G.equal(G.op(a, b), top));
  }

  // the trivial group satisfies the condition vacuously
  CHECK(OrderedIndex::lex_power(0).negatives_closed_under_sum());
}

TEST_CASE("downset product bounds") {
  OrderedIndex Z = OrderedIndex::integers();
  CHECK(Z.equal(Z.downset_product_bound(Z.element(0), Z.element(0)), Z.element(-1)));
  OrderedIndex Q = OrderedIndex::rationals();
  CHECK(Q.equal(Q.downset_product_bound(Q.element(1), Q.element(2)), Q.element(3)));
  OrderedIndex L = OrderedIndex::lex_power(2);
  CHECK(L.equal(L.downset_product_bound(L.element({1, 0}), L.element({0, 2})),
                L.element({1, 1})));
}

TEST_CASE("rational overflow is reported") {
  Fraction big = Fraction::of(INT64_MAX, 1);
  CHECK_THROWS_AS((void)(big + big), std::overflow_error);
  CHECK_THROWS_AS((void)(big * big), std::overflow_error);
}

TEST_CASE("names round-trip") {
  for (const char* name : {"Z", "Q", "Z^3", "chain(5)"}) {
    OrderedIndex G = OrderedIndex::parse(name);
    CHECK(G.str() == name);
  }
  CHECK_THROWS_AS(OrderedIndex::parse("R"), not_found_error);

  OrderedIndex Q = OrderedIndex::rationals();
  CHECK(Q.format(Q.parse_elem("-2/5")) == "-2/5");
  OrderedIndex L = OrderedIndex::lex_power(2);
  CHECK(L.format(L.parse_elem("(1,-2)")) == "(1,-2)");
}
