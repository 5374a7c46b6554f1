#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "hyper/catalog.hpp"
#include "hyper/constructions.hpp"
#include "hyper/errors.hpp"
#include "hyper/isoenum.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

FiniteHyperStructure cyclic_ring(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<ElemSet> add(static_cast<size_t>(n) * n, ElemSet(n));
  std::vector<int> mul(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add[static_cast<size_t>(x) * n + y] = ElemSet::single((x + y) % n, n);
      mul[static_cast<size_t>(x) * n + y] = (x * y) % n;
    }
  return FiniteHyperStructure::make(std::move(names), std::move(add), std::move(mul), 1 % n);
}

FiniteHyperStructure additive_part(const FiniteHyperStructure& T) {
  std::vector<ElemSet> add;
  for (int x = 0; x < T.n(); ++x)
    for (int y = 0; y < T.n(); ++y) add.push_back(T.add(x, y));
  return FiniteHyperStructure::make(T.names(), std::move(add));
}

/// All subgroups of the (cyclic) unit group of a finite field.
std::vector<std::vector<int>> unit_subgroups(const FiniteHyperStructure& K) {
  std::set<std::set<int>> seen;
  std::vector<std::vector<int>> out;
  for (int g = 1; g < K.n(); ++g) {
    std::set<int> sub;
    int x = *K.one_index();
    do {
      sub.insert(x);
      x = K.mul(x, g);
    } while (!sub.count(x));
    if (seen.insert(sub).second) out.emplace_back(sub.begin(), sub.end());
  }
  return out;
}

}  // namespace

TEST_CASE("products") {
  FiniteHyperStructure K = krasner();
  FiniteHyperStructure KK = product(K, K);
  CHECK(KK.n() == 4);
  CHECK(check_skew_hyperring(KK).passed);

  // GF(2) x GF(3) is the ring of integers modulo 6
  FiniteHyperStructure Z6ish = product(galois_field(2), galois_field(3));
  CHECK(check_skew_hyperring(Z6ish).passed);
  CHECK(find_isomorphism(Z6ish, cyclic_ring(6)).has_value());

  // one-element factor changes nothing
  std::vector<ElemSet> triv_add = {ElemSet::single(0, 1)};
  FiniteHyperStructure trivial =
      FiniteHyperStructure::make({"0"}, std::move(triv_add), std::vector<int>{0}, 0);
  CHECK(find_isomorphism(product(K, trivial), K).has_value());

  CHECK_THROWS_AS(product(galois_field(9), galois_field(8)), capacity_error);
}

TEST_CASE("wedge sums") {
  FiniteHyperStructure C2 = additive_part(galois_field(2));

  FiniteHyperStructure W = wedge_sum({C2, C2});
  REQUIRE(W.n() == 3);
  // upper layer's self-sum spills into everything below it
  CHECK(W.add(2, 2) == ElemSet::of({0, 1}, 3));
  CHECK(W.add(1, 2) == ElemSet::single(2, 3));
  CHECK(W.add(2, 1) == ElemSet::single(2, 3));
  CHECK(W.add(1, 1) == ElemSet::single(0, 3));
  CHECK(check_hypergroup(W).passed);

  // a single layer comes back unchanged
  FiniteHyperStructure S_add = additive_part(sign_hyperfield());
  CHECK(find_isomorphism(wedge_sum({S_add}), S_add).has_value());

  FiniteHyperStructure KS = wedge_sum({additive_part(krasner()), S_add});
  CHECK(KS.n() == 4);
  CHECK(check_hypergroup(KS).passed);
  CHECK(is_stringent(KS).ok);

  CHECK_THROWS_AS(wedge_sum({two_layer_failure()}), precondition_error);
}

TEST_CASE("wedge sums preserve the hypergroup axioms and the filters") {
  std::vector<FiniteHyperStructure> pool = {
      additive_part(galois_field(2)), additive_part(galois_field(3)), additive_part(krasner()),
      additive_part(sign_hyperfield())};
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FiniteHyperStructure> layers;
    int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) layers.push_back(pool[rng() % pool.size()]);
    FiniteHyperStructure W = wedge_sum(layers);
    CHECK(check_hypergroup(W).passed);
    CHECK(is_stringent(W).ok);        // every pool layer is stringent
    CHECK(is_commutative_add(W).ok);  // and commutative
  }
}

TEST_CASE("Krasner quotients") {
  FiniteHyperStructure F4 = galois_field(4);
  FiniteHyperStructure Q4 = quotient(F4, {1, 2, 3});
  CHECK(Q4.n() == 2);
  CHECK(check_hyperfield(Q4).passed);
  CHECK(find_isomorphism(Q4, krasner()).has_value());

  // trivial subgroup gives the field back
  FiniteHyperStructure F3 = galois_field(3);
  CHECK(find_isomorphism(quotient(F3, {1}), F3).has_value());

  // GF(5) / {1,4}: squares coset and non-squares coset
  FiniteHyperStructure F5 = galois_field(5);
  FiniteHyperStructure Q5 = quotient(F5, {1, 4});
  REQUIRE(Q5.n() == 3);
  CHECK(Q5.name(1) == "[1]");
  CHECK(Q5.name(2) == "[2]");
  CHECK(Q5.add(1, 1) == ElemSet::of({0, 2}, 3));
  CHECK(check_hyperfield(Q5).passed);

  // against the brute-force coset oracle
  std::vector<int> class_of = {0, 1, 2, 2, 1};
  for (int g : {1, 2})
    for (int h : {1, 2}) {
      oracle::SetVec expect = oracle::naive_coset_sum(F5, {1, 4}, g == 1 ? 1 : 2, h == 1 ? 1 : 2,
                                                      class_of);
      CHECK(oracle::to_set(Q5.add(g, h)) == expect);
    }

  CHECK_THROWS_AS(quotient(F5, {1, 2}), std::invalid_argument);   // not closed
  CHECK_THROWS_AS(quotient(krasner(), {1}), std::invalid_argument);  // not a field
}

TEST_CASE("quotients by every unit subgroup are hyperfields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    FiniteHyperStructure F = galois_field(q);
    for (const auto& U : unit_subgroups(F)) {
      FiniteHyperStructure Q = quotient(F, U);
      CHECK(check_hyperfield(Q).passed);
    }
  }
}

TEST_CASE("associated semirings of the basic hyperfields") {
  SemiringTable K = associated_semiring(krasner());
  CHECK(K.n() == 3);
  CHECK(check_semiring(K).passed);

  SemiringTable S = associated_semiring(sign_hyperfield());
  CHECK(S.n() == 4);
  CHECK(check_semiring(S).passed);
  // the one extra class is the full balanced set {0,1,-1}
  bool has_full = false;
  for (const auto& e : S.elements)
    if (e.size() == 3) has_full = true;
  CHECK(has_full);

  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    SemiringTable F = associated_semiring(galois_field(q));
    CHECK(F.n() == q);
    CHECK(check_semiring(F).passed);
  }
  // a field's associated semiring is the field itself
  SemiringTable F3 = associated_semiring(galois_field(3));
  CHECK(F3.n() == 3);

  CHECK_THROWS_AS(associated_semiring(krasner(), 2), capacity_error);
  CHECK_THROWS_AS(associated_semiring(product(krasner(), krasner()), 256), precondition_error);
}

TEST_CASE("closed-form layered semirings match direct set arithmetic") {
  using E = LayeredSemiringElem;
  std::mt19937 rng(23);

  auto cross_check = [&](const SymbolicHyperfield& F, int lo, int hi) {
    LayeredSemiring S(F);
    const OrderedIndex& G = F.layers();
    std::vector<E> elems = {E::zero()};
    for (long long g = lo; g <= hi; ++g) {
      for (int u = 1; u < F.base().n(); ++u) elems.push_back(E::single(u, G.element(g)));
      elems.push_back(E::ghost(G.element(g)));
    }
    for (const auto& a : elems)
      for (const auto& b : elems) {
        SetDescription lhs_add = F.ext_add(S.to_set(a), S.to_set(b));
        CHECK(F.set_equal(lhs_add, S.to_set(S.add(a, b))));
        SetDescription lhs_mul = F.ext_mul(S.to_set(a), S.to_set(b));
        CHECK(F.set_equal(lhs_mul, S.to_set(S.mul(a, b))));
      }
  };

  cross_check(tropical_z(), -3, 3);                                           // supertropical
  cross_check(std::get<SymbolicHyperfield>(builtin("layer(S,Z)")), -2, 2);    // symmetrised
  cross_check(std::get<SymbolicHyperfield>(builtin("layer(GF(3),Q)")), -2, 2);  // linearised

  // the linearised closed form needs a dense layer group
  CHECK_THROWS_AS(LayeredSemiring(std::get<SymbolicHyperfield>(builtin("layer(GF(3),Z)"))),
                  precondition_error);
}

TEST_CASE("windowed additive closure of the tropical structure") {
  SymbolicHyperfield F = tropical_z();
  const OrderedIndex& Z = F.layers();
  std::vector<SetDescription> closure;
  auto intern = [&](const SetDescription& s) {
    for (const auto& k : closure)
      if (F.set_equal(k, s)) return false;
    closure.push_back(F.normalized(s));
    return true;
  };
  intern(SetDescription::zero_only());
  for (long long g = -3; g <= 3; ++g) intern(SetDescription::of({F.make(1, Z.element(g))}));
  for (size_t i = 0; i < closure.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      intern(F.ext_add(closure[i], closure[j]));
      intern(F.ext_add(closure[j], closure[i]));
    }
  // zero, seven singletons, seven ghosts
  CHECK(closure.size() == 15);
}
