#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hyper/catalog.hpp"
#include "hyper/classify.hpp"
#include "hyper/errors.hpp"
#include "oracles.hpp"

using namespace hyper;

TEST_CASE("builtin finite structures") {
  FiniteHyperStructure K = std::get<FiniteHyperStructure>(builtin("K"));
  CHECK(K.add(1, 1) == ElemSet::of({0, 1}, 2));

  // GF(4) against the independent polynomial oracle (x^2 + x + 1)
  FiniteHyperStructure F4 = std::get<FiniteHyperStructure>(builtin("GF(4)"));
  oracle::GFPoly ref{2, 2, {1, 1, 1}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK(F4.add(x, y) == ElemSet::single(ref.add(x, y), 4));
      CHECK(F4.mul(x, y) == ref.mul(x, y));
    }

  FiniteHyperStructure F8 = std::get<FiniteHyperStructure>(builtin("GF(8)"));
  oracle::GFPoly ref8{2, 3, {1, 1, 0, 1}};
  FiniteHyperStructure F9 = std::get<FiniteHyperStructure>(builtin("GF(9)"));
  oracle::GFPoly ref9{3, 2, {1, 0, 1}};
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) CHECK(F8.mul(x, y) == ref8.mul(x, y));
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) CHECK(F9.mul(x, y) == ref9.mul(x, y));

  for (const char* name : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"})
    CHECK(check_hyperfield(std::get<FiniteHyperStructure>(builtin(name))).passed);

  CHECK_THROWS_AS(builtin("GF(6)"), not_found_error);
  CHECK_THROWS_AS(builtin("nonsense"), not_found_error);
}

TEST_CASE("symbolic hyperaddition on the integer max-plus structure") {
  SymbolicHyperfield F = z_minus_inf();
  const OrderedIndex& Z = F.layers();

  // distinct layers: the larger wins
  SetDescription s = F.add(F.make(1, Z.element(3)), F.make(1, Z.element(5)));
  CHECK(F.set_equal(s, SetDescription::of({F.make(1, Z.element(5))})));

  // equal layers cancel into the strict downset plus zero
  SetDescription tie = F.add(F.make(1, Z.element(2)), F.make(1, Z.element(2)));
  CHECK(tie.down.has_value());
  CHECK(Z.equal(*tie.down, Z.element(2)));
  CHECK(tie.zero);
  CHECK(tie.finite.empty());
  CHECK(F.contains(tie, F.make(1, Z.element(1))));
  CHECK(F.contains(tie, F.make(1, Z.element(-7))));
  CHECK(F.contains(tie, SymElem::zero()));
  CHECK_FALSE(F.contains(tie, F.make(1, Z.element(2))));

  // multiplication adds layers; zero absorbs
  SymElem p = F.mul(F.make(1, Z.element(3)), F.make(1, Z.element(5)));
  CHECK(F.elem_equal(p, F.make(1, Z.element(8))));
  CHECK(F.mul(SymElem::zero(), F.make(1, Z.element(3))).is_zero());
}

TEST_CASE("symbolic arithmetic over a field base") {
  SymbolicHyperfield F = std::get<SymbolicHyperfield>(builtin("layer(GF(3),Q)"));
  const OrderedIndex& Q = F.layers();

  // layer addition is base addition: 1 + 1 = 2 in GF(3)
  SetDescription s = F.add(F.make(1, Q.identity()), F.make(1, Q.identity()));
  CHECK(F.set_equal(s, SetDescription::of({F.make(2, Q.identity())})));

  // cancelling units spill into the downset
  SetDescription t = F.add(F.make(1, Q.identity()), F.make(2, Q.identity()));
  CHECK(t.down.has_value());
  CHECK(t.finite.empty());

  // (2, 1/2) * (2, 1/2) = (1, 1)
  SymElem sq = F.mul(F.make(2, Q.element(Fraction::of(1, 2))),
                     F.make(2, Q.element(Fraction::of(1, 2))));
  CHECK(F.elem_equal(sq, F.make(1, Q.element(1))));

  SymElem inv = F.mul_inverse(F.make(2, Q.element(Fraction::of(1, 2))));
  CHECK(F.elem_equal(F.mul(inv, F.make(2, Q.element(Fraction::of(1, 2)))), F.one()));
}

TEST_CASE("windows of the layered structures are stringent hypergroups") {
  for (const char* name : {"Zminusinf", "trop(Z)", "layer(GF(3),Z)"}) {
    SymbolicHyperfield F = std::get<SymbolicHyperfield>(builtin(name));
    auto w = F.window_table(F.window_layers(-3, 3));
    CHECK(w.truncated);
    CHECK(check_hypergroup(w.table).passed);
    CHECK(is_stringent(w.table).ok);
    CHECK(is_commutative_add(w.table).ok);
  }
  SymbolicHyperfield FQ = std::get<SymbolicHyperfield>(builtin("layer(GF(3),Q)"));
  auto wq = FQ.window_table(FQ.window_layers(-2, 2));
  CHECK(check_hypergroup(wq.table).passed);
  CHECK(is_stringent(wq.table).ok);
}

TEST_CASE("every window layer is a hypergroup isomorphic to the unit layer") {
  SymbolicHyperfield F = std::get<SymbolicHyperfield>(builtin("layer(GF(3),Z)"));
  auto w = F.window_table(F.window_layers(-2, 2));
  LessRelation rel = LessRelation::compute(w.table);
  SimClasses classes = SimClasses::compute(w.table, rel);
  REQUIRE(classes.classes.size() == 5);
  FiniteHyperStructure unit_layer = layer_at(w.table, classes.classes[2]);
  CHECK(check_hypergroup(unit_layer).passed);
  for (const auto& cls : classes.classes) {
    FiniteHyperStructure L = layer_at(w.table, cls);
    CHECK(check_hypergroup(L).passed);
    CHECK(find_isomorphism(L, unit_layer).has_value());
  }
}

TEST_CASE("distributivity of symbolic products over symbolic sums, sampled") {
  std::mt19937 rng(5);
  for (const char* name : {"Zminusinf", "trop(Z)", "layer(GF(3),Z)", "layer(S,Z)"}) {
    SymbolicHyperfield F = std::get<SymbolicHyperfield>(builtin(name));
    const OrderedIndex& Z = F.layers();
    auto rand_elem = [&]() {
      int unit = 1 + static_cast<int>(rng() % (F.base().n() - 1));
      return F.make(unit, Z.element(static_cast<long long>(rng() % 11) - 5));
    };
    for (int trial = 0; trial < 200; ++trial) {
      SymElem a = rand_elem(), x = rand_elem(), y = rand_elem();
      SetDescription lhs = F.ext_mul(SetDescription::of({a}), F.add(x, y));
      SetDescription rhs = F.add(F.mul(a, x), F.mul(a, y));
      CHECK(F.set_equal(lhs, rhs));
      SetDescription lhs_r = F.ext_mul(F.add(x, y), SetDescription::of({a}));
      SetDescription rhs_r = F.add(F.mul(x, a), F.mul(y, a));
      CHECK(F.set_equal(lhs_r, rhs_r));
    }
  }
}

TEST_CASE("windowed tables agree with the naive wedge of their layers") {
  // the clipped window is exactly the wedge over the finite chain of layers
  SymbolicHyperfield F = tropical_z();
  auto w = F.window_table(F.window_layers(-2, 2));
  for (int x = 0; x < w.table.n(); ++x)
    for (int y = 0; y < w.table.n(); ++y) {
      const SymElem &ex = w.elems[x], &ey = w.elems[y];
      if (ex.is_zero() || ey.is_zero()) continue;
      int c = F.layers().cmp(ex.layer, ey.layer);
      if (c > 0) CHECK(w.table.add(x, y) == ElemSet::single(x, w.table.n()));
      if (c < 0) CHECK(w.table.add(x, y) == ElemSet::single(y, w.table.n()));
    }
}

TEST_CASE("a nontrivial action twists multiplication but keeps sums stable") {
  // Frobenius on GF(4): fixes 0 and 1, swaps the other two elements
  FiniteHyperStructure F4 = galois_field(4);
  std::vector<int> frob(4);
  for (int i = 0; i < 4; ++i) frob[i] = F4.mul(i, i);
  SymbolicHyperfield F("layer(GF(4),Z,frob)", F4, OrderedIndex::integers(),
                       SymbolicHyperfield::Action::cyclic(frob));
  const OrderedIndex& Z = F.layers();

  SymElem a = F.make(2, Z.element(1)), b = F.make(2, Z.element(0));
  SymElem ab = F.mul(a, b), ba = F.mul(b, a);
  CHECK_FALSE(F.elem_equal(ab, ba));  // the twist makes multiplication skew

  auto w = F.window_table(F.window_layers(-2, 2));
  CHECK(check_hypergroup(w.table).passed);
  CHECK(is_stringent(w.table).ok);

  // multiplicative group laws still hold
  CHECK(F.elem_equal(F.mul(a, F.mul_inverse(a)), F.one()));
  CHECK(F.elem_equal(F.mul(F.mul_inverse(a), a), F.one()));

  // sampled distributivity survives the twist
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_elem = [&]() {
      return F.make(1 + static_cast<int>(rng() % 3), Z.element(static_cast<long long>(rng() % 7) - 3));
    };
    SymElem p = rand_elem(), x = rand_elem(), y = rand_elem();
    CHECK(F.set_equal(F.ext_mul(SetDescription::of({p}), F.add(x, y)),
                      F.add(F.mul(p, x), F.mul(p, y))));
    CHECK(F.set_equal(F.ext_mul(F.add(x, y), SetDescription::of({p})),
                      F.add(F.mul(x, p), F.mul(y, p))));
  }
}

TEST_CASE("rejected constructions") {
  CHECK_THROWS_AS(SymbolicHyperfield("bad", galois_field(4), OrderedIndex::finite_chain(3)),
                  std::invalid_argument);
  // the square of K is not a hyperfield, so it cannot be layered
  CHECK_THROWS(SymbolicHyperfield("bad", std::get<FiniteHyperStructure>(builtin("K")),
                                  OrderedIndex::integers(),
                                  SymbolicHyperfield::Action::cyclic({0, 1, 2})));
}
