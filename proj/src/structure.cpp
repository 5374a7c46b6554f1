#include "hyper/structure.hpp"

#include <stdexcept>

#include "hyper/errors.hpp"

namespace hyper {

FiniteHyperStructure FiniteHyperStructure::make(std::vector<std::string> names,
                                                std::vector<ElemSet> add_table,
                                                std::optional<std::vector<int>> mul_table,
                                                std::optional<int> one_index) {
  const int n = static_cast<int>(names.size());
  if (n < 1) throw std::invalid_argument("carrier must be non-empty");
  if (n > kMaxCarrier)
    throw capacity_error("carrier size " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(kMaxCarrier));
  if (static_cast<int>(add_table.size()) != n * n)
    throw std::invalid_argument("add table must have n*n cells");
  for (const ElemSet& cell : add_table) {
    if (cell.carrier_size() != n) throw std::invalid_argument("add cell carrier mismatch");
    if (cell.empty()) throw std::invalid_argument("hyperaddition cells must be non-empty");
  }
  if (mul_table) {
    if (static_cast<int>(mul_table->size()) != n * n)
      throw std::invalid_argument("mul table must have n*n cells");
    for (int v : *mul_table)
      if (v < 0 || v >= n) throw std::invalid_argument("mul cell out of carrier");
    if (!one_index || *one_index < 0 || *one_index >= n)
      throw std::invalid_argument("multiplicative structure needs a valid one_index");
  } else if (one_index) {
    throw std::invalid_argument("one_index given without mul table");
  }

  FiniteHyperStructure t;
  t.n_ = n;
  t.names_ = std::move(names);
  t.add_ = std::move(add_table);
  t.mul_ = mul_table ? std::move(*mul_table) : std::vector<int>{};
  t.one_ = one_index;

  // Derive hyperinverses: the unique y with 0 in x ⊞ y, matching the unique
  // z with 0 in z ⊞ x. Failures leave -1 and are reported by the checkers.
  t.neg_.assign(n, -1);
  t.neg_ok_ = true;
  for (int x = 0; x < n; ++x) {
    int row = -1, col = -1;
    bool row_unique = true, col_unique = true;
    for (int y = 0; y < n; ++y) {
      if (t.add(x, y).contains(0)) {
        if (row >= 0) row_unique = false;
        row = y;
      }
      if (t.add(y, x).contains(0)) {
        if (col >= 0) col_unique = false;
        col = y;
      }
    }
    if (row >= 0 && row_unique && col_unique && row == col) {
      t.neg_[x] = row;
    } else {
      t.neg_ok_ = false;
    }
  }
  if (t.neg_ok_) {
    for (int x = 0; x < n; ++x)
      if (t.neg_[t.neg_[x]] != x) t.neg_ok_ = false;
  }
  return t;
}

ElemSet FiniteHyperStructure::extend_sum(const ElemSet& A, const ElemSet& B) const {
  if (A.empty() || B.empty()) throw std::invalid_argument("extend_sum: empty input set");
  ElemSet out(n_);
  for (int a : A.elements())
    for (int b : B.elements()) out |= add(a, b);
  return out;
}

ElemSet FiniteHyperStructure::set_product(const ElemSet& A, const ElemSet& B) const {
  if (!has_mul()) throw std::invalid_argument("set_product: no multiplication table");
  ElemSet out(n_);
  for (int a : A.elements())
    for (int b : B.elements()) out.insert(mul(a, b));
  return out;
}

ElemSet FiniteHyperStructure::fold_sum(const std::vector<int>& xs) const {
  if (xs.empty()) throw std::invalid_argument("fold_sum: empty list");
  ElemSet acc = ElemSet::single(xs[0], n_);
  for (size_t i = 1; i < xs.size(); ++i) acc = extend_sum(acc, ElemSet::single(xs[i], n_));
  return acc;
}

namespace {

// Identity and inverse axioms; returns true when hyperinverses are usable.
bool check_additive_base(const FiniteHyperStructure& T, CheckReport& r) {
  const int n = T.n();
  for (int x = 0; x < n; ++x) {
    if (T.add(0, x) != ElemSet::single(x, n)) r.fail("Identity", {0, x});
    if (T.add(x, 0) != ElemSet::single(x, n)) r.fail("Identity", {x, 0});
  }
  bool inv_usable = true;
  for (int x = 0; x < n; ++x) {
    std::vector<int> row, col;
    for (int y = 0; y < n; ++y) {
      if (T.add(x, y).contains(0)) row.push_back(y);
      if (T.add(y, x).contains(0)) col.push_back(y);
    }
    if (row.empty() || col.empty()) {
      r.fail("NoInverse", {x});
      inv_usable = false;
    } else if (row.size() > 1 || col.size() > 1) {
      r.fail("InverseNotUnique", {x});
      inv_usable = false;
    } else if (row[0] != col[0]) {
      r.fail("InverseMismatch", {x, row[0], col[0]});
      inv_usable = false;
    }
  }
  if (inv_usable && !T.neg_ok()) {
    // neg derivation disagrees with a direct scan; cannot happen.
    r.fail("InverseDerivation", {});
    inv_usable = false;
  }
  return inv_usable;
}

bool check_associativity(const FiniteHyperStructure& T, CheckReport& r) {
  const int n = T.n();
  bool ok = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElemSet& xy = T.add(x, y);
      for (int z = 0; z < n; ++z) {
        ElemSet left = T.extend_sum(xy, ElemSet::single(z, n));
        ElemSet right = T.extend_sum(ElemSet::single(x, n), T.add(y, z));
        if (left != right) {
          r.fail("Associativity", {x, y, z});
          ok = false;
        }
      }
    }
  return ok;
}

}  // namespace

CheckReport check_hypergroup(const FiniteHyperStructure& T) {
  CheckReport r;
  const int n = T.n();
  bool inv_usable = check_additive_base(T, r);
  bool assoc_ok = check_associativity(T, r);

  if (inv_usable) {
    bool invertibility_ok = true;
    bool reversibility_ok = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const ElemSet& xy = T.add(x, y);
        for (int z = 0; z < n; ++z) {
          bool member = xy.contains(z);
          if (member != T.add(T.neg(y), T.neg(x)).contains(T.neg(z))) {
            if (invertibility_ok) r.fail("InvertibilityOfSums", {x, y, z});
            invertibility_ok = false;
          }
          if (member && !(T.add(z, T.neg(y)).contains(x) && T.add(T.neg(x), z).contains(y)))
            reversibility_ok = false;
        }
      }
    // The invertibility-of-sums axiom and the reversibility property are
    // interchangeable; a table passing everything else must satisfy both or
    // neither.
    if (assoc_ok && invertibility_ok != reversibility_ok)
      r.fail("ReversibilityCrossCheck", {});
  }
  return r;
}

CheckReport check_skew_hyperring(const FiniteHyperStructure& T) {
  if (!T.has_mul()) throw std::invalid_argument("check_skew_hyperring: mul table missing");
  CheckReport r = check_hypergroup(T);
  const int n = T.n();

  if (WitnessResult c = is_commutative_add(T); !c)
    r.fail("AdditiveCommutativity", c.witness);

  const int one = *T.one_index();
  for (int x = 0; x < n; ++x) {
    if (T.mul(one, x) != x || T.mul(x, one) != x) r.fail("MonoidIdentity", {x});
    if (T.mul(x, 0) != 0 || T.mul(0, x) != 0) r.fail("Absorption", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (T.mul(T.mul(x, y), z) != T.mul(x, T.mul(y, z))) {
          r.fail("MonoidAssociativity", {x, y, z});
          z = y = x = n;  // first witness is enough
        }

  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        ElemSet sum = T.add(x, y);
        ElemSet left(n), right(n);
        for (int t : sum.elements()) {
          left.insert(T.mul(a, t));
          right.insert(T.mul(t, a));
        }
        if (left != T.add(T.mul(a, x), T.mul(a, y))) r.fail("LeftDistributivity", {a, x, y});
        if (right != T.add(T.mul(x, a), T.mul(y, a))) r.fail("RightDistributivity", {x, y, a});
      }
  return r;
}

CheckReport check_hyperfield(const FiniteHyperStructure& T) {
  CheckReport r = check_skew_hyperring(T);
  const int n = T.n();
  const int one = *T.one_index();
  if (one == 0 || n < 2) r.fail("ZeroEqualsOne", {});
  for (int x = 1; x < n; ++x) {
    bool has_inv = false;
    for (int y = 1; y < n && !has_inv; ++y)
      if (T.mul(x, y) == one && T.mul(y, x) == one) has_inv = true;
    if (!has_inv) r.fail("NoMultiplicativeInverse", {x});
  }
  return r;
}

WitnessResult is_doubly_distributive(const FiniteHyperStructure& T) {
  if (!T.has_mul()) throw std::invalid_argument("is_doubly_distributive: mul table missing");
  const int n = T.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ElemSet ab = T.add(a, b);
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          ElemSet lhs = T.set_product(ab, T.add(c, d));
          ElemSet rhs = T.fold_sum({T.mul(a, c)});
          rhs = T.extend_sum(rhs, ElemSet::single(T.mul(a, d), n));
          rhs = T.extend_sum(rhs, ElemSet::single(T.mul(b, c), n));
          rhs = T.extend_sum(rhs, ElemSet::single(T.mul(b, d), n));
          if (lhs != rhs) return {false, {a, b, c, d}};
        }
    }
  return {};
}

WitnessResult is_stringent(const FiniteHyperStructure& T) {
  if (!T.neg_ok()) throw std::invalid_argument("is_stringent: hyperinverses not derivable");
  const int n = T.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != T.neg(b) && T.add(a, b).size() != 1) return {false, {a, b}};
  return {};
}

WitnessResult is_commutative_add(const FiniteHyperStructure& T) {
  const int n = T.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (T.add(x, y) != T.add(y, x)) return {false, {x, y}};
  return {};
}

WitnessResult is_homomorphism(const std::vector<int>& f, const FiniteHyperStructure& A,
                              const FiniteHyperStructure& B) {
  if (static_cast<int>(f.size()) != A.n()) throw std::invalid_argument("is_homomorphism: map not total on A");
  for (int v : f)
    if (v < 0 || v >= B.n()) throw std::invalid_argument("is_homomorphism: image out of range");

  if (f[0] != 0) return {false, {0}};
  for (int x = 0; x < A.n(); ++x)
    for (int y = 0; y < A.n(); ++y) {
      ElemSet image(B.n());
      for (int t : A.add(x, y).elements()) image.insert(f[t]);
      if (!image.subset_of(B.add(f[x], f[y]))) return {false, {x, y}};
    }
  if (A.has_mul() && B.has_mul()) {
    if (f[*A.one_index()] != *B.one_index()) return {false, {*A.one_index()}};
    for (int x = 0; x < A.n(); ++x)
      for (int y = 0; y < A.n(); ++y)
        if (f[A.mul(x, y)] != B.mul(f[x], f[y])) return {false, {x, y}};
  }
  return {};
}

}  // namespace hyper
