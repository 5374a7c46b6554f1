#include "hyper/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hyper/errors.hpp"

namespace hyper {

FiniteHyperStructure product(const FiniteHyperStructure& A, const FiniteHyperStructure& B) {
  const int na = A.n(), nb = B.n();
  const long long n = static_cast<long long>(na) * nb;
  if (n > FiniteHyperStructure::kMaxCarrier)
    throw capacity_error("product carrier of size " + std::to_string(n) + " exceeds capacity");
  const int ni = static_cast<int>(n);
  auto pair_index = [nb](int a, int b) { return a * nb + b; };

  std::vector<std::string> names;
  names.reserve(ni);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) names.push_back("(" + A.name(a) + "," + B.name(b) + ")");

  std::vector<ElemSet> add(static_cast<size_t>(ni) * ni, ElemSet(ni));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < na; ++c)
        for (int d = 0; d < nb; ++d) {
          ElemSet cell(ni);
          for (int e : A.add(a, c).elements())
            for (int f : B.add(b, d).elements()) cell.insert(pair_index(e, f));
          add[static_cast<size_t>(pair_index(a, b)) * ni + pair_index(c, d)] = cell;
        }

  std::optional<std::vector<int>> mul;
  std::optional<int> one;
  if (A.has_mul() && B.has_mul()) {
    mul.emplace(static_cast<size_t>(ni) * ni, 0);
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b)
        for (int c = 0; c < na; ++c)
          for (int d = 0; d < nb; ++d)
            (*mul)[static_cast<size_t>(pair_index(a, b)) * ni + pair_index(c, d)] =
                pair_index(A.mul(a, c), B.mul(b, d));
    one = pair_index(*A.one_index(), *B.one_index());
  }
  return FiniteHyperStructure::make(std::move(names), std::move(add), std::move(mul), one);
}

FiniteHyperStructure wedge_sum(const std::vector<FiniteHyperStructure>& layers) {
  if (layers.empty()) throw std::invalid_argument("wedge_sum: no layers");
  for (const auto& L : layers)
    if (!check_hypergroup(L).passed)
      throw precondition_error("wedge_sum: every layer must be a hypergroup");

  long long n = 1;
  for (const auto& L : layers) n += L.n() - 1;
  if (n > FiniteHyperStructure::kMaxCarrier)
    throw capacity_error("wedge carrier of size " + std::to_string(n) + " exceeds capacity");
  const int ni = static_cast<int>(n);
  const int k = static_cast<int>(layers.size());

  std::vector<int> offset(k);  // global index of layer i's local element 1
  {
    int at = 1;
    for (int i = 0; i < k; ++i) {
      offset[i] = at;
      at += layers[i].n() - 1;
    }
  }
  auto global = [&](int layer, int local) { return offset[layer] + local - 1; };

  std::vector<std::string> names(ni);
  names[0] = "0";
  for (int i = 0; i < k; ++i)
    for (int x = 1; x < layers[i].n(); ++x)
      names[global(i, x)] = layers[i].name(x) + "@" + std::to_string(i);

  std::vector<ElemSet> add(static_cast<size_t>(ni) * ni, ElemSet(ni));
  auto cell = [&](int x, int y) -> ElemSet& { return add[static_cast<size_t>(x) * ni + y]; };
  for (int x = 0; x < ni; ++x) {
    cell(0, x) = ElemSet::single(x, ni);
    cell(x, 0) = ElemSet::single(x, ni);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int x = 1; x < layers[i].n(); ++x)
        for (int y = 1; y < layers[j].n(); ++y) {
          int gx = global(i, x), gy = global(j, y);
          if (i > j) {
            cell(gx, gy) = ElemSet::single(gx, ni);
          } else if (i < j) {
            cell(gx, gy) = ElemSet::single(gy, ni);
          } else {
            const ElemSet& s = layers[i].add(x, y);
            ElemSet out(ni);
            for (int w : s.elements())
              if (w != 0) out.insert(global(i, w));
            if (s.contains(0)) {
              out.insert(0);
              for (int lo = 0; lo < i; ++lo)
                for (int w = 1; w < layers[lo].n(); ++w) out.insert(global(lo, w));
            }
            cell(gx, gy) = out;
          }
        }
  return FiniteHyperStructure::make(std::move(names), std::move(add));
}

SymbolicHyperfield layering(const FiniteHyperStructure& M, const OrderedIndex& G,
                            SymbolicHyperfield::Action action, std::string name) {
  if (!check_hyperfield(M).passed)
    throw precondition_error("layering: base must pass the hyperfield checks");
  if (name.empty()) name = "layer(base," + G.str() + ")";
  return SymbolicHyperfield(std::move(name), M, G, std::move(action));
}

FiniteHyperStructure quotient(const FiniteHyperStructure& K, const std::vector<int>& U) {
  if (!K.has_mul() || !check_hyperfield(K).passed)
    throw std::invalid_argument("quotient: K must be a finite field table");
  const int n = K.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (K.add(x, y).size() != 1)
        throw std::invalid_argument("quotient: K must have single-valued addition");

  std::vector<bool> in_u(n, false);
  for (int u : U) {
    if (u <= 0 || u >= n) throw std::invalid_argument("quotient: U must consist of nonzero elements");
    in_u[u] = true;
  }
  const int one = *K.one_index();
  if (!in_u[one]) throw std::invalid_argument("quotient: U must contain 1");
  for (int a : U)
    for (int b : U)
      if (!in_u[K.mul(a, b)]) throw std::invalid_argument("quotient: U not closed under product");
  for (int a : U) {
    bool has_inv = false;
    for (int b : U)
      if (K.mul(a, b) == one) has_inv = true;
    if (!has_inv) throw std::invalid_argument("quotient: U not closed under inverse");
  }

  // Cosets of U in K^x, keyed by smallest representative.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int g = 1; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int u : U) coset_of[K.mul(g, u)] = c;
  }
  const int m = static_cast<int>(reps.size()) + 1;  // classes plus zero
  auto class_index = [&](int x) { return x == 0 ? 0 : 1 + coset_of[x]; };

  std::vector<std::string> names(m);
  names[0] = "0";
  for (size_t c = 0; c < reps.size(); ++c) names[1 + c] = "[" + K.name(reps[c]) + "]";

  std::vector<ElemSet> add(static_cast<size_t>(m) * m, ElemSet(m));
  std::vector<int> mul(static_cast<size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x) {
    add[static_cast<size_t>(0) * m + x] = ElemSet::single(x, m);
    add[static_cast<size_t>(x) * m + 0] = ElemSet::single(x, m);
  }
  std::vector<std::vector<int>> members(reps.size());
  for (int g = 1; g < n; ++g) members[coset_of[g]].push_back(g);
  for (size_t c1 = 0; c1 < reps.size(); ++c1)
    for (size_t c2 = 0; c2 < reps.size(); ++c2) {
      ElemSet cell(m);
      for (int a : members[c1])
        for (int b : members[c2]) cell.insert(class_index(K.add(a, b).sole_element()));
      add[(1 + c1) * m + (1 + c2)] = cell;
    }
  for (int x = 1; x < m; ++x)
    for (int y = 1; y < m; ++y)
      mul[static_cast<size_t>(x) * m + y] = class_index(K.mul(reps[x - 1], reps[y - 1]));
  return FiniteHyperStructure::make(std::move(names), std::move(add), std::move(mul),
                                    class_index(one));
}

SemiringTable associated_semiring(const FiniteHyperStructure& T, int cap) {
  if (!T.has_mul()) throw std::invalid_argument("associated_semiring: mul table missing");
  if (!is_doubly_distributive(T))
    throw precondition_error("associated_semiring: structure must be doubly distributive");
  const int n = T.n();

  std::map<uint64_t, int> index;
  std::vector<ElemSet> elems;
  auto intern = [&](const ElemSet& s) {
    auto it = index.find(s.bits());
    if (it != index.end()) return it->second;
    if (static_cast<int>(elems.size()) >= cap)
      throw capacity_error("semiring closure exceeds cap " + std::to_string(cap));
    int id = static_cast<int>(elems.size());
    index.emplace(s.bits(), id);
    elems.push_back(s);
    return id;
  };
  for (int i = 0; i < n; ++i) intern(ElemSet::single(i, n));

  for (size_t next = 0; next < elems.size(); ++next)
    for (size_t j = 0; j <= next; ++j) {
      ElemSet a = elems[next], b = elems[j];
      intern(T.extend_sum(a, b));
      intern(T.extend_sum(b, a));
      intern(T.set_product(a, b));
      intern(T.set_product(b, a));
    }

  SemiringTable S;
  S.elements = elems;
  S.generators = n;
  const int m = S.n();
  S.add.resize(static_cast<size_t>(m) * m);
  S.mul.resize(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      S.add[static_cast<size_t>(x) * m + y] = index.at(T.extend_sum(elems[x], elems[y]).bits());
      S.mul[static_cast<size_t>(x) * m + y] = index.at(T.set_product(elems[x], elems[y]).bits());
    }
  S.zero = index.at(ElemSet::single(0, n).bits());
  S.one = index.at(ElemSet::single(*T.one_index(), n).bits());
  return S;
}

CheckReport check_semiring(const SemiringTable& S) {
  CheckReport r;
  const int m = S.n();
  for (int x = 0; x < m; ++x) {
    if (S.add_at(S.zero, x) != x || S.add_at(x, S.zero) != x) r.fail("AdditiveIdentity", {x});
    if (S.mul_at(S.one, x) != x || S.mul_at(x, S.one) != x) r.fail("MultiplicativeIdentity", {x});
    if (S.mul_at(S.zero, x) != S.zero || S.mul_at(x, S.zero) != S.zero) r.fail("Absorption", {x});
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (S.add_at(x, y) != S.add_at(y, x)) r.fail("AdditiveCommutativity", {x, y});
      for (int z = 0; z < m; ++z) {
        if (S.add_at(S.add_at(x, y), z) != S.add_at(x, S.add_at(y, z)))
          r.fail("AdditiveAssociativity", {x, y, z});
        if (S.mul_at(S.mul_at(x, y), z) != S.mul_at(x, S.mul_at(y, z)))
          r.fail("MultiplicativeAssociativity", {x, y, z});
        if (S.mul_at(x, S.add_at(y, z)) != S.add_at(S.mul_at(x, y), S.mul_at(x, z)))
          r.fail("LeftDistributivity", {x, y, z});
        if (S.mul_at(S.add_at(y, z), x) != S.add_at(S.mul_at(y, x), S.mul_at(z, x)))
          r.fail("RightDistributivity", {x, y, z});
      }
    }
  return r;
}

LayeredSemiring::LayeredSemiring(const SymbolicHyperfield& F) : F_(&F) {
  if (!F.action().is_trivial())
    throw std::invalid_argument("layered semiring: only commutative layerings are supported");
  const FiniteHyperStructure& M = F.base();
  bool single_valued = true;
  for (int x = 0; x < M.n() && single_valued; ++x)
    for (int y = 0; y < M.n(); ++y)
      if (M.add(x, y).size() != 1) {
        single_valued = false;
        break;
      }
  if (M.n() == 2 && M.add(1, 1).contains(1) && M.add(1, 1).contains(0)) {
    family_ = Family::Supertropical;
  } else if (M.n() == 3 && M.add(1, 2).size() == 3) {
    family_ = Family::Symmetrised;
  } else if (single_valued) {
    family_ = Family::Linearised;
    if (!F.layers().negatives_closed_under_sum())
      throw precondition_error(
          "linearised closed form needs a doubly distributive layering (dense layer group)");
  } else {
    throw std::invalid_argument("layered semiring: base must be K, S, or a field");
  }
}

SetDescription LayeredSemiring::to_set(const LayeredSemiringElem& e) const {
  SetDescription s;
  switch (e.tag) {
    case LayeredSemiringElem::Zero:
      s.zero = true;
      return s;
    case LayeredSemiringElem::Single:
      s.finite.push_back(SymElem::of(e.unit, e.layer));
      return s;
    case LayeredSemiringElem::Ghost:
      s.down = e.layer;
      s.zero = true;
      if (family_ != Family::Linearised)
        for (int u = 1; u < F_->base().n(); ++u) s.finite.push_back(SymElem::of(u, e.layer));
      return s;
  }
  return s;
}

bool LayeredSemiring::equal(const LayeredSemiringElem& a, const LayeredSemiringElem& b) const {
  if (a.tag != b.tag) return false;
  if (a.tag == LayeredSemiringElem::Zero) return true;
  if (a.tag == LayeredSemiringElem::Single && a.unit != b.unit) return false;
  return F_->layers().cmp(a.layer, b.layer) == 0;
}

LayeredSemiringElem LayeredSemiring::add(const LayeredSemiringElem& a,
                                         const LayeredSemiringElem& b) const {
  using E = LayeredSemiringElem;
  if (a.tag == E::Zero) return b;
  if (b.tag == E::Zero) return a;
  const auto& G = F_->layers();
  int c = G.cmp(a.layer, b.layer);
  if (c > 0) return a;
  if (c < 0) return b;
  if (a.tag == E::Ghost || b.tag == E::Ghost) return E::ghost(a.layer);
  if (family_ == Family::Linearised) {
    const ElemSet& s = F_->base().add(a.unit, b.unit);
    if (s.contains(0)) return E::ghost(a.layer);
    return E::single(s.sole_element(), a.layer);
  }
  // K and S: equal singles of the same sign stay, opposite signs balance out.
  if (a.unit == b.unit) return a;
  return E::ghost(a.layer);
}

LayeredSemiringElem LayeredSemiring::mul(const LayeredSemiringElem& a,
                                         const LayeredSemiringElem& b) const {
  using E = LayeredSemiringElem;
  if (a.tag == E::Zero || b.tag == E::Zero) return E::zero();
  const auto& G = F_->layers();
  OrdElem layer = G.op(a.layer, b.layer);
  if (a.tag == E::Ghost || b.tag == E::Ghost) return E::ghost(std::move(layer));
  return E::single(F_->base().mul(a.unit, b.unit), std::move(layer));
}

}  // namespace hyper
