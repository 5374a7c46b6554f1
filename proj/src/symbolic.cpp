#include "hyper/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyper/errors.hpp"

namespace hyper {

SymElem SymElem::of(int unit, OrdElem layer) {
  if (unit <= 0) throw std::invalid_argument("SymElem: unit index must be nonzero");
  SymElem e;
  e.unit = unit;
  e.layer = std::move(layer);
  return e;
}

SetDescription SetDescription::of(std::vector<SymElem> elems) {
  SetDescription s;
  for (auto& e : elems) {
    if (e.is_zero())
      s.zero = true;
    else
      s.finite.push_back(std::move(e));
  }
  return s;
}

SetDescription SetDescription::zero_only() {
  SetDescription s;
  s.zero = true;
  return s;
}

SymbolicHyperfield::Action SymbolicHyperfield::Action::cyclic(std::vector<int> generator_perm) {
  const int n = static_cast<int>(generator_perm.size());
  std::vector<bool> seen(n, false);
  for (int v : generator_perm) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("action generator is not a permutation");
    seen[v] = true;
  }
  if (generator_perm[0] != 0) throw std::invalid_argument("action generator must fix zero");

  Action a;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<int> cur = id;
  a.pows_.push_back(id);
  for (int iter = 0; iter < 4096; ++iter) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = generator_perm[cur[i]];
    if (next == id) return a;
    a.pows_.push_back(next);
    cur = next;
  }
  throw std::invalid_argument("action generator order too large");
}

int SymbolicHyperfield::Action::apply(const OrderedIndex& G, const OrdElem& g, int unit) const {
  if (is_trivial()) return unit;
  long long k = std::get<long long>(g);  // nontrivial actions require G = Z
  long long m = static_cast<long long>(pows_.size());
  long long e = ((k % m) + m) % m;
  return pows_[static_cast<size_t>(e)][unit];
}

int SymbolicHyperfield::Action::apply_inverse(const OrderedIndex& G, const OrdElem& g,
                                              int unit) const {
  if (is_trivial()) return unit;
  return apply(G, G.inv(g), unit);
}

SymbolicHyperfield::SymbolicHyperfield(std::string name, FiniteHyperStructure base,
                                       OrderedIndex layers, Action action)
    : name_(std::move(name)), base_(std::move(base)), layers_(layers), action_(std::move(action)) {
  if (!layers_.is_group())
    throw std::invalid_argument("layering needs a totally ordered group, not a chain");
  if (!check_hyperfield(base_).passed)
    throw std::invalid_argument("layering base must be a hyperfield");
  if (!action_.is_trivial()) {
    if (layers_.kind() != OrderedIndex::Kind::Integers)
      throw std::invalid_argument("nontrivial actions are only supported over Z");
    const auto& gen = action_.powers().size() > 1 ? action_.powers()[1] : action_.powers()[0];
    std::vector<int> inv(gen.size());
    for (size_t i = 0; i < gen.size(); ++i) inv[gen[i]] = static_cast<int>(i);
    if (!is_homomorphism(gen, base_, base_) || !is_homomorphism(inv, base_, base_))
      throw std::invalid_argument("action generator is not a hyperfield automorphism");
  }
}

SymElem SymbolicHyperfield::make(int unit, const OrdElem& layer) const {
  if (unit <= 0 || unit >= base_.n()) throw std::invalid_argument("unit index out of range");
  layers_.cmp(layer, layer);  // validates membership
  return SymElem::of(unit, layer);
}

SymElem SymbolicHyperfield::negate(const SymElem& x) const {
  if (x.is_zero()) return x;
  return SymElem::of(base_.neg(x.unit), x.layer);
}

SymElem SymbolicHyperfield::mul(const SymElem& x, const SymElem& y) const {
  if (x.is_zero() || y.is_zero()) return SymElem::zero();
  int u = base_.mul(x.unit, action_.apply(layers_, x.layer, y.unit));
  return SymElem::of(u, layers_.op(x.layer, y.layer));
}

SymElem SymbolicHyperfield::mul_inverse(const SymElem& x) const {
  if (x.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  int uinv = -1;
  for (int v = 1; v < base_.n(); ++v)
    if (base_.mul(x.unit, v) == *base_.one_index()) {
      uinv = v;
      break;
    }
  return SymElem::of(action_.apply_inverse(layers_, x.layer, uinv), layers_.inv(x.layer));
}

SetDescription SymbolicHyperfield::add(const SymElem& x, const SymElem& y) const {
  if (x.is_zero()) return SetDescription::of({y});
  if (y.is_zero()) return SetDescription::of({x});
  int c = layers_.cmp(x.layer, y.layer);
  if (c > 0) return SetDescription::of({x});
  if (c < 0) return SetDescription::of({y});
  // Same layer: the layer hypergroup is a copy of the base, acting on units.
  const ElemSet& s = base_.add(x.unit, y.unit);
  SetDescription out;
  for (int w : s.elements())
    if (w != 0) out.finite.push_back(SymElem::of(w, x.layer));
  if (s.contains(0)) {
    out.down = x.layer;
    out.zero = true;
  }
  return out;
}

SetDescription SymbolicHyperfield::normalized(SetDescription S) const {
  if (S.down) S.zero = true;
  std::vector<SymElem> kept;
  for (auto& e : S.finite) {
    if (S.down && layers_.cmp(e.layer, *S.down) < 0) continue;  // absorbed by the downset
    bool dup = false;
    for (const auto& k : kept)
      if (elem_equal(k, e)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(std::move(e));
  }
  std::sort(kept.begin(), kept.end(), [this](const SymElem& a, const SymElem& b) {
    int c = layers_.cmp(a.layer, b.layer);
    return c != 0 ? c < 0 : a.unit < b.unit;
  });
  S.finite = std::move(kept);
  return S;
}

SetDescription SymbolicHyperfield::ext_add(const SetDescription& A, const SetDescription& B) const {
  bool a_empty = A.finite.empty() && !A.down && !A.zero;
  bool b_empty = B.finite.empty() && !B.down && !B.zero;
  if (a_empty || b_empty) throw std::invalid_argument("ext_add: empty input set");

  SetDescription r;
  auto merge_down = [&](const OrdElem& d) {
    if (!r.down || layers_.cmp(d, *r.down) > 0) r.down = d;
    r.zero = true;
  };
  auto merge = [&](const SetDescription& s) {
    for (const auto& e : s.finite) r.finite.push_back(e);
    if (s.down) merge_down(*s.down);
    r.zero = r.zero || s.zero;
  };

  if (A.zero) merge(B);
  if (B.zero) merge(A);
  for (const auto& x : A.finite)
    for (const auto& y : B.finite) merge(add(x, y));
  // A nonzero element against a full downset: it dominates layers below it,
  // and otherwise the pairwise sums fill the whole downset back up.
  auto finite_vs_down = [&](const std::vector<SymElem>& fin, const OrdElem& d) {
    for (const auto& x : fin) {
      if (layers_.cmp(x.layer, d) >= 0)
        r.finite.push_back(x);
      else
        merge_down(d);
    }
  };
  if (B.down) finite_vs_down(A.finite, *B.down);
  if (A.down) finite_vs_down(B.finite, *A.down);
  if (A.down && B.down) merge_down(layers_.cmp(*A.down, *B.down) >= 0 ? *A.down : *B.down);
  return normalized(std::move(r));
}

SetDescription SymbolicHyperfield::ext_mul(const SetDescription& A, const SetDescription& B) const {
  bool a_empty = A.finite.empty() && !A.down && !A.zero;
  bool b_empty = B.finite.empty() && !B.down && !B.zero;
  if (a_empty || b_empty) throw std::invalid_argument("ext_mul: empty input set");

  SetDescription r;
  r.zero = A.zero || B.zero;
  auto merge_down = [&](const OrdElem& d) {
    if (!r.down || layers_.cmp(d, *r.down) > 0) r.down = d;
    r.zero = true;
  };
  for (const auto& x : A.finite)
    for (const auto& y : B.finite) r.finite.push_back(mul(x, y));
  // Unit-layer pairs sweep out every unit, so scaling a downset gives the
  // translated downset.
  if (B.down)
    for (const auto& x : A.finite) merge_down(layers_.op(x.layer, *B.down));
  if (A.down)
    for (const auto& y : B.finite) merge_down(layers_.op(*A.down, y.layer));
  if (A.down && B.down) merge_down(layers_.downset_product_bound(*A.down, *B.down));
  return normalized(std::move(r));
}

bool SymbolicHyperfield::contains(const SetDescription& S, const SymElem& e) const {
  if (e.is_zero()) return S.zero;
  if (S.down && layers_.cmp(e.layer, *S.down) < 0) return true;
  for (const auto& f : S.finite)
    if (elem_equal(f, e)) return true;
  return false;
}

bool SymbolicHyperfield::set_equal(const SetDescription& A, const SetDescription& B) const {
  SetDescription a = normalized(A), b = normalized(B);
  if (a.zero != b.zero) return false;
  if (a.down.has_value() != b.down.has_value()) return false;
  if (a.down && layers_.cmp(*a.down, *b.down) != 0) return false;
  if (a.finite.size() != b.finite.size()) return false;
  for (size_t i = 0; i < a.finite.size(); ++i)
    if (!elem_equal(a.finite[i], b.finite[i])) return false;
  return true;
}

bool SymbolicHyperfield::elem_equal(const SymElem& a, const SymElem& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.unit == b.unit && layers_.cmp(a.layer, b.layer) == 0;
}

std::string SymbolicHyperfield::format(const SymElem& e) const {
  const bool single_unit = base_.n() == 2;
  if (e.is_zero()) return single_unit ? "-inf" : "0";
  if (single_unit) return layers_.format(e.layer);
  return "(" + base_.name(e.unit) + "," + layers_.format(e.layer) + ")";
}

std::string SymbolicHyperfield::format(const SetDescription& S) const {
  SetDescription s = normalized(S);
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " u ";
    out += part;
  };
  if (!s.finite.empty()) {
    std::string fin = "{";
    for (size_t i = 0; i < s.finite.size(); ++i) {
      if (i) fin += ", ";
      fin += format(s.finite[i]);
    }
    append(fin + "}");
  }
  if (s.down) append("{x | layer(x) < " + layers_.format(*s.down) + "}");
  if (s.zero) append("{" + format(SymElem::zero()) + "}");
  return out.empty() ? "{}" : out;
}

int SymbolicHyperfield::Window::index_of(const SymElem& e) const {
  if (e.is_zero()) return 0;
  const int units = source->base().n() - 1;
  for (size_t i = 0; i < layer_list.size(); ++i)
    if (source->layers().cmp(layer_list[i], e.layer) == 0)
      return 1 + static_cast<int>(i) * units + (e.unit - 1);
  return -1;
}

SymbolicHyperfield::Window SymbolicHyperfield::window_table(
    const std::vector<OrdElem>& window_layers) const {
  std::vector<OrdElem> layers = window_layers;
  std::sort(layers.begin(), layers.end(),
            [this](const OrdElem& a, const OrdElem& b) { return layers_.cmp(a, b) < 0; });
  layers.erase(std::unique(layers.begin(), layers.end(),
                           [this](const OrdElem& a, const OrdElem& b) {
                             return layers_.cmp(a, b) == 0;
                           }),
               layers.end());
  if (layers.empty()) throw std::invalid_argument("window needs at least one layer");

  const int units = base_.n() - 1;
  const long long n = 1 + static_cast<long long>(layers.size()) * units;
  if (n > FiniteHyperStructure::kMaxCarrier)
    throw capacity_error("window table needs " + std::to_string(n) + " elements");

  Window w;
  w.layer_list = layers;
  w.elems.push_back(SymElem::zero());
  for (const auto& g : layers)
    for (int u = 1; u < base_.n(); ++u) w.elems.push_back(SymElem::of(u, g));

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& e : w.elems) names.push_back(format(e));

  const int ni = static_cast<int>(n);
  std::vector<ElemSet> table(static_cast<size_t>(ni) * ni, ElemSet(ni));
  bool truncated = false;

  auto fill = [&](int ix, int iy) {
    SetDescription s = add(w.elems[ix], w.elems[iy]);
    ElemSet cell(ni);
    if (s.zero) cell.insert(0);
    for (const auto& e : s.finite) {
      // finite parts live at a window layer by construction
      int idx = 1;
      for (size_t i = 0; i < layers.size(); ++i)
        if (layers_.cmp(layers[i], e.layer) == 0) {
          idx = 1 + static_cast<int>(i) * units + (e.unit - 1);
          break;
        }
      cell.insert(idx);
    }
    if (s.down) {
      if (!layers_.trivial()) truncated = true;
      for (size_t i = 0; i < layers.size() && layers_.cmp(layers[i], *s.down) < 0; ++i)
        for (int u = 1; u < base_.n(); ++u)
          cell.insert(1 + static_cast<int>(i) * units + (u - 1));
    }
    table[static_cast<size_t>(ix) * ni + iy] = cell;
  };
  for (int ix = 0; ix < ni; ++ix)
    for (int iy = 0; iy < ni; ++iy) fill(ix, iy);

  w.table = FiniteHyperStructure::make(std::move(names), std::move(table));
  w.truncated = truncated;
  w.source = this;
  return w;
}

std::vector<OrdElem> SymbolicHyperfield::window_layers(long long lo, long long hi) const {
  if (lo > hi) throw std::invalid_argument("window bounds reversed");
  std::vector<OrdElem> out;
  switch (layers_.kind()) {
    case OrderedIndex::Kind::Integers:
      for (long long k = lo; k <= hi; ++k) out.push_back(layers_.element(k));
      break;
    case OrderedIndex::Kind::Rationals:
      if (hi - lo <= 6) {
        for (long long k = 2 * lo; k <= 2 * hi; ++k) out.push_back(layers_.element(Fraction::of(k, 2)));
      } else {
        for (long long k = lo; k <= hi; ++k) out.push_back(layers_.element(k));
        for (long long k = std::max(lo, -2LL); k < std::min(hi, 2LL); ++k)
          out.push_back(layers_.element(Fraction::of(2 * k + 1, 2)));
      }
      break;
    case OrderedIndex::Kind::LexPower: {
      const int k = layers_.arity();
      if (k == 0) {
        out.push_back(layers_.identity());
        break;
      }
      double count = 1;
      for (int i = 0; i < k; ++i) count *= static_cast<double>(hi - lo + 1);
      if (count > 40) throw capacity_error("lexicographic window too large");
      std::vector<long long> t(k, lo);
      while (true) {
        out.push_back(layers_.element(t));
        int i = k - 1;
        while (i >= 0 && t[i] == hi) t[i--] = lo;
        if (i < 0) break;
        ++t[i];
      }
      break;
    }
    case OrderedIndex::Kind::FiniteChain:
      throw std::domain_error("finite chains do not index layerings");
  }
  return out;
}

}  // namespace hyper
