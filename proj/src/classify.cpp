#include "hyper/classify.hpp"

#include <algorithm>
#include <map>

#include "hyper/catalog.hpp"
#include "hyper/constructions.hpp"
#include "hyper/errors.hpp"
#include "hyper/isoenum.hpp"

namespace hyper {

std::string to_string(LayerTag t) {
  switch (t) {
    case LayerTag::Krasner: return "Krasner";
    case LayerTag::Sign: return "Sign";
    case LayerTag::Group: return "Group";
  }
  return "?";
}

std::string to_string(BaseTag t) {
  switch (t) {
    case BaseTag::Krasner: return "Krasner";
    case BaseTag::Sign: return "Sign";
    case BaseTag::Field: return "Field";
  }
  return "?";
}

LessRelation LessRelation::compute(const FiniteHyperStructure& T) {
  if (!check_hypergroup(T).passed)
    throw precondition_error("less_relation: input is not a hypergroup");
  if (!is_stringent(T))
    throw precondition_error("less_relation: input is not stringent");
  LessRelation r;
  const int n = T.n();
  r.n_ = n;
  r.rel_.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      if (x == y) continue;
      ElemSet sy = ElemSet::single(y, n);
      if (T.add(x, y) == sy && T.add(y, x) == sy) r.rel_[x * n + y] = 1;
    }
  return r;
}

WitnessResult LessRelation::transitive() const {
  for (int x = 1; x < n_; ++x)
    for (int y = 1; y < n_; ++y) {
      if (!less(x, y)) continue;
      for (int z = 1; z < n_; ++z)
        if (less(y, z) && !less(x, z)) return {false, {x, y, z}};
    }
  return {};
}

SimClasses SimClasses::compute(const FiniteHyperStructure& T, const LessRelation& rel) {
  const int n = T.n();
  SimClasses out;
  out.class_of.assign(n, -1);
  std::vector<int> reps;
  for (int x = 1; x < n; ++x) {
    bool placed = false;
    for (size_t c = 0; c < reps.size() && !placed; ++c)
      if (rel.sim(x, reps[c])) {
        out.classes[c].push_back(x);
        out.class_of[x] = static_cast<int>(c);
        placed = true;
      }
    if (!placed) {
      reps.push_back(x);
      out.classes.push_back({x});
      out.class_of[x] = static_cast<int>(out.classes.size()) - 1;
    }
  }
  // Equivalence sanity: membership must not depend on the representative.
  for (size_t c = 0; c < out.classes.size(); ++c)
    for (int x : out.classes[c])
      for (int y : out.classes[c])
        if (!rel.sim(x, y))
          throw precondition_error("sim_classes: incomparability is not transitive here");

  // Total order on classes, ascending.
  std::sort(out.classes.begin(), out.classes.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (&a == &b) return false;
              if (rel.less(a[0], b[0])) return true;
              if (rel.less(b[0], a[0])) return false;
              throw precondition_error("sim_classes: class order is not total");
            });
  for (size_t c = 0; c < out.classes.size(); ++c) {
    std::sort(out.classes[c].begin(), out.classes[c].end());
    for (int x : out.classes[c]) out.class_of[x] = static_cast<int>(c);
  }
  return out;
}

FiniteHyperStructure layer_at(const FiniteHyperStructure& T, const std::vector<int>& cls) {
  const int n = T.n();
  std::vector<int> members = {0};
  members.insert(members.end(), cls.begin(), cls.end());
  const int k = static_cast<int>(members.size());
  std::vector<int> local(n, -1);
  for (int i = 0; i < k; ++i) local[members[i]] = i;

  ElemSet mask(n);
  for (int g : members) mask.insert(g);

  std::vector<std::string> names;
  for (int g : members) names.push_back(T.name(g));
  std::vector<ElemSet> add(static_cast<size_t>(k) * k, ElemSet(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ElemSet cell(k);
      for (int z : T.add(members[i], members[j]).intersect(mask).elements())
        cell.insert(local[z]);
      add[static_cast<size_t>(i) * k + j] = cell;
    }
  return FiniteHyperStructure::make(std::move(names), std::move(add));
}

namespace {

FiniteHyperStructure additive_part(const FiniteHyperStructure& T) {
  std::vector<ElemSet> add;
  add.reserve(static_cast<size_t>(T.n()) * T.n());
  for (int x = 0; x < T.n(); ++x)
    for (int y = 0; y < T.n(); ++y) add.push_back(T.add(x, y));
  return FiniteHyperStructure::make(T.names(), std::move(add));
}

}  // namespace

LayerTag identify_layer(const FiniteHyperStructure& L) {
  FiniteHyperStructure add_only = L.has_mul() ? additive_part(L) : L;
  if (find_isomorphism(add_only, additive_part(krasner()))) return LayerTag::Krasner;
  if (find_isomorphism(add_only, additive_part(sign_hyperfield()))) return LayerTag::Sign;
  for (int x = 0; x < L.n(); ++x)
    for (int y = 0; y < L.n(); ++y)
      if (L.add(x, y).size() != 1)
        throw precondition_error("identify_layer: layer is neither K, S, nor a group");
  return LayerTag::Group;
}

WedgeDecomposition decompose_wedge(const FiniteHyperStructure& T) {
  LessRelation rel = LessRelation::compute(T);
  if (WitnessResult t = rel.transitive(); !t)
    throw precondition_error("decompose_wedge: domination order is not transitive");
  SimClasses classes = SimClasses::compute(T, rel);

  WedgeDecomposition out;
  out.class_order = classes.classes;
  for (const auto& cls : classes.classes) {
    FiniteHyperStructure layer = layer_at(T, cls);
    out.tags.push_back(identify_layer(layer));
    out.layers.push_back(std::move(layer));
  }
  out.reconstructed = wedge_sum(out.layers);
  auto iso = find_isomorphism(T, out.reconstructed);
  if (!iso)
    throw precondition_error("decompose_wedge: reconstruction is not isomorphic to the input");
  out.iso = *iso;
  return out;
}

namespace {

// Classify a stringent hyperfield's family: a Krasner copy, a sign copy, or
// a field (single-valued addition with invertible units).
BaseTag tag_base(const FiniteHyperStructure& F) {
  switch (identify_layer(F)) {
    case LayerTag::Krasner: return BaseTag::Krasner;
    case LayerTag::Sign: return BaseTag::Sign;
    case LayerTag::Group: return BaseTag::Field;
  }
  return BaseTag::Field;
}

}  // namespace

LayeringExtraction extract_layering(const FiniteHyperStructure& F) {
  if (!check_hyperfield(F).passed)
    throw precondition_error("extract_layering: input must be a hyperfield");
  if (!is_stringent(F))
    throw precondition_error("extract_layering: input must be stringent");
  LessRelation rel = LessRelation::compute(F);
  SimClasses classes = SimClasses::compute(F, rel);
  if (classes.classes.size() != 1)
    throw precondition_error("extract_layering: a finite hyperfield has one layer");
  LayeringExtraction out;
  out.base = F;
  out.group_trivial = true;
  out.tag = tag_base(F);
  return out;
}

LayeringExtraction extract_layering(const SymbolicHyperfield& F, long long lo, long long hi) {
  auto window_layers = F.window_layers(lo, hi);
  SymbolicHyperfield::Window w = F.window_table(window_layers);

  LessRelation rel = LessRelation::compute(w.table);
  SimClasses classes = SimClasses::compute(w.table, rel);
  if (classes.classes.size() != window_layers.size())
    throw precondition_error("extract_layering: window classes do not match layers");
  // each class must be exactly the elements of one layer, in ascending order
  const int units = F.base().n() - 1;
  for (size_t c = 0; c < classes.classes.size(); ++c) {
    if (static_cast<int>(classes.classes[c].size()) != units)
      throw precondition_error("extract_layering: class size mismatch");
    for (int idx : classes.classes[c]) {
      const SymElem& e = w.elems[idx];
      if (F.layers().cmp(e.layer, w.layer_list[c]) != 0)
        throw precondition_error("extract_layering: class crosses layers");
    }
  }

  // unit layer: the class of the identity's layer, with multiplication
  // induced symbolically (products of unit-layer elements stay inside it)
  OrdElem id = F.layers().identity();
  int id_pos = -1;
  for (size_t i = 0; i < w.layer_list.size(); ++i)
    if (F.layers().cmp(w.layer_list[i], id) == 0) id_pos = static_cast<int>(i);
  if (id_pos < 0)
    throw std::invalid_argument("extract_layering: window must contain the identity layer");

  FiniteHyperStructure add_part = layer_at(w.table, classes.classes[id_pos]);
  const int k = add_part.n();
  std::vector<int> mul(static_cast<size_t>(k) * k, 0);
  for (int u = 1; u < k; ++u)
    for (int v = 1; v < k; ++v) {
      SymElem p = F.mul(SymElem::of(u, id), SymElem::of(v, id));
      mul[static_cast<size_t>(u) * k + v] = p.unit;
    }
  std::vector<ElemSet> add;
  add.reserve(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) add.push_back(add_part.add(i, j));
  FiniteHyperStructure base =
      FiniteHyperStructure::make(add_part.names(), std::move(add), std::move(mul), *F.base().one_index());

  LayeringExtraction out;
  out.tag = tag_base(base);
  out.group_trivial = F.layers().trivial();
  out.group = F.layers();
  out.window = window_layers;
  auto iso = find_isomorphism(F.base(), base);
  if (!iso)
    throw precondition_error("extract_layering: unit layer does not match the declared base");
  out.base_iso = *iso;
  out.base = std::move(base);
  return out;
}

bool dd_criterion_stringent(const FiniteHyperStructure& F) {
  if (!check_hyperfield(F).passed || !is_stringent(F))
    throw precondition_error("dd_criterion_stringent: input must be a stringent hyperfield");
  const int one = *F.one_index();
  ElemSet balanced = F.add(one, F.neg(one));
  ElemSet lhs = F.set_product(balanced, balanced);
  ElemSet rhs = F.extend_sum(balanced, balanced);
  return lhs == rhs;
}

bool dd_criterion_stringent(const SymbolicHyperfield& F) {
  switch (tag_base(F.base())) {
    case BaseTag::Krasner:
    case BaseTag::Sign:
      return true;
    case BaseTag::Field:
      return F.layers().negatives_closed_under_sum();
  }
  return false;
}

OrderingResult find_ordering(const FiniteHyperStructure& F) {
  if (!check_hyperfield(F).passed)
    throw precondition_error("find_ordering: input must be a hyperfield");
  const int n = F.n();
  if (n > 16) throw capacity_error("find_ordering supports carriers up to 16 elements");

  OrderingResult out;
  // realness: -1 in R^2 ⊞ R^2?
  ElemSet squares(n);
  for (int a = 0; a < n; ++a) squares.insert(F.mul(a, a));
  ElemSet sums = F.extend_sum(squares, squares);
  out.real = !sums.contains(F.neg(*F.one_index()));

  for (uint32_t bits = 0; bits < (uint32_t{1} << n); ++bits) {
    if (!(bits & 1)) continue;  // 0 must lie in P
    ElemSet P(n);
    for (int i = 0; i < n; ++i)
      if (bits >> i & 1) P.insert(i);
    ElemSet negP(n);
    for (int i : P.elements()) negP.insert(F.neg(i));
    if ((P | negP).size() != n) continue;
    if (P.intersect(negP) != ElemSet::single(0, n)) continue;
    if (!F.extend_sum(P, P).subset_of(P)) continue;
    if (!F.set_product(P, P).subset_of(P)) continue;
    out.positive_cone = P;
    break;
  }
  return out;
}

RingVerdict reduce_hyperring(const FiniteHyperStructure& R) {
  if (!check_skew_hyperring(R).passed)
    throw precondition_error("reduce_hyperring: input must be a skew hyperring");
  if (!is_stringent(R))
    throw precondition_error("reduce_hyperring: input must be stringent");
  const int n = R.n();
  bool single = true;
  for (int x = 0; x < n && single; ++x)
    for (int y = 0; y < n; ++y)
      if (R.add(x, y).size() != 1) {
        single = false;
        break;
      }
  if (single) return RingVerdict::Ring;
  const int one = *R.one_index();
  if (one == 0) return RingVerdict::ViolatesDichotomy;
  for (int x = 1; x < n; ++x) {
    bool unit = false;
    for (int y = 1; y < n; ++y)
      if (R.mul(x, y) == one && R.mul(y, x) == one) unit = true;
    if (!unit) return RingVerdict::ViolatesDichotomy;
  }
  return RingVerdict::Hyperfield;
}

Valuation valuation_of(const FiniteHyperStructure& F) {
  LayeringExtraction ext = extract_layering(F);
  Valuation v;
  v.kernel = ext.base;
  v.kernel_tag = ext.tag;
  OrderedIndex trivial = OrderedIndex::lex_power(0);
  v.finite_values.assign(F.n(), std::nullopt);
  for (int x = 1; x < F.n(); ++x) v.finite_values[x] = trivial.identity();
  // multiplicativity and domination are immediate over the trivial group,
  // but scan anyway so corrupt inputs are caught
  for (int x = 1; x < F.n(); ++x)
    for (int y = 1; y < F.n(); ++y)
      if (F.mul(x, y) == 0) {
        v.axioms_ok = false;
        v.failures.push_back("products of nonzero elements must be nonzero");
      }
  return v;
}

Valuation valuation_of(const SymbolicHyperfield& F, long long lo, long long hi) {
  LayeringExtraction ext = extract_layering(F, lo, hi);
  Valuation v;
  v.kernel = ext.base;
  v.kernel_tag = ext.tag;

  const auto& G = F.layers();
  std::vector<SymElem> sample;
  for (const auto& g : ext.window)
    for (int u = 1; u < F.base().n(); ++u) sample.push_back(SymElem::of(u, g));

  for (const auto& x : sample)
    for (const auto& y : sample) {
      SymElem p = F.mul(x, y);
      if (p.is_zero() || G.cmp(p.layer, G.op(x.layer, y.layer)) != 0) {
        v.axioms_ok = false;
        v.failures.push_back("value of a product must be the product of values at " + F.format(x) +
                             ", " + F.format(y));
      }
      if (G.cmp(x.layer, y.layer) > 0) {
        SetDescription s = F.add(x, y);
        if (!(s.finite.size() == 1 && !s.down && !s.zero && F.elem_equal(s.finite[0], x))) {
          v.axioms_ok = false;
          v.failures.push_back("larger value must absorb at " + F.format(x) + ", " + F.format(y));
        }
      }
    }
  return v;
}

}  // namespace hyper
