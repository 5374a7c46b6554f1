#ifndef HYPER_SERIES_HPP
#define HYPER_SERIES_HPP

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyper/errors.hpp"
#include "hyper/ordered.hpp"
#include "hyper/structure.hpp"
#include "hyper/symbolic.hpp"

namespace hyper {

// ---------------------------------------------------------------------------
// Coefficient fields for series: a finite field table, or the rationals.

struct FqCoeff {
  const FiniteHyperStructure* F = nullptr;
  using Value = int;

  Value zero() const { return 0; }
  Value one() const { return *F->one_index(); }
  bool is_zero(Value v) const { return v == 0; }
  bool eq(Value a, Value b) const { return a == b; }
  Value add(Value a, Value b) const { return F->add(a, b).sole_element(); }
  Value neg(Value a) const { return F->neg(a); }
  Value mul(Value a, Value b) const { return F->mul(a, b); }
  Value inv(Value a) const {
    for (int y = 1; y < F->n(); ++y)
      if (F->mul(a, y) == one() && F->mul(y, a) == one()) return y;
    throw std::domain_error("division by zero");
  }
  std::string str(Value v) const { return F->name(v); }
  Value sample(std::mt19937_64& rng) const {
    return static_cast<int>(rng() % static_cast<uint64_t>(F->n()));
  }
  Value sample_nonzero(std::mt19937_64& rng) const {
    return 1 + static_cast<int>(rng() % static_cast<uint64_t>(F->n() - 1));
  }
};

struct QCoeff {
  using Value = Fraction;

  Value zero() const { return Fraction::integer(0); }
  Value one() const { return Fraction::integer(1); }
  bool is_zero(Value v) const { return v.num == 0; }
  bool eq(Value a, Value b) const { return a == b; }
  Value add(Value a, Value b) const { return a + b; }
  Value neg(Value a) const { return -a; }
  Value mul(Value a, Value b) const { return a * b; }
  Value inv(Value a) const { return a.reciprocal(); }
  std::string str(Value v) const { return v.str(); }
  Value sample(std::mt19937_64& rng) const {
    long long num = static_cast<long long>(rng() % 19) - 9;
    long long den = 1 + static_cast<long long>(rng() % 4);
    return Fraction::of(num, den);
  }
  Value sample_nonzero(std::mt19937_64& rng) const {
    long long num = 1 + static_cast<long long>(rng() % 9);
    long long den = 1 + static_cast<long long>(rng() % 4);
    return rng() % 2 ? Fraction::of(num, den) : Fraction::of(-num, den);
  }
};

// ---------------------------------------------------------------------------
// Support frontiers: supp(p) is contained in {upper + sum of generators},
// with every generator strictly negative, so enumeration in decreasing layer
// order is effective and the support is reverse well-ordered.

struct Frontier {
  OrdElem upper;
  std::vector<OrdElem> gens;
};

/// Enumerates a frontier's layers in strictly decreasing order.
class FrontierEnum {
 public:
  FrontierEnum(const OrderedIndex& G, Frontier f)
      : G_(&G), gens_(std::move(f.gens)), pending_(Desc{&G}) {
    pending_.insert(std::move(f.upper));
  }

  bool done() const { return pending_.empty(); }

  OrdElem next() {
    if (pending_.empty()) throw std::logic_error("frontier exhausted");
    OrdElem top = *pending_.begin();
    pending_.erase(pending_.begin());
    for (const auto& g : gens_) pending_.insert(G_->op(top, g));
    return top;
  }

 private:
  struct Desc {
    const OrderedIndex* G;
    bool operator()(const OrdElem& a, const OrdElem& b) const { return G->cmp(a, b) > 0; }
  };
  const OrderedIndex* G_;
  std::vector<OrdElem> gens_;
  std::set<OrdElem, Desc> pending_;
};

// ---------------------------------------------------------------------------

/// Formal series with coefficients computed on demand and memoized. The value
/// is a shared immutable node; coefficient reads outside the frontier return
/// zero. Safe to share across threads once forced to the depth that will be
/// read.
template <class K>
class LazySeries {
 public:
  using Value = typename K::Value;

  static LazySeries monomial(const K& k, const OrderedIndex& G, Value c, OrdElem g) {
    check_group(G);
    auto node = std::make_shared<Node>();
    node->field = k;
    node->group = G;
    node->frontier = Frontier{g, {}};
    if (k.is_zero(c)) {
      node->compute = [k](const OrdElem&) { return k.zero(); };
    } else {
      node->compute = [k, c, g, G](const OrdElem& e) {
        return G.cmp(e, g) == 0 ? c : k.zero();
      };
    }
    return LazySeries(std::move(node));
  }

  /// Finite sum of monomials; the leading (largest-layer) coefficient must be
  /// nonzero so the frontier is exact.
  static LazySeries from_terms(const K& k, const OrderedIndex& G,
                               std::vector<std::pair<Value, OrdElem>> terms) {
    check_group(G);
    if (terms.empty()) return monomial(k, G, k.zero(), G.identity());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return G.cmp(a.second, b.second) > 0; });
    for (size_t i = 0; i + 1 < terms.size(); ++i)
      if (G.cmp(terms[i].second, terms[i + 1].second) == 0)
        throw std::invalid_argument("from_terms: duplicate layer");
    if (k.is_zero(terms.front().first))
      throw std::invalid_argument("from_terms: leading coefficient must be nonzero");

    auto node = std::make_shared<Node>();
    node->field = k;
    node->group = G;
    Frontier f{terms.front().second, {}};
    for (size_t i = 1; i < terms.size(); ++i) f.gens.push_back(G.op(terms[i].second, G.inv(f.upper)));
    node->frontier = std::move(f);
    node->compute = [k, G, terms](const OrdElem& e) {
      for (const auto& [c, g] : terms)
        if (G.cmp(e, g) == 0) return c;
      return k.zero();
    };
    return LazySeries(std::move(node));
  }

  const OrderedIndex& group() const { return node_->group; }
  const K& field() const { return node_->field; }
  const Frontier& frontier() const { return node_->frontier; }

  Value at(const OrdElem& g) const {
    auto it = node_->memo.find(g);
    if (it != node_->memo.end()) return it->second;
    Value v = node_->compute(g);
    node_->memo.emplace(g, v);
    return v;
  }

  /// Coefficientwise sum.
  friend LazySeries operator+(const LazySeries& p, const LazySeries& q) {
    p.require_same(q);
    auto node = std::make_shared<Node>();
    node->field = p.node_->field;
    node->group = p.node_->group;
    node->frontier = merge_frontiers(p.node_->group, p.node_->frontier, q.node_->frontier);
    node->compute = [p, q](const OrdElem& e) { return p.field().add(p.at(e), q.at(e)); };
    return LazySeries(std::move(node));
  }

  LazySeries operator-() const {
    auto node = std::make_shared<Node>();
    node->field = node_->field;
    node->group = node_->group;
    node->frontier = node_->frontier;
    LazySeries self = *this;
    node->compute = [self](const OrdElem& e) { return self.field().neg(self.at(e)); };
    return LazySeries(std::move(node));
  }

  /// Cauchy convolution; each coefficient is a finite sum over frontier
  /// factorizations.
  friend LazySeries operator*(const LazySeries& p, const LazySeries& q) {
    p.require_same(q);
    const OrderedIndex G = p.node_->group;
    auto node = std::make_shared<Node>();
    node->field = p.node_->field;
    node->group = G;
    Frontier f{G.op(p.node_->frontier.upper, q.node_->frontier.upper), p.node_->frontier.gens};
    append_gens(G, f.gens, q.node_->frontier.gens);
    node->frontier = std::move(f);
    OrdElem q_upper = q.node_->frontier.upper;
    node->compute = [p, q, G, q_upper](const OrdElem& s) {
      const K& k = p.field();
      Value acc = k.zero();
      FrontierEnum en(G, p.node_->frontier);
      OrdElem low = G.op(s, G.inv(q_upper));  // need g >= s - upper(q)
      while (!en.done()) {
        OrdElem g = en.next();
        if (G.cmp(g, low) < 0) break;
        Value a = p.at(g);
        if (k.is_zero(a)) continue;
        Value b = q.at(G.op(s, G.inv(g)));
        if (k.is_zero(b)) continue;
        acc = k.add(acc, k.mul(a, b));
      }
      return acc;
    };
    return LazySeries(std::move(node));
  }

  /// Leading nonzero coefficient and its layer; nullopt for an exhausted
  /// (zero) frontier. Throws after scan_limit all-zero positions.
  std::optional<std::pair<Value, OrdElem>> leading(int scan_limit = 4096) const {
    FrontierEnum en(node_->group, node_->frontier);
    for (int i = 0; i < scan_limit; ++i) {
      if (en.done()) return std::nullopt;
      OrdElem g = en.next();
      Value v = at(g);
      if (!node_->field.is_zero(v)) return std::make_pair(v, g);
    }
    throw std::runtime_error("leading: no nonzero coefficient within the scan limit");
  }

  /// Multiplicative inverse: split off the leading monomial, invert the
  /// residual unit series by the triangular recursion, and recombine.
  LazySeries inverse() const {
    auto lead = leading();
    if (!lead) throw std::domain_error("division by zero series");
    const K& k = node_->field;
    const OrderedIndex G = node_->group;
    auto [c, m] = *lead;

    LazySeries mono_inv = monomial(k, G, k.inv(c), G.inv(m));
    Frontier f1{G.op(node_->frontier.upper, G.inv(m)), node_->frontier.gens};
    if (f1.gens.empty()) return mono_inv;  // pure monomial
    LazySeries p1 = *this * mono_inv;      // leading layer 0, leading coefficient 1

    // Exact frontier for the inverse: the recursion lives on the semigroup
    // generated by the strictly negative part of p1's frontier. Elements of
    // that part decompose as a first-negative prefix (inside one generator
    // step of 0) plus a generator sum, so widening the generator set by the
    // frontier's window [min_gen, 0) covers it.
    Frontier fq{G.identity(), f1.gens};
    OrdElem min_gen = f1.gens[0];
    for (const auto& g : f1.gens)
      if (G.cmp(g, min_gen) < 0) min_gen = g;
    {
      FrontierEnum en(G, f1);
      while (!en.done()) {
        OrdElem e = en.next();
        if (G.cmp(e, min_gen) < 0) break;
        if (G.cmp(e, G.identity()) < 0) append_gens(G, fq.gens, {e});
      }
    }

    auto node = std::make_shared<Node>();
    node->field = k;
    node->group = G;
    node->frontier = fq;
    Node* raw = node.get();  // non-owning; the lambda lives inside the node
    node->compute = [k, G, p1, raw](const OrdElem& s) -> Value {
      int c0 = G.cmp(s, G.identity());
      if (c0 > 0) return k.zero();
      if (c0 == 0) return k.one();
      auto q_at = [raw](const OrdElem& h) {
        auto it = raw->memo.find(h);
        if (it != raw->memo.end()) return it->second;
        Value v = raw->compute(h);
        raw->memo.emplace(h, v);
        return v;
      };
      Value acc = k.zero();
      FrontierEnum en(G, p1.node_->frontier);
      while (!en.done()) {
        OrdElem g = en.next();
        if (G.cmp(g, s) < 0) break;
        if (G.cmp(g, G.identity()) >= 0) continue;  // only strictly lower terms
        Value a = p1.at(g);
        if (k.is_zero(a)) continue;
        Value b = q_at(G.op(s, G.inv(g)));
        if (k.is_zero(b)) continue;
        acc = k.add(acc, k.mul(a, b));
      }
      return k.neg(acc);
    };
    return mono_inv * LazySeries(std::move(node));
  }

  /// Depth-bounded comparison: coefficients agree on the first `depth`
  /// positions of the merged frontier in decreasing layer order. This is the
  /// semidecidable equality; exact equality of lazy series is not decidable.
  friend bool series_eq_depth(const LazySeries& p, const LazySeries& q, int depth) {
    if (depth < 1) throw std::invalid_argument("series_eq_depth: depth must be >= 1");
    p.require_same(q);
    const OrderedIndex& G = p.node_->group;
    Frontier merged = merge_frontiers(G, p.node_->frontier, q.node_->frontier);
    FrontierEnum en(G, merged);
    const K& k = p.field();
    for (int i = 0; i < depth && !en.done(); ++i) {
      OrdElem g = en.next();
      if (!k.eq(p.at(g), q.at(g))) return false;
    }
    return true;
  }

  /// Force the first `depth` frontier positions into the memo (for
  /// read-only sharing afterwards).
  void force(int depth) const {
    FrontierEnum en(node_->group, node_->frontier);
    for (int i = 0; i < depth && !en.done(); ++i) at(en.next());
  }

  /// Leading terms as text, for reports.
  std::string str(int positions = 6) const {
    const K& k = node_->field;
    std::string out;
    FrontierEnum en(node_->group, node_->frontier);
    int shown = 0;
    for (int i = 0; i < positions && !en.done(); ++i) {
      OrdElem g = en.next();
      Value v = at(g);
      if (k.is_zero(v)) continue;
      if (shown) out += " + ";
      out += k.str(v) + "*x^(" + node_->group.format(g) + ")";
      ++shown;
    }
    if (!shown) return "0";
    if (!en.done()) out += " + ...";
    return out;
  }

 private:
  struct Node {
    K field;
    OrderedIndex group = OrderedIndex::integers();
    Frontier frontier{OrdElem{0LL}, {}};
    std::function<Value(const OrdElem&)> compute;
    std::map<OrdElem, Value> memo;
  };

  explicit LazySeries(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  static void check_group(const OrderedIndex& G) {
    if (G.kind() != OrderedIndex::Kind::Integers && G.kind() != OrderedIndex::Kind::Rationals)
      throw std::domain_error("series need an archimedean layer group (Z or Q)");
  }

  void require_same(const LazySeries& o) const {
    if (!(node_->group == o.node_->group))
      throw std::invalid_argument("series layer groups differ");
  }

  static void append_gens(const OrderedIndex& G, std::vector<OrdElem>& gens,
                          const std::vector<OrdElem>& extra) {
    for (const auto& g : extra) {
      if (G.cmp(g, G.identity()) >= 0)
        throw std::logic_error("frontier generators must be strictly negative");
      bool dup = false;
      for (const auto& h : gens)
        if (G.cmp(g, h) == 0) dup = true;
      if (!dup) gens.push_back(g);
    }
  }

  static Frontier merge_frontiers(const OrderedIndex& G, const Frontier& a, const Frontier& b) {
    Frontier out;
    int c = G.cmp(a.upper, b.upper);
    out.upper = c >= 0 ? a.upper : b.upper;
    out.gens = {};
    append_gens(G, out.gens, a.gens);
    append_gens(G, out.gens, b.gens);
    OrdElem da = G.op(a.upper, G.inv(out.upper));
    OrdElem db = G.op(b.upper, G.inv(out.upper));
    if (G.cmp(da, G.identity()) < 0) append_gens(G, out.gens, {da});
    if (G.cmp(db, G.identity()) < 0) append_gens(G, out.gens, {db});
    return out;
  }

  std::shared_ptr<Node> node_;
};

using FqSeries = LazySeries<FqCoeff>;
using QSeries = LazySeries<QCoeff>;

// ---------------------------------------------------------------------------
// Quotient maps: the canonical datum of a series determines its class in the
// quotient of the series field by the three canonical unit subgroups.

enum class QuotientMode { Krasner, Sign, Field };

/// Class of a nonzero series: its leading layer, together with the leading
/// coefficient's sign (Sign mode) or value (Field mode). Zero maps to zero.
template <class K>
SymElem quotient_class(const LazySeries<K>& p, QuotientMode mode,
                       const SymbolicHyperfield& target) {
  auto lead = p.leading();
  if (!lead) return SymElem::zero();
  auto [c, m] = *lead;
  switch (mode) {
    case QuotientMode::Krasner:
      return target.make(1, m);
    case QuotientMode::Sign: {
      if constexpr (std::is_same_v<typename K::Value, Fraction>) {
        return target.make(c.num > 0 ? 1 : 2, m);
      } else {
        throw std::invalid_argument("sign classes need an ordered coefficient field");
      }
    }
    case QuotientMode::Field:
      if constexpr (std::is_same_v<typename K::Value, int>) {
        return target.make(c, m);
      } else {
        throw std::invalid_argument("field classes need the base field's coefficients");
      }
  }
  throw std::logic_error("unreachable");
}

struct QuotientSampleReport {
  int trials = 0;
  int violations = 0;
  bool contained = true;
  bool singleton_covered = true;  // meaningful only for non-downset sums
  std::vector<std::string> notes;
};

/// Draw random representatives of the classes x and y (forced leading datum,
/// bounded random tail), add them as series, map the sums back through the
/// class map, and compare with the symbolic hyperaddition x ⊞ y.
template <class K>
QuotientSampleReport quotient_sample_check(const K& k, const SymbolicHyperfield& target,
                                           QuotientMode mode, const SymElem& x, const SymElem& y,
                                           int trials, int depth, uint64_t seed) {
  const OrderedIndex& G = target.layers();
  std::mt19937_64 rng(seed);

  auto sample_rep = [&](const SymElem& e) {
    std::vector<std::pair<typename K::Value, OrdElem>> terms;
    typename K::Value lead = k.zero();
    switch (mode) {
      case QuotientMode::Krasner:
        lead = k.sample_nonzero(rng);
        break;
      case QuotientMode::Sign:
        if constexpr (std::is_same_v<typename K::Value, Fraction>) {
          Fraction f = k.sample_nonzero(rng);
          if (f.num < 0) f = -f;
          lead = e.unit == 1 ? f : -f;
        }
        break;
      case QuotientMode::Field:
        if constexpr (std::is_same_v<typename K::Value, int>) lead = e.unit;
        break;
    }
    terms.push_back({lead, e.layer});
    int tail = static_cast<int>(rng() % static_cast<uint64_t>(depth + 1));
    for (int j = 1; j <= tail; ++j) {
      typename K::Value c = k.sample(rng);
      if (!k.is_zero(c)) terms.push_back({c, G.translate(e.layer, -j)});
    }
    return LazySeries<K>::from_terms(k, G, std::move(terms));
  };

  QuotientSampleReport report;
  report.trials = trials;
  SetDescription expected = target.add(x, y);
  bool downset_branch = expected.down.has_value();
  bool singleton_seen = false;

  for (int t = 0; t < trials; ++t) {
    LazySeries<K> sum = sample_rep(x) + sample_rep(y);
    SymElem cls = quotient_class(sum, mode, target);
    if (!target.contains(expected, cls)) {
      report.contained = false;
      ++report.violations;
      if (report.notes.size() < 8)
        report.notes.push_back("class " + target.format(cls) + " escapes " +
                               target.format(expected));
    }
    if (!downset_branch && !cls.is_zero() && target.elem_equal(cls, expected.finite.front()))
      singleton_seen = true;
  }
  if (!downset_branch) {
    if (expected.finite.size() != 1) {
      report.singleton_covered = false;
      report.notes.push_back("expected a singleton sum");
    } else {
      report.singleton_covered = singleton_seen;
    }
  }
  return report;
}

}  // namespace hyper

#endif
