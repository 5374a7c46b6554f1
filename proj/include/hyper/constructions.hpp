#ifndef HYPER_CONSTRUCTIONS_HPP
#define HYPER_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "hyper/structure.hpp"
#include "hyper/symbolic.hpp"

namespace hyper {

/// Componentwise product structure on pairs.
FiniteHyperStructure product(const FiniteHyperStructure& A, const FiniteHyperStructure& B);

/// Wedge sum of hypergroups along a finite chain: layers share the zero,
/// higher layers absorb lower ones, and vanishing same-layer sums spill into
/// everything below. Layers are renamed by suffixing their position.
FiniteHyperStructure wedge_sum(const std::vector<FiniteHyperStructure>& layers);

/// Layering of a finite hyperfield along an ordered group, with an optional
/// action by automorphisms (the extension is split).
SymbolicHyperfield layering(const FiniteHyperStructure& M, const OrderedIndex& G,
                            SymbolicHyperfield::Action action = SymbolicHyperfield::Action::trivial(),
                            std::string name = "");

/// Krasner quotient K/U of a finite field by a subgroup U of its units:
/// cosets plus zero, with [g] ⊞ [h] the classes of the elementwise sums.
FiniteHyperStructure quotient(const FiniteHyperStructure& K, const std::vector<int>& U);

/// Closure of the singleton classes of a hyperfield under set-lifted sum and
/// product: a finite semiring of element-sets.
struct SemiringTable {
  std::vector<ElemSet> elements;
  std::vector<int> add;  // size n*n
  std::vector<int> mul;  // size n*n
  int zero = 0;          // index of {0}
  int one = 0;           // index of {1}
  int generators = 0;    // the first `generators` elements are singletons

  int n() const { return static_cast<int>(elements.size()); }
  int add_at(int x, int y) const { return add[x * n() + y]; }
  int mul_at(int x, int y) const { return mul[x * n() + y]; }
};

SemiringTable associated_semiring(const FiniteHyperStructure& T, int cap = 256);

/// Semiring axioms, checked exhaustively over the table.
CheckReport check_semiring(const SemiringTable& S);

/// Closed forms of the semirings associated to layered hyperfields. Elements
/// are tagged by the subset of the hyperfield they stand for; `to_set` maps a
/// tag back to that subset so the tables can be cross-checked against direct
/// set arithmetic.
struct LayeredSemiringElem {
  enum Tag { Zero, Single, Ghost } tag = Zero;
  int unit = 0;   // for Single with a field base; 1 for K; sign index for S
  OrdElem layer;  // for Single and Ghost

  static LayeredSemiringElem zero() { return {}; }
  static LayeredSemiringElem single(int unit, OrdElem g) { return {Single, unit, std::move(g)}; }
  static LayeredSemiringElem ghost(OrdElem g) { return {Ghost, 0, std::move(g)}; }
};

/// The three families: with base K the ghost layers are inclusive (the tie
/// survives in its own layer); with base S a ghost holds both signs down to
/// its layer; with a field base the ghost is the strict downset.
class LayeredSemiring {
 public:
  explicit LayeredSemiring(const SymbolicHyperfield& F);

  LayeredSemiringElem add(const LayeredSemiringElem& a, const LayeredSemiringElem& b) const;
  LayeredSemiringElem mul(const LayeredSemiringElem& a, const LayeredSemiringElem& b) const;
  SetDescription to_set(const LayeredSemiringElem& e) const;
  bool equal(const LayeredSemiringElem& a, const LayeredSemiringElem& b) const;

  enum class Family { Supertropical, Symmetrised, Linearised };
  Family family() const { return family_; }

 private:
  const SymbolicHyperfield* F_;
  Family family_;
};

}  // namespace hyper

#endif
