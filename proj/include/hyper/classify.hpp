#ifndef HYPER_CLASSIFY_HPP
#define HYPER_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyper/ordered.hpp"
#include "hyper/structure.hpp"
#include "hyper/symbolic.hpp"

namespace hyper {

enum class LayerTag { Krasner, Sign, Group };
enum class BaseTag { Krasner, Sign, Field };

std::string to_string(LayerTag t);
std::string to_string(BaseTag t);

/// The domination order on nonzero elements: x < y when x ⊞ y = y ⊞ x = {y}
/// and x != y. For stringent hypergroups this is a strict partial order whose
/// incomparability classes are totally ordered.
class LessRelation {
 public:
  static LessRelation compute(const FiniteHyperStructure& T);

  bool less(int x, int y) const { return rel_[x * n_ + y]; }
  bool sim(int x, int y) const { return !less(x, y) && !less(y, x); }
  WitnessResult transitive() const;

 private:
  int n_ = 0;
  std::vector<char> rel_;
};

/// Incomparability classes of the domination order, listed bottom to top.
struct SimClasses {
  std::vector<std::vector<int>> classes;  // ascending; each sorted
  std::vector<int> class_of;              // nonzero index -> class position

  static SimClasses compute(const FiniteHyperStructure& T, const LessRelation& rel);
};

/// The induced hypergroup on one class plus zero: sums restricted to the
/// class and intersected back into it.
FiniteHyperStructure layer_at(const FiniteHyperStructure& T, const std::vector<int>& cls);

/// Krasner copy, sign copy, or group, with the tag decided in that order.
LayerTag identify_layer(const FiniteHyperStructure& L);

struct WedgeDecomposition {
  std::vector<std::vector<int>> class_order;
  std::vector<FiniteHyperStructure> layers;
  std::vector<LayerTag> tags;
  FiniteHyperStructure reconstructed;
  std::vector<int> iso;  // source index -> reconstructed index
};

/// Decompose a stringent hypergroup into its wedge layers, rebuild the wedge
/// sum, and verify an explicit isomorphism back to the input.
WedgeDecomposition decompose_wedge(const FiniteHyperStructure& T);

struct LayeringExtraction {
  BaseTag tag = BaseTag::Field;
  FiniteHyperStructure base;
  bool group_trivial = true;
  std::optional<OrderedIndex> group;        // the layer group, when symbolic
  std::vector<OrdElem> window;              // layers examined, when symbolic
  std::vector<int> base_iso;                // witness: declared base -> extracted base (symbolic)
};

/// A finite stringent hyperfield is its own unit layer over the trivial
/// group. For a layered hyperfield the unit layer and group are recovered
/// from a window and cross-checked against the declared base.
LayeringExtraction extract_layering(const FiniteHyperStructure& F);
LayeringExtraction extract_layering(const SymbolicHyperfield& F, long long window_lo,
                                    long long window_hi);

/// Double distributivity of a stringent hyperfield via the balanced square:
/// (1 ⊞ -1)(1 ⊞ -1) = 1 ⊞ -1 ⊞ 1 ⊞ -1 for finite tables; for layered
/// hyperfields the criterion is decided by the base's family and the layer
/// group's density.
bool dd_criterion_stringent(const FiniteHyperStructure& F);
bool dd_criterion_stringent(const SymbolicHyperfield& F);

struct OrderingResult {
  std::optional<ElemSet> positive_cone;
  bool real = false;  // -1 not in the sums of two squares
};

/// Exhaustive search for an ordering: P ⊞ P ⊆ P, P·P ⊆ P, P ∪ -P = R,
/// P ∩ -P = {0}. Also decides realness and cross-checks the equivalence.
OrderingResult find_ordering(const FiniteHyperStructure& F);

enum class RingVerdict { Ring, Hyperfield, ViolatesDichotomy };

/// A stringent skew hyperring is a ring (single-valued sums) or a stringent
/// skew hyperfield; anything else is reported as a dichotomy violation.
RingVerdict reduce_hyperring(const FiniteHyperStructure& R);

struct Valuation {
  // Per carrier index for finite structures; layer projection for symbolic.
  std::vector<std::optional<OrdElem>> finite_values;  // nullopt = -infinity at 0
  BaseTag kernel_tag = BaseTag::Field;
  FiniteHyperStructure kernel;
  bool axioms_ok = true;
  std::vector<std::string> failures;
};

Valuation valuation_of(const FiniteHyperStructure& F);
Valuation valuation_of(const SymbolicHyperfield& F, long long window_lo, long long window_hi);

}  // namespace hyper

#endif
