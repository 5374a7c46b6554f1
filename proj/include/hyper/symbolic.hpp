#ifndef HYPER_SYMBOLIC_HPP
#define HYPER_SYMBOLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyper/ordered.hpp"
#include "hyper/structure.hpp"

namespace hyper {

/// Element of a layered hyperfield: either the zero, or a pair of a nonzero
/// unit of the base and a layer in the ordered group.
struct SymElem {
  int unit = 0;  // base carrier index; 0 encodes the zero element
  OrdElem layer;

  bool is_zero() const { return unit == 0; }
  static SymElem zero() { return SymElem{}; }
  static SymElem of(int unit, OrdElem layer);
};

/// Result of symbolic hyperaddition and of extended set arithmetic: a finite
/// list of nonzero elements, optionally together with every element in layers
/// strictly below `down`, plus the zero when `zero` is set. A downset always
/// carries the zero.
struct SetDescription {
  std::vector<SymElem> finite;
  std::optional<OrdElem> down;
  bool zero = false;

  static SetDescription of(std::vector<SymElem> elems);
  static SetDescription zero_only();
  bool is_finite() const { return !down.has_value(); }
};

/// G-layering of a finite hyperfield: the split extension base^x x G, with
/// multiplication optionally twisted by a G-action by automorphisms of the
/// base. Hyperaddition compares layers; ties are resolved inside one layer,
/// and a vanishing tie spills into the full downset below it.
class SymbolicHyperfield {
 public:
  /// Action of the layer group on the base by hyperfield automorphisms.
  /// Built-ins use the trivial action; over Z an action may be generated by a
  /// single automorphism (the image of 1).
  class Action {
   public:
    static Action trivial() { return Action(); }
    static Action cyclic(std::vector<int> generator_perm);
    bool is_trivial() const { return pows_.empty(); }
    int apply(const OrderedIndex& G, const OrdElem& g, int unit) const;
    int apply_inverse(const OrderedIndex& G, const OrdElem& g, int unit) const;
    const std::vector<std::vector<int>>& powers() const { return pows_; }

   private:
    std::vector<std::vector<int>> pows_;  // generator^k for k in [0, order)
  };

  SymbolicHyperfield(std::string name, FiniteHyperStructure base, OrderedIndex layers,
                     Action action = Action::trivial());

  const std::string& name() const { return name_; }
  const FiniteHyperStructure& base() const { return base_; }
  const OrderedIndex& layers() const { return layers_; }
  const Action& action() const { return action_; }

  SymElem one() const { return SymElem::of(*base_.one_index(), layers_.identity()); }
  SymElem make(int unit, const OrdElem& layer) const;

  SymElem negate(const SymElem& x) const;
  SymElem mul(const SymElem& x, const SymElem& y) const;
  SymElem mul_inverse(const SymElem& x) const;

  /// The four-case layered hyperaddition.
  SetDescription add(const SymElem& x, const SymElem& y) const;

  /// Extended sum / product of whole set descriptions, computed exactly
  /// (downsets included); the workhorse behind semiring cross-checks and the
  /// non-distributivity witnesses of the discrete layerings.
  SetDescription ext_add(const SetDescription& A, const SetDescription& B) const;
  SetDescription ext_mul(const SetDescription& A, const SetDescription& B) const;

  bool contains(const SetDescription& S, const SymElem& e) const;
  bool set_equal(const SetDescription& A, const SetDescription& B) const;
  SetDescription normalized(SetDescription S) const;

  bool elem_equal(const SymElem& a, const SymElem& b) const;
  std::string format(const SymElem& e) const;
  std::string format(const SetDescription& S) const;

  /// Finite table induced on a window of layers: the chosen layers' elements
  /// plus zero, with downset results clipped to the window. `truncated` is
  /// set when clipping lost anything below the window.
  struct Window {
    FiniteHyperStructure table;
    std::vector<SymElem> elems;  // index -> element; index 0 is zero
    bool truncated = false;
    const SymbolicHyperfield* source = nullptr;
    std::vector<OrdElem> layer_list;

    int index_of(const SymElem& e) const;
  };
  Window window_table(const std::vector<OrdElem>& window_layers) const;

  /// Default layer sample for [lo..hi]: integers for Z, integers plus halves
  /// near 0 for Q, all tuples with coordinates in range for Z^k.
  std::vector<OrdElem> window_layers(long long lo, long long hi) const;

 private:
  std::string name_;
  FiniteHyperStructure base_;
  OrderedIndex layers_;
  Action action_;
};

}  // namespace hyper

#endif
