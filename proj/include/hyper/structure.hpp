#ifndef HYPER_STRUCTURE_HPP
#define HYPER_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyper/elem_set.hpp"

namespace hyper {

/// One failed axiom instance: the axiom's name and the element indices
/// witnessing the failure.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
};

struct CheckReport {
  bool passed = true;
  std::vector<Violation> violations;

  void fail(std::string axiom, std::vector<int> witness) {
    passed = false;
    violations.push_back({std::move(axiom), std::move(witness)});
  }
};

/// Finite hyperstructure on carrier indices 0..n-1 with index 0 the additive
/// identity: an n x n table of element-sets for the hyperaddition and an
/// optional single-valued multiplication table. Immutable after construction.
///
/// Hyperinverses are derived eagerly; where no unique two-sided hyperinverse
/// exists, neg() is -1 and the axiom checkers report the failure in-band.
class FiniteHyperStructure {
 public:
  static constexpr int kMaxCarrier = ElemSet::kMaxCarrier;

  /// Empty placeholder; every usable instance comes from make().
  FiniteHyperStructure() = default;

  static FiniteHyperStructure make(std::vector<std::string> names,
                                   std::vector<ElemSet> add_table,
                                   std::optional<std::vector<int>> mul_table = std::nullopt,
                                   std::optional<int> one_index = std::nullopt);

  int n() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> one_index() const { return one_; }
  bool has_mul() const { return !mul_.empty(); }

  const ElemSet& add(int x, int y) const { return add_[x * n_ + y]; }
  int mul(int x, int y) const { return mul_[x * n_ + y]; }

  /// Hyperinverse of x, or -1 when none is uniquely determined.
  int neg(int x) const { return neg_[x]; }
  bool neg_ok() const { return neg_ok_; }

  /// Union of a ⊞ b over all a in A, b in B.
  ElemSet extend_sum(const ElemSet& A, const ElemSet& B) const;

  /// Elementwise product set {a·b | a in A, b in B}. Requires has_mul().
  ElemSet set_product(const ElemSet& A, const ElemSet& B) const;

  /// Extended sum of a list of singletons, folded left.
  ElemSet fold_sum(const std::vector<int>& xs) const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::optional<int> one_;
  std::vector<ElemSet> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  bool neg_ok_ = false;
};

/// Hypergroup axioms: identity, unique two-sided hyperinverses, invertibility
/// of sums, associativity of the extended sum. Also evaluates the
/// reversibility formulation and reports if the two ever disagree on a table
/// that passes the remaining axioms (they must not).
CheckReport check_hypergroup(const FiniteHyperStructure& T);

/// Additive commutative hypergroup + multiplicative monoid + absorption +
/// two-sided distributivity over extended sums.
CheckReport check_skew_hyperring(const FiniteHyperStructure& T);

/// Skew hyperring with 0 != 1 and two-sided multiplicative inverses for all
/// nonzero elements.
CheckReport check_hyperfield(const FiniteHyperStructure& T);

struct WitnessResult {
  bool ok = true;
  std::vector<int> witness;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// (a ⊞ b)(c ⊞ d) = ac ⊞ ad ⊞ bc ⊞ bd for all quadruples.
WitnessResult is_doubly_distributive(const FiniteHyperStructure& T);

/// a ⊞ b is a singleton whenever a != -b. Requires derivable hyperinverses.
WitnessResult is_stringent(const FiniteHyperStructure& T);

/// x ⊞ y = y ⊞ x as sets, all pairs.
WitnessResult is_commutative_add(const FiniteHyperStructure& T);

/// f(0)=0, f(x ⊞ y) ⊆ f(x) ⊞ f(y) for all pairs; when both structures are
/// multiplicative, also f(1)=1 and f(x·y)=f(x)·f(y).
WitnessResult is_homomorphism(const std::vector<int>& f, const FiniteHyperStructure& A,
                              const FiniteHyperStructure& B);

}  // namespace hyper

#endif
