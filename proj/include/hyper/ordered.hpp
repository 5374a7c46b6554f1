#ifndef HYPER_ORDERED_HPP
#define HYPER_ORDERED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyper {

/// Exact rational as a reduced fraction of 64-bit integers, den > 0.
/// Arithmetic that would overflow is a reported error, not wraparound.
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction of(long long num, long long den);
  static Fraction integer(long long k) { return Fraction{k, 1}; }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-() const;
  Fraction operator*(const Fraction& o) const;
  Fraction reciprocal() const;

  int cmp(const Fraction& o) const;
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator<(const Fraction& o) const { return cmp(o) < 0; }

  std::string str() const;
};

/// Element of an OrderedIndex. The active alternative must match the index's
/// variant: scalar for chain positions and integers, tuple for lexicographic
/// powers, fraction for rationals.
using OrdElem = std::variant<long long, std::vector<long long>, Fraction>;

std::string ord_elem_str(const OrdElem& e);

/// Totally ordered index set for the layers of a wedge sum or layering.
/// FiniteChain is only an ordered set; the other variants are totally ordered
/// abelian groups written additively with identity 0.
class OrderedIndex {
 public:
  enum class Kind { FiniteChain, Integers, LexPower, Rationals };

  static OrderedIndex finite_chain(int size);
  static OrderedIndex integers() { return OrderedIndex(Kind::Integers, 0); }
  static OrderedIndex lex_power(int arity);
  static OrderedIndex rationals() { return OrderedIndex(Kind::Rationals, 0); }

  /// Text names used in structure files: chain(n), Z, Z^k, Q.
  static OrderedIndex parse(const std::string& text);
  std::string str() const;

  Kind kind() const { return kind_; }
  int chain_size() const { return param_; }
  int arity() const { return param_; }

  bool is_group() const { return kind_ != Kind::FiniteChain; }
  /// True for the one-element group Z^0 and the one-element chain.
  bool trivial() const;

  /// -1 / 0 / +1 for less / equal / greater. Mixed-variant elements are
  /// rejected.
  int cmp(const OrdElem& a, const OrdElem& b) const;
  bool less(const OrdElem& a, const OrdElem& b) const { return cmp(a, b) < 0; }
  bool equal(const OrdElem& a, const OrdElem& b) const { return cmp(a, b) == 0; }

  OrdElem identity() const;
  OrdElem op(const OrdElem& a, const OrdElem& b) const;
  OrdElem inv(const OrdElem& a) const;
  /// a + b·k for small integer k (used to step windows and sample tails).
  OrdElem translate(const OrdElem& a, long long k) const;

  /// Whether every c < 0 factors as a + b with a, b < 0. Holds exactly for
  /// dense orders (Q) and vacuously for the trivial group; fails for Z and
  /// nontrivial lexicographic powers, whose largest element below 0 has no
  /// such factorization.
  bool negatives_closed_under_sum() const;

  /// Largest element strictly below 0, when one exists (Z, Z^k).
  std::optional<OrdElem> max_below_identity() const;

  /// The bound b with {g + h | g < d, h < e} = {c | c < b}. Requires a
  /// nontrivial group.
  OrdElem downset_product_bound(const OrdElem& d, const OrdElem& e) const;

  OrdElem element(long long scalar) const;  // chain position or integer
  OrdElem element(const std::vector<long long>& tuple) const;
  OrdElem element(const Fraction& q) const;

  std::string format(const OrdElem& e) const { return ord_elem_str(e); }
  /// Parse "3", "-2/5", "(1,-2)" according to the variant.
  OrdElem parse_elem(const std::string& text) const;

  bool operator==(const OrderedIndex& o) const { return kind_ == o.kind_ && param_ == o.param_; }

 private:
  OrderedIndex(Kind k, int param) : kind_(k), param_(param) {}
  void require_group(const char* op) const;
  void validate(const OrdElem& e) const;

  Kind kind_;
  int param_;  // chain size or lex arity
};

}  // namespace hyper

#endif
