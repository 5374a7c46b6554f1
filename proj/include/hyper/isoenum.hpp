#ifndef HYPER_ISOENUM_HPP
#define HYPER_ISOENUM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hyper/structure.hpp"

namespace hyper {

/// Relabel a structure by perm (perm[old] = new); perm[0] must be 0.
FiniteHyperStructure apply_permutation(const FiniteHyperStructure& T, const std::vector<int>& perm);

/// Serialization of the relabeling that minimizes a fixed byte encoding of
/// the tables over all zero-fixing permutations. Two structures (of equal
/// size and the same multiplicative presence) are isomorphic iff their
/// canonical forms are byte-identical.
std::vector<uint8_t> canonical_form(const FiniteHyperStructure& T);

/// Backtracking search for an isomorphism (zero-fixing, one-fixing when both
/// sides are multiplicative), pruned by per-element invariants. The witness
/// is verified as a homomorphism in both directions before it is returned.
std::optional<std::vector<int>> find_isomorphism(const FiniteHyperStructure& A,
                                                 const FiniteHyperStructure& B);

struct EnumFilters {
  bool stringent = false;
  bool commutative = false;
  bool dd = false;  // hyperfield enumeration only
};

/// All hypergroup tables on n <= 6 elements up to isomorphism. Generation
/// fixes the hyperinverse involution first, then decides set memberships
/// orbit by orbit under the closure maps of the hypergroup axioms, pruning
/// empty and (under the filter) multi-valued cells early; every completed
/// table is re-verified by check_hypergroup before deduplication.
std::vector<FiniteHyperStructure> enumerate_hypergroups(int n, EnumFilters filters = {},
                                                        int threads = 0);

/// All hyperfield tables on n <= 7 elements up to isomorphism. The
/// multiplicative group is enumerated first; distributivity pins the whole
/// hyperaddition to the row of 1, which is searched under the same closure
/// maps. Candidates are re-verified by check_hyperfield (and the direct
/// double-distributivity scan when the dd filter is on).
std::vector<FiniteHyperStructure> enumerate_hyperfields(int n, EnumFilters filters = {},
                                                        int threads = 0);

/// All stringent skew hyperrings on n <= 5 elements up to isomorphism:
/// compatible multiplications over the enumerated stringent commutative
/// hypergroups, assembled from single-valued additive endomorphisms.
std::vector<FiniteHyperStructure> enumerate_stringent_hyperrings(int n);

}  // namespace hyper

#endif
