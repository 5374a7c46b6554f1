#ifndef HYPER_CATALOG_HPP
#define HYPER_CATALOG_HPP

#include <string>
#include <variant>

#include "hyper/structure.hpp"
#include "hyper/symbolic.hpp"

namespace hyper {

/// Krasner hyperfield: {0,1} with 1 ⊞ 1 = {0,1}.
FiniteHyperStructure krasner();

/// Sign hyperfield: {0,1,-1} with x ⊞ x = {x} and 1 ⊞ -1 = {0,1,-1}.
FiniteHyperStructure sign_hyperfield();

/// GF(q) for prime q <= 61 or q in {4, 8, 9}. GF(4) is built from x^2+x+1,
/// GF(8) from x^3+x+1, GF(9) from x^2+1; elements are named by their base-p
/// digit encoding.
FiniteHyperStructure galois_field(int q);

/// GF(2) layered over Z: the integers with max-dominant hyperaddition, equal
/// arguments cancelling into the strict downset.
SymbolicHyperfield z_minus_inf();

/// Krasner hyperfield layered over Z: the integer tropical hyperfield.
SymbolicHyperfield tropical_z();

using Builtin = std::variant<FiniteHyperStructure, SymbolicHyperfield>;

/// Lookup by the names the CLI accepts: K, S, GF(2..9), Zminusinf, trop(Z),
/// layer(M,G) with M one of the finite names and G one of Z, Z^k, Q.
Builtin builtin(const std::string& name);

}  // namespace hyper

#endif
