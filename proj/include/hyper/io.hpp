#ifndef HYPER_IO_HPP
#define HYPER_IO_HPP

#include <string>
#include <variant>

#include "hyper/structure.hpp"
#include "hyper/symbolic.hpp"

namespace hyper {

/// Parsed structure file: a table with its declared kind, or a layered
/// hyperfield from a builtin/construct directive.
struct ParsedStructure {
  enum class Kind { Hypergroup, Hyperring, Hyperfield, Symbolic };
  Kind kind = Kind::Hypergroup;
  std::string name;
  std::variant<FiniteHyperStructure, SymbolicHyperfield> value;

  bool is_symbolic() const { return kind == Kind::Symbolic; }
  const FiniteHyperStructure& table() const { return std::get<FiniteHyperStructure>(value); }
  const SymbolicHyperfield& symbolic() const { return std::get<SymbolicHyperfield>(value); }
};

/// Parse a structure file. `# comments` run to end of line. A file is either
/// a single `builtin:`/`construct:` directive or a table:
///
///   hyperfield S
///   elements: 0 1 -1       # first element is the additive zero
///   one: 1
///   add: 1 1 -> 1          # every nonzero pair; zero row/column is implied
///   mul: 1 1 -> 1          # hyperring/hyperfield kinds only
///
/// `dir` resolves file arguments inside construct directives.
ParsedStructure parse_structure(const std::string& text, const std::string& dir = ".");

std::string kind_name(ParsedStructure::Kind k);

/// Canonical text form; parsing it back yields the same table.
std::string serialize_structure(const FiniteHyperStructure& T, ParsedStructure::Kind kind,
                                const std::string& name);

}  // namespace hyper

#endif
