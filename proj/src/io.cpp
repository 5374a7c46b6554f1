#include "hyper/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hyper/catalog.hpp"
#include "hyper/constructions.hpp"
#include "hyper/errors.hpp"

namespace hyper {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::stringstream ss(body);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

ParsedStructure from_builtin(const std::string& name) {
  Builtin b = builtin(name);
  ParsedStructure out;
  out.name = name;
  if (std::holds_alternative<SymbolicHyperfield>(b)) {
    out.kind = ParsedStructure::Kind::Symbolic;
    out.value = std::get<SymbolicHyperfield>(std::move(b));
  } else {
    out.kind = ParsedStructure::Kind::Hyperfield;
    out.value = std::get<FiniteHyperStructure>(std::move(b));
  }
  return out;
}

ParsedStructure resolve_arg(const std::string& tok, const std::string& dir, int line_no);

ParsedStructure run_construct(const std::vector<std::string>& args, const std::string& dir,
                              int line_no) {
  if (args.empty()) throw parse_error(line_no, "construct: missing operation");
  const std::string& op = args[0];
  ParsedStructure out;

  if (op == "product") {
    if (args.size() != 3) throw parse_error(line_no, "construct product needs two arguments");
    ParsedStructure a = resolve_arg(args[1], dir, line_no);
    ParsedStructure b = resolve_arg(args[2], dir, line_no);
    if (a.is_symbolic() || b.is_symbolic())
      throw parse_error(line_no, "construct product needs finite structures");
    out.kind = ParsedStructure::Kind::Hyperring;
    out.name = "product(" + args[1] + "," + args[2] + ")";
    out.value = product(a.table(), b.table());
    return out;
  }
  if (op == "wedge") {
    if (args.size() < 2) throw parse_error(line_no, "construct wedge needs at least one layer");
    std::vector<FiniteHyperStructure> layers;
    for (size_t i = 1; i < args.size(); ++i) {
      ParsedStructure layer = resolve_arg(args[i], dir, line_no);
      if (layer.is_symbolic()) throw parse_error(line_no, "wedge layers must be finite");
      layers.push_back(layer.table());
    }
    out.kind = ParsedStructure::Kind::Hypergroup;
    out.name = "wedge";
    out.value = wedge_sum(layers);
    return out;
  }
  if (op == "layer") {
    if (args.size() != 3) throw parse_error(line_no, "construct layer needs a base and a group");
    ParsedStructure base = resolve_arg(args[1], dir, line_no);
    if (base.is_symbolic()) throw parse_error(line_no, "layer base must be finite");
    out.kind = ParsedStructure::Kind::Symbolic;
    out.name = "layer(" + args[1] + "," + args[2] + ")";
    out.value = layering(base.table(), OrderedIndex::parse(args[2]),
                         SymbolicHyperfield::Action::trivial(), out.name);
    return out;
  }
  if (op == "quotient") {
    if (args.size() < 3) throw parse_error(line_no, "construct quotient needs a field and a subgroup");
    ParsedStructure k = resolve_arg(args[1], dir, line_no);
    if (k.is_symbolic()) throw parse_error(line_no, "quotient needs a finite field");
    // subgroup syntax: {a,b,...} with element names of the field
    std::string setspec;
    for (size_t i = 2; i < args.size(); ++i) setspec += args[i];
    if (setspec.size() < 2 || setspec.front() != '{' || setspec.back() != '}')
      throw parse_error(line_no, "subgroup must be written {a,b,...}");
    std::vector<int> U;
    std::stringstream ss(setspec.substr(1, setspec.size() - 2));
    std::string part;
    const FiniteHyperStructure& field = k.table();
    while (std::getline(ss, part, ',')) {
      int idx = -1;
      for (int i = 0; i < field.n(); ++i)
        if (field.name(i) == part) idx = i;
      if (idx < 0) throw parse_error(line_no, "unknown field element '" + part + "'");
      U.push_back(idx);
    }
    out.kind = ParsedStructure::Kind::Hyperfield;
    out.name = "quotient(" + args[1] + ")";
    try {
      out.value = quotient(field, U);
    } catch (const std::invalid_argument& e) {
      throw parse_error(line_no, e.what());
    }
    return out;
  }
  throw parse_error(line_no, "unknown construct operation '" + op + "'");
}

ParsedStructure resolve_arg(const std::string& tok, const std::string& dir, int line_no) {
  try {
    return from_builtin(tok);
  } catch (const not_found_error&) {
  }
  std::ifstream in(dir + "/" + tok);
  if (!in) throw parse_error(line_no, "'" + tok + "' is neither a builtin nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str(), dir);
}

}  // namespace

std::string kind_name(ParsedStructure::Kind k) {
  switch (k) {
    case ParsedStructure::Kind::Hypergroup: return "hypergroup";
    case ParsedStructure::Kind::Hyperring: return "hyperring";
    case ParsedStructure::Kind::Hyperfield: return "hyperfield";
    case ParsedStructure::Kind::Symbolic: return "symbolic";
  }
  return "?";
}

ParsedStructure parse_structure(const std::string& text, const std::string& dir) {
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;

  std::optional<ParsedStructure::Kind> kind;
  std::string name;
  std::vector<std::string> elems;
  std::map<std::string, int> index;
  std::optional<int> one;
  std::map<std::pair<int, int>, std::vector<int>> add_lines;
  std::map<std::pair<int, int>, int> mul_lines;

  auto lookup = [&](const std::string& tok, int ln) {
    auto it = index.find(tok);
    if (it == index.end()) throw parse_error(ln, "undeclared element '" + tok + "'");
    return it->second;
  };

  while (std::getline(ss, line)) {
    ++line_no;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "builtin:") {
      if (toks.size() != 2) throw parse_error(line_no, "builtin: needs exactly one name");
      try {
        return from_builtin(toks[1]);
      } catch (const not_found_error& e) {
        throw parse_error(line_no, e.what());
      }
    }
    if (head == "construct:") {
      return run_construct({toks.begin() + 1, toks.end()}, dir, line_no);
    }
    if (head == "hypergroup" || head == "hyperring" || head == "hyperfield") {
      if (kind) throw parse_error(line_no, "duplicate header line");
      kind = head == "hypergroup" ? ParsedStructure::Kind::Hypergroup
             : head == "hyperring" ? ParsedStructure::Kind::Hyperring
                                   : ParsedStructure::Kind::Hyperfield;
      if (toks.size() > 1) name = toks[1];
      continue;
    }
    if (!kind) throw parse_error(line_no, "expected a header line first");

    if (head == "elements:") {
      if (!elems.empty()) throw parse_error(line_no, "duplicate elements line");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (index.count(toks[i])) throw parse_error(line_no, "duplicate element '" + toks[i] + "'");
        index[toks[i]] = static_cast<int>(elems.size());
        elems.push_back(toks[i]);
      }
      if (elems.empty()) throw parse_error(line_no, "elements line is empty");
      continue;
    }
    if (head == "one:") {
      if (toks.size() != 2) throw parse_error(line_no, "one: needs exactly one element");
      one = lookup(toks[1], line_no);
      continue;
    }
    if (head == "add:" || head == "mul:") {
      auto arrow = std::find(toks.begin(), toks.end(), "->");
      if (arrow == toks.end() || arrow - toks.begin() != 3)
        throw parse_error(line_no, "expected '" + head + " x y -> ...'");
      int x = lookup(toks[1], line_no), y = lookup(toks[2], line_no);
      std::vector<int> rhs;
      for (auto it = arrow + 1; it != toks.end(); ++it) rhs.push_back(lookup(*it, line_no));
      if (rhs.empty()) throw parse_error(line_no, "empty sum is not a legal hyperaddition value");
      if (head == "add:") {
        if (add_lines.count({x, y})) throw parse_error(line_no, "duplicate add entry");
        add_lines[{x, y}] = rhs;
      } else {
        if (rhs.size() != 1) throw parse_error(line_no, "mul entries are single-valued");
        if (mul_lines.count({x, y})) throw parse_error(line_no, "duplicate mul entry");
        mul_lines[{x, y}] = rhs[0];
      }
      continue;
    }
    throw parse_error(line_no, "unrecognized line '" + head + "'");
  }

  if (!kind) throw parse_error(line_no, "missing header line");
  if (elems.empty()) throw parse_error(line_no, "missing elements line");
  const int n = static_cast<int>(elems.size());
  if (n > FiniteHyperStructure::kMaxCarrier)
    throw parse_error(line_no, "carrier exceeds the capacity of 64 elements");

  const bool multiplicative = *kind != ParsedStructure::Kind::Hypergroup;
  if (multiplicative && !one) throw parse_error(line_no, "multiplicative structures need a one: line");
  if (!multiplicative && (one || !mul_lines.empty()))
    throw parse_error(line_no, "hypergroups carry no multiplication");

  std::vector<ElemSet> add(static_cast<size_t>(n) * n, ElemSet(n));
  for (int x = 0; x < n; ++x) {
    add[static_cast<size_t>(0) * n + x] = ElemSet::single(x, n);
    add[static_cast<size_t>(x) * n + 0] = ElemSet::single(x, n);
  }
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      auto it = add_lines.find({x, y});
      if (it == add_lines.end())
        throw parse_error(line_no, "missing add entry for " + elems[x] + " " + elems[y]);
      ElemSet cell(n);
      for (int z : it->second) cell.insert(z);
      add[static_cast<size_t>(x) * n + y] = cell;
    }
  for (const auto& [key, rhs] : add_lines)
    if (key.first == 0 || key.second == 0) {
      // explicit zero rows are allowed but must match the identity default
      ElemSet cell(n);
      for (int z : rhs) cell.insert(z);
      int other = key.first == 0 ? key.second : key.first;
      if (cell != ElemSet::single(other, n))
        throw parse_error(line_no, "zero row/column must satisfy x + 0 = x");
    }

  std::optional<std::vector<int>> mul;
  if (multiplicative) {
    mul.emplace(static_cast<size_t>(n) * n, 0);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        auto it = mul_lines.find({x, y});
        if (it == mul_lines.end())
          throw parse_error(line_no, "missing mul entry for " + elems[x] + " " + elems[y]);
        (*mul)[static_cast<size_t>(x) * n + y] = it->second;
      }
    for (const auto& [key, rhs] : mul_lines)
      if ((key.first == 0 || key.second == 0) && rhs != 0)
        throw parse_error(line_no, "zero row/column must satisfy x * 0 = 0");
  }

  ParsedStructure out;
  out.kind = *kind;
  out.name = name;
  out.value = FiniteHyperStructure::make(std::move(elems), std::move(add), std::move(mul), one);
  return out;
}

std::string serialize_structure(const FiniteHyperStructure& T, ParsedStructure::Kind kind,
                                const std::string& name) {
  std::string out = kind_name(kind);
  if (!name.empty()) out += " " + name;
  out += "\n";
  out += "elements:";
  for (int i = 0; i < T.n(); ++i) out += " " + T.name(i);
  out += "\n";
  if (T.has_mul()) out += "one: " + T.name(*T.one_index()) + "\n";
  for (int x = 1; x < T.n(); ++x)
    for (int y = 1; y < T.n(); ++y) {
      out += "add: " + T.name(x) + " " + T.name(y) + " ->";
      for (int z : T.add(x, y).elements()) out += " " + T.name(z);
      out += "\n";
    }
  if (T.has_mul())
    for (int x = 1; x < T.n(); ++x)
      for (int y = 1; y < T.n(); ++y)
        out += "mul: " + T.name(x) + " " + T.name(y) + " -> " + T.name(T.mul(x, y)) + "\n";
  return out;
}

}  // namespace hyper
