#include "hyper/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "hyper/errors.hpp"

namespace hyper {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

FiniteHyperStructure prime_field(int p) {
  std::vector<std::string> names;
  for (int i = 0; i < p; ++i) names.push_back(std::to_string(i));
  std::vector<ElemSet> add(static_cast<size_t>(p) * p, ElemSet(p));
  std::vector<int> mul(static_cast<size_t>(p) * p, 0);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      add[static_cast<size_t>(x) * p + y] = ElemSet::single((x + y) % p, p);
      mul[static_cast<size_t>(x) * p + y] = (x * y) % p;
    }
  return FiniteHyperStructure::make(std::move(names), std::move(add), std::move(mul), 1);
}

// GF(p^k) with elements encoded as base-p digit strings of the coefficient
// tuples; `irr` holds the monic irreducible's coefficients, low degree first.
FiniteHyperStructure extension_field(int p, int k, const std::vector<int>& irr) {
  const int q = static_cast<int>(std::lround(std::pow(double(p), double(k))));
  auto digits = [&](int v) {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  };
  auto poly_mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce modulo irr, leading coefficient 1
    for (int d = 2 * k - 2; d >= k; --d) {
      int c = prod[d];
      if (c == 0) continue;
      for (int i = 0; i <= k; ++i)
        prod[d - k + i] = ((prod[d - k + i] - c * irr[i]) % p + p * p) % p;
    }
    prod.resize(k);
    return prod;
  };

  std::vector<std::string> names;
  for (int i = 0; i < q; ++i) names.push_back(std::to_string(i));
  std::vector<ElemSet> add(static_cast<size_t>(q) * q, ElemSet(q));
  std::vector<int> mul(static_cast<size_t>(q) * q, 0);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      auto dx = digits(x), dy = digits(y);
      std::vector<int> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (dx[i] + dy[i]) % p;
      add[static_cast<size_t>(x) * q + y] = ElemSet::single(encode(ds), q);
      mul[static_cast<size_t>(x) * q + y] = encode(poly_mul(dx, dy));
    }
  return FiniteHyperStructure::make(std::move(names), std::move(add), std::move(mul), 1);
}

}  // namespace

FiniteHyperStructure krasner() {
  std::vector<ElemSet> add(4, ElemSet(2));
  add[0] = ElemSet::single(0, 2);
  add[1] = ElemSet::single(1, 2);
  add[2] = ElemSet::single(1, 2);
  add[3] = ElemSet::of({0, 1}, 2);
  return FiniteHyperStructure::make({"0", "1"}, std::move(add), std::vector<int>{0, 0, 0, 1}, 1);
}

FiniteHyperStructure sign_hyperfield() {
  const int n = 3;  // 0, 1, -1
  std::vector<ElemSet> add(9, ElemSet(n));
  auto at = [&](int x, int y) -> ElemSet& { return add[x * n + y]; };
  for (int x = 0; x < n; ++x) {
    at(0, x) = ElemSet::single(x, n);
    at(x, 0) = ElemSet::single(x, n);
  }
  at(1, 1) = ElemSet::single(1, n);
  at(2, 2) = ElemSet::single(2, n);
  at(1, 2) = ElemSet::of({0, 1, 2}, n);
  at(2, 1) = ElemSet::of({0, 1, 2}, n);
  std::vector<int> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  return FiniteHyperStructure::make({"0", "1", "-1"}, std::move(add), std::move(mul), 1);
}

FiniteHyperStructure galois_field(int q) {
  if (q == 4) return extension_field(2, 2, {1, 1, 1});
  if (q == 8) return extension_field(2, 3, {1, 1, 0, 1});
  if (q == 9) return extension_field(3, 2, {1, 0, 1});
  if (is_prime(q) && q <= 61) return prime_field(q);
  throw not_found_error("GF(" + std::to_string(q) + ") is not available");
}

SymbolicHyperfield z_minus_inf() {
  return SymbolicHyperfield("Zminusinf", galois_field(2), OrderedIndex::integers());
}

SymbolicHyperfield tropical_z() {
  return SymbolicHyperfield("trop(Z)", krasner(), OrderedIndex::integers());
}

Builtin builtin(const std::string& name) {
  if (name == "K") return krasner();
  if (name == "S") return sign_hyperfield();
  if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
    int q = std::stoi(name.substr(3, name.size() - 4));
    if (q < 2 || q > 9) throw not_found_error("builtin fields range over GF(2)..GF(9)");
    return galois_field(q);
  }
  if (name == "Zminusinf") return z_minus_inf();
  if (name == "trop(Z)") return tropical_z();
  if (name.rfind("layer(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(6, name.size() - 7);
    auto comma = inner.rfind(',');
    if (comma == std::string::npos) throw not_found_error("layer(M,G) needs two arguments");
    std::string m = inner.substr(0, comma), g = inner.substr(comma + 1);
    Builtin base = builtin(m);
    if (!std::holds_alternative<FiniteHyperStructure>(base))
      throw not_found_error("layer(M,G): M must be a finite hyperfield");
    return SymbolicHyperfield(name, std::get<FiniteHyperStructure>(base), OrderedIndex::parse(g));
  }
  throw not_found_error("unknown builtin: " + name);
}

}  // namespace hyper
