#ifndef HYPER_TESTS_ORACLES_HPP
#define HYPER_TESTS_ORACLES_HPP

// Independent reference implementations used to compute expected values.
// These deliberately avoid the library's bitset tables and share no code
// with the paths they check.

#include <algorithm>
#include <set>
#include <vector>

#include "hyper/structure.hpp"

namespace oracle {

using SetVec = std::set<int>;

/// Extended sum over plain integer sets, straight from the definition.
inline SetVec naive_extend_sum(const hyper::FiniteHyperStructure& T, const SetVec& A,
                               const SetVec& B) {
  SetVec out;
  for (int a : A)
    for (int b : B)
      for (int z : T.add(a, b).elements()) out.insert(z);
  return out;
}

inline SetVec to_set(const hyper::ElemSet& s) {
  auto v = s.elements();
  return SetVec(v.begin(), v.end());
}

/// Polynomial-basis arithmetic for GF(p^k): coefficients little-endian,
/// reduction by long division. Independent of the catalog's table builder.
struct GFPoly {
  int p, k;
  std::vector<int> irr;  // monic, degree k, little-endian

  std::vector<int> decode(int v) const {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  }
  int add(int a, int b) const {
    auto da = decode(a), db = decode(b);
    for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }
  int mul(int a, int b) const {
    auto da = decode(a), db = decode(b);
    std::vector<int> prod(2 * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int d = 2 * k - 1; d >= k; --d) {
      int c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (int i = 0; i < k; ++i)
        prod[d - k + i] = ((prod[d - k + i] - c * irr[i]) % p + p * p) % p;
    }
    prod.resize(k);
    return encode(prod);
  }
};

/// Double distributivity checked with plain set containers.
inline bool naive_doubly_distributive(const hyper::FiniteHyperStructure& T) {
  const int n = T.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          SetVec lhs;
          for (int s : T.add(a, b).elements())
            for (int t : T.add(c, d).elements()) lhs.insert(T.mul(s, t));
          SetVec rhs = {T.mul(a, c)};
          rhs = naive_extend_sum(T, rhs, {T.mul(a, d)});
          rhs = naive_extend_sum(T, rhs, {T.mul(b, c)});
          rhs = naive_extend_sum(T, rhs, {T.mul(b, d)});
          if (lhs != rhs) return false;
        }
  return true;
}

/// Quotient hyperaddition by brute force: the set of classes meeting
/// {a + b | a in gU, b in hU}.
inline SetVec naive_coset_sum(const hyper::FiniteHyperStructure& K, const std::vector<int>& U,
                              int g, int h, const std::vector<int>& class_of) {
  SetVec out;
  for (int u : U)
    for (int v : U) {
      int s = K.add(K.mul(g, u), K.mul(h, v)).sole_element();
      out.insert(class_of[s]);
    }
  return out;
}

}  // namespace oracle

#endif
