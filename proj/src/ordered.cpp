#include "hyper/ordered.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyper/errors.hpp"

namespace hyper {

namespace {

long long checked_ll(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
  return static_cast<long long>(v);
}

long long add_ll(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

}  // namespace

Fraction Fraction::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw std::overflow_error("rational overflow");
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Fraction{num, den};
}

Fraction Fraction::operator+(const Fraction& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  // Reduce in 128 bits before the range check.
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Fraction{checked_ll(n, "rational overflow"), checked_ll(d, "rational overflow")};
}

Fraction Fraction::operator-() const {
  if (num == INT64_MIN) throw std::overflow_error("rational overflow");
  return Fraction{-num, den};
}

Fraction Fraction::operator*(const Fraction& o) const {
  __int128 n = static_cast<__int128>(num) * o.num;
  __int128 d = static_cast<__int128>(den) * o.den;
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Fraction{checked_ll(n, "rational overflow"), checked_ll(d, "rational overflow")};
}

Fraction Fraction::reciprocal() const {
  if (num == 0) throw std::domain_error("division by zero");
  return of(den, num);
}

int Fraction::cmp(const Fraction& o) const {
  __int128 l = static_cast<__int128>(num) * o.den;
  __int128 r = static_cast<__int128>(o.num) * den;
  return l < r ? -1 : l > r ? 1 : 0;
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string ord_elem_str(const OrdElem& e) {
  if (auto* k = std::get_if<long long>(&e)) return std::to_string(*k);
  if (auto* q = std::get_if<Fraction>(&e)) return q->str();
  const auto& t = std::get<std::vector<long long>>(e);
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

OrderedIndex OrderedIndex::finite_chain(int size) {
  if (size < 1) throw std::invalid_argument("chain size must be >= 1");
  return OrderedIndex(Kind::FiniteChain, size);
}

OrderedIndex OrderedIndex::lex_power(int arity) {
  if (arity < 0) throw std::invalid_argument("lex power arity must be >= 0");
  return OrderedIndex(Kind::LexPower, arity);
}

OrderedIndex OrderedIndex::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Z^", 0) == 0) return lex_power(std::stoi(text.substr(2)));
  if (text.rfind("chain(", 0) == 0 && text.back() == ')')
    return finite_chain(std::stoi(text.substr(6, text.size() - 7)));
  throw not_found_error("unknown ordered index: " + text);
}

std::string OrderedIndex::str() const {
  switch (kind_) {
    case Kind::FiniteChain: return "chain(" + std::to_string(param_) + ")";
    case Kind::Integers: return "Z";
    case Kind::LexPower: return "Z^" + std::to_string(param_);
    case Kind::Rationals: return "Q";
  }
  return "?";
}

bool OrderedIndex::trivial() const {
  return (kind_ == Kind::LexPower && param_ == 0) ||
         (kind_ == Kind::FiniteChain && param_ == 1);
}

void OrderedIndex::require_group(const char* op) const {
  if (!is_group())
    throw std::domain_error(std::string(op) + ": finite chains carry no group law");
}

void OrderedIndex::validate(const OrdElem& e) const {
  switch (kind_) {
    case Kind::FiniteChain: {
      auto* k = std::get_if<long long>(&e);
      if (!k || *k < 0 || *k >= param_)
        throw std::invalid_argument("element does not belong to " + str());
      return;
    }
    case Kind::Integers:
      if (!std::holds_alternative<long long>(e))
        throw std::invalid_argument("element does not belong to Z");
      return;
    case Kind::LexPower: {
      auto* t = std::get_if<std::vector<long long>>(&e);
      if (!t || static_cast<int>(t->size()) != param_)
        throw std::invalid_argument("element does not belong to " + str());
      return;
    }
    case Kind::Rationals:
      if (!std::holds_alternative<Fraction>(e))
        throw std::invalid_argument("element does not belong to Q");
      return;
  }
}

int OrderedIndex::cmp(const OrdElem& a, const OrdElem& b) const {
  validate(a);
  validate(b);
  switch (kind_) {
    case Kind::FiniteChain:
    case Kind::Integers: {
      long long x = std::get<long long>(a), y = std::get<long long>(b);
      return x < y ? -1 : x > y ? 1 : 0;
    }
    case Kind::LexPower: {
      const auto& x = std::get<std::vector<long long>>(a);
      const auto& y = std::get<std::vector<long long>>(b);
      for (int i = 0; i < param_; ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
      return 0;
    }
    case Kind::Rationals:
      return std::get<Fraction>(a).cmp(std::get<Fraction>(b));
  }
  return 0;
}

OrdElem OrderedIndex::identity() const {
  require_group("identity");
  switch (kind_) {
    case Kind::Integers: return OrdElem{0LL};
    case Kind::LexPower: return OrdElem{std::vector<long long>(param_, 0)};
    default: return OrdElem{Fraction::integer(0)};
  }
}

OrdElem OrderedIndex::op(const OrdElem& a, const OrdElem& b) const {
  require_group("group_op");
  validate(a);
  validate(b);
  switch (kind_) {
    case Kind::Integers:
      return OrdElem{add_ll(std::get<long long>(a), std::get<long long>(b))};
    case Kind::LexPower: {
      std::vector<long long> out = std::get<std::vector<long long>>(a);
      const auto& y = std::get<std::vector<long long>>(b);
      for (int i = 0; i < param_; ++i) out[i] = add_ll(out[i], y[i]);
      return OrdElem{std::move(out)};
    }
    default:
      return OrdElem{std::get<Fraction>(a) + std::get<Fraction>(b)};
  }
}

OrdElem OrderedIndex::inv(const OrdElem& a) const {
  require_group("group_inv");
  validate(a);
  switch (kind_) {
    case Kind::Integers: {
      long long v = std::get<long long>(a);
      if (v == INT64_MIN) throw std::overflow_error("integer overflow");
      return OrdElem{-v};
    }
    case Kind::LexPower: {
      std::vector<long long> out = std::get<std::vector<long long>>(a);
      for (auto& v : out) {
        if (v == INT64_MIN) throw std::overflow_error("integer overflow");
        v = -v;
      }
      return OrdElem{std::move(out)};
    }
    default:
      return OrdElem{-std::get<Fraction>(a)};
  }
}

OrdElem OrderedIndex::translate(const OrdElem& a, long long k) const {
  require_group("translate");
  validate(a);
  switch (kind_) {
    case Kind::Integers:
      return OrdElem{add_ll(std::get<long long>(a), k)};
    case Kind::LexPower: {
      std::vector<long long> out = std::get<std::vector<long long>>(a);
      if (param_ > 0) out[param_ - 1] = add_ll(out[param_ - 1], k);
      return OrdElem{std::move(out)};
    }
    default:
      return OrdElem{std::get<Fraction>(a) + Fraction::integer(k)};
  }
}

bool OrderedIndex::negatives_closed_under_sum() const {
  require_group("negatives_closed_under_sum");
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Integers: return false;
    case Kind::LexPower: return param_ == 0;  // vacuous in the trivial group
    default: return false;
  }
}

std::optional<OrdElem> OrderedIndex::max_below_identity() const {
  require_group("max_below_identity");
  switch (kind_) {
    case Kind::Integers: return OrdElem{-1LL};
    case Kind::LexPower: {
      if (param_ == 0) return std::nullopt;
      std::vector<long long> t(param_, 0);
      t[param_ - 1] = -1;
      return OrdElem{std::move(t)};
    }
    default: return std::nullopt;  // dense
  }
}

OrdElem OrderedIndex::downset_product_bound(const OrdElem& d, const OrdElem& e) const {
  require_group("downset_product_bound");
  if (trivial()) throw std::domain_error("downset_product_bound: trivial group has no downsets");
  OrdElem sum = op(d, e);
  if (auto eps = max_below_identity()) return op(sum, *eps);
  return sum;  // dense order
}

OrdElem OrderedIndex::element(long long scalar) const {
  switch (kind_) {
    case Kind::FiniteChain:
    case Kind::Integers: {
      OrdElem e{scalar};
      validate(e);
      return e;
    }
    case Kind::Rationals: return OrdElem{Fraction::integer(scalar)};
    case Kind::LexPower: {
      std::vector<long long> t(param_, 0);
      if (param_ > 0) t[param_ - 1] = scalar;
      return OrdElem{std::move(t)};
    }
  }
  throw std::logic_error("unreachable");
}

OrdElem OrderedIndex::element(const std::vector<long long>& tuple) const {
  OrdElem e{tuple};
  validate(e);
  return e;
}

OrdElem OrderedIndex::element(const Fraction& q) const {
  OrdElem e{q};
  validate(e);
  return e;
}

OrdElem OrderedIndex::parse_elem(const std::string& text) const {
  try {
    switch (kind_) {
      case Kind::FiniteChain:
      case Kind::Integers:
        return element(static_cast<long long>(std::stoll(text)));
      case Kind::Rationals: {
        auto slash = text.find('/');
        if (slash == std::string::npos) return element(Fraction::integer(std::stoll(text)));
        return element(Fraction::of(std::stoll(text.substr(0, slash)),
                                    std::stoll(text.substr(slash + 1))));
      }
      case Kind::LexPower: {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
          throw std::invalid_argument("expected (a,b,...)");
        std::vector<long long> t;
        std::stringstream ss(text.substr(1, text.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) t.push_back(std::stoll(part));
        return element(t);
      }
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse '" + text + "' as element of " + str());
  }
  throw std::logic_error("unreachable");
}

}  // namespace hyper
