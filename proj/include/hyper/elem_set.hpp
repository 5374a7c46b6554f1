#ifndef HYPER_ELEM_SET_HPP
#define HYPER_ELEM_SET_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyper {

/// Subset of a carrier indexed 0..n-1, n <= 64, stored as one machine word.
/// Hyperaddition tables are made of these; set union is a single OR.
class ElemSet {
 public:
  static constexpr int kMaxCarrier = 64;

  ElemSet() = default;
  explicit ElemSet(int carrier_size) : carrier_(checked_size(carrier_size)) {}

  static ElemSet single(int i, int carrier_size) {
    ElemSet s(carrier_size);
    s.insert(i);
    return s;
  }

  static ElemSet of(const std::vector<int>& elems, int carrier_size) {
    ElemSet s(carrier_size);
    for (int e : elems) s.insert(e);
    return s;
  }

  int carrier_size() const { return carrier_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  uint64_t bits() const { return bits_; }

  bool contains(int i) const {
    return i >= 0 && i < carrier_ && ((bits_ >> i) & 1u) != 0;
  }

  void insert(int i) {
    if (i < 0 || i >= carrier_) throw std::invalid_argument("ElemSet: index out of carrier");
    bits_ |= uint64_t{1} << i;
  }

  void erase(int i) {
    if (i >= 0 && i < carrier_) bits_ &= ~(uint64_t{1} << i);
  }

  ElemSet& operator|=(const ElemSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) {
    a |= b;
    return a;
  }

  ElemSet intersect(const ElemSet& o) const {
    ElemSet r(carrier_);
    r.bits_ = bits_ & o.bits_;
    return r;
  }

  bool subset_of(const ElemSet& o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const ElemSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const ElemSet& o) const { return bits_ != o.bits_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    uint64_t b = bits_;
    while (b) {
      int i = __builtin_ctzll(b);
      out.push_back(i);
      b &= b - 1;
    }
    return out;
  }

  /// The unique element of a singleton set.
  int sole_element() const {
    if (size() != 1) throw std::logic_error("ElemSet: not a singleton");
    return __builtin_ctzll(bits_);
  }

 private:
  static int checked_size(int n) {
    if (n < 0 || n > kMaxCarrier) throw std::invalid_argument("ElemSet: carrier size out of range");
    return n;
  }

  uint64_t bits_ = 0;
  int carrier_ = 0;
};

}  // namespace hyper

#endif
