#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

namespace sdc {

using word = std::uint64_t;

// Vector over GF(2) with at most 64 coordinates; bit i holds coordinate i.
// Bits at positions >= n are always zero.
struct BitVec {
  word bits = 0;
  int n = 0;

  BitVec() = default;
  BitVec(word b, int len) : bits(b), n(len) {
    assert(len >= 0 && len <= 64);
    assert(len == 64 || (b >> len) == 0);
  }

  static word mask(int len) { return len >= 64 ? ~word(0) : (word(1) << len) - 1; }
  static BitVec zero(int len) { return {0, len}; }
  static BitVec ones(int len) { return {mask(len), len}; }

  bool get(int i) const { return (bits >> i) & 1; }
  void set(int i, bool v) {
    bits = v ? bits | (word(1) << i) : bits & ~(word(1) << i);
  }
  void flip(int i) { bits ^= word(1) << i; }
  int weight() const { return std::popcount(bits); }
  bool odd_weight() const { return weight() & 1; }
  bool is_zero() const { return bits == 0; }

  friend BitVec operator^(BitVec a, BitVec b) {
    assert(a.n == b.n);
    return {a.bits ^ b.bits, a.n};
  }
  BitVec& operator^=(BitVec o) {
    assert(n == o.n);
    bits ^= o.bits;
    return *this;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::string to_string() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }
  static BitVec from_string(const std::string& s) {
    BitVec v = zero(static_cast<int>(s.size()));
    for (int i = 0; i < v.n; ++i)
      if (s[static_cast<size_t>(i)] == '1') v.set(i, true);
    return v;
  }
};

// Parity of the standard inner product.
inline bool dot(BitVec a, BitVec b) {
  assert(a.n == b.n);
  return std::popcount(a.bits & b.bits) & 1;
}

// Orders by coordinate strings: the first differing coordinate decides.
inline bool string_less(BitVec a, BitVec b) {
  assert(a.n == b.n);
  word diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  return (b.bits >> std::countr_zero(diff)) & 1;
}

}  // namespace sdc
