#pragma once

#include <cassert>
#include <vector>

#include "sdclass/bitmatrix.hpp"
#include "sdclass/bitvec.hpp"

namespace sdc {

// Coordinate permutation on {0,...,n-1}; img[i] is the position coordinate i
// moves to, so apply(v)[img[i]] = v[i].
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  static Perm identity(int n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = i;
    return p;
  }
  static Perm transposition(int n, int a, int b) {
    Perm p = identity(n);
    p.img[static_cast<size_t>(a)] = b;
    p.img[static_cast<size_t>(b)] = a;
    return p;
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  // this first, then s
  Perm then(const Perm& s) const {
    assert(n() == s.n());
    Perm c;
    c.img.resize(img.size());
    for (int i = 0; i < n(); ++i) c.img[static_cast<size_t>(i)] = s(img[static_cast<size_t>(i)]);
    return c;
  }

  Perm inverse() const {
    Perm v;
    v.img.resize(img.size());
    for (int i = 0; i < n(); ++i) v.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
    return v;
  }

  word apply_bits(word v) const {
    word out = 0;
    for (int i = 0; i < n(); ++i)
      if ((v >> i) & 1) out |= word(1) << img[static_cast<size_t>(i)];
    return out;
  }
  BitVec apply(BitVec v) const {
    assert(v.n == n());
    return {apply_bits(v.bits), v.n};
  }
  BitMat apply_cols(const BitMat& m) const {
    assert(m.cols == n());
    BitMat out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) out.r[static_cast<size_t>(i)] = apply_bits(m.r[static_cast<size_t>(i)]);
    return out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
};

}  // namespace sdc
