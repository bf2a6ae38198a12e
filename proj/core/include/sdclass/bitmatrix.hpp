#pragma once

#include <cassert>
#include <vector>

#include "sdclass/bitvec.hpp"

namespace sdc {

// Row-major matrix over GF(2); one machine word per row, so cols <= 64.
struct BitMat {
  int rows = 0;
  int cols = 0;
  std::vector<word> r;  // r[i] bit j = entry (i, j)

  BitMat() = default;
  BitMat(int rr, int cc) : rows(rr), cols(cc), r(static_cast<size_t>(rr), 0) {
    assert(rr >= 0 && cc >= 0 && cc <= 64);
  }

  static BitMat identity(int k) {
    BitMat m(k, k);
    for (int i = 0; i < k; ++i) m.r[static_cast<size_t>(i)] = word(1) << i;
    return m;
  }

  bool get(int i, int j) const { return (r[static_cast<size_t>(i)] >> j) & 1; }
  void set(int i, int j, bool v) {
    word& w = r[static_cast<size_t>(i)];
    w = v ? w | (word(1) << j) : w & ~(word(1) << j);
  }
  BitVec row(int i) const { return {r[static_cast<size_t>(i)], cols}; }
  void set_row(int i, BitVec v) {
    assert(v.n == cols);
    r[static_cast<size_t>(i)] = v.bits;
  }

  // Column j packed over row index; valid while rows <= 64.
  word column(int j) const {
    assert(rows <= 64);
    word c = 0;
    for (int i = 0; i < rows; ++i) c |= word(get(i, j)) << i;
    return c;
  }

  friend bool operator==(const BitMat&, const BitMat&) = default;
};

}  // namespace sdc
