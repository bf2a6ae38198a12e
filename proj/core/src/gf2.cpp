#include "sdclass/gf2.hpp"

#include <algorithm>

#include "sdclass/errors.hpp"

namespace sdc {

std::vector<int> rref(BitMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i) {
      if (m.get(i, col)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m.r[static_cast<size_t>(sel)], m.r[static_cast<size_t>(row)]);
    for (int i = 0; i < m.rows; ++i)
      if (i != row && m.get(i, col)) m.r[static_cast<size_t>(i)] ^= m.r[static_cast<size_t>(row)];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const BitMat& m) {
  BitMat tmp = m;
  return static_cast<int>(rref(tmp).size());
}

Systematic systematic_form(const BitMat& g) {
  BitMat red = g;
  std::vector<int> pivots = rref(red);
  if (static_cast<int>(pivots.size()) != g.rows)
    throw RankDeficient("systematic_form: rank " + std::to_string(pivots.size()) +
                        " < rows " + std::to_string(g.rows));

  std::vector<bool> is_pivot(static_cast<size_t>(g.cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  Perm perm;
  perm.img.assign(static_cast<size_t>(g.cols), -1);
  int pos = 0;
  for (int c : pivots) perm.img[static_cast<size_t>(c)] = pos++;
  for (int c = 0; c < g.cols; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) perm.img[static_cast<size_t>(c)] = pos++;

  return {perm.apply_cols(red), perm};
}

bool is_self_orthogonal(const BitMat& g) {
  for (int i = 0; i < g.rows; ++i)
    for (int j = i; j < g.rows; ++j)
      if (dot(g.row(i), g.row(j))) return false;
  return true;
}

BitVec mat_vec(const BitMat& a, BitVec x) {
  if (a.cols != x.n) throw DimensionMismatch("mat_vec: cols != len");
  BitVec out = BitVec::zero(a.rows);
  for (int i = 0; i < a.rows; ++i) out.set(i, dot(a.row(i), x));
  return out;
}

BitMat mat_mul(const BitMat& a, const BitMat& b) {
  if (a.cols != b.rows) throw DimensionMismatch("mat_mul: inner dims differ");
  BitMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    word acc = 0;
    word row = a.r[static_cast<size_t>(i)];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      acc ^= b.r[static_cast<size_t>(j)];
    }
    out.r[static_cast<size_t>(i)] = acc;
  }
  return out;
}

BitMat transpose(const BitMat& m) {
  BitMat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    word row = m.r[static_cast<size_t>(i)];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      out.set(j, i, true);
    }
  }
  return out;
}

}  // namespace sdc
