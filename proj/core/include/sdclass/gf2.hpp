#pragma once

#include <vector>

#include "sdclass/bitmatrix.hpp"
#include "sdclass/bitvec.hpp"
#include "sdclass/perm.hpp"

namespace sdc {

int rank(const BitMat& m);

// In-place reduced row echelon form with leftmost pivots; returns the pivot
// columns in ascending order. Rows below the rank come out zero.
std::vector<int> rref(BitMat& m);

struct Systematic {
  BitMat mat;  // (I_k | A)
  Perm perm;   // column permutation applied: mat = perm.apply_cols(rref input)
};

// Pivot columns are chosen greedily left to right and moved to the front;
// non-pivot columns keep their relative order. Throws RankDeficient.
Systematic systematic_form(const BitMat& g);

bool is_self_orthogonal(const BitMat& g);

// a * x^T, result indexed by row.
BitVec mat_vec(const BitMat& a, BitVec x);
BitMat mat_mul(const BitMat& a, const BitMat& b);
BitMat transpose(const BitMat& m);

}  // namespace sdc
