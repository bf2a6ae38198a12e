#pragma once

#include <utility>
#include <vector>

#include "sdclass/code.hpp"

namespace sdc {

// Ordered partition of the coordinates by the invariant pair (f1, f2);
// cells ascend by size first, then by (f1, f2) lexicographically. Distinct
// cells carry distinct pairs, so the order is total.
struct PseudoOrbitPartition {
  std::vector<std::vector<int>> cells;          // each cell sorted ascending
  std::vector<std::pair<int, int>> values;      // per coordinate (f1, f2)

  int cell_index(int coord) const;
};

// f2(i) = sum over v in M_d of v_i; f1 is its parity, taken from one XOR
// fold over M_d.
std::vector<std::pair<int, int>> invariants_f1_f2(const SelfDualCode& c);

PseudoOrbitPartition pseudo_orbits(const SelfDualCode& c);

// Index of the first cell in order that is not a pair of two equal
// coordinates. Exists for every self-dual code with k >= 2: a code whose
// coordinates split entirely into equal pairs is i2^k, and that code is
// coordinate-transitive, so its partition is one cell of size 2k.
int eligible_tail_cell(const SelfDualCode& c, const PseudoOrbitPartition& p);

// Coordinates a and b agree on every codeword.
bool coordinates_equal(const SelfDualCode& c, int a, int b);

}  // namespace sdc
