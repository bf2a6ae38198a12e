#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sdclass/bitmatrix.hpp"
#include "sdclass/bitvec.hpp"
#include "sdclass/gf2.hpp"

namespace sdc {

// Nonzero codewords of weight <= w, deterministic order.
struct CodewordSet {
  int w = 0;
  std::vector<BitVec> words;
};

// Binary self-dual [n, n/2] code. The generator is kept in systematic form
// (I_k | A); min_words caches M_d as raw words sorted ascending.
struct SelfDualCode {
  int n = 0;
  int k = 0;
  BitMat gen;
  int min_weight = 0;
  std::vector<std::uint64_t> weight_distribution;  // A_0 .. A_n
  bool doubly_even = false;
  std::vector<word> min_words;

  // Validates self-duality (even length, rank n/2, G*G^T = 0), normalizes to
  // systematic form, walks all 2^k codewords for the caches.
  static SelfDualCode from_generator(const BitMat& g);

  static SelfDualCode i2();

  std::uint64_t weight_count(int w) const {
    return w >= 0 && w <= n ? weight_distribution[static_cast<size_t>(w)] : 0;
  }

  CodewordSet codewords_up_to_weight(int w) const;

  // Least even w with rank(M_w) = k.
  int smallest_spanning_weight() const;

  // Coordinate pairs equal across all codewords; nonempty only when d = 2.
  std::vector<std::pair<int, int>> twin_pairs() const;

  friend bool operator==(const SelfDualCode&, const SelfDualCode&) = default;
};

// Visits all 2^k - 1 nonzero codewords in Gray order.
template <class F>
void for_each_codeword(const BitMat& gen, F&& f) {
  word cur = 0;
  std::uint64_t total = std::uint64_t(1) << gen.rows;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= gen.r[static_cast<size_t>(std::countr_zero(i))];
    f(cur);
  }
}

}  // namespace sdc
