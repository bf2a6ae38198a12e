#include "sdclass/code.hpp"

#include <algorithm>

#include "sdclass/errors.hpp"

namespace sdc {

SelfDualCode SelfDualCode::from_generator(const BitMat& g) {
  if (g.cols % 2 != 0 || g.cols == 0) throw OddLength("length must be even and positive");
  if (g.rows != g.cols / 2)
    throw NotSelfDual("generator must have n/2 rows, got " + std::to_string(g.rows));
  if (!is_self_orthogonal(g)) throw NotSelfDual("G*G^T != 0");

  SelfDualCode c;
  c.n = g.cols;
  c.k = g.cols / 2;
  c.gen = systematic_form(g).mat;  // RankDeficient here means rank < n/2

  c.weight_distribution.assign(static_cast<size_t>(c.n) + 1, 0);
  c.weight_distribution[0] = 1;
  c.min_weight = c.n;
  c.doubly_even = true;
  for_each_codeword(c.gen, [&](word v) {
    int w = std::popcount(v);
    ++c.weight_distribution[static_cast<size_t>(w)];
    if (w % 4 != 0) c.doubly_even = false;
    if (w < c.min_weight) {
      c.min_weight = w;
      c.min_words.clear();
    }
    if (w == c.min_weight) c.min_words.push_back(v);
  });
  std::sort(c.min_words.begin(), c.min_words.end());
  return c;
}

SelfDualCode SelfDualCode::i2() {
  BitMat g(1, 2);
  g.r[0] = 0b11;
  return from_generator(g);
}

CodewordSet SelfDualCode::codewords_up_to_weight(int w) const {
  CodewordSet out;
  out.w = w;
  for_each_codeword(gen, [&](word v) {
    if (std::popcount(v) <= w) out.words.emplace_back(v, n);
  });
  std::sort(out.words.begin(), out.words.end(),
            [](BitVec a, BitVec b) { return string_less(a, b); });
  return out;
}

int SelfDualCode::smallest_spanning_weight() const {
  // Buckets by weight, then an echelon basis grows through ascending weights.
  std::vector<std::vector<word>> by_weight(static_cast<size_t>(n) + 1);
  for_each_codeword(gen, [&](word v) {
    by_weight[static_cast<size_t>(std::popcount(v))].push_back(v);
  });
  std::vector<word> lead(static_cast<size_t>(n), 0);  // keyed by top set bit
  int rk = 0;
  for (int w = min_weight; w <= n; w += 2) {
    for (word v : by_weight[static_cast<size_t>(w)]) {
      while (v) {
        int h = 63 - std::countl_zero(v);
        if (lead[static_cast<size_t>(h)] == 0) {
          lead[static_cast<size_t>(h)] = v;
          ++rk;
          break;
        }
        v ^= lead[static_cast<size_t>(h)];
      }
    }
    if (rk == k) return w;
  }
  return n;  // unreachable for a valid code
}

std::vector<std::pair<int, int>> SelfDualCode::twin_pairs() const {
  std::vector<std::pair<int, int>> out;
  if (min_weight != 2) return out;
  for (word v : min_words) {
    int a = std::countr_zero(v);
    int b = std::countr_zero(v & (v - 1));
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace sdc
