#include "sdclass/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace sdc {

int PseudoOrbitPartition::cell_index(int coord) const {
  for (size_t i = 0; i < cells.size(); ++i)
    for (int c : cells[i])
      if (c == coord) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> invariants_f1_f2(const SelfDualCode& c) {
  word parity = 0;
  for (word v : c.min_words) parity ^= v;

  std::vector<int> f2(static_cast<size_t>(c.n), 0);
  for (word v : c.min_words) {
    word w = v;
    while (w) {
      ++f2[static_cast<size_t>(std::countr_zero(w))];
      w &= w - 1;
    }
  }

  std::vector<std::pair<int, int>> out(static_cast<size_t>(c.n));
  for (int i = 0; i < c.n; ++i) {
    int f1 = static_cast<int>((parity >> i) & 1);
    assert(f1 == (f2[static_cast<size_t>(i)] & 1));
    out[static_cast<size_t>(i)] = {f1, f2[static_cast<size_t>(i)]};
  }
  return out;
}

PseudoOrbitPartition pseudo_orbits(const SelfDualCode& c) {
  PseudoOrbitPartition p;
  p.values = invariants_f1_f2(c);

  std::map<std::pair<int, int>, std::vector<int>> by_value;
  for (int i = 0; i < c.n; ++i) by_value[p.values[static_cast<size_t>(i)]].push_back(i);

  for (auto& [value, cell] : by_value) p.cells.push_back(std::move(cell));
  std::stable_sort(p.cells.begin(), p.cells.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return p.values[static_cast<size_t>(a[0])] <
                            p.values[static_cast<size_t>(b[0])];
                   });
  return p;
}

bool coordinates_equal(const SelfDualCode& c, int a, int b) {
  return c.gen.column(a) == c.gen.column(b);
}

int eligible_tail_cell(const SelfDualCode& c, const PseudoOrbitPartition& p) {
  for (size_t i = 0; i < p.cells.size(); ++i) {
    const std::vector<int>& cell = p.cells[i];
    if (cell.size() == 2 && coordinates_equal(c, cell[0], cell[1])) continue;
    return static_cast<int>(i);
  }
  assert(false && "fully paired partition outside i2^k");
  return static_cast<int>(p.cells.size()) - 1;
}

}  // namespace sdc
