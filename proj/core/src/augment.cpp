#include "sdclass/augment.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "sdclass/errors.hpp"
#include "sdclass/gf2.hpp"
#include "sdclass/invariants.hpp"

namespace sdc {

SelfDualCode parent(const SelfDualCode& c) {
  const int n = c.n;
  if (c.gen.column(n - 2) == c.gen.column(n - 1))
    throw EqualLastColumns("parent: last two coordinates are equal");

  word pivot = 0;
  bool have = false;
  std::vector<word> keep;
  for (int i = 0; i < c.k; ++i) {
    word w = c.gen.r[static_cast<size_t>(i)];
    bool differ = ((w >> (n - 2)) ^ (w >> (n - 1))) & 1;
    if (!differ)
      keep.push_back(w);
    else if (!have) {
      pivot = w;
      have = true;
    } else
      keep.push_back(w ^ pivot);
  }
  assert(have);

  BitMat pg(c.k - 1, n - 2);
  for (size_t i = 0; i < keep.size(); ++i)
    pg.r[i] = keep[i] & BitVec::mask(n - 2);
  return SelfDualCode::from_generator(pg);
}

BitMat aut_to_gl(const Perm& p, const BitMat& g1) {
  BitMat gp = p.apply_cols(g1);
  const int k1 = g1.rows;
  BitMat a(k1, k1);
  for (int i = 0; i < k1; ++i)
    a.r[static_cast<size_t>(i)] = gp.r[static_cast<size_t>(i)] & BitVec::mask(k1);
  if (mat_mul(a, g1) != gp)
    throw NotAutomorphism("aut_to_gl: G1P != A_P * G1");
  return a;
}

ExtensionOrbitSet extension_orbits(const SelfDualCode& c1,
                                   const AutomorphismGroup& aut) {
  const int k1 = c1.k;
  ExtensionOrbitSet out;
  out.parent_dim = k1;

  const size_t space = size_t(1) << k1;
  std::vector<std::uint32_t> root(space);
  for (size_t i = 0; i < space; ++i) root[i] = static_cast<std::uint32_t>(i);
  auto find = [&](std::uint32_t a) {
    while (root[a] != a) {
      root[a] = root[root[a]];
      a = root[a];
    }
    return a;
  };

  for (const Perm& p : aut.generators) {
    BitMat a = aut_to_gl(p, c1.gen);
    for (word x = 1; x < space; ++x) {
      if (!(std::popcount(x) & 1)) continue;
      word y = mat_vec(a, BitVec(x, k1)).bits;
      assert(std::popcount(y) & 1);
      std::uint32_t ra = find(static_cast<std::uint32_t>(x));
      std::uint32_t rb = find(static_cast<std::uint32_t>(y));
      if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
    }
  }

  std::vector<word> best(space, 0);
  std::vector<std::uint32_t> seen;
  for (word x = 1; x < space; ++x) {
    if (!(std::popcount(x) & 1)) continue;
    std::uint32_t r = find(static_cast<std::uint32_t>(x));
    if (best[r] == 0) {
      best[r] = x;
      seen.push_back(r);
    } else if (string_less({x, k1}, {best[r], k1})) {
      best[r] = x;
    }
  }
  for (std::uint32_t r : seen) out.reps.emplace_back(best[r], k1);
  std::sort(out.reps.begin(), out.reps.end(),
            [](BitVec a, BitVec b) { return string_less(a, b); });
  return out;
}

SelfDualCode extend(const SelfDualCode& c1, BitVec x) {
  if (!(x.weight() & 1)) throw EvenWeightVector("extend: x must have odd weight");
  assert(x.n == c1.k);
  const int k1 = c1.k;
  const int n = 2 * (k1 + 1);

  BitMat g(k1 + 1, n);
  g.r[0] = x.bits | (word(1) << (n - 2));
  for (int i = 0; i < k1; ++i) {
    word arow = c1.gen.r[static_cast<size_t>(i)] >> k1;
    word w = (word(1) << i) | (arow << k1);
    if (x.get(i)) w |= word(3) << (n - 2);
    g.r[static_cast<size_t>(i) + 1] = w;
  }
  return SelfDualCode::from_generator(g);
}

FastVerdict parent_test_fast(const SelfDualCode& c) {
  PseudoOrbitPartition p = pseudo_orbits(c);
  const int e = eligible_tail_cell(c, p);
  const std::vector<int>& tail = p.cells[static_cast<size_t>(e)];
  const int a1 = c.n - 2, a2 = c.n - 1;

  auto contains = [](const std::vector<int>& cell, int x) {
    return std::binary_search(cell.begin(), cell.end(), x);
  };

  if (tail.size() == 1) {
    assert(p.cells.size() >= 2);
    const std::vector<int>& second = p.cells[e == 0 ? 1 : 0];
    bool ok = (tail[0] == a1 && contains(second, a2)) ||
              (tail[0] == a2 && contains(second, a1));
    return ok ? FastVerdict::Unknown : FastVerdict::Reject;
  }
  return contains(tail, a1) && contains(tail, a2) ? FastVerdict::Unknown
                                                  : FastVerdict::Reject;
}

std::pair<bool, AutomorphismGroup> parent_test_full(const SelfDualCode& c) {
  CanonicalOutcome co = canonical_outcome(c);
  Perm inv = co.phi.inverse();
  bool pass = pair_in_orbit(co.aut, {inv(c.n - 1), inv(c.n - 2)},
                            {c.n - 2, c.n - 1});
  return {pass, co.aut};
}

namespace {

void dfs(const SelfDualCode& code, const AutomorphismGroup& aut, int k,
         AugmentCounters& cnt, std::vector<SelfDualCode>& out) {
  if (code.k == k) {
    out.push_back(code);
    return;
  }
  ExtensionOrbitSet orbs = extension_orbits(code, aut);
  for (const BitVec& x : orbs.reps) {
    SelfDualCode child = extend(code, x);
    ++cnt.considered;
    if (parent_test_fast(child) == FastVerdict::Reject) continue;
    ++cnt.canonical;
    auto [pass, child_aut] = parent_test_full(child);
    if (!pass) continue;
    ++cnt.accepted;
    dfs(child, child_aut, k, cnt, out);
  }
}

}  // namespace

std::vector<SelfDualCode> augment(const std::vector<SelfDualCode>& u_r, int k,
                                  AugmentCounters* counters) {
  AugmentCounters local;
  AugmentCounters& cnt = counters ? *counters : local;
  std::vector<SelfDualCode> out;
  for (const SelfDualCode& root : u_r) {
    assert(root.k <= k);
    dfs(root, canonical_outcome(root).aut, k, cnt, out);
  }
  return out;
}

std::vector<SelfDualCode> partition_run(const std::vector<SelfDualCode>& u_r,
                                        int parts, int k) {
  if (parts < 1) parts = 1;
  std::vector<std::vector<SelfDualCode>> subset(static_cast<size_t>(parts));
  for (size_t i = 0; i < u_r.size(); ++i)
    subset[i % static_cast<size_t>(parts)].push_back(u_r[i]);

  std::vector<std::vector<SelfDualCode>> result(static_cast<size_t>(parts));
  std::vector<std::thread> pool;
  for (int t = 0; t < parts; ++t)
    pool.emplace_back([&, t] {
      result[static_cast<size_t>(t)] = augment(subset[static_cast<size_t>(t)], k);
    });
  for (std::thread& th : pool) th.join();

  std::vector<SelfDualCode> merged;
  for (std::vector<SelfDualCode>& r : result)
    for (SelfDualCode& c : r) merged.push_back(std::move(c));
  return merged;
}

}  // namespace sdc
