#include "sdclass/group.hpp"

#include <algorithm>
#include <cassert>

namespace sdc {

namespace {

// Stabilizer chain: S[i] generates the pointwise stabilizer of base[0..i-1],
// every element of S[i] fixes base[0..i-1].
struct Chain {
  int n;
  std::vector<int> base;
  std::vector<std::vector<Perm>> s;
  std::vector<std::vector<int>> orbit;  // BFS order, orbit[i][0] = base[i]
  std::vector<std::vector<int>> idx;    // point -> position in orbit, -1 outside
  std::vector<std::vector<Perm>> rep;   // aligned with orbit; rep maps base[i] to the point

  explicit Chain(int deg) : n(deg) {}

  int first_moved(const Perm& p) const {
    for (int i = 0; i < n; ++i)
      if (p(i) != i) return i;
    return -1;
  }

  void push_level(int point) {
    base.push_back(point);
    s.emplace_back();
    orbit.emplace_back();
    idx.emplace_back();
    rep.emplace_back();
  }

  void rebuild_orbit(size_t lev) {
    orbit[lev].clear();
    rep[lev].clear();
    idx[lev].assign(static_cast<size_t>(n), -1);
    orbit[lev].push_back(base[lev]);
    rep[lev].push_back(Perm::identity(n));
    idx[lev][static_cast<size_t>(base[lev])] = 0;
    for (size_t head = 0; head < orbit[lev].size(); ++head) {
      int x = orbit[lev][head];
      for (const Perm& g : s[lev]) {
        int y = g(x);
        if (idx[lev][static_cast<size_t>(y)] < 0) {
          idx[lev][static_cast<size_t>(y)] = static_cast<int>(orbit[lev].size());
          orbit[lev].push_back(y);
          rep[lev].push_back(rep[lev][head].then(g));
        }
      }
    }
  }

  // Multiplies by transversal inverses from level `from` down; returns the
  // residue and the level where stripping stopped.
  std::pair<Perm, size_t> strip(Perm p, size_t from) const {
    for (size_t i = from; i < base.size(); ++i) {
      int x = p(base[i]);
      int at = idx[i][static_cast<size_t>(x)];
      if (at < 0) return {std::move(p), i};
      p = p.then(rep[i][static_cast<size_t>(at)].inverse());
    }
    return {std::move(p), base.size()};
  }

  // Assumes levels > lev are complete; leaves levels >= lev complete.
  void verify_level(size_t lev) {
    rebuild_orbit(lev);
    for (size_t head = 0; head < orbit[lev].size(); ++head) {
      int x = orbit[lev][head];
      for (size_t gi = 0; gi < s[lev].size(); ++gi) {
        const Perm g = s[lev][gi];
        int y = g(x);
        Perm sg = rep[lev][head].then(g).then(
            rep[lev][static_cast<size_t>(idx[lev][static_cast<size_t>(y)])].inverse());
        auto [res, at] = strip(std::move(sg), lev + 1);
        if (res.is_identity()) continue;
        if (at == base.size()) push_level(first_moved(res));
        for (size_t t = lev + 1; t <= at; ++t) s[t].push_back(res);
        for (size_t t = at; t > lev; --t) verify_level(t);
      }
    }
  }
};

}  // namespace

BigInt group_order(int n, const std::vector<Perm>& gens) {
  Chain ch(n);
  std::vector<Perm> start;
  for (const Perm& g : gens) {
    assert(g.n() == n);
    if (!g.is_identity()) start.push_back(g);
  }
  if (start.empty()) return 1;
  for (const Perm& g : start) {
    bool moves_base = false;
    for (int b : ch.base)
      if (g(b) != b) {
        moves_base = true;
        break;
      }
    if (!moves_base) ch.push_level(ch.first_moved(g));
  }
  ch.s.assign(ch.base.size(), {});
  ch.s[0] = start;
  ch.orbit.assign(ch.base.size(), {});
  ch.idx.assign(ch.base.size(), {});
  ch.rep.assign(ch.base.size(), {});
  for (size_t i = ch.base.size(); i-- > 0;) ch.verify_level(i);

  BigInt order = 1;
  for (size_t i = 0; i < ch.base.size(); ++i) order *= ch.orbit[i].size();
  return order;
}

AutomorphismGroup make_group(int n, std::vector<Perm> gens) {
  AutomorphismGroup g;
  g.n = n;
  g.order = group_order(n, gens);
  g.generators = std::move(gens);
  return g;
}

std::vector<std::vector<int>> point_orbits(int n, const std::vector<Perm>& gens) {
  std::vector<int> root(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) root[static_cast<size_t>(i)] = i;
  auto find = [&](int a) {
    while (root[static_cast<size_t>(a)] != a) {
      root[static_cast<size_t>(a)] = root[static_cast<size_t>(root[static_cast<size_t>(a)])];
      a = root[static_cast<size_t>(a)];
    }
    return a;
  };
  for (const Perm& g : gens)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<int>> orbits(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) orbits[static_cast<size_t>(find(i))].push_back(i);
  std::erase_if(orbits, [](const std::vector<int>& o) { return o.empty(); });
  return orbits;
}

bool pair_in_orbit(const AutomorphismGroup& g, std::pair<int, int> p,
                   std::pair<int, int> q) {
  auto norm = [](std::pair<int, int> e) {
    return e.first <= e.second ? e : std::pair<int, int>{e.second, e.first};
  };
  p = norm(p);
  q = norm(q);
  if (p == q) return true;
  int n = g.n;
  auto id = [n](std::pair<int, int> e) { return e.first * n + e.second; };
  std::vector<bool> seen(static_cast<size_t>(n) * static_cast<size_t>(n), false);
  std::vector<std::pair<int, int>> queue{p};
  seen[static_cast<size_t>(id(p))] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [a, b] = queue[head];
    for (const Perm& gen : g.generators) {
      auto next = norm({gen(a), gen(b)});
      if (next == q) return true;
      if (!seen[static_cast<size_t>(id(next))]) {
        seen[static_cast<size_t>(id(next))] = true;
        queue.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace sdc
