#include "sdclass/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <climits>
#include <cstdint>
#include <utility>
#include <vector>

#include "sdclass/gf2.hpp"
#include "sdclass/invariants.hpp"

namespace sdc {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 12) + (h >> 4);
  return h * 0x100000001b3ull;
}

// Leaf keys hold bit-reversed images: coordinate at canonical position p
// lands in bit n-1-p, so the coordinate-string order on images is the plain
// integer order on key words.
bool key_less(const std::vector<word>& a, const std::vector<word>& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Canonical labeling of the 0/1 matrix `rows` under column permutations
// (rows re-sortable at will): refine-individualize depth-first search. The
// canonical leaf maximizes (path trace, sorted row key) lexicographically;
// the trace is a per-depth hash of the refinement event stream, which is a
// function of isomorphism-invariant data only, so equal inputs up to column
// permutation produce equal traces along corresponding paths.
//
// Columns and rows form the two sides of an incidence structure. Both carry
// ordered partitions refined to a near-equitable fixpoint by single-cell
// splitters: a column cell splits rows by popcount against its mask, a row
// class splits column cells by per-column incidence counts. Column cells
// stay position-ordered (their order is the canonical coordinate order, and
// splits keep fragments inside the parent's range, so the seeded tail cell
// feeds the last canonical positions). Row class ids are creation-ordered:
// the first fragment of a split keeps the id, the rest append, which makes
// ids stable event names across isomorphic runs.
//
// Search state is one shared partition plus an undo log per node: rolling
// back replays split segments in reverse, so per-node cost is proportional
// to the refinement work actually done.
struct Labeler {
  int n = 0;
  std::vector<word> rows;

  std::vector<int> corder, cstart, clen, ccell;
  std::vector<int> rorder, rstart, rlen, rcell;

  std::vector<word> cq;
  std::vector<int> rq;
  size_t cqh = 0, rqh = 0;
  std::vector<int> colcnt, cnts, bucket, where;

  std::vector<std::uint64_t> path_trace;
  std::vector<int> fixed;

  std::vector<Perm> auts;
  bool have_first = false;
  std::vector<word> first_key, best_key;
  Perm first_perm, best_perm;
  std::vector<std::uint64_t> first_trace, best_trace;
  std::vector<int> first_fixed, best_fixed;
  // Pending backjump: after an automorphism is found, siblings at every node
  // deeper than the divergence level with the reference path are redundant.
  int jump_to = INT_MAX;

  std::vector<int> uf;
  size_t uf_gens = 0;

  struct Undo {
    size_t rcells = 0;
    std::vector<int> corder_s, cstart_s, clen_s, ccell_s;
    struct Seg {
      int cell, start, len, off;
    };
    std::vector<Seg> segs;
    std::vector<int> buf;
  };

  int uf_find(int a) {
    while (uf[static_cast<size_t>(a)] != a) {
      uf[static_cast<size_t>(a)] =
          uf[static_cast<size_t>(uf[static_cast<size_t>(a)])];
      a = uf[static_cast<size_t>(a)];
    }
    return a;
  }

  // Orbits of the discovered automorphisms fixing `fixed` pointwise.
  void uf_rebuild() {
    uf.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) uf[static_cast<size_t>(i)] = i;
    for (const Perm& g : auts) {
      bool fixes = true;
      for (int p : fixed)
        if (g(p) != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int i = 0; i < n; ++i) {
        int a = uf_find(i), b = uf_find(g(i));
        if (a != b) uf[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    uf_gens = auts.size();
  }

  void rebuild_ccell() {
    for (size_t ci = 0; ci < cstart.size(); ++ci)
      for (int t = 0; t < clen[ci]; ++t)
        ccell[static_cast<size_t>(corder[static_cast<size_t>(cstart[ci] + t)])] =
            static_cast<int>(ci);
  }

  void split_rows_by(word smask, Undo& u, std::uint64_t& h) {
    const size_t limit = rstart.size();
    for (size_t i = 0; i < limit; ++i) {
      const int len = rlen[i];
      if (len <= 1) continue;
      const int start = rstart[i];
      cnts.resize(static_cast<size_t>(len));
      int mn = 65, mx = -1;
      for (int t = 0; t < len; ++t) {
        int c = std::popcount(rows[static_cast<size_t>(rorder[static_cast<size_t>(start + t)])] & smask);
        cnts[static_cast<size_t>(t)] = c;
        mn = std::min(mn, c);
        mx = std::max(mx, c);
      }
      if (mn == mx) continue;

      u.segs.push_back({static_cast<int>(i), start, len,
                        static_cast<int>(u.buf.size())});
      u.buf.insert(u.buf.end(), rorder.begin() + start,
                   rorder.begin() + start + len);

      const int range = mx - mn + 1;
      bucket.assign(static_cast<size_t>(range), 0);
      for (int t = 0; t < len; ++t) ++bucket[static_cast<size_t>(cnts[static_cast<size_t>(t)] - mn)];
      // Fragments in descending count order; stable within a fragment.
      where.assign(static_cast<size_t>(range), 0);
      int acc = 0;
      for (int v = range - 1; v >= 0; --v) {
        where[static_cast<size_t>(v)] = acc;
        acc += bucket[static_cast<size_t>(v)];
      }
      std::vector<int>& scratch = colcnt;
      scratch.resize(static_cast<size_t>(len));
      for (int t = 0; t < len; ++t)
        scratch[static_cast<size_t>(where[static_cast<size_t>(cnts[static_cast<size_t>(t)] - mn)]++)] =
            rorder[static_cast<size_t>(start + t)];
      std::copy(scratch.begin(), scratch.begin() + len, rorder.begin() + start);

      h = mix(h, 0x52);
      h = mix(h, i);
      bool first_frag = true;
      int pos = start;
      for (int v = range - 1; v >= 0; --v) {
        const int sz = bucket[static_cast<size_t>(v)];
        if (sz == 0) continue;
        h = mix(h, static_cast<std::uint64_t>(v + mn));
        h = mix(h, static_cast<std::uint64_t>(sz));
        if (first_frag) {
          rlen[i] = sz;
          first_frag = false;
          rq.push_back(static_cast<int>(i));
        } else {
          const int id = static_cast<int>(rstart.size());
          rstart.push_back(pos);
          rlen.push_back(sz);
          for (int t = 0; t < sz; ++t)
            rcell[static_cast<size_t>(rorder[static_cast<size_t>(pos + t)])] = id;
          rq.push_back(id);
        }
        pos += sz;
      }
    }
  }

  void split_cols_by(int rid, std::uint64_t& h) {
    colcnt.assign(static_cast<size_t>(n), 0);
    const int s = rstart[static_cast<size_t>(rid)];
    const int L = rlen[static_cast<size_t>(rid)];
    for (int t = 0; t < L; ++t) {
      word w = rows[static_cast<size_t>(rorder[static_cast<size_t>(s + t)])];
      while (w) {
        ++colcnt[static_cast<size_t>(std::countr_zero(w))];
        w &= w - 1;
      }
    }
    bool any = false;
    for (size_t ci = 0; ci < cstart.size(); ++ci) {
      const int len = clen[ci];
      if (len <= 1) continue;
      const int start = cstart[ci];
      int mn = 1 << 20, mx = -1;
      for (int t = 0; t < len; ++t) {
        int c = colcnt[static_cast<size_t>(corder[static_cast<size_t>(start + t)])];
        mn = std::min(mn, c);
        mx = std::max(mx, c);
      }
      if (mn == mx) continue;
      any = true;

      std::stable_sort(corder.begin() + start, corder.begin() + start + len,
                       [&](int a, int b) {
                         return colcnt[static_cast<size_t>(a)] >
                                colcnt[static_cast<size_t>(b)];
                       });
      h = mix(h, 0x77);
      h = mix(h, ci);
      int t = 0;
      int frag = 0;
      while (t < len) {
        int t2 = t;
        const int v = colcnt[static_cast<size_t>(corder[static_cast<size_t>(start + t)])];
        word mask = 0;
        while (t2 < len &&
               colcnt[static_cast<size_t>(corder[static_cast<size_t>(start + t2)])] == v) {
          mask |= word(1) << corder[static_cast<size_t>(start + t2)];
          ++t2;
        }
        h = mix(h, static_cast<std::uint64_t>(v));
        h = mix(h, static_cast<std::uint64_t>(t2 - t));
        if (frag == 0) {
          clen[ci] = t2 - t;
        } else {
          cstart.insert(cstart.begin() + static_cast<long>(ci) + frag, start + t);
          clen.insert(clen.begin() + static_cast<long>(ci) + frag, t2 - t);
        }
        cq.push_back(mask);
        ++frag;
        t = t2;
      }
      ci += static_cast<size_t>(frag - 1);
    }
    if (any) rebuild_ccell();
  }

  std::uint64_t refine(std::uint64_t h, Undo& u) {
    while (cqh < cq.size() || rqh < rq.size()) {
      if (cqh < cq.size())
        split_rows_by(cq[cqh++], u, h);
      else
        split_cols_by(rq[rqh++], h);
    }
    h = mix(h, 0x99);
    h = mix(h, rstart.size());
    h = mix(h, cstart.size());
    for (size_t ci = 0; ci < cstart.size(); ++ci)
      h = mix(h, static_cast<std::uint64_t>(clen[ci]));
    return h;
  }

  Undo individualize(int c, int depth) {
    Undo u;
    u.rcells = rstart.size();
    u.corder_s = corder;
    u.cstart_s = cstart;
    u.clen_s = clen;
    u.ccell_s = ccell;

    const size_t ci = static_cast<size_t>(ccell[static_cast<size_t>(c)]);
    const int start = cstart[ci];
    const int len = clen[ci];
    for (int t = 0; t < len; ++t)
      if (corder[static_cast<size_t>(start + t)] == c) {
        std::swap(corder[static_cast<size_t>(start)], corder[static_cast<size_t>(start + t)]);
        break;
      }
    clen[ci] = 1;
    cstart.insert(cstart.begin() + static_cast<long>(ci) + 1, start + 1);
    clen.insert(clen.begin() + static_cast<long>(ci) + 1, len - 1);
    rebuild_ccell();

    cq.clear();
    rq.clear();
    cqh = rqh = 0;
    cq.push_back(word(1) << c);

    std::uint64_t h = mix(path_trace[static_cast<size_t>(depth)], ci + 1);
    h = refine(h, u);
    if (path_trace.size() < static_cast<size_t>(depth) + 2)
      path_trace.resize(static_cast<size_t>(depth) + 2);
    path_trace[static_cast<size_t>(depth) + 1] = h;
    return u;
  }

  void rollback(Undo& u) {
    for (auto it = u.segs.rbegin(); it != u.segs.rend(); ++it) {
      std::copy(u.buf.begin() + it->off, u.buf.begin() + it->off + it->len,
                rorder.begin() + it->start);
      rlen[static_cast<size_t>(it->cell)] = it->len;
      for (int t = 0; t < it->len; ++t)
        rcell[static_cast<size_t>(u.buf[static_cast<size_t>(it->off + t)])] = it->cell;
    }
    rstart.resize(u.rcells);
    rlen.resize(u.rcells);
    corder = std::move(u.corder_s);
    cstart = std::move(u.cstart_s);
    clen = std::move(u.clen_s);
    ccell = std::move(u.ccell_s);
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    const size_t lim = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < lim && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  bool leaf(int depth, bool on_first, int cmp) {
    Perm sigma;
    sigma.img.assign(static_cast<size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos)
      sigma.img[static_cast<size_t>(corder[static_cast<size_t>(pos)])] = pos;
    std::vector<word> key(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      word w = rows[r], out = 0;
      while (w) {
        const int i = std::countr_zero(w);
        w &= w - 1;
        out |= word(1) << (n - 1 - sigma.img[static_cast<size_t>(i)]);
      }
      key[r] = out;
    }
    std::sort(key.begin(), key.end(), std::greater<word>());

    if (!have_first) {
      have_first = true;
      first_key = key;
      first_perm = sigma;
      first_fixed = fixed;
      best_key = std::move(key);
      best_perm = std::move(sigma);
      best_fixed = fixed;
      first_trace.assign(path_trace.begin(),
                         path_trace.begin() + depth + 1);
      best_trace = first_trace;
      return false;
    }
    if (cmp == 1) {
      best_key = std::move(key);
      best_perm = std::move(sigma);
      best_fixed = fixed;
      best_trace.assign(path_trace.begin(), path_trace.begin() + depth + 1);
      return true;
    }
    if (on_first && key == first_key) {
      auts.push_back(sigma.then(first_perm.inverse()));
      const int b = divergence(fixed, first_fixed);
      if (b < static_cast<int>(fixed.size())) jump_to = b;
      return false;
    }
    if (cmp == 0) {
      if (key == best_key) {
        auts.push_back(sigma.then(best_perm.inverse()));
        const int b = divergence(fixed, best_fixed);
        if (b < static_cast<int>(fixed.size())) jump_to = b;
      } else if (key_less(best_key, key)) {
        best_key = std::move(key);
        best_perm = std::move(sigma);
        best_fixed = fixed;
      }
    }
    return false;
  }

  // cmp: 0 = path trace equals the best path so far, 1 = beats it (the next
  // leaf becomes best unconditionally), -1 = below best, explored only while
  // shadowing the first path for automorphism discovery. Returns true when
  // best_trace changed inside, so the caller re-anchors to cmp 0.
  bool search(int depth, bool on_first, int cmp) {
    int tc = -1, smallest = n + 1;
    for (size_t ci = 0; ci < cstart.size(); ++ci)
      if (clen[ci] > 1 && clen[ci] < smallest) {
        smallest = clen[ci];
        tc = static_cast<int>(ci);
      }
    if (tc < 0) return leaf(depth, on_first, cmp);

    std::vector<int> branches(
        corder.begin() + cstart[static_cast<size_t>(tc)],
        corder.begin() + cstart[static_cast<size_t>(tc)] + clen[static_cast<size_t>(tc)]);
    std::vector<int> done;
    bool reset_any = false;
    bool uf_ok = false;  // uf is tied to the current fixed stack
    for (int c : branches) {
      if (!done.empty()) {
        if (!uf_ok || auts.size() != uf_gens) {
          uf_rebuild();
          uf_ok = true;
        }
        bool pruned = false;
        for (int d : done)
          if (uf_find(c) == uf_find(d)) {
            pruned = true;
            break;
          }
        if (pruned) continue;
      }

      Undo u = individualize(c, depth);
      const std::uint64_t h = path_trace[static_cast<size_t>(depth) + 1];
      const bool c_first =
          on_first &&
          (!have_first || (static_cast<size_t>(depth) + 1 < first_trace.size() &&
                           h == first_trace[static_cast<size_t>(depth) + 1]));
      int c_cmp = 0;
      bool prune = false;
      if (!have_first) {
        c_cmp = 0;
      } else if (cmp == 1) {
        c_cmp = 1;
      } else if (cmp == -1) {
        c_cmp = -1;
        prune = !c_first;
      } else if (static_cast<size_t>(depth) + 1 >= best_trace.size()) {
        c_cmp = 1;
      } else {
        const std::uint64_t b = best_trace[static_cast<size_t>(depth) + 1];
        if (h == b)
          c_cmp = 0;
        else if (h > b)
          c_cmp = 1;
        else {
          c_cmp = -1;
          prune = !c_first;
        }
      }
      if (!prune) {
        fixed.push_back(c);
        const bool reset = search(depth + 1, c_first, c_cmp);
        fixed.pop_back();
        if (reset) {
          cmp = 0;
          reset_any = true;
        }
      }
      rollback(u);
      if (jump_to < depth) return reset_any;
      if (jump_to == depth) jump_to = INT_MAX;
      done.push_back(c);
    }
    return reset_any;
  }
};

}  // namespace

CanonicalOutcome canonical_outcome(const SelfDualCode& c) {
  if (c.k == 1) {
    CanonicalOutcome out;
    out.canon = c;
    out.phi = Perm::identity(2);
    out.aut = make_group(2, {Perm::transposition(2, 0, 1)});
    return out;
  }

  Labeler lab;
  lab.n = c.n;
  int w = c.smallest_spanning_weight();
  for (const BitVec& v : c.codewords_up_to_weight(w).words)
    lab.rows.push_back(v.bits);
  const size_t m = lab.rows.size();

  PseudoOrbitPartition p = pseudo_orbits(c);
  int tail = eligible_tail_cell(c, p);
  lab.corder.reserve(static_cast<size_t>(c.n));
  for (size_t i = p.cells.size(); i-- > 0;) {
    if (static_cast<int>(i) == tail) continue;
    lab.cstart.push_back(static_cast<int>(lab.corder.size()));
    lab.clen.push_back(static_cast<int>(p.cells[i].size()));
    for (int j : p.cells[i]) lab.corder.push_back(j);
  }
  lab.cstart.push_back(static_cast<int>(lab.corder.size()));
  lab.clen.push_back(static_cast<int>(p.cells[static_cast<size_t>(tail)].size()));
  for (int j : p.cells[static_cast<size_t>(tail)]) lab.corder.push_back(j);
  lab.ccell.assign(static_cast<size_t>(c.n), 0);
  lab.rebuild_ccell();

  lab.rorder.resize(m);
  for (size_t r = 0; r < m; ++r) lab.rorder[r] = static_cast<int>(r);
  lab.rstart.assign(1, 0);
  lab.rlen.assign(1, static_cast<int>(m));
  lab.rcell.assign(m, 0);

  for (size_t ci = 0; ci < lab.cstart.size(); ++ci) {
    word mask = 0;
    for (int t = 0; t < lab.clen[ci]; ++t)
      mask |= word(1) << lab.corder[static_cast<size_t>(lab.cstart[ci] + t)];
    lab.cq.push_back(mask);
  }
  Labeler::Undo root_undo;
  std::uint64_t h = mix(mix(0xcbf29ce484222325ull, static_cast<std::uint64_t>(c.n)), m);
  lab.path_trace.assign(1, lab.refine(h, root_undo));
  lab.search(0, true, 0);
  assert(lab.have_first);

  Perm sigma = lab.best_perm;
  Perm inv = sigma.inverse();
  if (coordinates_equal(c, inv(c.n - 2), inv(c.n - 1)))
    sigma = sigma.then(Perm::transposition(c.n, c.n - 3, c.n - 2));

  Systematic sys = systematic_form(sigma.apply_cols(c.gen));
  CanonicalOutcome out;
  out.canon = SelfDualCode::from_generator(sys.mat);
  out.phi = sigma.then(sys.perm);
  out.aut = make_group(c.n, std::move(lab.auts));
  return out;
}

}  // namespace sdc
