#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sdclass/augment.hpp"
#include "sdclass/canonical.hpp"
#include "sdclass/errors.hpp"

namespace {

std::string canon_key(const sdc::SelfDualCode& c) {
  sdc::SelfDualCode canon = sdc::canonical_outcome(c).canon;
  std::string s;
  for (int i = 0; i < canon.k; ++i) s += canon.gen.row(i).to_string();
  return s;
}

std::multiset<std::string> canon_keys(const std::vector<sdc::SelfDualCode>& v) {
  std::multiset<std::string> out;
  for (const sdc::SelfDualCode& c : v) out.insert(canon_key(c));
  return out;
}

}  // namespace

TEST_SUITE("augment") {

TEST_CASE("extend builds the two-column extension") {
  sdc::SelfDualCode child = sdc::extend(sdc::SelfDualCode::i2(), sdc::BitVec(1, 1));
  CHECK(child.n == 4);
  CHECK(child.gen == from_rows({"1010", "0101"}));
  CHECK_THROWS_AS(sdc::extend(code_from_rows({"1010", "0101"}), sdc::BitVec(0b11, 2)),
                  sdc::EvenWeightVector);
}

TEST_CASE("the appended pair stays on the last two coordinates") {
  for (int k = 1; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::AutomorphismGroup aut = sdc::canonical_outcome(c).aut;
      for (const sdc::BitVec& x : sdc::extension_orbits(c, aut).reps) {
        sdc::SelfDualCode child = sdc::extend(c, x);
        // The appended coordinates are distinguished: the top construction row
        // separates them, so their columns differ.
        CHECK(child.gen.column(child.n - 2) != child.gen.column(child.n - 1));
        // Dropping them recovers the parent class.
        CHECK(canon_key(sdc::parent(child)) == canon_key(c));
      }
    }
}

TEST_CASE("parent of the i2 extension is exactly i2") {
  sdc::SelfDualCode child = sdc::extend(sdc::SelfDualCode::i2(), sdc::BitVec(1, 1));
  CHECK(sdc::parent(child) == sdc::SelfDualCode::i2());
}

TEST_CASE("stored generators never end in equal columns when k >= 2") {
  // (I|A) self-dual forces A^T A = I, so A-columns are pairwise distinct;
  // parent() is therefore total on stored codes beyond i2.
  for (int k = 2; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      CHECK(c.gen.column(c.n - 2) != c.gen.column(c.n - 1));
      sdc::SelfDualCode p = sdc::parent(c);
      CHECK(p.n == c.n - 2);
      CHECK(p.k == c.k - 1);
      CHECK(p.min_weight >= c.min_weight - 2);
    }
}

TEST_CASE("aut_to_gl is a matrix representation") {
  sdc::SelfDualCode c = code_from_rows({"1010", "0101"});
  sdc::AutomorphismGroup aut = sdc::canonical_outcome(c).aut;
  CHECK(sdc::aut_to_gl(sdc::Perm::identity(4), c.gen) == sdc::BitMat::identity(2));
  for (const sdc::Perm& g : aut.generators) {
    sdc::BitMat a = sdc::aut_to_gl(g, c.gen);
    CHECK(sdc::mat_mul(a, c.gen) == g.apply_cols(c.gen));
    // G * Q_g * Q_h = A_g * A_h * G, so the map is a homomorphism.
    for (const sdc::Perm& h : aut.generators)
      CHECK(sdc::aut_to_gl(g.then(h), c.gen) ==
            sdc::mat_mul(a, sdc::aut_to_gl(h, c.gen)));
  }
  // Swapping the two i2 blocks swaps the information coordinates.
  sdc::Perm swap_blocks(std::vector<int>{1, 0, 3, 2});
  CHECK(sdc::aut_to_gl(swap_blocks, c.gen) ==
        from_rows({"01", "10"}));
  CHECK_THROWS_AS(sdc::aut_to_gl(sdc::Perm::transposition(4, 0, 1), c.gen),
                  sdc::NotAutomorphism);
}

TEST_CASE("extension orbit reps are odd minima covering all odd vectors") {
  for (int k = 2; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::AutomorphismGroup aut = sdc::canonical_outcome(c).aut;
      sdc::ExtensionOrbitSet orbs = sdc::extension_orbits(c, aut);
      CHECK(orbs.parent_dim == c.k);
      for (size_t i = 0; i < orbs.reps.size(); ++i) {
        CHECK(orbs.reps[i].odd_weight());
        if (i > 0) CHECK(sdc::string_less(orbs.reps[i - 1], orbs.reps[i]));
      }

      // Closure check: applying every generator image to every rep reaches
      // only reps of the same orbit set, and the orbits tile the odd vectors.
      std::set<sdc::word> reachable;
      std::vector<sdc::word> frontier;
      for (const sdc::BitVec& r : orbs.reps) {
        reachable.insert(r.bits);
        frontier.push_back(r.bits);
      }
      std::vector<sdc::BitMat> images;
      for (const sdc::Perm& g : aut.generators)
        images.push_back(sdc::aut_to_gl(g, c.gen));
      while (!frontier.empty()) {
        sdc::word v = frontier.back();
        frontier.pop_back();
        for (const sdc::BitMat& a : images) {
          sdc::word y = sdc::mat_vec(a, sdc::BitVec(v, c.k)).bits;
          if (reachable.insert(y).second) frontier.push_back(y);
        }
      }
      CHECK(reachable.size() == (size_t(1) << (c.k - 1)));

      // Each rep is the string-least member of its own orbit, and no orbit
      // holds two reps.
      std::set<sdc::word> rep_words;
      for (const sdc::BitVec& r : orbs.reps) rep_words.insert(r.bits);
      for (const sdc::BitVec& r : orbs.reps) {
        std::set<sdc::word> orbit{r.bits};
        std::vector<sdc::word> todo{r.bits};
        while (!todo.empty()) {
          sdc::word v = todo.back();
          todo.pop_back();
          for (const sdc::BitMat& a : images) {
            sdc::word y = sdc::mat_vec(a, sdc::BitVec(v, c.k)).bits;
            if (orbit.insert(y).second) todo.push_back(y);
          }
        }
        int reps_inside = 0;
        for (sdc::word v : orbit) {
          if (rep_words.count(v)) ++reps_inside;
          if (v != r.bits)
            CHECK(sdc::string_less(r, sdc::BitVec(v, c.k)));
        }
        CHECK(reps_inside == 1);
      }
    }
}

TEST_CASE("class counts through n = 16") {
  const std::vector<size_t> expected{1, 1, 1, 2, 2, 3, 4, 7};
  for (int k = 1; k <= 8; ++k) {
    CHECK(family(k).size() == expected[static_cast<size_t>(k - 1)]);
    for (const sdc::SelfDualCode& c : family(k)) CHECK(c.k == k);
    std::multiset<std::string> keys = canon_keys(family(k));
    CHECK(keys.size() == std::set<std::string>(keys.begin(), keys.end()).size());
  }
}

TEST_CASE("augment counters are consistent") {
  sdc::AugmentCounters cnt;
  std::vector<sdc::SelfDualCode> out = sdc::augment({sdc::SelfDualCode::i2()}, 6, &cnt);
  CHECK(out.size() == 3);
  CHECK(cnt.considered >= cnt.canonical);
  CHECK(cnt.canonical >= cnt.accepted);
  // Accepted nodes form the class tree: one node per class at every level > 1.
  CHECK(cnt.accepted == 1 + 1 + 2 + 2 + 3);
}

TEST_CASE("fast filter never rejects a child the full test accepts") {
  for (int k = 1; k <= 7; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::AutomorphismGroup aut = sdc::canonical_outcome(c).aut;
      for (const sdc::BitVec& x : sdc::extension_orbits(c, aut).reps) {
        sdc::SelfDualCode child = sdc::extend(c, x);
        if (sdc::parent_test_fast(child) == sdc::FastVerdict::Reject)
          CHECK_FALSE(sdc::parent_test_full(child).first);
      }
    }
}

TEST_CASE("partition_run equals the serial run") {
  std::multiset<std::string> serial = canon_keys(sdc::augment(family(6), 9));
  for (int parts : {1, 2, 3, 5}) {
    std::vector<sdc::SelfDualCode> par = sdc::partition_run(family(6), parts, 9);
    CHECK(canon_keys(par) == serial);
  }
}

}  // TEST_SUITE
