#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sdclass/canonical.hpp"
#include "sdclass/errors.hpp"
#include "sdclass/gf2.hpp"
#include "sdclass/invariants.hpp"
#include "sdclass/verify.hpp"

namespace {

sdc::Perm random_perm(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return sdc::Perm(std::move(img));
}

// The code sigma(c) as a SelfDualCode; systematic renormalization may shuffle
// coordinates further, which class-level checks do not mind.
sdc::SelfDualCode permuted(const sdc::SelfDualCode& c, const sdc::Perm& sigma) {
  return sdc::SelfDualCode::from_generator(sigma.apply_cols(c.gen));
}

bool same_code(const sdc::BitMat& a, const sdc::BitMat& b) {
  sdc::BitMat ra = a, rb = b;
  sdc::rref(ra);
  sdc::rref(rb);
  return ra == rb;
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("phi maps the input onto the canonical form") {
  for (int k = 1; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::CanonicalOutcome co = sdc::canonical_outcome(c);
      CHECK(same_code(co.phi.apply_cols(c.gen), co.canon.gen));
      CHECK(co.canon.n == c.n);
      CHECK(co.canon.min_weight == c.min_weight);
      CHECK(co.canon.weight_distribution == c.weight_distribution);
    }
}

TEST_CASE("aut elements preserve the code and the order is exact") {
  for (int k = 1; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::CanonicalOutcome co = sdc::canonical_outcome(c);
      for (const sdc::Perm& g : co.aut.generators) {
        CHECK(g.n() == c.n);
        CHECK(same_code(g.apply_cols(c.gen), c.gen));
      }
      CHECK(co.aut.order >= 1);
      CHECK(sdc::factorial(c.n) % co.aut.order == 0);
    }
}

TEST_CASE("canonical form is constant on each equivalence class") {
  std::mt19937 rng(12345);
  for (int k = 1; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::CanonicalOutcome ref = sdc::canonical_outcome(c);
      for (int t = 0; t < 100; ++t) {
        sdc::SelfDualCode moved = permuted(c, random_perm(rng, c.n));
        sdc::CanonicalOutcome co = sdc::canonical_outcome(moved);
        CHECK(co.canon.gen == ref.canon.gen);
        CHECK(same_code(co.phi.apply_cols(moved.gen), ref.canon.gen));
        CHECK(co.aut.order == ref.aut.order);
      }
    }
}

TEST_CASE("distinct classes get distinct canonical forms") {
  for (int k = 1; k <= 7; ++k) {
    std::vector<sdc::BitMat> forms;
    for (const sdc::SelfDualCode& c : family(k))
      forms.push_back(sdc::canonical_outcome(c).canon.gen);
    for (size_t i = 0; i < forms.size(); ++i)
      for (size_t j = i + 1; j < forms.size(); ++j) CHECK(forms[i] != forms[j]);
  }
}

TEST_CASE("canonical last two coordinates are unequal for k >= 2") {
  for (int k = 2; k <= 6; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::SelfDualCode canon = sdc::canonical_outcome(c).canon;
      CHECK(canon.gen.column(canon.n - 2) != canon.gen.column(canon.n - 1));
    }
}

TEST_CASE("the canonical representative is idempotent") {
  for (int k = 1; k <= 5; ++k)
    for (const sdc::SelfDualCode& c : family(k)) {
      sdc::SelfDualCode canon = sdc::canonical_outcome(c).canon;
      CHECK(sdc::canonical_outcome(canon).canon.gen == canon.gen);
    }
}

}  // TEST_SUITE
