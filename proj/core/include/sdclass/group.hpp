#pragma once

#include <utility>
#include <vector>

#include "sdclass/bigint.hpp"
#include "sdclass/perm.hpp"

namespace sdc {

struct AutomorphismGroup {
  int n = 0;
  std::vector<Perm> generators;
  BigInt order = 1;
};

// Exact order of <gens> by a deterministic stabilizer chain.
BigInt group_order(int n, const std::vector<Perm>& gens);

AutomorphismGroup make_group(int n, std::vector<Perm> gens);

// Orbits of {0,...,n-1} under <gens>, each orbit sorted, orbits by least element.
std::vector<std::vector<int>> point_orbits(int n, const std::vector<Perm>& gens);

// True iff some group element maps the unordered pair p onto q.
bool pair_in_orbit(const AutomorphismGroup& g, std::pair<int, int> p,
                   std::pair<int, int> q);

}  // namespace sdc
