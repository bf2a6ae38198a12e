#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sdclass/canonical.hpp"
#include "sdclass/code.hpp"
#include "sdclass/group.hpp"

namespace sdc {

struct ExtensionOrbitSet {
  int parent_dim = 0;        // k - 1
  std::vector<BitVec> reps;  // odd-weight orbit minima, ascending string order
};

enum class FastVerdict { Reject, Unknown };

struct AugmentCounters {
  std::uint64_t considered = 0;  // children built
  std::uint64_t canonical = 0;   // full canonical computations
  std::uint64_t accepted = 0;    // children passing the parent test

  AugmentCounters& operator+=(const AugmentCounters& o) {
    considered += o.considered;
    canonical += o.canonical;
    accepted += o.accepted;
    return *this;
  }
};

// Punctures the subcode fixed on the last two coordinates; [n-2, k-1]
// self-dual with minimum weight >= d - 2.
SelfDualCode parent(const SelfDualCode& c);

// A_P with G1P = A_P * G1 for P in Aut(C1) and systematic G1 = (I | A);
// the image of the homomorphism into GL(k-1, 2).
BitMat aut_to_gl(const Perm& p, const BitMat& g1);

// Orbits of the odd-weight vectors of F2^{k-1} under x -> A_P x^T.
ExtensionOrbitSet extension_orbits(const SelfDualCode& c1,
                                   const AutomorphismGroup& aut);

// Child generator: top row (x | 0^{k-1} | 1 0), below (I | A | x^T x^T);
// stored after systematic normalization, which keeps the appended pair last.
SelfDualCode extend(const SelfDualCode& c1, BitVec x);

// Necessary-condition filter from the pseudo-orbit partition alone; never
// rejects a child the full test would pass.
FastVerdict parent_test_fast(const SelfDualCode& c);

// Passes iff some automorphism maps the appended pair onto the pair landing
// on the last two canonical positions. Returns Aut(C) for reuse.
std::pair<bool, AutomorphismGroup> parent_test_full(const SelfDualCode& c);

// Depth-first canonical augmentation from the complete duplicate-free family
// u_r up to dimension k; exactly one representative per class at k.
std::vector<SelfDualCode> augment(const std::vector<SelfDualCode>& u_r, int k,
                                  AugmentCounters* counters = nullptr);

// Splits u_r round-robin into `parts` independent searches (one thread each)
// and concatenates the outputs in part order.
std::vector<SelfDualCode> partition_run(const std::vector<SelfDualCode>& u_r,
                                        int parts, int k);

}  // namespace sdc
