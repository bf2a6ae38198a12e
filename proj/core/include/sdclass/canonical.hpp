#pragma once

#include "sdclass/code.hpp"
#include "sdclass/group.hpp"
#include "sdclass/perm.hpp"

namespace sdc {

struct CanonicalOutcome {
  SelfDualCode canon;     // rho(C): bit-identical across a whole class
  Perm phi;               // phi(C) = canon
  AutomorphismGroup aut;  // Aut(C) in the input's own coordinates, exact order
};

// Canonically labels the incidence matrix of the codewords of weight <= w*,
// where w* is the smallest even weight whose codewords span the code:
// ordered-partition refinement seeded with the pseudo-orbit cells, depth-first
// individualization with an invariant path trace, orbit pruning and
// backjumping by discovered automorphisms; the leaf maximizing (trace,
// sorted-row key) wins. A post-pass keeps the last two canonical coordinates
// unequal, and systematic normalization never moves them.
CanonicalOutcome canonical_outcome(const SelfDualCode& c);

}  // namespace sdc
