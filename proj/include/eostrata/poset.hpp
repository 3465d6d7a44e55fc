#pragma once

// The specialization order on Ekedahl-Oort strata: Young types ordered by
// diagram containment, with a stratum in the closure of another exactly
// when its Young type contains the other's.  The Hasse diagram's edges run
// from generic (smaller mu, bigger stratum) to special, and the order
// mirrors Bruhat order on the Weyl side with the direction reversed.

#include <utility>
#include <vector>

#include "eostrata/strata.hpp"

namespace eo {

// Containment: a_j <= b_j for all j, missing parts read as 0.
// Throws std::invalid_argument when the genera differ.
bool young_leq(const YoungType& a, const YoungType& b);

struct HasseDiagram {
  int g = 0;
  std::vector<YoungType> nodes;                          // canonical order
  std::vector<std::pair<YoungType, YoungType>> edges;    // covers, generic -> special
};

// Covers of the containment order over all 2^g Young types.  Every cover
// adds a single box: one part grows by 1, or a new part of size 1 appears.
HasseDiagram hasse(int g);

// True iff for every pair: young_leq(a, b) <=> bruhat_leq(from_young(b),
// from_young(a)).  The reversal is intentional: the ordinary type (empty
// mu) has the longest Weyl element, the superspecial one the identity.
// Exhaustive over 4^g pairs; g <= 6 keeps this instant.
bool orders_match(int g);

}  // namespace eo
