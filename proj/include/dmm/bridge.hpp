#pragma once

#include "dmm/delta_matroid.hpp"
#include "dmm/multimatroid.hpp"

namespace dmm {

// Bouchet's basis-exchange characterization of 2-matroids: for bases B1, B2
// and a skew pair p inside B1 ^ B2 there is a skew pair q (possibly p) with
// B1 ^ (p | q) again a basis.
bool satisfies_two_matroid_exchange(const SkewPartition& partition,
                                    const std::vector<Mask>& bases);

// 2-matroid with classes {e, e'} and one basis F u (E-F)' per feasible set.
Multimatroid q2_of(const DeltaMatroid& d);

// Delta-matroid on a transversal T of a 2-matroid: feasible sets {B & T}.
DeltaMatroid section(const Multimatroid& q, Mask transversal);

// Tight 3-matroid with classes {e, e', e''}; a transversal B is a basis
// exactly when the primed part of B is feasible in d bar-star (double-primed
// part of B). Requires a vf-safe input.
Multimatroid q3_of(const DeltaMatroid& d);

// Inverse of q3_of for tight 3-matroids carrying the {x, x', x''} labeling:
// F is feasible when some basis avoiding the double-primed copies has primed
// part F.
DeltaMatroid delta_of_q3(const Multimatroid& q);

std::string primed(const std::string& label);
std::string double_primed(const std::string& label);

}  // namespace dmm
