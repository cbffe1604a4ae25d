#pragma once

#include "vb5/cohomology.hpp"

namespace vb5 {

/// Alexander-Whitney cup product on cochains: front p-face times back q-face.
/// Values mod n (n = 0 means Z).
std::vector<Int> cup_cochain(const Space& X, int p, const std::vector<Int>& u,
                             int q, const std::vector<Int>& v, int n);

/// Steenrod cup-1 product (overlapping interval decomposition).
std::vector<Int> cup1_cochain(const Space& X, int p, const std::vector<Int>& u,
                              int q, const std::vector<Int>& v, int n);

CohomologyClass cup(const Space& X, const CohomologyClass& u,
                    const CohomologyClass& v);

CohomologyClass cup1(const Space& X, const CohomologyClass& u,
                     const CohomologyClass& v);

/// Sq2 on a mod-2 class of degree 2 or 3.
CohomologyClass sq2(const Space& X, const CohomologyClass& c);

/// Pontryagin square of a mod-2 2-cocycle, landing in H^4(X;Z4).
CohomologyClass pontryagin_square(const Space& X, const CohomologyClass& a);

/// Reduction mod 2 of a Z4 class.
CohomologyClass reduce_mod2(const CohomologyClass& c);

}  // namespace vb5
