#pragma once

#include <stdexcept>
#include <vector>

#include "vb5/cohomology.hpp"

namespace vb5 {

/// Top-degree cycle evaluating cohomology in the top degree. Over Z the
/// entries are the orientation signs of the facets; over Z2 they are all 1.
struct FundamentalClass {
  Ring ring = Ring::Z;
  std::vector<Int> cycle;  // parallel to cells[dim]
};

/// Wu classes v1, v2 together with the Stiefel-Whitney classes w = Sq(v).
struct WuData {
  CohomologyClass v1;                // mod 2, degree 1
  CohomologyClass v2;                // mod 2, degree 2
  std::vector<CohomologyClass> w;    // w[0] = w_1, ..., w[dim-1] = w_dim
};

class OrientabilityRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fundamental cycle over Z (orientation signs, NonOrientableError if there
/// is none) or Z2 (all ones). The boundary of the result is checked to
/// vanish.
FundamentalClass fundamental_class(const Space& X, Ring ring);

/// Evaluation of a top-degree class against the fundamental class, in the
/// coefficient ring of the class. Rings other than Z2 use the orientation.
Int evaluate_top(const Space& X, const CohomologyClass& x);

/// Poincare pairing <x cup y, [M]> for classes of complementary degree.
Int pairing(const Space& X, const CohomologyClass& x,
            const CohomologyClass& y);

/// Wu classes from the duality pairing (dim 4 or 5 only) and the
/// Stiefel-Whitney classes via w = Sq(v).
WuData wu_classes(const Space& X);

std::vector<CohomologyClass> stiefel_whitney(const Space& X);

/// w1 = 0 and w2 = 0 in cohomology.
bool is_spin(const Space& X);

/// Kervaire semi-characteristic of a closed oriented 5-manifold:
/// sum of dim H^{2i}(M;Z2) mod 2. The rational Betti version is computed
/// alongside and must agree.
int kervaire_semichar(const Space& X);

}  // namespace vb5
