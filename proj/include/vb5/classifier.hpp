#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vb5/invariants.hpp"

namespace vb5 {

class NotSpin : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characteristic-class triple (w2, w4, p1) of a rank-5 bundle.
struct BundleTriple {
  CohomologyClass a;  // mod 2, degree 2
  CohomologyClass b;  // mod 2, degree 4
  CohomologyClass c;  // integral, degree 4
};

/// The extension 0 -> Z2 -> pi^4(M) -> H^4(M;Z) -> 0 with its splitting
/// status. kernel_order divides 2: the Z2 gets killed when Sq^2 applied to
/// integral 3-classes already covers H^5(M;Z2).
struct Pi4Presentation {
  GradedAbelianGroup base;  // H^4(M;Z)
  int kernel_order = 2;
  bool splits = false;
  enum class SplitReason { spin, taylor_image_criterion, trivial_kernel, unknown };
  SplitReason split_reason = SplitReason::unknown;
};

std::string split_reason_name(Pi4Presentation::SplitReason r);

/// Isomorphism class of a quaternionic line bundle (equivalently a bundle
/// with quaternionic structure) over a spin 5-manifold: half the first
/// Pontryagin class, in basis coordinates of H^4(M;Z), plus the framing bit.
struct SpinBundleClass {
  std::vector<Int> half_p1;
  int kappa = 0;
};

/// Subgroup of H^4(M;Z) described by generators in basis coordinates.
struct SubgroupDescriptor {
  std::vector<std::vector<Int>> generators;
  bool finite = true;
  Int count = 1;  // meaningful only when finite
};

struct BundleEnumeration {
  GradedAbelianGroup h4;
  bool finite = true;
  Int count = 0;  // 2 * |H^4| when finite
  std::vector<SpinBundleClass> classes;  // listed when finite and small
};

/// Rank-5 spinnable bundles split into W1 (those admitting a quaternionic
/// structure, w4 = 0, counted with the framing bit) and W2 (the rest, one
/// class per coordinate with nonzero mod-2 reduction).
struct ClassificationReport {
  GradedAbelianGroup h4;
  SubgroupDescriptor ker_rho2;  // W2 corresponds to the complement
  bool w1_finite = true;
  Int w1_count = 0;
  bool w2_finite = true;
  Int w2_count = 0;
  std::vector<std::string> notes;
};

struct ApplicabilityReport {
  bool condition_A = false;
  bool condition_B_integral = false;
  bool condition_B_mod2 = false;
  bool injective_under_integral = false;
  bool injective_under_mod2 = false;
};

enum class ConditionBMode { integral_source, mod2_source };

struct Verdict {
  enum class Kind {
    parallelizable,
    tangent_iso_pullback_TS5,
    stably_parallelizable_unknown_frame,
    not_applicable
  };
  Kind kind = Kind::not_applicable;
  std::string rule;  // which statement produced the verdict
};

std::string verdict_name(Verdict::Kind k);

/// H^4(K;Z) has no element of order 4.
bool check_condition_A(const Space& X);
bool condition_A_from_group(const GradedAbelianGroup& h4);

/// Sq^2 surjects onto H^5(K;Z2), with the source either the mod-2
/// reductions of integral 3-classes or all of H^3(K;Z2).
bool check_condition_B(const Space& X, ConditionBMode mode);

ApplicabilityReport classification_applicability(const Space& X);

/// rho4(c) = P(a) + i*(b) in H^4(K;Z4), the image characterization of the
/// characteristic-triple map.
bool gamma_image_check(const Space& X, const BundleTriple& t);

Pi4Presentation pi4_group(const Space& X);

BundleEnumeration enumerate_quaternionic(const Space& X);

ClassificationReport classify_rank5_spinnable(const Space& X);

/// kappa is independent of the chosen Sp(1)-structure twisted by alpha
/// exactly when <alpha cup w4E, [M]> vanishes.
bool kappa_structure_dependence(const Space& X, const CohomologyClass& alpha,
                                const CohomologyClass& w4E);

/// kappa of a pulled-back bundle under a covering of the given mod-2 degree.
int covering_kappa(int kappa, int deg2);

Verdict parallelizability_verdict(const Space& X, bool half_p1_is_zero);

}  // namespace vb5
