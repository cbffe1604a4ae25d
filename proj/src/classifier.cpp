#include "vb5/classifier.hpp"

#include <stdexcept>

#include "vb5/steenrod.hpp"

namespace vb5 {

namespace {

inline Int mod_val(Int v, int n) {
  if (n == 0) return v;
  Int r = v % n;
  if (r < 0) r += n;
  return r;
}

std::vector<CohomologyClass> basis_gens(const Space& X, Ring r, int deg) {
  std::vector<CohomologyClass> out;
  const auto& b = X.cohomology_basis(r, deg);
  for (const auto& g : b.free_generators) out.push_back(g);
  for (const auto& t : b.torsion_generators) out.push_back(t.rep);
  return out;
}

// column-per-class matrix of mod-2 basis coordinates in the target degree
IntMatrix coord_matrix(const Space& X, const std::vector<CohomologyClass>& cs,
                       int target_rank) {
  IntMatrix A(target_rank, static_cast<int>(cs.size()));
  for (size_t j = 0; j < cs.size(); ++j) {
    auto coords = X.coordinates_of(cs[j]);
    if (!coords) throw std::logic_error("class has no basis coordinates");
    for (int i = 0; i < target_rank; ++i)
      A.set(i, static_cast<int>(j), mod_val((*coords)[i], 2));
  }
  return A;
}

int rank2(const IntMatrix& A) {
  return static_cast<int>(kernel_image_mod(A, 2).image.size());
}

// image of Sq^2 : (source 3-classes) -> H^5(;Z2), as coordinate columns
IntMatrix sq2_image_matrix(const Space& X, ConditionBMode mode) {
  int h5 = X.cohomology(Ring::Z2, 5).rank;
  std::vector<CohomologyClass> srcs;
  if (mode == ConditionBMode::integral_source) {
    for (const auto& g : basis_gens(X, Ring::Z, 3))
      srcs.push_back(X.coefficient_map(g, Ring::Z2));
  } else {
    srcs = basis_gens(X, Ring::Z2, 3);
  }
  std::vector<CohomologyClass> imgs;
  for (const auto& s : srcs) imgs.push_back(sq2(X, s));
  return coord_matrix(X, imgs, h5);
}

void require_oriented_5(const Space& X) {
  if (X.dim() != 5)
    throw std::invalid_argument("operation needs a 5-dimensional complex");
  try {
    orient(X.complex());
  } catch (const NonOrientableError&) {
    throw OrientabilityRequired("operation needs orientable input");
  }
}

Int group_order(const GradedAbelianGroup& g) {
  Int n = 1;
  for (const Int& d : g.torsion) n *= d;
  return n;
}

}  // namespace

std::string split_reason_name(Pi4Presentation::SplitReason r) {
  switch (r) {
    case Pi4Presentation::SplitReason::spin: return "spin";
    case Pi4Presentation::SplitReason::taylor_image_criterion:
      return "taylor_image_criterion";
    case Pi4Presentation::SplitReason::trivial_kernel: return "trivial_kernel";
    default: return "unknown";
  }
}

std::string verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::parallelizable: return "parallelizable";
    case Verdict::Kind::tangent_iso_pullback_TS5:
      return "tangent_iso_pullback_TS5";
    case Verdict::Kind::stably_parallelizable_unknown_frame:
      return "stably_parallelizable_unknown_frame";
    default: return "not_applicable";
  }
}

bool condition_A_from_group(const GradedAbelianGroup& h4) {
  for (const Int& d : h4.torsion)
    if (d % 4 == 0) return false;
  return true;
}

bool check_condition_A(const Space& X) {
  return condition_A_from_group(X.cohomology(Ring::Z, 4));
}

bool check_condition_B(const Space& X, ConditionBMode mode) {
  if (X.dim() < 5) return true;  // H^5 vanishes above the dimension
  int h5 = X.cohomology(Ring::Z2, 5).rank;
  if (h5 == 0) return true;
  return rank2(sq2_image_matrix(X, mode)) == h5;
}

ApplicabilityReport classification_applicability(const Space& X) {
  ApplicabilityReport r;
  r.condition_A = check_condition_A(X);
  r.condition_B_integral =
      check_condition_B(X, ConditionBMode::integral_source);
  r.condition_B_mod2 = check_condition_B(X, ConditionBMode::mod2_source);
  r.injective_under_integral = r.condition_A && r.condition_B_integral;
  r.injective_under_mod2 = r.condition_A && r.condition_B_mod2;
  return r;
}

bool gamma_image_check(const Space& X, const BundleTriple& t) {
  if (t.a.ring != Ring::Z2 || t.a.degree != 2 || t.b.ring != Ring::Z2 ||
      t.b.degree != 4 || t.c.ring != Ring::Z || t.c.degree != 4)
    throw std::invalid_argument("triple must be (Z2 deg 2, Z2 deg 4, Z deg 4)");
  auto lhs = X.coefficient_map(t.c, Ring::Z4);
  auto rhs = pontryagin_square(X, t.a);
  auto ib = X.coefficient_map(t.b, Ring::Z4);
  for (size_t i = 0; i < rhs.cocycle.size(); ++i)
    rhs.cocycle[i] = mod_val(rhs.cocycle[i] + ib.cocycle[i], 4);
  return X.is_same_class(lhs, rhs);
}

Pi4Presentation pi4_group(const Space& X) {
  require_oriented_5(X);
  Pi4Presentation p;
  p.base = X.cohomology(Ring::Z, 4);
  int h5 = X.cohomology(Ring::Z2, 5).rank;
  auto integral = sq2_image_matrix(X, ConditionBMode::integral_source);
  int kernel_dim = h5 - rank2(integral);
  p.kernel_order = 1 << kernel_dim;
  if (is_spin(X)) {
    p.splits = true;
    p.split_reason = Pi4Presentation::SplitReason::spin;
    return p;
  }
  // same Sq^2 image whether the 3-classes come from integral cohomology or
  // from all of H^3(;Z2)
  auto mod2 = sq2_image_matrix(X, ConditionBMode::mod2_source);
  IntMatrix both(integral.rows, integral.cols + mod2.cols);
  for (const auto& [rc, v] : integral.entries) both.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : mod2.entries)
    both.set(rc.first, integral.cols + rc.second, v);
  int ri = rank2(integral), rm = rank2(mod2), rb = rank2(both);
  if (ri == rm && rm == rb) {
    p.splits = true;
    p.split_reason = Pi4Presentation::SplitReason::taylor_image_criterion;
    return p;
  }
  if (p.kernel_order == 1) {
    p.splits = true;
    p.split_reason = Pi4Presentation::SplitReason::trivial_kernel;
    return p;
  }
  p.splits = false;
  p.split_reason = Pi4Presentation::SplitReason::unknown;
  return p;
}

BundleEnumeration enumerate_quaternionic(const Space& X) {
  if (!is_spin(X)) throw NotSpin("quaternionic enumeration needs spin input");
  BundleEnumeration e;
  e.h4 = X.cohomology(Ring::Z, 4);
  e.finite = (e.h4.rank == 0);
  if (!e.finite) return e;
  Int order = group_order(e.h4);
  e.count = 2 * order;
  if (e.count > 64) return e;
  // coordinates run over the torsion divisors
  size_t t = e.h4.torsion.size();
  std::vector<Int> coords(t, 0);
  bool done = false;
  while (!done) {
    for (int kappa : {0, 1}) e.classes.push_back({coords, kappa});
    done = true;
    for (size_t i = 0; i < t; ++i) {
      if (++coords[i] < e.h4.torsion[i]) {
        done = false;
        break;
      }
      coords[i] = 0;
    }
  }
  return e;
}

ClassificationReport classify_rank5_spinnable(const Space& X) {
  if (!is_spin(X)) throw NotSpin("rank-5 classification needs spin input");
  ClassificationReport r;
  r.h4 = X.cohomology(Ring::Z, 4);
  auto gens = basis_gens(X, Ring::Z, 4);
  int h4_mod2 = X.cohomology(Ring::Z2, 4).rank;

  // mod-2 reduction of H^4(;Z) in basis coordinates, one column per generator
  std::vector<CohomologyClass> red;
  for (const auto& g : gens) red.push_back(X.coefficient_map(g, Ring::Z2));
  IntMatrix R = coord_matrix(X, red, h4_mod2);
  int rk = rank2(R);

  // kernel subgroup: lifts of the mod-2 kernel plus doubled generators
  auto ki = kernel_image_mod(R, 2);
  for (const auto& v : ki.kernel) {
    std::vector<Int> g(v.size());
    for (size_t i = 0; i < v.size(); ++i) g[i] = mod_val(v[i], 2);
    r.ker_rho2.generators.push_back(std::move(g));
  }
  int free_rank = r.h4.rank;
  for (size_t j = 0; j < gens.size(); ++j) {
    bool is_free = static_cast<int>(j) < free_rank;
    Int ord = is_free ? Int(0) : r.h4.torsion[j - free_rank];
    if (!is_free && ord <= 2) continue;  // 2g is zero or redundant
    std::vector<Int> g(gens.size(), 0);
    g[j] = 2;
    r.ker_rho2.generators.push_back(std::move(g));
  }
  r.ker_rho2.finite = (free_rank == 0);
  Int ker_count = 0;
  if (r.ker_rho2.finite) {
    Int order = group_order(r.h4);
    ker_count = order >> rk;  // index of the kernel is 2^rank
    r.ker_rho2.count = ker_count;
    r.w1_finite = r.w2_finite = true;
    r.w1_count = 2 * ker_count;
    r.w2_count = order - ker_count;
  } else {
    r.w1_finite = r.w2_finite = false;
  }
  if (rk > 0) {
    r.notes.push_back(
        "mod-2 reduction is nonzero on H^4(M;Z): the quaternionic family W1 "
        "is restricted to classes with w4 = rho2(p1/2) = 0, a proper "
        "subgroup");
  } else {
    r.notes.push_back("rho2 vanishes on H^4(M;Z): every class admits a "
                      "quaternionic structure");
  }
  return r;
}

bool kappa_structure_dependence(const Space& X, const CohomologyClass& alpha,
                                const CohomologyClass& w4E) {
  if (alpha.ring != Ring::Z2 || w4E.ring != Ring::Z2 || alpha.degree != 1 ||
      w4E.degree != 4)
    throw std::invalid_argument("expected mod-2 classes of degrees 1 and 4");
  return pairing(X, alpha, w4E) == 0;
}

int covering_kappa(int kappa, int deg2) {
  return (kappa % 2) * (deg2 % 2);
}

Verdict parallelizability_verdict(const Space& X, bool half_p1_is_zero) {
  if (!is_spin(X)) throw NotSpin("parallelizability verdict needs spin input");
  Verdict v;
  auto h1 = X.cohomology(Ring::Z, 1);
  // H_1 = Z/2 gives stable parallelizability for free; otherwise the
  // hypothesis p1/2(M) = 0 must be supplied by the caller
  bool h1_z2 = (X.homology(Ring::Z, 1) == GradedAbelianGroup{1, 0, {2}});
  if (!half_p1_is_zero && !h1_z2) {
    v.kind = Verdict::Kind::not_applicable;
    v.rule = "no stable parallelizability hypothesis available";
    return v;
  }
  int k = kervaire_semichar(X);
  if (k == 0) {
    v.kind = Verdict::Kind::parallelizable;
    v.rule = half_p1_is_zero
                 ? "stably parallelizable with vanishing semi-characteristic"
                 : "H_1 = Z/2 with vanishing semi-characteristic";
    return v;
  }
  if (half_p1_is_zero) {
    v.kind = Verdict::Kind::tangent_iso_pullback_TS5;
    v.rule = "stably parallelizable with semi-characteristic 1: the tangent "
             "bundle is pulled back from the 5-sphere";
  } else {
    v.kind = Verdict::Kind::stably_parallelizable_unknown_frame;
    v.rule = "H_1 = Z/2 with semi-characteristic 1: stably parallelizable "
             "but not parallelizable";
  }
  return v;
}

}  // namespace vb5
