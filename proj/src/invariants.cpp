#include "vb5/invariants.hpp"

#include <map>
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

void check_cycle(const Space& X, const std::vector<Int>& cycle, int n) {
  const CellComplex& C = X.cells();
  int d = C.dim;
  std::map<Simplex, Int> bnd;
  Simplex ridge(d);
  for (int f = 0; f < C.count(d); ++f) {
    if (cycle[f] == 0) continue;
    const Simplex& s = C.cells[d][f];
    for (int i = 0; i <= d; ++i) {
      for (int j = 0, k = 0; j <= d; ++j)
        if (j != i) ridge[k++] = s[j];
      Int sgn = (i % 2 == 0) ? 1 : -1;
      bnd[ridge] += sgn * cycle[f];
    }
  }
  for (const auto& [r, v] : bnd)
    if (mod_val(v, n) != 0)
      throw std::logic_error("fundamental chain has nonzero boundary");
}

}  // namespace

FundamentalClass fundamental_class(const Space& X, Ring ring) {
  if (ring != Ring::Z && ring != Ring::Z2)
    throw std::invalid_argument("fundamental class over Z or Z2 only");
  FundamentalClass out;
  out.ring = ring;
  int nf = X.cells().count(X.dim());
  if (ring == Ring::Z2) {
    out.cycle.assign(nf, 1);
    check_cycle(X, out.cycle, 2);
    return out;
  }
  OrientedComplex oc = orient(X.complex());
  out.cycle.reserve(nf);
  for (int s : oc.facet_signs) out.cycle.push_back(s);
  check_cycle(X, out.cycle, 0);
  return out;
}

Int evaluate_top(const Space& X, const CohomologyClass& x) {
  if (x.degree != X.dim())
    throw std::invalid_argument("evaluation needs a top-degree class");
  int n = ring_modulus(x.ring);
  FundamentalClass mu =
      fundamental_class(X, x.ring == Ring::Z2 ? Ring::Z2 : Ring::Z);
  Int acc = 0;
  for (size_t i = 0; i < x.cocycle.size(); ++i)
    acc += mu.cycle[i] * x.cocycle[i];
  return mod_val(acc, n);
}

Int pairing(const Space& X, const CohomologyClass& x,
            const CohomologyClass& y) {
  if (x.ring != y.ring) throw std::invalid_argument("pairing: ring mismatch");
  if (x.degree + y.degree != X.dim())
    throw std::invalid_argument("pairing: degrees must be complementary");
  return evaluate_top(X, cup(X, x, y));
}

namespace {

// Solve for u in H^k(Z2) with <u cup x_j, [M]> = rhs_j over the given basis
// x_j of the complementary degree.
CohomologyClass solve_wu(const Space& X, int k,
                         const std::vector<CohomologyClass>& dual_basis,
                         const std::vector<Int>& rhs) {
  const CohomologyBasis& B = X.cohomology_basis(Ring::Z2, k);
  const auto& gens = B.free_generators;
  if (gens.empty()) {
    for (const Int& r : rhs)
      if (mod_val(r, 2) != 0)
        throw std::runtime_error("duality pairing is singular");
    return X.zero_class(Ring::Z2, k);
  }
  IntMatrix A(static_cast<int>(dual_basis.size()),
              static_cast<int>(gens.size()));
  for (size_t j = 0; j < dual_basis.size(); ++j)
    for (size_t i = 0; i < gens.size(); ++i)
      A.set(static_cast<int>(j), static_cast<int>(i),
            pairing(X, gens[i], dual_basis[j]));
  auto sol = solve_mod(A, rhs, 2);
  if (!sol) throw std::runtime_error("duality pairing is singular");
  CohomologyClass out = X.zero_class(Ring::Z2, k);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (mod_val((*sol)[i], 2) == 0) continue;
    for (size_t c = 0; c < out.cocycle.size(); ++c)
      out.cocycle[c] = mod_val(out.cocycle[c] + gens[i].cocycle[c], 2);
  }
  return out;
}

}  // namespace

WuData wu_classes(const Space& X) {
  int d = X.dim();
  if (d != 4 && d != 5)
    throw std::invalid_argument("Wu classes implemented for dimensions 4, 5");
  WuData out;

  // v1 against H^{d-1}, with Sq^1 = Bockstein
  {
    const auto& dual = X.cohomology_basis(Ring::Z2, d - 1).free_generators;
    std::vector<Int> rhs;
    rhs.reserve(dual.size());
    for (const auto& x : dual)
      rhs.push_back(evaluate_top(X, X.bockstein_sq1(x)));
    out.v1 = solve_wu(X, 1, dual, rhs);
  }
  // v2 against H^{d-2}
  {
    const auto& dual = X.cohomology_basis(Ring::Z2, d - 2).free_generators;
    std::vector<Int> rhs;
    rhs.reserve(dual.size());
    for (const auto& x : dual) rhs.push_back(evaluate_top(X, sq2(X, x)));
    out.v2 = solve_wu(X, 2, dual, rhs);
  }

  // w = Sq(v), v = 1 + v1 + v2 (v_k = 0 for k > dim/2):
  // w1 = v1, w2 = v1^2 + v2, w3 = Sq^1 v2, w4 = v2^2, w5 = 0.
  out.w.push_back(out.v1);
  {
    CohomologyClass w2 = cup(X, out.v1, out.v1);
    for (size_t c = 0; c < w2.cocycle.size(); ++c)
      w2.cocycle[c] = mod_val(w2.cocycle[c] + out.v2.cocycle[c], 2);
    out.w.push_back(w2);
  }
  out.w.push_back(X.bockstein_sq1(out.v2));
  out.w.push_back(cup(X, out.v2, out.v2));
  if (d == 5) out.w.push_back(X.zero_class(Ring::Z2, 5));
  return out;
}

std::vector<CohomologyClass> stiefel_whitney(const Space& X) {
  return wu_classes(X).w;
}

bool is_spin(const Space& X) {
  auto w = stiefel_whitney(X);
  return X.is_zero_class(w[0]) && X.is_zero_class(w[1]);
}

int kervaire_semichar(const Space& X) {
  if (X.dim() != 5)
    throw std::invalid_argument("semi-characteristic needs dimension 5");
  try {
    orient(X.complex());
  } catch (const NonOrientableError&) {
    throw OrientabilityRequired("semi-characteristic needs orientable input");
  }
  int mod2 = 0, rational = 0;
  for (int k = 0; k <= 4; k += 2) {
    mod2 += X.cohomology(Ring::Z2, k).rank;
    rational += X.cohomology(Ring::Q, k).rank;
  }
  if (mod2 % 2 != rational % 2)
    throw std::logic_error(
        "mod-2 and rational semi-characteristics disagree; "
        "input is likely not a closed orientable manifold");
  return mod2 % 2;
}

}  // namespace vb5
