#include "vb5/steenrod.hpp"

#include <stdexcept>

namespace vb5 {

namespace {

inline Int mod_val(Int v, int n) {
  if (n == 0) return v;
  Int r = v % n;
  if (r < 0) r += n;
  return r;
}

void check_sizes(const Space& X, int p, const std::vector<Int>& u, int q,
                 const std::vector<Int>& v) {
  if (p < 0 || q < 0 || static_cast<int>(u.size()) != X.cells().count(p) ||
      static_cast<int>(v.size()) != X.cells().count(q))
    throw std::invalid_argument("cochain size mismatch");
}

}  // namespace

std::vector<Int> cup_cochain(const Space& X, int p, const std::vector<Int>& u,
                             int q, const std::vector<Int>& v, int n) {
  check_sizes(X, p, u, q, v);
  const CellComplex& C = X.cells();
  int deg = p + q;
  std::vector<Int> out(C.count(deg), 0);
  if (deg > C.dim) return out;
  Simplex front(p + 1), back(q + 1);
  for (int j = 0; j < C.count(deg); ++j) {
    const Simplex& s = C.cells[deg][j];
    for (int i = 0; i <= p; ++i) front[i] = s[i];
    for (int i = 0; i <= q; ++i) back[i] = s[p + i];
    int fi = C.id_of(p, front);
    int bi = C.id_of(q, back);
    out[j] = mod_val(u[fi] * v[bi], n);
  }
  return out;
}

std::vector<Int> cup1_cochain(const Space& X, int p, const std::vector<Int>& u,
                              int q, const std::vector<Int>& v, int n) {
  check_sizes(X, p, u, q, v);
  if (p + q < 1) throw std::invalid_argument("cup1 needs p+q >= 1");
  const CellComplex& C = X.cells();
  int deg = p + q - 1;
  std::vector<Int> out(C.count(deg), 0);
  if (deg > C.dim || deg < 0) return out;
  Simplex left(p + 1), mid(q + 1);
  for (int j = 0; j < C.count(deg); ++j) {
    const Simplex& s = C.cells[deg][j];
    Int acc = 0;
    // u on (v_0..v_a, v_{a+q}..v_deg), v on (v_a..v_{a+q})
    for (int a = 0; a + q <= deg; ++a) {
      for (int i = 0; i <= a; ++i) left[i] = s[i];
      for (int i = a + q; i <= deg; ++i) left[a + 1 + i - (a + q)] = s[i];
      for (int i = 0; i <= q; ++i) mid[i] = s[a + i];
      int li = C.id_of(p, left);
      int mi = C.id_of(q, mid);
      acc += u[li] * v[mi];
    }
    out[j] = mod_val(acc, n);
  }
  return out;
}

CohomologyClass cup(const Space& X, const CohomologyClass& u,
                    const CohomologyClass& v) {
  if (u.ring != v.ring) throw std::invalid_argument("ring mismatch");
  CohomologyClass out;
  out.degree = u.degree + v.degree;
  out.ring = u.ring;
  out.cocycle = cup_cochain(X, u.degree, u.cocycle, v.degree, v.cocycle,
                            ring_modulus(u.ring));
  return out;
}

CohomologyClass cup1(const Space& X, const CohomologyClass& u,
                     const CohomologyClass& v) {
  if (u.ring != v.ring) throw std::invalid_argument("ring mismatch");
  CohomologyClass out;
  out.degree = u.degree + v.degree - 1;
  out.ring = u.ring;
  out.cocycle = cup1_cochain(X, u.degree, u.cocycle, v.degree, v.cocycle,
                             ring_modulus(u.ring));
  return out;
}

CohomologyClass sq2(const Space& X, const CohomologyClass& c) {
  if (c.ring != Ring::Z2) throw std::invalid_argument("Sq2 needs a Z2 class");
  if (c.degree != 2 && c.degree != 3)
    throw std::invalid_argument("Sq2 supported on degrees 2 and 3 only");
  CohomologyClass out;
  out.degree = c.degree + 2;
  out.ring = Ring::Z2;
  if (c.degree == 2)
    out.cocycle = cup_cochain(X, 2, c.cocycle, 2, c.cocycle, 2);
  else
    out.cocycle = cup1_cochain(X, 3, c.cocycle, 3, c.cocycle, 2);
  return out;
}

CohomologyClass pontryagin_square(const Space& X, const CohomologyClass& a) {
  if (a.ring != Ring::Z2 || a.degree != 2)
    throw std::invalid_argument("Pontryagin square needs a mod-2 2-cocycle");
  // integer lift with entries in {0,1}; its coboundary is even entry-wise
  std::vector<Int> lift(a.cocycle.size());
  for (size_t i = 0; i < a.cocycle.size(); ++i)
    lift[i] = mod_val(a.cocycle[i], 2);
  auto dlift = X.coboundary(2, lift, 0);
  auto sq = cup_cochain(X, 2, lift, 2, lift, 0);
  auto corr = cup1_cochain(X, 2, lift, 3, dlift, 0);
  CohomologyClass out;
  out.degree = 4;
  out.ring = Ring::Z4;
  out.cocycle.resize(sq.size());
  for (size_t i = 0; i < sq.size(); ++i)
    out.cocycle[i] = mod_val(sq[i] + corr[i], 4);
  return out;
}

CohomologyClass reduce_mod2(const CohomologyClass& c) {
  if (c.ring != Ring::Z4)
    throw std::invalid_argument("mod-2 reduction expects a Z4 class");
  CohomologyClass out;
  out.degree = c.degree;
  out.ring = Ring::Z2;
  out.cocycle.resize(c.cocycle.size());
  for (size_t i = 0; i < c.cocycle.size(); ++i)
    out.cocycle[i] = mod_val(c.cocycle[i], 2);
  return out;
}

}  // namespace vb5
