#include "vb5/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace vb5 {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Z2: return "Z2";
    case Ring::Z4: return "Z4";
    case Ring::Q: return "Q";
  }
  return "?";
}

Ring ring_from_name(const std::string& s) {
  if (s == "Z") return Ring::Z;
  if (s == "Z2") return Ring::Z2;
  if (s == "Z4") return Ring::Z4;
  if (s == "Q") return Ring::Q;
  throw std::invalid_argument("unknown ring '" + s + "'");
}

int ring_modulus(Ring r) {
  switch (r) {
    case Ring::Z2: return 2;
    case Ring::Z4: return 4;
    default: return 0;
  }
}

namespace {

inline Int mod_val(Int v, int n) {
  if (n == 0) return v;
  Int r = v % n;
  if (r < 0) r += n;
  return r;
}

IntMatrix columns_to_matrix(const std::vector<std::vector<Int>>& cols,
                            int rows) {
  IntMatrix M(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i)
      if (cols[j][i] != 0) M.set(i, static_cast<int>(j), cols[j][i]);
  return M;
}

// columns of the inverse of a unimodular matrix
IntMatrix invert_unimodular(const IntMatrix& U) {
  IntMatrix inv(U.rows, U.cols);
  for (int j = 0; j < U.cols; ++j) {
    std::vector<Int> e(U.rows, 0);
    e[j] = 1;
    auto x = solve_mod(U, e, 0);
    if (!x) throw std::logic_error("matrix not invertible");
    for (int i = 0; i < U.rows; ++i)
      if ((*x)[i] != 0) inv.set(i, j, (*x)[i]);
  }
  return inv;
}

}  // namespace

Space::Space(SimplicialComplex K)
    : K_(std::move(K)),
      cells_(CellComplex::from_complex(K_)),
      red_(reduce_complex(cells_)) {}

std::vector<Int> Space::coboundary(int degree, const std::vector<Int>& u,
                                   int n) const {
  if (degree < 0 || degree > dim()) throw std::invalid_argument("bad degree");
  if (static_cast<int>(u.size()) != cells_.count(degree))
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> out(cells_.count(degree + 1), 0);
  if (degree + 1 > dim()) return out;
  Simplex face;
  for (int j = 0; j < cells_.count(degree + 1); ++j) {
    const Simplex& s = cells_.cells[degree + 1][j];
    Int acc = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      face.clear();
      for (size_t t = 0; t < s.size(); ++t)
        if (t != i) face.push_back(s[t]);
      int r = cells_.id_of(degree, face);
      acc += (i % 2 == 0) ? u[r] : -u[r];
    }
    out[j] = mod_val(acc, n);
  }
  return out;
}

CohomologyClass Space::zero_class(Ring ring, int degree) const {
  CohomologyClass c;
  c.degree = degree;
  c.ring = ring;
  c.cocycle.assign(cells_.count(degree), 0);
  return c;
}

bool Space::is_cocycle(const CohomologyClass& c) const {
  int n = ring_modulus(c.ring);
  auto d = coboundary(c.degree, c.cocycle, n);
  for (const auto& v : d)
    if (v != 0) return false;
  return true;
}

GradedAbelianGroup Space::homology(Ring ring, int degree) const {
  if (degree < 0 || degree > dim())
    throw std::invalid_argument("degree out of range");
  auto key = std::make_pair(static_cast<int>(ring), degree);
  auto it = homology_cache_.find(key);
  if (it != homology_cache_.end()) return it->second;

  GradedAbelianGroup G;
  G.degree = degree;
  const IntMatrix& bk = red_.boundary[degree];  // C_k -> C_{k-1}
  IntMatrix bk1 = (degree + 1 <= dim())
                      ? red_.boundary[degree + 1]
                      : IntMatrix(red_.count(degree), 0);
  switch (ring) {
    case Ring::Z:
    case Ring::Q: {
      int r_in = rank_q(bk1);
      int r_out = rank_q(bk);
      G.rank = red_.count(degree) - r_in - r_out;
      if (ring == Ring::Z)
        for (const auto& d : snf_diagonal(bk1))
          if (d > 1) G.torsion.push_back(d);
      break;
    }
    case Ring::Z2: {
      int r_in = static_cast<int>(kernel_image_mod(bk1, 2).image.size());
      int r_out = static_cast<int>(kernel_image_mod(bk, 2).image.size());
      G.rank = red_.count(degree) - r_in - r_out;
      break;
    }
    case Ring::Z4: {
      // tensor and Tor pieces of the integral groups in degrees k, k-1
      auto hk = homology(Ring::Z, degree);
      GradedAbelianGroup hk1;
      if (degree >= 1) hk1 = homology(Ring::Z, degree - 1);
      G.rank = hk.rank;
      auto add = [&](const Int& t) {
        Int g = gcd(t, Int(4));
        if (g == 4)
          G.rank += 1;
        else if (g == 2)
          G.torsion.push_back(2);
      };
      for (const auto& t : hk.torsion) add(t);
      for (const auto& t : hk1.torsion) add(t);
      break;
    }
  }
  homology_cache_[key] = G;
  return G;
}

GradedAbelianGroup Space::cohomology(Ring ring, int degree) const {
  const DegreeBasis& db = degree_basis(ring, degree);
  GradedAbelianGroup G;
  G.degree = degree;
  if (ring == Ring::Z4) {
    for (const auto& t : db.basis.torsion_generators) {
      if (t.order == 4)
        G.rank += 1;
      else
        G.torsion.push_back(t.order);
    }
  } else {
    G.rank = static_cast<int>(db.basis.free_generators.size());
    for (const auto& t : db.basis.torsion_generators)
      G.torsion.push_back(t.order);
  }
  std::sort(G.torsion.begin(), G.torsion.end());
  return G;
}

const Space::DegreeBasis& Space::degree_basis(Ring ring, int degree) const {
  if (degree < 0 || degree > dim())
    throw std::invalid_argument("degree out of range");
  auto key = std::make_pair(static_cast<int>(ring), degree);
  auto it = basis_cache_.find(key);
  if (it == basis_cache_.end())
    it = basis_cache_.emplace(key, build_basis(ring, degree)).first;
  return it->second;
}

const CohomologyBasis& Space::cohomology_basis(Ring ring, int degree) const {
  return degree_basis(ring, degree).basis;
}

Space::DegreeBasis Space::build_basis(Ring ring, int degree) const {
  const int k = degree;
  const int nk = red_.count(k);
  DegreeBasis out;
  out.basis.degree = k;
  out.basis.ring = ring;

  // coboundary matrices on the reduced complex
  IntMatrix delta_k = (k + 1 <= dim()) ? red_.boundary[k + 1].transpose()
                                       : IntMatrix(0, nk);
  IntMatrix delta_km1 = (k >= 1) ? red_.boundary[k].transpose()
                                 : IntMatrix(nk, 0);

  auto make_class = [&](const std::vector<Int>& red_vec,
                        int n) -> CohomologyClass {
    CohomologyClass c;
    c.degree = k;
    c.ring = ring;
    c.cocycle = red_.pull_cochain(k, red_vec, n);
    return c;
  };

  if (ring == Ring::Z || ring == Ring::Q) {
    auto ker = kernel_image_mod(delta_k, 0).kernel;
    int z = static_cast<int>(ker.size());
    IntMatrix Kmat = columns_to_matrix(ker, nk);
    // relation matrix: coboundaries expressed in kernel coordinates
    IntMatrix Rel(z, delta_km1.cols);
    for (int j = 0; j < delta_km1.cols; ++j) {
      std::vector<Int> col(nk, 0);
      for (int i = 0; i < nk; ++i) col[i] = delta_km1.at(i, j);
      auto y = solve_mod(Kmat, col, 0);
      if (!y) throw std::logic_error("coboundary outside the cocycle lattice");
      for (int i = 0; i < z; ++i)
        if ((*y)[i] != 0) Rel.set(i, j, (*y)[i]);
    }
    auto snf = smith_normal_form(Rel);
    IntMatrix G = Kmat * invert_unimodular(snf.U);
    int nn = std::min(Rel.rows, Rel.cols);
    for (int i = 0; i < z; ++i) {
      Int d = (i < nn) ? snf.D.at(i, i) : Int(0);
      if (d == 1) continue;
      std::vector<Int> g(nk);
      for (int r = 0; r < nk; ++r) g[r] = G.at(r, i);
      if (d == 0 || ring == Ring::Q) {
        if (d != 0) continue;  // Q keeps only the free part
        out.basis.free_generators.push_back(make_class(g, 0));
        out.reduced_gens.push_back(g);
        out.orders.push_back(0);
      } else {
        TorsionGenerator t;
        t.rep = make_class(g, 0);
        t.order = d;
        std::vector<Int> dg(nk);
        for (int r = 0; r < nk; ++r) dg[r] = d * g[r];
        auto u = solve_mod(delta_km1, dg, 0);
        if (!u) throw std::logic_error("missing torsion certificate");
        t.certificate = (k >= 1) ? red_.pull_cochain(k - 1, *u, 0)
                                 : std::vector<Int>{};
        out.basis.torsion_generators.push_back(std::move(t));
        out.reduced_gens.push_back(g);
        out.orders.push_back(d);
      }
    }
    return out;
  }

  if (ring == Ring::Z2) {
    auto ker = kernel_image_mod(delta_k, 2).kernel;
    auto img = kernel_image_mod(delta_km1, 2).image;
    // reduce kernel vectors against the echelonized coboundary space
    std::vector<std::vector<Int>> rows = img;  // working echelon set
    for (const auto& kv : ker) {
      std::vector<Int> v = kv;
      bool indep = true;
      while (true) {
        int lead = -1;
        for (int i = 0; i < nk; ++i)
          if (mod_val(v[i], 2) != 0) {
            lead = i;
            break;
          }
        if (lead < 0) {
          indep = false;
          break;
        }
        bool hit = false;
        for (const auto& r : rows) {
          int rl = -1;
          for (int i = 0; i < nk; ++i)
            if (mod_val(r[i], 2) != 0) {
              rl = i;
              break;
            }
          if (rl == lead) {
            for (int i = 0; i < nk; ++i) v[i] = mod_val(v[i] + r[i], 2);
            hit = true;
            break;
          }
        }
        if (!hit) break;
      }
      if (!indep) continue;
      for (auto& x : v) x = mod_val(x, 2);
      rows.push_back(v);
      out.basis.free_generators.push_back(make_class(v, 2));
      out.reduced_gens.push_back(v);
      out.orders.push_back(2);
    }
    return out;
  }

  // Z4: cocycle lattice L1 = {x : delta x = 0 mod 4} modulo the lattice
  // L2 = im(delta) + 4Z^nk, both handled with integer bases
  IntMatrix M(delta_k.rows, nk + delta_k.rows);
  for (const auto& [rc, v] : delta_k.entries) M.set(rc.first, rc.second, v);
  for (int i = 0; i < delta_k.rows; ++i) M.set(i, nk + i, 4);
  auto kerM = kernel_image_mod(M, 0).kernel;
  std::vector<std::vector<Int>> proj;
  proj.reserve(kerM.size());
  for (const auto& v : kerM) proj.push_back({v.begin(), v.begin() + nk});
  IntMatrix P = columns_to_matrix(proj, nk);
  auto l1 = kernel_image_mod(P, 0).image;  // lattice basis of L1
  if (static_cast<int>(l1.size()) != nk)
    throw std::logic_error("cocycle lattice is not full rank");
  IntMatrix B1 = columns_to_matrix(l1, nk);

  IntMatrix X(nk, delta_km1.cols + nk);
  for (int j = 0; j < delta_km1.cols + nk; ++j) {
    std::vector<Int> col(nk, 0);
    if (j < delta_km1.cols)
      for (int i = 0; i < nk; ++i) col[i] = delta_km1.at(i, j);
    else
      col[j - delta_km1.cols] = 4;
    auto y = solve_mod(B1, col, 0);
    if (!y) throw std::logic_error("relation outside the cocycle lattice");
    for (int i = 0; i < nk; ++i)
      if ((*y)[i] != 0) X.set(i, j, (*y)[i]);
  }
  auto snf = smith_normal_form(X);
  IntMatrix G = B1 * invert_unimodular(snf.U);
  for (int i = 0; i < nk; ++i) {
    Int d = snf.D.at(i, i);
    if (d == 1) continue;
    if (d != 2 && d != 4) throw std::logic_error("unexpected Z4 order");
    std::vector<Int> g(nk);
    for (int r = 0; r < nk; ++r) g[r] = mod_val(G.at(r, i), 4);
    TorsionGenerator t;
    t.rep = make_class(g, 4);
    t.order = d;
    std::vector<Int> dg(nk);
    for (int r = 0; r < nk; ++r) dg[r] = mod_val(d * g[r], 4);
    auto u = solve_mod(delta_km1, dg, 4);
    if (!u) throw std::logic_error("missing torsion certificate");
    t.certificate = (k >= 1) ? red_.pull_cochain(k - 1, *u, 4)
                             : std::vector<Int>{};
    out.basis.torsion_generators.push_back(std::move(t));
    out.reduced_gens.push_back(g);
    out.orders.push_back(d);
  }
  return out;
}

bool Space::is_same_class(const CohomologyClass& c1,
                          const CohomologyClass& c2) const {
  if (c1.degree != c2.degree || c1.ring != c2.ring)
    throw std::invalid_argument("ring/degree mismatch");
  CohomologyClass d = c1;
  for (size_t i = 0; i < d.cocycle.size(); ++i)
    d.cocycle[i] = mod_val(d.cocycle[i] - c2.cocycle[i],
                           ring_modulus(c1.ring));
  return is_zero_class(d);
}

bool Space::is_zero_class(const CohomologyClass& c) const {
  int n = ring_modulus(c.ring);
  const int k = c.degree;
  auto reduced = red_.push_cochain(k, c.cocycle, n);
  IntMatrix delta_km1 = (k >= 1) ? red_.boundary[k].transpose()
                                 : IntMatrix(red_.count(k), 0);
  if (c.ring == Ring::Q) {
    // solvable over Q iff augmenting does not raise the rank
    IntMatrix aug(delta_km1.rows, delta_km1.cols + 1);
    for (const auto& [rc, v] : delta_km1.entries)
      aug.set(rc.first, rc.second, v);
    for (int i = 0; i < delta_km1.rows; ++i)
      if (reduced[i] != 0) aug.set(i, delta_km1.cols, reduced[i]);
    return rank_q(aug) == rank_q(delta_km1);
  }
  return solve_mod(delta_km1, reduced, n).has_value();
}

CohomologyClass Space::coefficient_map(const CohomologyClass& c,
                                       Ring target) const {
  CohomologyClass out;
  out.degree = c.degree;
  out.ring = target;
  out.cocycle.resize(c.cocycle.size());
  if (c.ring == Ring::Z && target == Ring::Z2) {
    for (size_t i = 0; i < c.cocycle.size(); ++i)
      out.cocycle[i] = mod_val(c.cocycle[i], 2);
  } else if (c.ring == Ring::Z && target == Ring::Z4) {
    for (size_t i = 0; i < c.cocycle.size(); ++i)
      out.cocycle[i] = mod_val(c.cocycle[i], 4);
  } else if (c.ring == Ring::Z2 && target == Ring::Z4) {
    for (size_t i = 0; i < c.cocycle.size(); ++i)
      out.cocycle[i] = mod_val(2 * c.cocycle[i], 4);
  } else {
    throw std::invalid_argument("unsupported coefficient map");
  }
  return out;
}

CohomologyClass Space::bockstein_sq1(const CohomologyClass& c) const {
  if (c.ring != Ring::Z2) throw std::invalid_argument("Sq1 needs a Z2 class");
  // integer lift with entries in {0,1}; delta of it is even entry-wise
  std::vector<Int> lift(c.cocycle.size());
  for (size_t i = 0; i < c.cocycle.size(); ++i)
    lift[i] = mod_val(c.cocycle[i], 2);
  auto d = coboundary(c.degree, lift, 0);
  CohomologyClass out;
  out.degree = c.degree + 1;
  out.ring = Ring::Z2;
  out.cocycle.resize(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] % 2 != 0) throw std::logic_error("input is not a mod-2 cocycle");
    out.cocycle[i] = mod_val(d[i] / 2, 2);
  }
  return out;
}

std::optional<std::vector<Int>> Space::coordinates_of(
    const CohomologyClass& c) const {
  const int k = c.degree;
  int n = ring_modulus(c.ring);
  const DegreeBasis& db = degree_basis(c.ring, k);
  auto reduced = red_.push_cochain(k, c.cocycle, n);
  IntMatrix delta_km1 = (k >= 1) ? red_.boundary[k].transpose()
                                 : IntMatrix(red_.count(k), 0);
  int ng = static_cast<int>(db.reduced_gens.size());
  IntMatrix A(red_.count(k), ng + delta_km1.cols);
  for (int j = 0; j < ng; ++j)
    for (int i = 0; i < red_.count(k); ++i)
      if (db.reduced_gens[j][i] != 0) A.set(i, j, db.reduced_gens[j][i]);
  for (const auto& [rc, v] : delta_km1.entries)
    A.set(rc.first, ng + rc.second, v);
  auto x = solve_mod(A, reduced, n);
  if (!x) return std::nullopt;
  std::vector<Int> coords(ng);
  for (int j = 0; j < ng; ++j) {
    coords[j] = (*x)[j];
    // torsion coordinates only matter modulo the generator's order
    Int m = (db.orders[j] != 0) ? db.orders[j] : Int(n);
    if (m != 0) coords[j] = mod_val(coords[j], static_cast<int>(m));
  }
  return coords;
}

std::vector<Int> pullback_cochain(const CellComplex& domain,
                                  const CellComplex& codomain,
                                  const std::vector<int>& vertex_map,
                                  int degree, const std::vector<Int>& vals,
                                  int n) {
  if (degree < 0 || degree > codomain.dim ||
      static_cast<int>(vals.size()) != codomain.count(degree))
    throw std::invalid_argument("pullback: cochain size mismatch");
  std::vector<Int> out(degree <= domain.dim ? domain.count(degree) : 0, 0);
  Simplex img(degree + 1);
  for (size_t j = 0; j < out.size(); ++j) {
    const Simplex& s = domain.cells[degree][j];
    for (int i = 0; i <= degree; ++i) img[i] = vertex_map.at(s[i]);
    // sign of the sorting permutation; repeated vertices kill the simplex
    int inversions = 0;
    bool degenerate = false;
    for (int a = 0; a < degree && !degenerate; ++a)
      for (int b = a + 1; b <= degree; ++b) {
        if (img[a] == img[b]) degenerate = true;
        if (img[a] > img[b]) ++inversions;
      }
    if (degenerate) continue;
    Simplex sorted = img;
    std::sort(sorted.begin(), sorted.end());
    int id = codomain.id_of(degree, sorted);
    out[j] = mod_val((inversions % 2 ? -vals[id] : vals[id]), n);
  }
  return out;
}

}  // namespace vb5
