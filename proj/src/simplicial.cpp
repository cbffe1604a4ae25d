#include "vb5/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace vb5 {

namespace {

struct SimplexHash {
  size_t operator()(const Simplex& s) const {
    size_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

SimplicialComplex complex_from_facets(std::vector<Simplex> facets) {
  if (facets.empty()) throw std::invalid_argument("empty facet list");
  // compact vertex labels
  std::set<int> verts;
  for (auto& f : facets)
    for (int v : f) verts.insert(v);
  std::unordered_map<int, int> relabel;
  int next = 0;
  for (int v : verts) relabel[v] = next++;

  size_t len = facets[0].size();
  for (auto& f : facets) {
    if (f.size() != len)
      throw std::invalid_argument("non-uniform dimension");
    for (int& v : f) v = relabel[v];
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("duplicate vertex inside a facet");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  SimplicialComplex K;
  K.dim = static_cast<int>(len) - 1;
  K.vertex_count = next;
  K.facets = std::move(facets);
  return K;
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  int dim = -1;
  std::vector<Simplex> facets;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "dim") {
      if (have_dim) throw ParseError("duplicate dim line", lineno);
      if (!(ls >> dim) || dim < 0) throw ParseError("bad dim value", lineno);
      have_dim = true;
    } else if (tok == "f") {
      if (!have_dim) throw ParseError("facet before dim line", lineno);
      Simplex f;
      int v;
      while (ls >> v) {
        if (v < 0) throw ParseError("negative vertex index", lineno);
        f.push_back(v);
      }
      if (!ls.eof()) throw ParseError("bad facet token", lineno);
      if (static_cast<int>(f.size()) != dim + 1)
        throw ParseError("non-uniform dimension", lineno);
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw ParseError("duplicate vertex inside a facet", lineno);
      facets.push_back(std::move(f));
    } else {
      throw ParseError("unknown token '" + tok + "'", lineno);
    }
  }
  if (!have_dim) throw ParseError("missing dim line", lineno);
  if (facets.empty()) throw ParseError("no facets", lineno);
  return complex_from_facets(std::move(facets));
}

std::string serialize_complex(const SimplicialComplex& K) {
  std::ostringstream out;
  out << "dim " << K.dim << "\n";
  for (const auto& f : K.facets) {
    out << "f";
    for (int v : f) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

std::vector<Simplex> faces_of_dimension(const SimplicialComplex& K, int k) {
  if (k < 0 || k > K.dim) return {};
  std::set<Simplex> out;
  Simplex face(k + 1);
  for (const auto& f : K.facets) {
    // all (k+1)-subsets of f
    std::vector<int> idx(k + 1);
    for (int i = 0; i <= k; ++i) idx[i] = i;
    int n = static_cast<int>(f.size());
    while (true) {
      for (int i = 0; i <= k; ++i) face[i] = f[idx[i]];
      out.insert(face);
      int i = k;
      while (i >= 0 && idx[i] == n - (k + 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

long euler_characteristic(const SimplicialComplex& K) {
  long chi = 0;
  for (int k = 0; k <= K.dim; ++k) {
    long fk = static_cast<long>(faces_of_dimension(K, k).size());
    chi += (k % 2 == 0) ? fk : -fk;
  }
  return chi;
}

namespace {

// ridge -> indices of facets containing it
std::unordered_map<Simplex, std::vector<int>, SimplexHash> ridge_map(
    const SimplicialComplex& K) {
  std::unordered_map<Simplex, std::vector<int>, SimplexHash> m;
  for (int i = 0; i < static_cast<int>(K.facets.size()); ++i) {
    const auto& f = K.facets[i];
    for (size_t d = 0; d < f.size(); ++d) {
      Simplex r;
      r.reserve(f.size() - 1);
      for (size_t j = 0; j < f.size(); ++j)
        if (j != d) r.push_back(f[j]);
      m[r].push_back(i);
    }
  }
  return m;
}

}  // namespace

ValidationReport validate(const SimplicialComplex& K) {
  ValidationReport rep;
  rep.is_pure = true;  // by construction facets share one length
  const int nf = static_cast<int>(K.facets.size());

  auto ridges = ridge_map(K);
  rep.is_closed_pseudomanifold = true;
  for (const auto& [r, fs] : ridges) {
    if (fs.size() != 2) {
      rep.is_closed_pseudomanifold = false;
      rep.failures.push_back({"closed_pseudomanifold", r});
    }
  }

  // connectivity through the 1-skeleton (every vertex lies in a facet)
  std::vector<int> comp(K.vertex_count, -1);
  std::vector<int> stack;
  int ncomp = 0;
  for (int s = 0; s < K.vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& f : K.facets) {
        if (std::find(f.begin(), f.end(), v) == f.end()) continue;
        for (int u : f)
          if (comp[u] < 0) {
            comp[u] = ncomp;
            stack.push_back(u);
          }
      }
    }
    ++ncomp;
  }
  rep.is_connected = (ncomp == 1);
  if (!rep.is_connected) rep.failures.push_back({"connected", {}});

  // orientability by sign propagation (only meaningful when each ridge has
  // at most two cofacets)
  rep.is_orientable = true;
  std::vector<int> sign(nf, 0);
  for (int s = 0; s < nf && rep.is_orientable; ++s) {
    if (sign[s] != 0) continue;
    sign[s] = 1;
    std::vector<int> bfs{s};
    while (!bfs.empty() && rep.is_orientable) {
      int i = bfs.back();
      bfs.pop_back();
      const auto& f = K.facets[i];
      for (size_t d = 0; d < f.size(); ++d) {
        Simplex r;
        for (size_t j = 0; j < f.size(); ++j)
          if (j != d) r.push_back(f[j]);
        const auto& fs = ridges.at(r);
        if (fs.size() != 2) continue;
        int other = fs[0] == i ? fs[1] : fs[0];
        // position of the missing vertex in the other facet
        const auto& g = K.facets[other];
        int e = -1;
        for (size_t j = 0; j < g.size(); ++j) {
          if (std::find(r.begin(), r.end(), g[j]) == r.end()) {
            e = static_cast<int>(j);
            break;
          }
        }
        // induced orientations on the shared ridge must cancel
        int rel = ((d + e) % 2 == 0) ? -1 : 1;
        int want = rel * sign[i];
        if (sign[other] == 0) {
          sign[other] = want;
          bfs.push_back(other);
        } else if (sign[other] != want) {
          rep.is_orientable = false;
          rep.failures.push_back({"orientable", r});
        }
      }
    }
  }
  return rep;
}

OrientedComplex orient(const SimplicialComplex& K) {
  auto rep = validate(K);
  if (!rep.closed_connected())
    throw std::invalid_argument(
        "orient() needs a closed connected pseudomanifold");
  if (!rep.is_orientable) throw NonOrientableError("complex is not orientable");

  auto ridges = ridge_map(K);
  const int nf = static_cast<int>(K.facets.size());
  std::vector<int> sign(nf, 0);
  sign[0] = 1;  // facets are lex sorted, so facet 0 is the lex-first one
  std::vector<int> bfs{0};
  while (!bfs.empty()) {
    int i = bfs.back();
    bfs.pop_back();
    const auto& f = K.facets[i];
    for (size_t d = 0; d < f.size(); ++d) {
      Simplex r;
      for (size_t j = 0; j < f.size(); ++j)
        if (j != d) r.push_back(f[j]);
      const auto& fs = ridges.at(r);
      int other = fs[0] == i ? fs[1] : fs[0];
      if (sign[other] != 0) continue;
      const auto& g = K.facets[other];
      int e = -1;
      for (size_t j = 0; j < g.size(); ++j)
        if (std::find(r.begin(), r.end(), g[j]) == r.end())
          e = static_cast<int>(j);
      int rel = ((d + e) % 2 == 0) ? -1 : 1;
      sign[other] = rel * sign[i];
      bfs.push_back(other);
    }
  }
  return {K, std::move(sign)};
}

SimplicialComplex product_complex(const SimplicialComplex& K,
                                  const SimplicialComplex& L) {
  // vertex (u, v) -> u * L.vertex_count + v  (lexicographic pairs)
  auto pair_id = [&](int u, int v) { return u * L.vertex_count + v; };
  std::set<Simplex> facets;
  const int p = K.dim, q = L.dim;
  // monotone staircases from (0,0) to (p,q): choose positions of the p
  // "advance in K" steps among p+q steps
  std::vector<int> choose(p);
  for (int i = 0; i < p; ++i) choose[i] = i;
  std::vector<std::vector<std::pair<int, int>>> paths;
  if (p + q == 0) {
    paths.push_back({{0, 0}});
  } else {
    while (true) {
      std::vector<std::pair<int, int>> path{{0, 0}};
      int a = 0, b = 0, step = 0;
      size_t ci = 0;
      for (step = 0; step < p + q; ++step) {
        if (ci < choose.size() && choose[ci] == step) {
          ++a;
          ++ci;
        } else {
          ++b;
        }
        path.emplace_back(a, b);
      }
      paths.push_back(std::move(path));
      int i = p - 1;
      while (i >= 0 && choose[i] == p + q - (p - i)) --i;
      if (i < 0) break;
      ++choose[i];
      for (int j = i + 1; j < p; ++j) choose[j] = choose[j - 1] + 1;
    }
  }
  for (const auto& f : K.facets) {
    for (const auto& g : L.facets) {
      for (const auto& path : paths) {
        Simplex cell;
        cell.reserve(path.size());
        for (auto [a, b] : path) cell.push_back(pair_id(f[a], g[b]));
        std::sort(cell.begin(), cell.end());
        facets.insert(std::move(cell));
      }
    }
  }
  return complex_from_facets({facets.begin(), facets.end()});
}

}  // namespace vb5
