#include "vb5/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vb5 {

SimplicialComplex circle_complex(int m) {
  if (m < 3) throw std::invalid_argument("circle needs m >= 3");
  std::vector<Simplex> facets;
  for (int i = 0; i < m; ++i) facets.push_back({i, (i + 1) % m});
  return complex_from_facets(std::move(facets));
}

SimplicialComplex sphere_complex(int n) {
  if (n < 0) throw std::invalid_argument("sphere needs n >= 0");
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n + 1; ++skip) {
    Simplex f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return complex_from_facets(std::move(facets));
}

namespace {

// Faces of the boundary of the (n+1)-cross-polytope: nonempty subsets of
// {+-e_1, ..., +-e_{n+1}} with no antipodal pair. Vertex i has sign s:
// encode as 2*i + (s<0). Antipode flips the low bit.
using Face = std::vector<int>;

int antipode_vertex(int v) { return v ^ 1; }

Face antipode(const Face& f) {
  Face g;
  g.reserve(f.size());
  for (int v : f) g.push_back(antipode_vertex(v));
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

DoubleCover projective_cover(int n) {
  const int m = n + 1;  // cross-polytope lives in R^{n+1}
  // enumerate faces of the boundary complex by dimension
  std::vector<std::vector<Face>> faces(m);
  {
    // subsets choosing a support set and signs
    for (int mask = 1; mask < (1 << m); ++mask) {
      int k = __builtin_popcount(mask);
      std::vector<int> support;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) support.push_back(i);
      for (int signs = 0; signs < (1 << k); ++signs) {
        Face f;
        for (int j = 0; j < k; ++j)
          f.push_back(2 * support[j] + ((signs >> j) & 1));
        faces[k - 1].push_back(std::move(f));
      }
    }
  }
  // barycentric subdivision: vertices = faces, facets = maximal chains.
  // Cover vertex ids follow the lex order of all faces; the antipodal
  // quotient uses the canonical orbit representative min(f, -f).
  std::map<Face, int> cover_id;
  for (const auto& fs : faces)
    for (const auto& f : fs) cover_id.emplace(f, 0);
  {
    int next = 0;
    for (auto& [f, id] : cover_id) id = next++;
  }
  std::map<Face, int> face_id;
  auto rep_id = [&](const Face& f) -> int {
    Face a = antipode(f);
    const Face& r = std::min(f, a);
    auto it = face_id.find(r);
    if (it != face_id.end()) return it->second;
    int id = static_cast<int>(face_id.size());
    face_id.emplace(r, id);
    return id;
  };

  std::set<Simplex> cover_facets, quot_facets;
  auto emit = [&](const std::vector<Face>& cs) {
    Simplex s, q;
    s.reserve(cs.size());
    q.reserve(cs.size());
    for (const auto& f : cs) {
      s.push_back(cover_id.at(f));
      q.push_back(rep_id(f));
    }
    std::sort(s.begin(), s.end());
    std::sort(q.begin(), q.end());
    cover_facets.insert(std::move(s));
    quot_facets.insert(std::move(q));
  };
  std::vector<Face> cs;
  // recursive lambda: extend chain downward by removing one vertex at a time
  auto rec = [&](auto&& self, const Face& f) -> void {
    cs.push_back(f);
    if (f.size() == 1) {
      emit(cs);
    } else {
      for (size_t d = 0; d < f.size(); ++d) {
        Face g;
        for (size_t j = 0; j < f.size(); ++j)
          if (j != d) g.push_back(f[j]);
        self(self, g);
      }
    }
    cs.pop_back();
  };
  for (const auto& top : faces[m - 1]) rec(rec, top);

  DoubleCover out;
  out.total = complex_from_facets({cover_facets.begin(), cover_facets.end()});
  out.quotient = complex_from_facets({quot_facets.begin(), quot_facets.end()});
  out.vertex_map.resize(cover_id.size());
  for (const auto& [f, id] : cover_id) out.vertex_map[id] = rep_id(f);
  return out;
}

SimplicialComplex projective_space(int n) {
  return projective_cover(n).quotient;
}

namespace {

const char* kCp2Facets =
    "0 1 2 3 4\n0 1 2 3 5\n0 1 2 4 5\n0 1 3 4 6\n0 1 3 5 7\n0 1 3 6 7\n"
    "0 1 4 5 6\n0 1 5 6 8\n0 1 5 7 8\n0 1 6 7 8\n0 2 3 4 8\n0 2 3 5 8\n"
    "0 2 4 5 6\n0 2 4 6 7\n0 2 4 7 8\n0 2 5 6 8\n0 2 6 7 8\n0 3 4 6 7\n"
    "0 3 4 7 8\n0 3 5 7 8\n1 2 3 4 8\n1 2 3 5 7\n1 2 3 6 7\n1 2 3 6 8\n"
    "1 2 4 5 7\n1 2 4 7 8\n1 2 6 7 8\n1 3 4 6 8\n1 4 5 6 8\n1 4 5 7 8\n"
    "2 3 5 6 7\n2 3 5 6 8\n2 4 5 6 7\n3 4 5 6 7\n3 4 5 6 8\n3 4 5 7 8\n";

SimplicialComplex cp2_complex() {
  std::vector<Simplex> facets;
  Simplex cur;
  int v = 0;
  bool have = false;
  for (const char* p = kCp2Facets; *p; ++p) {
    char c = *p;
    if (c >= '0' && c <= '9') {
      v = v * 10 + (c - '0');
      have = true;
    } else {
      if (have) cur.push_back(v);
      v = 0;
      have = false;
      if (c == '\n') {
        facets.push_back(cur);
        cur.clear();
      }
    }
  }
  return complex_from_facets(std::move(facets));
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"s5",  "s1xs4", "s2xs3",     "cp2",      "rp4",
          "rp5", "t5",    "circle(m)", "sphere(n)"};
}

SimplicialComplex fixture(const std::string& name) {
  if (name == "s5") return sphere_complex(5);
  if (name == "s1xs4") return product_complex(circle_complex(3), sphere_complex(4));
  if (name == "s2xs3") return product_complex(sphere_complex(2), sphere_complex(3));
  if (name == "cp2") return cp2_complex();
  if (name == "rp4") return projective_space(4);
  if (name == "rp5") return projective_space(5);
  if (name == "t5") {
    auto t = product_complex(circle_complex(3), circle_complex(3));
    auto t3 = product_complex(t, circle_complex(3));
    auto t4 = product_complex(t3, circle_complex(3));
    return product_complex(t4, circle_complex(3));
  }
  if (name.rfind("circle(", 0) == 0 && name.back() == ')')
    return circle_complex(std::stoi(name.substr(7, name.size() - 8)));
  if (name.rfind("sphere(", 0) == 0 && name.back() == ')')
    return sphere_complex(std::stoi(name.substr(7, name.size() - 8)));
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace vb5
