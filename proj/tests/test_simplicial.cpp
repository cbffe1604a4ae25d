#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "vb5/fixtures.hpp"
#include "vb5/simplicial.hpp"

using namespace vb5;

TEST_CASE("parse and serialize round trip") {
  std::string text =
      "# tetrahedron boundary\n"
      "dim 2\n"
      "f 0 1 2\n"
      "f 0 1 3  # a comment\n"
      "f 0 2 3\n"
      "f 1 2 3\n";
  auto K = parse_complex(text);
  CHECK(K.dim == 2);
  CHECK(K.vertex_count == 4);
  CHECK(K.facets.size() == 4);
  auto K2 = parse_complex(serialize_complex(K));
  CHECK(K.facets == K2.facets);
}

TEST_CASE("parser reports line numbers") {
  try {
    parse_complex("dim 2\nf 0 1 2\nf 0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  try {
    parse_complex("dim 2\nf 0 1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_complex("f 0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("dim 2\nwhat 0\n"), ParseError);
}

TEST_CASE("sphere boundary complexes validate as closed manifolds") {
  for (int n = 1; n <= 5; ++n) {
    auto K = sphere_complex(n);
    CHECK(K.dim == n);
    CHECK(K.facets.size() == static_cast<size_t>(n + 2));
    auto rep = validate(K);
    CHECK(rep.is_pure);
    CHECK(rep.is_closed_pseudomanifold);
    CHECK(rep.is_connected);
    CHECK(rep.is_orientable);
    CHECK(euler_characteristic(K) == (n % 2 == 0 ? 2 : 0));
  }
}

TEST_CASE("open and disconnected complexes are flagged with witnesses") {
  // a single triangle is not closed
  auto K = complex_from_facets({{0, 1, 2}});
  auto rep = validate(K);
  CHECK_FALSE(rep.is_closed_pseudomanifold);
  CHECK_FALSE(rep.failures.empty());
  CHECK(rep.failures[0].check == "closed_pseudomanifold");
  CHECK(rep.failures[0].witness.size() == 2);  // a bad ridge is recorded

  // two disjoint circles
  auto D = complex_from_facets(
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto rd = validate(D);
  CHECK(rd.is_closed_pseudomanifold);
  CHECK_FALSE(rd.is_connected);
  CHECK_THROWS(orient(D));
}

TEST_CASE("orientation gives a cycle: signed facet boundaries cancel") {
  for (auto name : {"s5", "s1xs4", "cp2"}) {
    auto K = fixture(name);
    auto O = orient(K);
    REQUIRE(O.facet_signs.size() == K.facets.size());
    CHECK(O.facet_signs[0] == 1);
    // sum over facets of signed boundary ridges must vanish
    std::map<Simplex, int> acc;
    for (size_t i = 0; i < K.facets.size(); ++i) {
      const auto& f = K.facets[i];
      for (size_t d = 0; d < f.size(); ++d) {
        Simplex r;
        for (size_t j = 0; j < f.size(); ++j)
          if (j != d) r.push_back(f[j]);
        int sgn = (d % 2 == 0) ? 1 : -1;
        acc[r] += sgn * O.facet_signs[i];
      }
    }
    for (const auto& [r, v] : acc) CHECK(v == 0);
  }
}

TEST_CASE("non-orientable complex rejected by orient()") {
  auto rp2 = projective_space(2);
  auto rep = validate(rp2);
  CHECK(rep.is_closed_pseudomanifold);
  CHECK_FALSE(rep.is_orientable);
  CHECK_THROWS_AS(orient(rp2), NonOrientableError);
}

TEST_CASE("product triangulation: facet counts and Euler characteristic") {
  auto c3 = circle_complex(3);
  auto t2 = product_complex(c3, c3);
  CHECK(t2.dim == 2);
  CHECK(t2.vertex_count == 9);
  CHECK(t2.facets.size() == 18);  // 3*3 squares, 2 triangles each
  CHECK(euler_characteristic(t2) == 0);
  CHECK(validate(t2).closed_connected());

  auto s1s2 = product_complex(c3, sphere_complex(2));
  CHECK(s1s2.dim == 3);
  CHECK(euler_characteristic(s1s2) == 0);
  CHECK(validate(s1s2).closed_connected());
  CHECK(validate(s1s2).is_orientable);
}

TEST_CASE("faces_of_dimension enumerates without duplicates") {
  auto K = sphere_complex(3);
  // boundary of the 4-simplex: every k-subset of 5 vertices is a face
  CHECK(faces_of_dimension(K, 0).size() == 5);
  CHECK(faces_of_dimension(K, 1).size() == 10);
  CHECK(faces_of_dimension(K, 2).size() == 10);
  CHECK(faces_of_dimension(K, 3).size() == 5);
  CHECK(faces_of_dimension(K, 4).empty());
  CHECK(faces_of_dimension(K, -1).empty());
}
