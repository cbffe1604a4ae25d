#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vb5 {

using Simplex = std::vector<int>;  // strictly increasing vertex indices

/// Finite simplicial complex given by its top-dimensional facets.
/// All lower faces are implicit. Facets are stored sorted
/// lexicographically, each with strictly increasing vertices.
struct SimplicialComplex {
  int dim = 0;
  int vertex_count = 0;
  std::vector<Simplex> facets;
};

struct OrientedComplex {
  SimplicialComplex base;
  std::vector<int> facet_signs;  // +1 / -1, parallel to base.facets
};

struct ValidationFailure {
  std::string check;
  Simplex witness;
};

struct ValidationReport {
  bool is_pure = false;
  bool is_closed_pseudomanifold = false;
  bool is_connected = false;
  bool is_orientable = false;
  std::vector<ValidationFailure> failures;

  bool closed_connected() const {
    return is_pure && is_closed_pseudomanifold && is_connected;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

class NonOrientableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse the .scx text format: '#' comments, "dim D", then "f v0 ... vD"
/// per facet. Vertex labels with gaps are compacted to dense indices.
SimplicialComplex parse_complex(const std::string& text);

std::string serialize_complex(const SimplicialComplex& K);

ValidationReport validate(const SimplicialComplex& K);

/// Propagate facet orientations across ridges; the lexicographically first
/// facet gets +1. Throws NonOrientableError on a sign contradiction.
OrientedComplex orient(const SimplicialComplex& K);

/// Staircase (Eilenberg-Zilber) triangulation of |K| x |L|.
/// Vertex set = vertex pairs in lexicographic order.
SimplicialComplex product_complex(const SimplicialComplex& K,
                                  const SimplicialComplex& L);

/// Build a complex from an explicit facet list (vertices need not be dense).
SimplicialComplex complex_from_facets(std::vector<Simplex> facets);

long euler_characteristic(const SimplicialComplex& K);

/// All k-faces, lexicographically sorted.
std::vector<Simplex> faces_of_dimension(const SimplicialComplex& K, int k);

}  // namespace vb5
