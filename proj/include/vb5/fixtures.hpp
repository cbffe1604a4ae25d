#pragma once

#include <string>
#include <vector>

#include "vb5/simplicial.hpp"

namespace vb5 {

/// Named corpus: s5, s1xs4, s2xs3, cp2, rp4, rp5, t5, circle(m), sphere(n).
/// Throws std::invalid_argument for unknown names.
SimplicialComplex fixture(const std::string& name);

std::vector<std::string> fixture_names();

SimplicialComplex circle_complex(int m);
SimplicialComplex sphere_complex(int n);  // boundary of the (n+1)-simplex

/// Antipodal quotient of the first barycentric subdivision of the boundary
/// of the (n+1)-dimensional cross-polytope; a triangulation of RP^n.
SimplicialComplex projective_space(int n);

/// The antipodal double cover S^n -> RP^n on the same subdivision, with the
/// simplicial covering map recorded on vertices.
struct DoubleCover {
  SimplicialComplex total;     // subdivided cross-polytope boundary, an S^n
  SimplicialComplex quotient;  // same complex as projective_space(n)
  std::vector<int> vertex_map;  // total vertex id -> quotient vertex id
};

DoubleCover projective_cover(int n);

}  // namespace vb5
