#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vb5/chain.hpp"
#include "vb5/exact.hpp"
#include "vb5/simplicial.hpp"

namespace vb5 {

enum class Ring { Z, Z2, Z4, Q };

std::string ring_name(Ring r);
Ring ring_from_name(const std::string& s);
int ring_modulus(Ring r);  // Z, Q -> 0; Z2 -> 2; Z4 -> 4

/// Homology or cohomology group in one degree. Over Z2 only the rank is
/// meaningful; over Z4 "rank" counts Z/4 summands and torsion lists the
/// order-2 summands.
struct GradedAbelianGroup {
  int degree = 0;
  int rank = 0;
  std::vector<Int> torsion;  // divisor chain, entries >= 2

  bool operator==(const GradedAbelianGroup&) const = default;
};

/// A cochain representative on the original complex (dense over the ordered
/// simplices of its degree, ascending-vertex orientation).
struct CohomologyClass {
  int degree = 0;
  Ring ring = Ring::Z;
  std::vector<Int> cocycle;
};

struct TorsionGenerator {
  CohomologyClass rep;
  Int order;                     // additive order in cohomology
  std::vector<Int> certificate;  // cochain u with order*rep = delta(u)
};

struct CohomologyBasis {
  int degree = 0;
  Ring ring = Ring::Z;
  std::vector<CohomologyClass> free_generators;
  std::vector<TorsionGenerator> torsion_generators;
};

/// One simplicial complex with cached chain data and (co)homology results.
class Space {
 public:
  explicit Space(SimplicialComplex K);

  const SimplicialComplex& complex() const { return K_; }
  const CellComplex& cells() const { return cells_; }
  const ChainReduction& reduction() const { return red_; }
  int dim() const { return K_.dim; }

  GradedAbelianGroup homology(Ring ring, int degree) const;
  GradedAbelianGroup cohomology(Ring ring, int degree) const;
  const CohomologyBasis& cohomology_basis(Ring ring, int degree) const;

  bool is_cocycle(const CohomologyClass& c) const;
  bool is_same_class(const CohomologyClass& c1,
                     const CohomologyClass& c2) const;
  bool is_zero_class(const CohomologyClass& c) const;

  /// mu (Z->Z2), rho4 (Z->Z4) and i* (Z2->Z4, multiplication by 2).
  CohomologyClass coefficient_map(const CohomologyClass& c, Ring target) const;

  /// Bockstein of the short exact sequence Z2 -> Z4 -> Z2.
  CohomologyClass bockstein_sq1(const CohomologyClass& c) const;

  /// Coordinates of a class in the deterministic basis: first the free
  /// generators, then the torsion generators. nullopt if degree/ring has no
  /// basis coordinates for the class (should not happen for cocycles).
  std::optional<std::vector<Int>> coordinates_of(const CohomologyClass& c) const;

  /// Dense coboundary of a cochain on the original complex, values mod n.
  std::vector<Int> coboundary(int degree, const std::vector<Int>& u,
                              int n) const;

  CohomologyClass zero_class(Ring ring, int degree) const;

 private:
  struct DegreeBasis {
    CohomologyBasis basis;
    // generator cochains on the reduced complex, as columns
    std::vector<std::vector<Int>> reduced_gens;
    std::vector<Int> orders;  // 0 for free generators
  };
  const DegreeBasis& degree_basis(Ring ring, int degree) const;
  DegreeBasis build_basis(Ring ring, int degree) const;

  SimplicialComplex K_;
  CellComplex cells_;
  ChainReduction red_;
  mutable std::map<std::pair<int, int>, DegreeBasis> basis_cache_;
  mutable std::map<std::pair<int, int>, GradedAbelianGroup> homology_cache_;
};

/// Pullback of a dense degree-k cochain along a simplicial map given by its
/// action on vertices. Simplices with a repeated image vertex contribute 0;
/// otherwise the value picks up the sign of the sorting permutation.
/// Values mod n (n = 0 means Z).
std::vector<Int> pullback_cochain(const CellComplex& domain,
                                  const CellComplex& codomain,
                                  const std::vector<int>& vertex_map,
                                  int degree, const std::vector<Int>& vals,
                                  int n);

}  // namespace vb5
