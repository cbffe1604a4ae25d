#pragma once

#include <map>
#include <vector>

#include "vb5/exact.hpp"
#include "vb5/simplicial.hpp"

namespace vb5 {

/// Every simplex of a complex, indexed per degree in lexicographic order.
struct CellComplex {
  int dim = -1;
  std::vector<std::vector<Simplex>> cells;  // cells[k] sorted lex

  static CellComplex from_complex(const SimplicialComplex& K);

  int count(int k) const {
    return (k < 0 || k > dim) ? 0 : static_cast<int>(cells[k].size());
  }
  int id_of(int k, const Simplex& s) const;  // -1 when absent

  /// Signed boundary matrix C_k -> C_{k-1}.
  IntMatrix boundary_matrix(int k) const;
};

/// One elimination step: the unit-entry pair (a in C_deg, b in C_{deg+1})
/// with <del b, a> = eps, recorded before removal.
struct ElimStep {
  int deg;
  int a, b;
  int eps;
  // entries of del b other than a, at elimination time
  std::vector<std::pair<int, long long>> bnd_b;
  // cells c != b with lambda = <del c, a> != 0, at elimination time
  std::vector<std::pair<int, long long>> cob_a;
};

/// Result of eliminating unit-entry pairs from the chain complex over Z.
/// The surviving cells carry a smaller chain complex with the same homology;
/// the log transfers cochains between the two complexes.
struct ChainReduction {
  int dim = -1;
  std::vector<std::vector<int>> survivors;      // original cell ids, per degree
  std::vector<std::vector<int>> survivor_slot;  // orig id -> position or -1
  std::vector<IntMatrix> boundary;              // boundary[k]: C_k -> C_{k-1}
  std::vector<ElimStep> log;

  int count(int k) const {
    return (k < 0 || k > dim) ? 0 : static_cast<int>(survivors[k].size());
  }

  /// Cochain pullback along the inclusion-up-to-homotopy: a degree-k cochain
  /// on the reduced complex becomes a cochain on the original one. Cocycles
  /// map to cocycles of the same class. Values mod n (n = 0 means Z).
  std::vector<Int> pull_cochain(int k, const std::vector<Int>& reduced,
                                int n) const;

  /// Cochain pushforward (the reverse direction). Values mod n.
  std::vector<Int> push_cochain(int k, const std::vector<Int>& original,
                                int n) const;
};

ChainReduction reduce_complex(const CellComplex& C);

}  // namespace vb5
