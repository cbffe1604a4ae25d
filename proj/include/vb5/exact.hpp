#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

namespace vb5 {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix with arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Int> entries;  // no stored zeros

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c) {}

  static IntMatrix identity(int n);

  Int at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Int(0) : it->second;
  }
  void set(int r, int c, Int v);

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // A*x

  bool operator==(const IntMatrix& o) const = default;
};

/// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SnfResult {
  IntMatrix U, D, V;
  std::vector<Int> diagonal;  // nonzero diagonal entries, divisor chain
};

SnfResult smith_normal_form(const IntMatrix& A);

/// Diagonal of the Smith form only (no transform bookkeeping).
std::vector<Int> snf_diagonal(const IntMatrix& A);

/// Solve A*x = b over Z (n = 0) or Z_n (n in {2, 4}).
/// Returns nullopt when no solution exists.
std::optional<std::vector<Int>> solve_mod(const IntMatrix& A,
                                          const std::vector<Int>& b, int n);

struct KernelImage {
  // Over Z and Z_2 these are bases; over Z_4 they are generating sets
  // (not necessarily independent).
  std::vector<std::vector<Int>> kernel;  // column vectors
  std::vector<std::vector<Int>> image;
  // additive orders of the generators when n = 4 (entries 2 or 4);
  // empty for n = 0 or 2
  std::vector<int> kernel_orders;
  std::vector<int> image_orders;
};

KernelImage kernel_image_mod(const IntMatrix& A, int n);

/// Rank of A over the rationals.
int rank_q(const IntMatrix& A);

}  // namespace vb5
