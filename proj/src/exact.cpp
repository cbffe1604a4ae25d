#include "vb5/exact.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>

namespace vb5 {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.entries[{i, i}] = 1;
  return I;
}

void IntMatrix::set(int r, int c, Int v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("IntMatrix::set");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = std::move(v);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(rows, o.cols);
  // o row-indexed access
  std::vector<std::vector<std::pair<int, const Int*>>> orow(o.rows);
  for (const auto& [rc, v] : o.entries) orow[rc.first].push_back({rc.second, &v});
  std::map<std::pair<int, int>, Int> acc;
  for (const auto& [rc, v] : entries) {
    for (const auto& [c2, v2] : orow[rc.second]) acc[{rc.first, c2}] += v * (*v2);
  }
  for (auto& [rc, v] : acc)
    if (v != 0) out.entries[rc] = std::move(v);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols, rows);
  for (const auto& [rc, v] : entries) out.entries[{rc.second, rc.first}] = v;
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> y(rows, 0);
  for (const auto& [rc, v] : entries) y[rc.first] += v * x[rc.second];
  return y;
}

namespace {

// Sparse row-major working form for the Smith reduction.
struct Work {
  std::vector<std::map<int, Int>> row;   // row -> (col -> value)
  std::vector<std::set<int>> colrows;    // col -> rows with a nonzero entry
  int rows, cols;

  explicit Work(const IntMatrix& A) : rows(A.rows), cols(A.cols) {
    row.resize(rows);
    colrows.resize(cols);
    for (const auto& [rc, v] : A.entries) {
      row[rc.first][rc.second] = v;
      colrows[rc.second].insert(rc.first);
    }
  }

  Int at(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? Int(0) : it->second;
  }
  void put(int r, int c, const Int& v) {
    if (v == 0) {
      row[r].erase(c);
      colrows[c].erase(r);
    } else {
      row[r][c] = v;
      colrows[c].insert(r);
    }
  }
  // row i -= q * row j
  void row_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    for (const auto& [c, v] : row[j]) put(i, c, at(i, c) - q * v);
  }
  void row_swap(int i, int j) {
    if (i == j) return;
    for (const auto& [c, v] : row[i]) colrows[c].erase(i);
    for (const auto& [c, v] : row[j]) colrows[c].erase(j);
    std::swap(row[i], row[j]);
    for (const auto& [c, v] : row[i]) colrows[c].insert(i);
    for (const auto& [c, v] : row[j]) colrows[c].insert(j);
  }
  void row_negate(int i) {
    for (auto& [c, v] : row[i]) v = -v;
  }
  // col c1 -= q * col c2
  void col_sub(int c1, int c2, const Int& q) {
    if (q == 0) return;
    std::vector<int> rs(colrows[c2].begin(), colrows[c2].end());
    for (int r : rs) put(r, c1, at(r, c1) - q * at(r, c2));
  }
  void col_swap(int c1, int c2) {
    if (c1 == c2) return;
    std::set<int> rs = colrows[c1];
    rs.insert(colrows[c2].begin(), colrows[c2].end());
    for (int r : rs) {
      Int a = at(r, c1), b = at(r, c2);
      put(r, c1, b);
      put(r, c2, a);
    }
  }

  IntMatrix to_matrix() const {
    IntMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (const auto& [c, v] : row[r]) out.entries[{r, c}] = v;
    return out;
  }
};

struct SnfEngine {
  Work A;
  // Transforms kept only when requested. U is row-major; Vt holds the
  // TRANSPOSE of V row-major, so column ops on A become row ops on Vt.
  bool track;
  std::unique_ptr<Work> U, Vt;

  SnfEngine(const IntMatrix& M, bool track_transforms)
      : A(M), track(track_transforms) {
    if (track) {
      U = std::make_unique<Work>(IntMatrix::identity(M.rows));
      Vt = std::make_unique<Work>(IntMatrix::identity(M.cols));
    }
  }

  void row_sub(int i, int j, const Int& q) {
    A.row_sub(i, j, q);
    if (track) U->row_sub(i, j, q);
  }
  void row_swap(int i, int j) {
    A.row_swap(i, j);
    if (track) U->row_swap(i, j);
  }
  void row_negate(int i) {
    A.row_negate(i);
    if (track) U->row_negate(i);
  }
  void col_sub(int c1, int c2, const Int& q) {
    A.col_sub(c1, c2, q);
    if (track) Vt->row_sub(c1, c2, q);
  }
  void col_swap(int c1, int c2) {
    A.col_swap(c1, c2);
    if (track) Vt->row_swap(c1, c2);
  }

  // pivot choice: minimal |value|, then (row, col) lexicographic
  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int r = t; r < A.rows; ++r) {
      for (const auto& [c, v] : A.row[r]) {
        if (c < t) continue;
        Int a = abs(v);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    return found;
  }

  void run() {
    int n = std::min(A.rows, A.cols);
    for (int t = 0; t < n; ++t) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;
      row_swap(t, pr);
      col_swap(t, pc);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        // clear column t below/above using truncated division; a nonzero
        // remainder becomes the new, smaller pivot
        while (true) {
          Int piv = A.at(t, t);
          int r = -1;
          for (int rr : A.colrows[t])
            if (rr != t && rr >= t) {
              r = rr;
              break;
            }
          if (r < 0) break;
          Int q = A.at(r, t) / piv;  // truncated
          row_sub(r, t, q);
          if (A.at(r, t) != 0) row_swap(t, r);
        }
        while (true) {
          Int piv = A.at(t, t);
          int c = -1;
          for (const auto& [cc, v] : A.row[t])
            if (cc != t && cc >= t) {
              c = cc;
              break;
            }
          if (c < 0) break;
          Int q = A.at(t, c) / piv;
          col_sub(c, t, q);
          if (A.at(t, c) != 0) col_swap(t, c);
          dirty = true;  // column t may be dirty again
        }
      }
      // enforce the divisor condition: pivot must divide the submatrix
      while (true) {
        Int piv = A.at(t, t);
        int br = -1, bc = -1;
        for (int r = t + 1; r < A.rows && br < 0; ++r)
          for (const auto& [c, v] : A.row[r])
            if (c > t && v % piv != 0) {
              br = r;
              bc = c;
              break;
            }
        if (br < 0) break;
        row_sub(t, br, Int(-1));  // fold the offending row in and redo
        while (true) {
          Int p2 = A.at(t, t);
          int c = -1;
          for (const auto& [cc, v] : A.row[t])
            if (cc != t && cc >= t) {
              c = cc;
              break;
            }
          if (c < 0) break;
          Int q = A.at(t, c) / p2;
          col_sub(c, t, q);
          if (A.at(t, c) != 0) col_swap(t, c);
          // clearing the column again if needed
          while (true) {
            Int p3 = A.at(t, t);
            int r = -1;
            for (int rr : A.colrows[t])
              if (rr != t && rr >= t) {
                r = rr;
                break;
              }
            if (r < 0) break;
            Int q2 = A.at(r, t) / p3;
            row_sub(r, t, q2);
            if (A.at(r, t) != 0) row_swap(t, r);
          }
        }
      }
      if (A.at(t, t) < 0) row_negate(t);
    }
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& A) {
  SnfEngine eng(A, true);
  eng.run();
  SnfResult res;
  res.D = eng.A.to_matrix();
  res.U = eng.U->to_matrix();
  res.V = eng.Vt->to_matrix().transpose();
  int n = std::min(A.rows, A.cols);
  for (int i = 0; i < n; ++i) {
    Int d = res.D.at(i, i);
    if (d != 0) res.diagonal.push_back(d);
  }
  return res;
}

std::vector<Int> snf_diagonal(const IntMatrix& A) {
  SnfEngine eng(A, false);
  eng.run();
  std::vector<Int> out;
  int n = std::min(A.rows, A.cols);
  for (int i = 0; i < n; ++i) {
    Int d = eng.A.at(i, i);
    if (d != 0) out.push_back(d);
  }
  return out;
}

int rank_q(const IntMatrix& A) {
  return static_cast<int>(snf_diagonal(A).size());
}


namespace {

inline Int mod_norm(Int v, int n) {
  if (n == 0) return v;
  Int r = v % n;
  if (r < 0) r += n;
  return r;
}

// dense GF(2) rows packed into words
struct Gf2Matrix {
  int rows, cols, words;
  std::vector<std::vector<uint64_t>> row;

  Gf2Matrix(int r, int c)
      : rows(r), cols(c), words((c + 63) / 64), row(r, std::vector<uint64_t>(words, 0)) {}

  explicit Gf2Matrix(const IntMatrix& A) : Gf2Matrix(A.rows, A.cols) {
    for (const auto& [rc, v] : A.entries)
      if (v % 2 != 0) flip(rc.first, rc.second);
  }
  void flip(int r, int c) { row[r][c / 64] ^= (1ull << (c % 64)); }
  bool get(int r, int c) const { return (row[r][c / 64] >> (c % 64)) & 1; }
  void xor_row(int dst, int src) {
    for (int w = 0; w < words; ++w) row[dst][w] ^= row[src][w];
  }

  // row echelon; returns pivot column per pivot row (rows permuted in place)
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int pr = -1;
      for (int i = r; i < rows; ++i)
        if (get(i, c)) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(row[pr], row[r]);
      for (int i = 0; i < rows; ++i)
        if (i != r && get(i, c)) xor_row(i, r);
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }
};

// additive order of a vector in (Z/4)^k
int z4_order(const std::vector<Int>& v) {
  int ord = 1;
  for (const auto& x : v) {
    Int r = mod_norm(x, 4);
    if (r == 1 || r == 3) return 4;
    if (r == 2) ord = 2;
  }
  return ord;
}

// A x = b (mod 4) via the integer system [A | 4I] (x, y)^T = b
std::optional<std::vector<Int>> solve_z4(const IntMatrix& A,
                                         const std::vector<Int>& b) {
  IntMatrix aug(A.rows, A.cols + A.rows);
  for (const auto& [rc, v] : A.entries) {
    Int r = mod_norm(v, 4);
    if (r != 0) aug.set(rc.first, rc.second, r);
  }
  for (int i = 0; i < A.rows; ++i) aug.set(i, A.cols + i, 4);
  std::vector<Int> bb(b.size());
  for (size_t i = 0; i < b.size(); ++i) bb[i] = mod_norm(b[i], 4);
  auto sol = solve_mod(aug, bb, 0);
  if (!sol) return std::nullopt;
  std::vector<Int> x(A.cols);
  for (int i = 0; i < A.cols; ++i) x[i] = mod_norm((*sol)[i], 4);
  return x;
}

}  // namespace

std::optional<std::vector<Int>> solve_mod(const IntMatrix& A,
                                          const std::vector<Int>& b, int n) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("dimension mismatch");
  if (n == 0) {
    auto snf = smith_normal_form(A);
    auto y = snf.U.apply(b);
    std::vector<Int> yhat(A.cols, 0);
    int nn = std::min(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i) {
      Int d = (i < nn) ? snf.D.at(i, i) : Int(0);
      if (d == 0) {
        if (y[i] != 0) return std::nullopt;
      } else {
        if (y[i] % d != 0) return std::nullopt;
        yhat[i] = y[i] / d;
      }
    }
    return snf.V.apply(yhat);
  }
  if (n == 4) return solve_z4(A, b);
  if (n != 2) throw std::invalid_argument("unsupported modulus");

  // GF(2): eliminate the augmented system
  Gf2Matrix M(A.rows, A.cols + 1);
  for (const auto& [rc, v] : A.entries)
    if (v % 2 != 0) M.flip(rc.first, rc.second);
  for (int i = 0; i < A.rows; ++i)
    if (mod_norm(b[i], 2) == 1) M.flip(i, A.cols);
  auto pivots = M.rref();
  std::vector<Int> x(A.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == A.cols) return std::nullopt;  // 0 = 1 row
    x[pivots[r]] = M.get(static_cast<int>(r), A.cols) ? 1 : 0;
  }
  return x;
}

KernelImage kernel_image_mod(const IntMatrix& A, int n) {
  KernelImage out;
  if (n == 0) {
    auto snf = smith_normal_form(A);
    int r = static_cast<int>(snf.diagonal.size());
    for (int i = 0; i < A.cols; ++i) {
      std::vector<Int> col(A.cols, 0);
      for (int j = 0; j < A.cols; ++j) col[j] = snf.V.at(j, i);
      if (i >= r) {
        out.kernel.push_back(col);
      } else {
        out.image.push_back(A.apply(col));
      }
    }
    return out;
  }
  if (n == 2) {
    // kernel: free columns of the reduced matrix give an echelon basis
    Gf2Matrix M(A);
    auto pivots = M.rref();
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int c = 0; c < A.cols; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Int> k(A.cols, 0);
      k[c] = 1;
      for (size_t r = 0; r < pivots.size(); ++r)
        if (M.get(static_cast<int>(r), c)) k[pivots[r]] = 1;
      out.kernel.push_back(std::move(k));
    }
    // image: echelon basis of the column space = row space of the transpose
    Gf2Matrix T(A.cols, A.rows);
    for (const auto& [rc, v] : A.entries)
      if (v % 2 != 0) T.flip(rc.second, rc.first);
    T.rref();
    for (int r = 0; r < T.rows; ++r) {
      std::vector<Int> im(A.rows, 0);
      bool nz = false;
      for (int c = 0; c < A.rows; ++c)
        if (T.get(r, c)) {
          im[c] = 1;
          nz = true;
        }
      if (nz) out.image.push_back(std::move(im));
    }
    return out;
  }
  if (n != 4) throw std::invalid_argument("unsupported modulus");

  // kernel mod 4 = projection of the integer kernel of [A | 4I]; the result
  // is a generating set (not necessarily independent)
  IntMatrix aug(A.rows, A.cols + A.rows);
  for (const auto& [rc, v] : A.entries) {
    Int r = mod_norm(v, 4);
    if (r != 0) aug.set(rc.first, rc.second, r);
  }
  for (int i = 0; i < A.rows; ++i) aug.set(i, A.cols + i, 4);
  auto ki = kernel_image_mod(aug, 0);
  std::set<std::vector<Int>> seen;
  for (const auto& k : ki.kernel) {
    std::vector<Int> x(A.cols);
    bool nz = false;
    for (int i = 0; i < A.cols; ++i) {
      x[i] = mod_norm(k[i], 4);
      if (x[i] != 0) nz = true;
    }
    if (nz && seen.insert(x).second) {
      out.kernel_orders.push_back(z4_order(x));
      out.kernel.push_back(std::move(x));
    }
  }
  // image generators: the columns of A mod 4
  seen.clear();
  for (int c = 0; c < A.cols; ++c) {
    std::vector<Int> im(A.rows, 0);
    bool nz = false;
    for (int r = 0; r < A.rows; ++r) {
      im[r] = mod_norm(A.at(r, c), 4);
      if (im[r] != 0) nz = true;
    }
    if (nz && seen.insert(im).second) {
      out.image_orders.push_back(z4_order(im));
      out.image.push_back(std::move(im));
    }
  }
  return out;
}

}  // namespace vb5
