#include "vb5/chain.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace vb5 {

CellComplex CellComplex::from_complex(const SimplicialComplex& K) {
  CellComplex C;
  C.dim = K.dim;
  C.cells.resize(K.dim + 1);
  for (int k = 0; k <= K.dim; ++k) C.cells[k] = faces_of_dimension(K, k);
  return C;
}

int CellComplex::id_of(int k, const Simplex& s) const {
  if (k < 0 || k > dim) return -1;
  auto it = std::lower_bound(cells[k].begin(), cells[k].end(), s);
  if (it == cells[k].end() || *it != s) return -1;
  return static_cast<int>(it - cells[k].begin());
}

IntMatrix CellComplex::boundary_matrix(int k) const {
  IntMatrix D(count(k - 1), count(k));
  if (k <= 0 || k > dim) return D;
  Simplex face;
  for (int j = 0; j < count(k); ++j) {
    const Simplex& s = cells[k][j];
    for (size_t i = 0; i < s.size(); ++i) {
      face.clear();
      for (size_t t = 0; t < s.size(); ++t)
        if (t != i) face.push_back(s[t]);
      int r = id_of(static_cast<int>(k) - 1, face);
      D.set(r, j, (i % 2 == 0) ? 1 : -1);
    }
  }
  return D;
}

namespace {

inline long long chk_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("chain reduction coefficient overflow");
  return r;
}
inline long long chk_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("chain reduction coefficient overflow");
  return r;
}

struct Reducer {
  int dim;
  // bnd[k][cell]: sparse boundary of a degree-k cell (ids in degree k-1)
  std::vector<std::vector<std::map<int, long long>>> bnd;
  // cob[k][cell]: degree-(k+1) cells whose boundary touches this cell
  std::vector<std::vector<std::set<int>>> cob;
  std::vector<std::vector<char>> alive;

  // min-heap on (fill score, deg, a, b)
  using Cand = std::tuple<long long, int, int, int>;
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;

  explicit Reducer(const CellComplex& C) : dim(C.dim) {
    bnd.resize(dim + 1);
    cob.resize(dim + 1);
    alive.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) {
      bnd[k].resize(C.count(k));
      cob[k].resize(C.count(k));
      alive[k].assign(C.count(k), 1);
    }
    Simplex face;
    for (int k = 1; k <= dim; ++k) {
      for (int j = 0; j < C.count(k); ++j) {
        const Simplex& s = C.cells[k][j];
        for (size_t i = 0; i < s.size(); ++i) {
          face.clear();
          for (size_t t = 0; t < s.size(); ++t)
            if (t != i) face.push_back(s[t]);
          int r = C.id_of(k - 1, face);
          bnd[k][j][r] = (i % 2 == 0) ? 1 : -1;
          cob[k - 1][r].insert(j);
        }
      }
    }
    for (int k = 1; k <= dim; ++k)
      for (int b = 0; b < C.count(k); ++b)
        for (const auto& [a, v] : bnd[k][b]) push_cand(k - 1, a, b);
  }

  long long score(int deg, int a, int b) const {
    return chk_mul(static_cast<long long>(bnd[deg + 1][b].size()) - 1,
                   static_cast<long long>(cob[deg][a].size()) - 1);
  }

  void push_cand(int deg, int a, int b) {
    heap.emplace(score(deg, a, b), deg, a, b);
  }

  void run(std::vector<ElimStep>& log) {
    while (!heap.empty()) {
      auto [s, deg, a, b] = heap.top();
      heap.pop();
      if (!alive[deg][a] || !alive[deg + 1][b]) continue;
      auto it = bnd[deg + 1][b].find(a);
      if (it == bnd[deg + 1][b].end()) continue;
      long long eps = it->second;
      if (eps != 1 && eps != -1) continue;
      long long cur = score(deg, a, b);
      if (cur != s) {
        heap.emplace(cur, deg, a, b);
        continue;
      }
      eliminate(deg, a, b, eps, log);
    }
  }

  void eliminate(int deg, int a, int b, long long eps,
                 std::vector<ElimStep>& log) {
    ElimStep st;
    st.deg = deg;
    st.a = a;
    st.b = b;
    st.eps = static_cast<int>(eps);
    for (const auto& [e, mu] : bnd[deg + 1][b])
      if (e != a) st.bnd_b.emplace_back(e, mu);
    for (int c : cob[deg][a])
      if (c != b) st.cob_a.emplace_back(c, bnd[deg + 1][c].at(a));

    // bnd c -= (lambda / eps) * bnd b  for every other cofacet c of a
    for (const auto& [c, lambda] : st.cob_a) {
      long long q = chk_mul(lambda, eps);  // lambda / eps, eps = +-1
      for (const auto& [e, mu] : bnd[deg + 1][b]) {
        auto& row = bnd[deg + 1][c];
        auto pos = row.find(e);
        long long old = (pos == row.end()) ? 0 : pos->second;
        long long nv = chk_sub(old, chk_mul(q, mu));
        if (nv == 0) {
          if (pos != row.end()) {
            row.erase(pos);
            cob[deg][e].erase(c);
          }
        } else {
          if (pos == row.end()) {
            row[e] = nv;
            cob[deg][e].insert(c);
          } else {
            pos->second = nv;
          }
          if ((nv == 1 || nv == -1) && e != a) push_cand(deg, e, c);
        }
      }
    }
    // cells one degree up simply forget b
    if (deg + 2 <= dim) {
      for (int d : cob[deg + 1][b]) bnd[deg + 2][d].erase(b);
      cob[deg + 1][b].clear();
    }
    // drop a and b
    for (const auto& [e, mu] : bnd[deg + 1][b]) cob[deg][e].erase(b);
    bnd[deg + 1][b].clear();
    if (deg > 0) {
      for (const auto& [e, mu] : bnd[deg][a]) cob[deg - 1][e].erase(a);
      bnd[deg][a].clear();
    }
    cob[deg][a].clear();
    alive[deg][a] = 0;
    alive[deg + 1][b] = 0;
    log.push_back(std::move(st));
  }
};

inline Int mod_val(Int v, int n) {
  if (n == 0) return v;
  Int r = v % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

ChainReduction reduce_complex(const CellComplex& C) {
  Reducer red(C);
  ChainReduction out;
  out.dim = C.dim;
  red.run(out.log);

  out.survivors.resize(C.dim + 1);
  out.survivor_slot.resize(C.dim + 1);
  for (int k = 0; k <= C.dim; ++k) {
    out.survivor_slot[k].assign(C.count(k), -1);
    for (int j = 0; j < C.count(k); ++j) {
      if (red.alive[k][j]) {
        out.survivor_slot[k][j] = static_cast<int>(out.survivors[k].size());
        out.survivors[k].push_back(j);
      }
    }
  }
  out.boundary.resize(C.dim + 1);
  for (int k = 0; k <= C.dim; ++k) {
    out.boundary[k] = IntMatrix(out.count(k - 1), out.count(k));
    if (k == 0) continue;
    for (int j = 0; j < out.count(k); ++j) {
      int orig = out.survivors[k][j];
      for (const auto& [e, v] : red.bnd[k][orig]) {
        int slot = out.survivor_slot[k - 1][e];
        out.boundary[k].set(slot, j, v);
      }
    }
  }
  return out;
}

std::vector<Int> ChainReduction::pull_cochain(int k,
                                              const std::vector<Int>& reduced,
                                              int n) const {
  if (k < 0 || k > dim) throw std::invalid_argument("bad degree");
  if (reduced.size() != survivors[k].size())
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> vals(survivor_slot[k].size(), 0);
  for (size_t i = 0; i < survivors[k].size(); ++i)
    vals[survivors[k][i]] = mod_val(reduced[i], n);
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    const ElimStep& st = *it;
    if (st.deg == k) {
      Int acc = 0;
      for (const auto& [e, mu] : st.bnd_b) acc += Int(mu) * vals[e];
      vals[st.a] = mod_val(-Int(st.eps) * acc, n);
    } else if (st.deg + 1 == k) {
      vals[st.b] = 0;
    }
  }
  return vals;
}

std::vector<Int> ChainReduction::push_cochain(int k,
                                              const std::vector<Int>& original,
                                              int n) const {
  if (k < 0 || k > dim) throw std::invalid_argument("bad degree");
  if (original.size() != survivor_slot[k].size())
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> vals(original.size());
  for (size_t i = 0; i < original.size(); ++i) vals[i] = mod_val(original[i], n);
  for (const ElimStep& st : log) {
    if (st.deg + 1 != k) continue;
    if (vals[st.b] == 0) continue;
    Int scaled = Int(st.eps) * vals[st.b];
    for (const auto& [c, lambda] : st.cob_a)
      vals[c] = mod_val(vals[c] - Int(lambda) * scaled, n);
  }
  std::vector<Int> out(survivors[k].size());
  for (size_t i = 0; i < survivors[k].size(); ++i)
    out[i] = vals[survivors[k][i]];
  return out;
}

}  // namespace vb5
