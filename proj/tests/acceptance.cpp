// End-to-end acceptance suite: one pass/fail line per criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "vb5/classifier.hpp"
#include "vb5/fixtures.hpp"
#include "vb5/framed.hpp"
#include "vb5/invariants.hpp"
#include "vb5/steenrod.hpp"

using namespace vb5;

namespace {

struct Failure {
  std::string what;
};

unsigned g_seed = 1;  // --seed N shifts every random stream

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::map<std::string, Space>& cache() {
  static std::map<std::string, Space> c;
  return c;
}

Space& space(const std::string& name) {
  auto it = cache().find(name);
  if (it == cache().end())
    it = cache().emplace(name, Space(fixture(name))).first;
  return it->second;
}

CohomologyClass gen(const Space& X, Ring r, int deg, size_t i = 0) {
  const auto& b = X.cohomology_basis(r, deg);
  if (i < b.free_generators.size()) return b.free_generators[i];
  return b.torsion_generators[i - b.free_generators.size()].rep;
}

std::vector<CohomologyClass> all_gens(const Space& X, Ring r, int deg) {
  const auto& b = X.cohomology_basis(r, deg);
  std::vector<CohomologyClass> out = b.free_generators;
  for (const auto& t : b.torsion_generators) out.push_back(t.rep);
  return out;
}

CohomologyClass plus(const CohomologyClass& a, const CohomologyClass& b,
                     int mod) {
  CohomologyClass out = a;
  for (size_t i = 0; i < out.cocycle.size(); ++i) {
    out.cocycle[i] += b.cocycle[i];
    if (mod) out.cocycle[i] %= mod;
  }
  return out;
}

std::vector<Int> random_cochain(const Space& X, int deg, std::mt19937& rng) {
  auto z = X.zero_class(Ring::Z2, deg);
  for (auto& v : z.cocycle) v = rng() % 2;
  return z.cocycle;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string group_str(const GradedAbelianGroup& g) {
  std::ostringstream os;
  os << "rank " << g.rank << " torsion [";
  for (const auto& t : g.torsion) os << t << " ";
  os << "]";
  return os.str();
}

void expect_group(const Space& X, Ring r, int deg, int rank,
                  std::vector<Int> torsion) {
  auto g = X.homology(r, deg);
  check(g.rank == rank && g.torsion == torsion,
        "H_" + std::to_string(deg) + " mismatch: got " + group_str(g));
}

// 1. homology tables on the fixture corpus, with runtime bounds
void criterion_homology() {
  auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k <= 5; ++k)
    expect_group(space("s5"), Ring::Z, k, (k == 0 || k == 5) ? 1 : 0, {});

  std::vector<int> betti_s1xs4 = {1, 1, 0, 0, 1, 1};
  std::vector<int> betti_s2xs3 = {1, 0, 1, 1, 0, 1};
  std::vector<int> betti_cp2 = {1, 0, 1, 0, 1};
  for (int k = 0; k <= 5; ++k) {
    expect_group(space("s1xs4"), Ring::Q, k, betti_s1xs4[k], {});
    expect_group(space("s2xs3"), Ring::Q, k, betti_s2xs3[k], {});
    if (k <= 4) expect_group(space("cp2"), Ring::Q, k, betti_cp2[k], {});
  }
  check(seconds_since(t0) < 10.0, "small fixtures exceeded 10 s");

  auto t1 = std::chrono::steady_clock::now();
  for (int k = 0; k <= 5; ++k) {
    int r2 = space("rp5").homology(Ring::Z2, k).rank;
    check(r2 == 1, "rp5 mod-2 rank in degree " + std::to_string(k));
  }
  check(seconds_since(t1) < 30.0, "rp5 mod-2 homology exceeded 30 s");

  expect_group(space("rp5"), Ring::Z, 0, 1, {});
  expect_group(space("rp5"), Ring::Z, 1, 0, {2});
  expect_group(space("rp5"), Ring::Z, 2, 0, {});
  expect_group(space("rp5"), Ring::Z, 3, 0, {2});
  expect_group(space("rp5"), Ring::Z, 4, 0, {});
  expect_group(space("rp5"), Ring::Z, 5, 1, {});
  check(seconds_since(t1) < 300.0, "rp5 integral homology exceeded 5 min");
}

// 2. Steenrod squares and the Pontryagin square
void criterion_steenrod() {
  auto& R = space("rp5");
  auto a = gen(R, Ring::Z2, 1);
  auto a2 = cup(R, a, a);
  auto a3 = cup(R, a2, a);
  auto a5 = cup(R, a2, a3);
  check(!R.is_zero_class(a5), "a^5 vanishes on rp5");
  check(R.is_same_class(sq2(R, a3), a5), "Sq2(a^3) != a^5 on rp5");

  std::mt19937 rng(g_seed + 101);
  auto& X = space("s2xs3");
  for (int trial = 0; trial < 50; ++trial) {
    int p = 1 + static_cast<int>(rng() % 2);
    int q = 1 + static_cast<int>(rng() % 2);
    auto u = random_cochain(X, p, rng);
    auto v = random_cochain(X, q, rng);
    auto lhs = X.coboundary(p + q - 1, cup1_cochain(X, p, u, q, v, 2), 2);
    auto uv = cup_cochain(X, p, u, q, v, 2);
    auto vu = cup_cochain(X, q, v, p, u, 2);
    auto duv = cup1_cochain(X, p + 1, X.coboundary(p, u, 2), q, v, 2);
    auto udv = cup1_cochain(X, p, u, q + 1, X.coboundary(q, v, 2), 2);
    for (size_t i = 0; i < lhs.size(); ++i)
      check((lhs[i] + uv[i] + vu[i] + duv[i] + udv[i]) % 2 == 0,
            "cup-1 coboundary identity");
  }

  auto sq2_or_zero = [](const Space& S, const CohomologyClass& c) {
    if (c.degree >= 2 && c.degree <= 3 && c.degree + 2 <= S.dim())
      return sq2(S, c);
    return S.zero_class(Ring::Z2, c.degree + 2);
  };
  for (auto name : {"s1xs4", "s2xs3"}) {
    auto& P = space(name);
    for (int p = 1; p <= 2; ++p) {
      for (int q = 1; p + q <= 3; ++q) {
        for (const auto& u : all_gens(P, Ring::Z2, p)) {
          for (const auto& v : all_gens(P, Ring::Z2, q)) {
            auto uv = cup(P, u, v);
            if (uv.degree < 2) continue;
            auto lhs = sq2(P, uv);
            auto rhs = plus(plus(cup(P, sq2_or_zero(P, u), v),
                                 cup(P, P.bockstein_sq1(u),
                                     P.bockstein_sq1(v)),
                                 2),
                            cup(P, u, sq2_or_zero(P, v)), 2);
            check(P.is_same_class(lhs, rhs),
                  std::string("Cartan instance on ") + name);
          }
        }
      }
    }
  }

  for (auto name : {"cp2", "rp5"}) {
    auto& P = space(name);
    auto basis = all_gens(P, Ring::Z2, 2);
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        auto lhs = pontryagin_square(P, plus(x, y, 2));
        auto rhs = plus(plus(pontryagin_square(P, x),
                             pontryagin_square(P, y), 4),
                        P.coefficient_map(cup(P, x, y), Ring::Z4), 4);
        check(P.is_same_class(lhs, rhs),
              std::string("quadratic refinement on ") + name);
        check(P.is_same_class(reduce_mod2(pontryagin_square(P, x)),
                              cup(P, x, x)),
              std::string("mod-2 reduction of the square on ") + name);
      }
    }
  }
}

// 3. Wu and Stiefel-Whitney classes, spin verdicts
void criterion_wu_sw() {
  auto& C = space("cp2");
  auto wuC = wu_classes(C);
  auto x = gen(C, Ring::Z, 2);
  check(C.is_same_class(wuC.v2, C.coefficient_map(x, Ring::Z2)),
        "v2(cp2) != reduction of the generator");

  auto& R = space("rp5");
  auto a = gen(R, Ring::Z2, 1);
  auto swR = stiefel_whitney(R);
  check(R.is_same_class(swR[1], cup(R, a, a)), "w2(rp5) != a^2");
  check(!R.is_zero_class(swR[1]), "w2(rp5) vanishes");

  for (auto name : {"s5", "s1xs4"}) {
    auto& X = space(name);
    for (const auto& w : stiefel_whitney(X))
      check(X.is_zero_class(w),
            std::string("nonzero Stiefel-Whitney class on ") + name);
  }

  check(is_spin(space("s5")), "s5 spin");
  check(is_spin(space("s1xs4")), "s1xs4 spin");
  check(is_spin(space("s2xs3")), "s2xs3 spin");
  check(!is_spin(space("rp5")), "rp5 not spin");
  check(!is_spin(space("cp2")), "cp2 not spin");
}

// 4. characteristic-triple image test and the two applicability conditions
void criterion_triple_pipeline() {
  auto& C = space("cp2");
  auto x = gen(C, Ring::Z, 2);
  auto x2 = cup(C, x, x);
  CohomologyClass c3 = x2;
  for (auto& v : c3.cocycle) v *= 3;
  BundleTriple tangent{C.coefficient_map(x, Ring::Z2),
                       C.coefficient_map(x2, Ring::Z2), c3};
  check(gamma_image_check(C, tangent), "cp2 tangent triple rejected");
  BundleTriple bad{C.zero_class(Ring::Z2, 2), C.zero_class(Ring::Z2, 4), x2};
  check(!gamma_image_check(C, bad), "(0, 0, x^2) accepted on cp2");

  auto grp = [](std::vector<Int> t) {
    GradedAbelianGroup g;
    g.degree = 4;
    g.torsion = std::move(t);
    return g;
  };
  check(condition_A_from_group(grp({})), "condition A on []");
  check(condition_A_from_group(grp({2, 2})), "condition A on [2,2]");
  check(!condition_A_from_group(grp({4})), "condition A on [4]");
  check(!condition_A_from_group(grp({12})), "condition A on [12]");

  auto& R = space("rp5");
  check(check_condition_B(R, ConditionBMode::mod2_source),
        "condition B (mod-2 source) on rp5");
  check(!check_condition_B(R, ConditionBMode::integral_source),
        "condition B (integral source) on rp5");
}

// 5. the Z2 extension over H^4
void criterion_pi4() {
  auto p5 = pi4_group(space("s5"));
  check(p5.base.rank == 0 && p5.base.torsion.empty() && p5.kernel_order == 2,
        "pi4(s5) != Z2");

  auto p14 = pi4_group(space("s1xs4"));
  check(p14.base.rank == 1 && p14.base.torsion.empty(), "pi4(s1xs4) base");
  check(p14.kernel_order == 2 && p14.splits, "pi4(s1xs4) split extension");
  check(p14.split_reason == Pi4Presentation::SplitReason::spin,
        "pi4(s1xs4) split reason");

  for (auto name : {"s5", "s1xs4", "s2xs3", "t5"})
    check(pi4_group(space(name)).kernel_order == 2,
          std::string("kernel order on ") + name);
}

// 6. bundle classification counts
void criterion_classification() {
  auto c5 = classify_rank5_spinnable(space("s5"));
  check(c5.w1_finite && c5.w1_count == 2, "s5 class count");
  check(c5.w2_finite && c5.w2_count == 0, "s5 W2 not empty");

  auto c14 = classify_rank5_spinnable(space("s1xs4"));
  check(!c14.w1_finite, "s1xs4 W1 should be infinite");
  check(c14.ker_rho2.generators.size() == 1 &&
            c14.ker_rho2.generators[0] == std::vector<Int>{2},
        "s1xs4 quaternionic subgroup is not the even classes");
  check(!c14.notes.empty(), "s1xs4 discrepancy note missing");
}

// 7. parallelizability verdicts and the covering rule
void criterion_verdicts() {
  auto v5 = parallelizability_verdict(space("s5"), true);
  check(v5.kind == Verdict::Kind::tangent_iso_pullback_TS5,
        "verdict(s5): " + verdict_name(v5.kind));
  auto v14 = parallelizability_verdict(space("s1xs4"), true);
  check(v14.kind == Verdict::Kind::parallelizable,
        "verdict(s1xs4): " + verdict_name(v14.kind));
  auto v23 = parallelizability_verdict(space("s2xs3"), true);
  check(v23.kind == Verdict::Kind::parallelizable,
        "verdict(s2xs3): " + verdict_name(v23.kind));
  check(covering_kappa(1, 0) == 0, "even cover must kill kappa");
}

// 8. the numerical framed-loop engine
void criterion_framed() {
  auto rotation_loop = [](int turns, int N) {
    SO5Loop loop;
    for (int k = 0; k <= N; ++k) {
      double t = 2.0 * M_PI * turns * k / N;
      Mat5 R = Mat5::Identity();
      R(1, 1) = std::cos(t);
      R(2, 2) = std::cos(t);
      R(1, 2) = -std::sin(t);
      R(2, 1) = std::sin(t);
      loop.samples.push_back(R);
    }
    loop.samples.back() = Mat5::Identity();
    return loop;
  };
  check(spin_lift_class(rotation_loop(1, 128)).bit == 1, "one turn");
  check(spin_lift_class(rotation_loop(2, 256)).bit == 0, "two turns");
  SO5Loop constant;
  constant.samples.assign(65, Mat5::Identity());
  check(spin_lift_class(constant).bit == 0, "constant loop");

  std::mt19937 rng(g_seed + 7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    SO5Loop S = rotation_loop(1 + trial % 2, 384);
    Mat5 W1, W2;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        W1(i, j) = g(rng);
        W2(i, j) = g(rng);
      }
    W1 = 0.04 * (W1 - W1.transpose().eval());
    W2 = 0.04 * (W2 - W2.transpose().eval());
    SO5Loop conj;
    size_t N = S.samples.size();
    for (size_t k = 0; k < N; ++k) {
      double s = static_cast<double>(k) / (N - 1);
      Mat5 w =
          std::sin(2 * M_PI * s) * W1 + (1 - std::cos(2 * M_PI * s)) * W2;
      Mat5 A = w.exp();
      conj.samples.push_back(A * S.samples[k] * A.transpose());
    }
    conj.samples.front() = Mat5::Identity();
    conj.samples.back() = Mat5::Identity();
    check(spin_lift_class(conj).bit == spin_lift_class(S).bit,
          "conjugation invariance");
  }

  check(spin_lift_class(rotation_loop(1, 256)).bit ==
            spin_lift_class(rotation_loop(1, 512)).bit,
        "refinement stability");

  auto t0 = std::chrono::steady_clock::now();
  int bit = spin_lift_class(loop_to_so5(example_s5_divisor(256))).bit;
  double dt = seconds_since(t0);
  check(bit == 1, "divisor example class");
  check(dt < 1.0, "divisor example exceeded 1 s");
}

// 9. exact linear algebra postconditions
void criterion_exact() {
  std::mt19937 rng(g_seed + 2027);
  auto unimodular = [](const IntMatrix& M) {
    auto d = snf_diagonal(M);
    if (static_cast<int>(d.size()) != M.rows) return false;
    for (const auto& v : d)
      if (v != 1) return false;
    return true;
  };
  for (int trial = 0; trial < 500; ++trial) {
    int r = 1 + static_cast<int>(rng() % 6);
    int c = 1 + static_cast<int>(rng() % 6);
    IntMatrix A(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (rng() % 3) A.set(i, j, static_cast<int>(rng() % 19) - 9);
    auto snf = smith_normal_form(A);
    check(snf.U * A * snf.V == snf.D, "UAV != D");
    check(unimodular(snf.U) && unimodular(snf.V), "transforms not unimodular");
    for (size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
      check(snf.diagonal[i + 1] % snf.diagonal[i] == 0, "divisor chain");
    for (const auto& [rc, v] : snf.D.entries)
      check(rc.first == rc.second && v != 0, "D not diagonal");

    for (int n : {0, 2, 4}) {
      std::vector<Int> x(c);
      for (auto& v : x) v = static_cast<int>(rng() % 7) - 3;
      auto b = A.apply(x);
      if (n)
        for (auto& v : b) {
          v %= n;
          if (v < 0) v += n;
        }
      auto sol = solve_mod(A, b, n);
      check(sol.has_value(), "solvable system reported unsolvable");
      auto chk = A.apply(*sol);
      for (int i = 0; i < r; ++i) {
        Int d = chk[i] - b[i];
        check(n ? (d % n == 0) : (d == 0), "returned non-solution");
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      g_seed = static_cast<unsigned>(std::stoul(argv[++i]));
    } else if (arg.rfind("--seed=", 0) == 0) {
      g_seed = static_cast<unsigned>(std::stoul(arg.substr(7)));
    } else {
      std::cerr << "usage: acceptance [--seed N]\n";
      return 2;
    }
  }

  struct Criterion {
    std::string name;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {"homology tables with runtime bounds", criterion_homology},
      {"steenrod squares and pontryagin square", criterion_steenrod},
      {"wu and stiefel-whitney classes", criterion_wu_sw},
      {"characteristic triple pipeline", criterion_triple_pipeline},
      {"pi4 extension structure", criterion_pi4},
      {"bundle classification counts", criterion_classification},
      {"parallelizability verdicts", criterion_verdicts},
      {"framed loop engine", criterion_framed},
      {"exact linear algebra postconditions", criterion_exact},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string label =
        "criterion " + std::to_string(i + 1) + ": " + criteria[i].name;
    try {
      criteria[i].run();
      std::cout << "PASS " << label << "\n";
    } catch (const Failure& f) {
      std::cout << "FAIL " << label << " [" << f.what << "]\n";
      ++failed;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << label << " [exception: " << e.what() << "]\n";
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
