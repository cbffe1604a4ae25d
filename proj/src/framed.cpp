#include "vb5/framed.hpp"

#include <cmath>
#include <complex>

#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace vb5 {

namespace {

using Mat4cd = Eigen::Matrix4cd;
using Vec3cd = Eigen::Vector3cd;
using cd = std::complex<double>;

Quaternion qneg(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }

// [[a,b],[c,d]] algebra on Sp2Element
Sp2Element mul(const Sp2Element& A, const Sp2Element& B) {
  return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
          A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
}

Sp2Element dagger(const Sp2Element& A) {
  return {A.a.conj(), A.c.conj(), A.b.conj(), A.d.conj()};
}

double re_trace(const Sp2Element& A) { return A.a.w + A.d.w; }

// <Y, Z> = Re tr(Y Z^dagger)
double inner(const Sp2Element& Y, const Sp2Element& Z) {
  return re_trace(mul(Y, dagger(Z)));
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// orthonormal basis of trace-free Hermitian 2x2 quaternionic matrices
std::array<Sp2Element, 5> hermitian_basis() {
  Quaternion one{1, 0, 0, 0}, qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, qk{0, 0, 0, 1};
  std::array<Sp2Element, 5> X;
  X[0] = {one * kInvSqrt2, {}, {}, qneg(one) * kInvSqrt2};
  auto off = [&](const Quaternion& q) -> Sp2Element {
    return {{}, q * kInvSqrt2, q.conj() * kInvSqrt2, {}};
  };
  X[1] = off(one);
  X[2] = off(qi);
  X[3] = off(qj);
  X[4] = off(qk);
  return X;
}

// basis of the anti-Hermitian matrices (the Lie algebra of Sp(2))
std::array<Sp2Element, 10> antihermitian_basis() {
  Quaternion one{1, 0, 0, 0}, qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, qk{0, 0, 0, 1};
  std::array<Sp2Element, 10> xi;
  auto diag1 = [](const Quaternion& q) -> Sp2Element { return {q, {}, {}, {}}; };
  auto diag2 = [](const Quaternion& q) -> Sp2Element { return {{}, {}, {}, q}; };
  auto off = [](const Quaternion& q) -> Sp2Element {
    return {{}, q, qneg(q.conj()), {}};
  };
  xi[0] = diag1(qi);
  xi[1] = diag1(qj);
  xi[2] = diag1(qk);
  xi[3] = diag2(qi);
  xi[4] = diag2(qj);
  xi[5] = diag2(qk);
  xi[6] = off(one);
  xi[7] = off(qi);
  xi[8] = off(qj);
  xi[9] = off(qk);
  return xi;
}

// complex 2x2 image of a quaternion: [[w+xi, y+zi], [-y+zi, w-xi]]
void put_quaternion(Mat4cd& M, int r, int c, const Quaternion& q) {
  M(r, c) = cd(q.w, q.x);
  M(r, c + 1) = cd(q.y, q.z);
  M(r + 1, c) = cd(-q.y, q.z);
  M(r + 1, c + 1) = cd(q.w, -q.x);
}

Mat4cd to_complex(const Sp2Element& A) {
  Mat4cd M;
  put_quaternion(M, 0, 0, A.a);
  put_quaternion(M, 0, 2, A.b);
  put_quaternion(M, 2, 0, A.c);
  put_quaternion(M, 2, 2, A.d);
  return M;
}

// indices of the strict upper triangle of an antisymmetric 5x5 matrix
constexpr int kPairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                               {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

Eigen::Matrix<double, 10, 1> vec_antisym(const Mat5& W) {
  Eigen::Matrix<double, 10, 1> v;
  for (int m = 0; m < 10; ++m) v(m) = W(kPairs[m][0], kPairs[m][1]);
  return v;
}

struct CoverData {
  std::array<Sp2Element, 5> X = hermitian_basis();
  std::array<Sp2Element, 10> xi = antihermitian_basis();
  std::array<Mat4cd, 10> xi_c;
  Eigen::Matrix<double, 10, 10> dpi;
  Eigen::PartialPivLU<Eigen::Matrix<double, 10, 10>> dpi_lu;

  CoverData() {
    for (int m = 0; m < 10; ++m) {
      xi_c[m] = to_complex(xi[m]);
      Mat5 W;
      for (int j = 0; j < 5; ++j) {
        Sp2Element Y = mul(xi[m], X[j]);
        Sp2Element Z = mul(X[j], xi[m]);
        Sp2Element D{Y.a - Z.a, Y.b - Z.b, Y.c - Z.c, Y.d - Z.d};
        for (int k = 0; k < 5; ++k) W(k, j) = inner(D, X[k]);
      }
      dpi.col(m) = vec_antisym(W);
    }
    dpi_lu.compute(dpi);
  }
};

const CoverData& cover_data() {
  static CoverData d;
  return d;
}

void require_unitary(const Sp2Element& A) {
  Sp2Element U = mul(A, dagger(A));
  Quaternion one{1, 0, 0, 0};
  double err = (U.a - one).norm2() + U.b.norm2() + U.c.norm2() +
               (U.d - one).norm2();
  if (std::sqrt(err) > 1e-8)
    throw std::invalid_argument("matrix is not unitary");
}

void validate_so5_loop(const SO5Loop& loop) {
  if (loop.samples.size() < 2)
    throw std::invalid_argument("loop needs at least two samples");
  if ((loop.samples.front() - Mat5::Identity()).norm() > 1e-9 ||
      (loop.samples.back() - Mat5::Identity()).norm() > 1e-9)
    throw std::invalid_argument("loop must start and end at the identity");
  for (const Mat5& R : loop.samples) {
    if ((R * R.transpose() - Mat5::Identity()).norm() > 1e-9 ||
        std::abs(R.determinant() - 1.0) > 1e-6)
      throw std::invalid_argument("sample is not special orthogonal");
  }
}

// hermitian projection of v away from the unit vector u
Vec3cd project_out(const Vec3cd& u, const Vec3cd& v) {
  return v - u * (u.adjoint() * v)(0);
}

cd det3(const Vec3cd& r0, const Vec3cd& r1, const Vec3cd& r2) {
  Eigen::Matrix3cd M;
  M.row(0) = r0.transpose();
  M.row(1) = r1.transpose();
  M.row(2) = r2.transpose();
  return M.determinant();
}

Eigen::VectorXd to_real6(const Vec3cd& c) {
  Eigen::VectorXd v(6);
  for (int a = 0; a < 3; ++a) {
    v(2 * a) = c(a).real();
    v(2 * a + 1) = c(a).imag();
  }
  return v;
}

// the quaternionic structure of the fiber at one sample of the S^5 circle:
// complex orthonormal basis (e1, e2) and the unit determinant scalar
struct FiberData {
  Vec3cd p;       // base point, unit
  Vec3cd e1, e2;  // hermitian-orthonormal fiber basis
  cd lambda;      // det[p, e1, e2] normalized to modulus 1
};

FiberData fiber_at(const Vec3cd& p, const Vec3cd& seed) {
  FiberData F;
  F.p = p;
  Vec3cd f = project_out(p, seed);
  double n = f.norm();
  if (n < 1e-8) throw std::runtime_error("degenerate fiber seed");
  F.e1 = f / n;
  // second basis vector: best-conditioned standard candidate
  Vec3cd best = Vec3cd::Zero();
  double best_n = -1;
  for (int m = 0; m < 3; ++m) {
    Vec3cd c = project_out(F.e1, project_out(p, Vec3cd::Unit(m)));
    if (c.norm() > best_n) {
      best_n = c.norm();
      best = c;
    }
  }
  F.e2 = best / best.norm();
  cd l = det3(p, F.e1, F.e2);
  F.lambda = l / std::abs(l);
  return F;
}

// J(a e1 + b e2) = conj(lambda) (-conj(b) e1 + conj(a) e2)
Vec3cd apply_J(const FiberData& F, const Vec3cd& v) {
  cd a = (F.e1.adjoint() * v)(0);
  cd b = (F.e2.adjoint() * v)(0);
  return std::conj(F.lambda) * (-std::conj(b) * F.e1 + std::conj(a) * F.e2);
}

// left multiplication by the quaternion (w,x,y,z) in the module structure
// (v, iv, Jv, iJv) of the fiber
Vec3cd apply_quaternion(const FiberData& F, const Quaternion& s,
                        const Vec3cd& v) {
  Vec3cd jv = apply_J(F, v);
  return s.w * v + cd(0, s.x) * v + s.y * jv + cd(0, s.z) * jv;
}

}  // namespace

Mat5 cover_map(const Sp2Element& A) {
  require_unitary(A);
  const auto& X = cover_data().X;
  Mat5 R;
  Sp2Element Ad = dagger(A);
  for (int j = 0; j < 5; ++j) {
    Sp2Element Y = mul(mul(A, X[j]), Ad);
    for (int k = 0; k < 5; ++k) R(k, j) = inner(Y, X[k]);
  }
  return R;
}

Eigen::Matrix<double, 10, 10> lie_algebra_iso() { return cover_data().dpi; }

StableFramingClass spin_lift_class(const SO5Loop& loop) {
  validate_so5_loop(loop);
  const CoverData& cd_ = cover_data();
  Mat4cd S = Mat4cd::Identity();
  for (size_t k = 0; k + 1 < loop.samples.size(); ++k) {
    Mat5 step = loop.samples[k + 1] * loop.samples[k].transpose();
    if ((step - Mat5::Identity()).norm() >= 0.1)
      throw std::invalid_argument("loop step bound 0.1 violated");
    Mat5 w = step.log();
    w = 0.5 * (w - w.transpose().eval());
    Eigen::Matrix<double, 10, 1> coords = cd_.dpi_lu.solve(vec_antisym(w));
    Mat4cd xi = Mat4cd::Zero();
    for (int m = 0; m < 10; ++m) xi += coords(m) * cd_.xi_c[m];
    S = xi.exp() * S;
  }
  double dplus = (S - Mat4cd::Identity()).norm();
  double dminus = (S + Mat4cd::Identity()).norm();
  if (std::min(dplus, dminus) > 1e-6)
    throw std::runtime_error("lift endpoint is not +-I");
  return {dminus < dplus ? 1 : 0};
}

SO5Loop loop_to_so5(const FramedLoop& fl) {
  size_t n = fl.samples.size();
  if (n < 2) throw std::invalid_argument("framed loop needs samples");
  std::vector<Mat5> frames;
  frames.reserve(n);
  for (const auto& s : fl.samples) {
    Eigen::Index d = s.point.size();
    Eigen::MatrixXd A(d, 5), B(d, 5);
    for (int c = 0; c < 5; ++c) A.col(c) = s.ambient_frame[c];
    B.col(0) = s.tangent;
    for (int c = 0; c < 4; ++c) B.col(c + 1) = s.normal_frame[c];
    Eigen::MatrixXd M = A.colPivHouseholderQr().solve(B);
    if ((A * M - B).norm() > 1e-6 * (1.0 + B.norm()))
      throw std::invalid_argument("frames do not span the same subspace");
    // Gram-Schmidt in fixed column order
    Mat5 Q;
    for (int c = 0; c < 5; ++c) {
      Eigen::Matrix<double, 5, 1> v = M.col(c);
      for (int p = 0; p < c; ++p) v -= Q.col(p).dot(M.col(c)) * Q.col(p);
      double nrm = v.norm();
      if (nrm < 1e-8)
        throw std::invalid_argument("change of basis is singular");
      Q.col(c) = v / nrm;
    }
    if (Q.determinant() < 0)
      throw std::invalid_argument("frames have opposite orientations");
    frames.push_back(Q);
  }
  SO5Loop out;
  out.samples.reserve(n + 1);
  Mat5 base_inv = frames[0].transpose();
  out.samples.push_back(Mat5::Identity());
  for (size_t k = 1; k < n; ++k) out.samples.push_back(frames[k] * base_inv);
  out.samples.push_back(Mat5::Identity());
  return out;
}

StableFramingClass kappa_sum(const std::vector<StableFramingClass>& parts) {
  int b = 0;
  for (const auto& p : parts) b ^= (p.bit & 1);
  return {b};
}

FramedLoop example_s5_divisor(int N, bool bounding_framing) {
  if (N < 64) throw std::invalid_argument("need at least 64 samples");
  FramedLoop fl;
  fl.samples.resize(N);

  // propagate the quaternionic generator of the fiber around the circle
  std::vector<FiberData> fibers(N);
  Vec3cd f(0, 1, 0);
  for (int k = 0; k < N; ++k) {
    double th = 2.0 * M_PI * k / N;
    Vec3cd p(cd(std::cos(th), std::sin(th)), 0, 0);
    fibers[k] = fiber_at(p, f);
    f = fibers[k].e1;
  }
  // closure defect: quaternion carrying the once-propagated frame back to
  // the start; distributed along the loop (pi_1(Sp(1)) is trivial)
  {
    Vec3cd fN = project_out(fibers[0].p, f);
    fN /= fN.norm();
    FiberData F0 = fibers[0];
    Vec3cd f0(0, 1, 0);
    cd a = (fN.adjoint() * f0)(0);
    cd b = (apply_J(F0, fN).adjoint() * f0)(0);
    Quaternion u{a.real(), a.imag(), b.real(), b.imag()};
    double unorm = std::sqrt(u.norm2());
    u = u * (1.0 / unorm);
    double phi = std::atan2(std::sqrt(u.x * u.x + u.y * u.y + u.z * u.z), u.w);
    if (phi > 1e-12) {
      double s = std::sin(phi);
      Quaternion axis{0, u.x / s, u.y / s, u.z / s};
      for (int k = 0; k < N; ++k) {
        double t = phi * k / N;
        Quaternion sk{std::cos(t), axis.x * std::sin(t),
                      axis.y * std::sin(t), axis.z * std::sin(t)};
        Vec3cd corrected = apply_quaternion(fibers[k], sk, fibers[k].e1);
        fibers[k] = fiber_at(fibers[k].p, corrected);
      }
    }
  }

  for (int k = 0; k < N; ++k) {
    double th = 2.0 * M_PI * k / N;
    auto& s = fl.samples[k];
    const FiberData& F = fibers[k];
    s.point = to_real6(F.p);
    s.tangent = to_real6(cd(0, 1) * F.p);
    // framing from the section (z,q) -> (0, jq): constant (0, N) frames
    for (int m = 0; m < 4; ++m) {
      s.normal_frame[m] = Eigen::VectorXd::Zero(6);
    }
    if (!bounding_framing) {
      s.normal_frame[0](2) = 1;  // (0, 1)
      s.normal_frame[1](3) = 1;  // (0, i)
      s.normal_frame[2](4) = 1;  // (0, j)
      s.normal_frame[3](5) = 1;  // (0, k)
    } else {
      // frame extended from the disk bounded by the circle: rotates with
      // the determinant phase, matching the trivialization
      s.normal_frame[0](2) = 1;
      s.normal_frame[1](3) = 1;
      s.normal_frame[2](4) = std::cos(th);
      s.normal_frame[2](5) = -std::sin(th);
      s.normal_frame[3](4) = std::sin(th);
      s.normal_frame[3](5) = std::cos(th);
    }
    Vec3cd jf = apply_J(F, F.e1);
    s.ambient_frame[0] = s.tangent;  // the vector field X
    s.ambient_frame[1] = to_real6(F.e1);
    s.ambient_frame[2] = to_real6(cd(0, 1) * F.e1);
    s.ambient_frame[3] = to_real6(jf);
    s.ambient_frame[4] = to_real6(cd(0, 1) * jf);
  }
  return fl;
}

std::string serialize_framed_loop(const FramedLoop& fl) {
  nlohmann::json j;
  auto vec = [](const Eigen::VectorXd& v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    return out;
  };
  j["samples"] = nlohmann::json::array();
  for (const auto& s : fl.samples) {
    nlohmann::json js;
    js["point"] = vec(s.point);
    js["tangent"] = vec(s.tangent);
    for (const auto& nf : s.normal_frame) js["normal_frame"].push_back(vec(nf));
    for (const auto& af : s.ambient_frame)
      js["ambient_frame"].push_back(vec(af));
    j["samples"].push_back(std::move(js));
  }
  return j.dump(2);
}

FramedLoop parse_framed_loop(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto vec = [](const nlohmann::json& a) {
    Eigen::VectorXd v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v(i) = a[i].get<double>();
    return v;
  };
  FramedLoop fl;
  for (const auto& js : j.at("samples")) {
    FramedLoopSample s;
    s.point = vec(js.at("point"));
    s.tangent = vec(js.at("tangent"));
    const auto& nf = js.at("normal_frame");
    const auto& af = js.at("ambient_frame");
    if (nf.size() != 4 || af.size() != 5)
      throw std::invalid_argument("framed loop needs 4 normal and 5 ambient "
                                  "frame vectors per sample");
    for (int m = 0; m < 4; ++m) s.normal_frame[m] = vec(nf[m]);
    for (int m = 0; m < 5; ++m) s.ambient_frame[m] = vec(af[m]);
    fl.samples.push_back(std::move(s));
  }
  return fl;
}

}  // namespace vb5
