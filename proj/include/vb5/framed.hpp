#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vb5 {

/// q = w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  Quaternion() = default;
  Quaternion(double w, double x, double y, double z) : w(w), x(x), y(y), z(z) {}

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }

  Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
};

/// 2x2 quaternionic matrix [[a, b], [c, d]], unitary where required.
struct Sp2Element {
  Quaternion a, b, c, d;

  static Sp2Element identity() {
    return {{1, 0, 0, 0}, {}, {}, {1, 0, 0, 0}};
  }
};

using Mat5 = Eigen::Matrix<double, 5, 5>;

struct StableFramingClass {
  int bit = 0;
};

/// Loop in SO(5) based at the identity: samples R_0 = I, ..., R_N = I with
/// consecutive steps within Frobenius distance 0.1 of each other.
struct SO5Loop {
  std::vector<Mat5> samples;
};

struct FramedLoopSample {
  Eigen::VectorXd point;
  Eigen::VectorXd tangent;
  std::array<Eigen::VectorXd, 4> normal_frame;
  std::array<Eigen::VectorXd, 5> ambient_frame;
};

/// Closed framed circle: samples are cyclic (no duplicated endpoint).
/// (tangent, normal_frame) and ambient_frame must span the same 5-space.
struct FramedLoop {
  std::vector<FramedLoopSample> samples;
};

/// The double cover Sp(2) -> SO(5): X -> A X A* on trace-free quaternionic
/// Hermitian 2x2 matrices in the fixed orthonormal basis
/// {diag(1,-1)/sqrt2, offdiag(1), offdiag(i), offdiag(j), offdiag(k)}.
Mat5 cover_map(const Sp2Element& A);

/// Differential of the cover: quaternionic anti-Hermitian 2x2 (dim 10) to
/// antisymmetric 5x5 (dim 10), as a 10x10 matrix in fixed bases.
Eigen::Matrix<double, 10, 10> lie_algebra_iso();

/// Z2 class of the loop in pi_1(SO(5)): lift by Lie-algebra continuation
/// through the double cover; 0 if the lift closes at +I, 1 at -I.
StableFramingClass spin_lift_class(const SO5Loop& loop);

/// Change of basis from the ambient trivialization to (tangent, normals),
/// orthonormalized and left-translated to base at the identity.
SO5Loop loop_to_so5(const FramedLoop& fl);

StableFramingClass kappa_sum(const std::vector<StableFramingClass>& parts);

/// The circle S^1 x 0 in S^5 subset C + H with the framing induced by the
/// section (z,q) -> (0, jq) and the ambient Sp(1)-structure trivialization,
/// discretized at N >= 64 samples. With bounding_framing the normal frame
/// is instead extended from a disk, giving the null-bordant framed circle.
FramedLoop example_s5_divisor(int N, bool bounding_framing = false);

/// JSON round trip for framed loops.
std::string serialize_framed_loop(const FramedLoop& fl);
FramedLoop parse_framed_loop(const std::string& text);

}  // namespace vb5
