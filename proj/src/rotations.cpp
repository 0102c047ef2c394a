#include "cpn/rotations.hpp"

#include <algorithm>
#include <cmath>

namespace cpn {

namespace {
using C = std::complex<double>;
const C kI(0.0, 1.0);
}  // namespace

Eigen::Matrix2cd spin_half_z(double phi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(-kI * (phi / 2));
  m(1, 1) = std::exp(kI * (phi / 2));
  return m;
}

Eigen::Matrix2cd spin_half_y(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Vector2cd spin_half_coherent(double theta, double phi) {
  return Eigen::Vector2cd(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
}

Eigen::Matrix2cd spin_half_ly() {
  Eigen::Matrix2cd m;
  m << 0.0, -0.5 * kI, 0.5 * kI, 0.0;
  return m;
}

Eigen::Matrix2cd spin_half_lz() {
  Eigen::Matrix2cd m;
  m << 0.5, 0.0, 0.0, -0.5;
  return m;
}

Eigen::Matrix3cd spin_one_sy() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 1) = -kI * r;
  m(1, 0) = kI * r;
  m(1, 2) = -kI * r;
  m(2, 1) = kI * r;
  return m;
}

Eigen::Matrix3cd spin_one_sz() {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}

Eigen::Matrix3cd spin_one_rotation(double theta, double phi) {
  // Wigner d¹(θ) with rows/cols m = +1, 0, −1.
  const double c = std::cos(theta), s = std::sin(theta), r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d d;
  d << (1 + c) / 2, -s * r, (1 - c) / 2,
       s * r,        c,     -s * r,
       (1 - c) / 2,  s * r, (1 + c) / 2;
  Eigen::Matrix3cd out;
  const int m_values[3] = {1, 0, -1};
  for (int i = 0; i < 3; ++i) {
    const C phase = std::exp(-kI * (m_values[i] * phi));
    for (int j = 0; j < 3; ++j) out(i, j) = phase * d(i, j);
  }
  return out;
}

void polar_angles(const Eigen::Vector3d& direction, double& theta, double& phi) {
  const Eigen::Vector3d n = direction.normalized();
  theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  phi = std::atan2(n.y(), n.x());
}

}  // namespace cpn
