#include "cpn/orbits.hpp"

#include <cmath>
#include <numbers>

#include "cpn/rotations.hpp"

namespace cpn {

namespace {

constexpr double kPi = std::numbers::pi;

void require_closed_range(double sigma) {
  if (!(sigma >= 0.0 && sigma <= kPi / 4)) {
    throw Error(ErrorCode::OutOfRange, "Schmidt angle must lie in [0, π/4]");
  }
}

Eigen::Matrix2cd schmidt_diagonal(double sigma) {
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  d(0, 0) = std::cos(sigma);
  d(1, 1) = std::sin(sigma);
  return d;
}

OrbitCoords from_metric_order(double sigma, std::span<const double> p) {
  return {sigma, p[4], p[0], p[1], p[2], p[3]};
}

}  // namespace

CoefficientMatrix orbit_coefficients(const OrbitCoords& c) {
  return spin_half_z(c.phi1) * spin_half_y(-c.theta1) * spin_half_z(c.tau) *
         schmidt_diagonal(c.sigma) * spin_half_y(c.theta2) * spin_half_z(c.phi2);
}

ProjectiveState orbit_embed(const OrbitCoords& c) {
  return from_coefficient_matrix(orbit_coefficients(c));
}

ProjectiveState orbit_embed_u3(double sigma, const Eigen::Matrix2cd& u1,
                               const Eigen::Matrix2cd& u3) {
  return from_coefficient_matrix(u1 * schmidt_diagonal(sigma) * u1.adjoint() * u3);
}

std::array<Eigen::Matrix2cd, 2> orbit_u3_factors(const OrbitCoords& c) {
  // The diagonal factor commutes with e^{−iτL_z}; split τ evenly.
  const Eigen::Matrix2cd u1 = spin_half_z(c.phi1) * spin_half_y(-c.theta1) * spin_half_z(c.tau / 2);
  const Eigen::Matrix2cd u2 = spin_half_z(c.tau / 2) * spin_half_y(c.theta2) * spin_half_z(c.phi2);
  return {u1, u1 * u2};
}

std::vector<std::string> orbit_metric_names() {
  return {"theta1", "phi1", "theta2", "phi2", "tau"};
}

MetricMatrix orbit_metric(const OrbitCoords& c) {
  const double s = std::sin(2.0 * c.sigma);
  const double s2 = s * s;
  const double st1 = std::sin(c.theta1), ct1 = std::cos(c.theta1);
  const double st2 = std::sin(c.theta2), ct2 = std::cos(c.theta2);
  const double ctau = std::cos(c.tau), stau = std::sin(c.tau);
  enum { T1, P1, T2, P2, TAU };

  Eigen::Matrix<double, 5, 5> g = Eigen::Matrix<double, 5, 5>::Zero();
  auto set = [&g](int i, int j, double v) { g(i, j) = g(j, i) = v; };
  set(T1, T1, 1.0);
  set(T2, T2, 1.0);
  set(P1, P1, st1 * st1 + s2 * ct1 * ct1);
  set(P2, P2, st2 * st2 + s2 * ct2 * ct2);
  set(TAU, TAU, s2);
  set(T1, T2, -s * ctau);
  set(P1, P2, s * ctau * st1 * st2 + s2 * ct1 * ct2);
  set(T1, P2, -s * stau * st2);
  set(T2, P1, -s * stau * st1);
  set(P1, TAU, s2 * ct1);
  set(P2, TAU, s2 * ct2);

  MetricMatrix m;
  m.coords = orbit_metric_names();
  m.entries = 0.25 * g;
  return m;
}

Embedding orbit_embedding(double sigma) {
  return [sigma](std::span<const double> p) { return orbit_embed(from_metric_order(sigma, p)); };
}

Embedding orbit_embedding_full() {
  return [](std::span<const double> p) { return orbit_embed(from_metric_order(p[0], p.subspan(1))); };
}

double orbit_density(const OrbitCoords& c) {
  const double c2 = std::cos(2.0 * c.sigma);
  return c2 * c2 * std::sin(2.0 * c.sigma) * std::sin(c.theta1) * std::sin(c.theta2) / 32.0;
}

double orbit_volume(double sigma) {
  require_closed_range(sigma);
  const double c2 = std::cos(2.0 * sigma);
  return kPi * kPi * kPi * c2 * c2 * std::sin(2.0 * sigma);
}

double schmidt_pdf(double sigma) {
  require_closed_range(sigma);
  const double c2 = std::cos(2.0 * sigma);
  return 6.0 * c2 * c2 * std::sin(2.0 * sigma);
}

double schmidt_cdf(double sigma) {
  require_closed_range(sigma);
  const double c2 = std::cos(2.0 * sigma);
  return 1.0 - c2 * c2 * c2;
}

double extrinsic_curvature_trace(double sigma) {
  if (!(sigma > 0.0 && sigma < kPi / 4)) {
    throw Error(ErrorCode::OutOfRange, "curvature is singular at the ends of (0, π/4)");
  }
  const double c2 = std::cos(2.0 * sigma);
  const double s2 = std::sin(2.0 * sigma);
  return 4.0 * (c2 * c2 - 2.0 * s2 * s2) / (c2 * s2);
}

double mean_curvature_estimate(const OrbitCoords& c, double delta) {
  const std::array<double, 5> p{c.theta1, c.phi1, c.theta2, c.phi2, c.tau};
  const Eigen::MatrixXd h = numeric_pullback(orbit_embedding(c.sigma), p).entries;
  const Eigen::MatrixXd hp = numeric_pullback(orbit_embedding(c.sigma + delta), p).entries;
  const Eigen::MatrixXd hm = numeric_pullback(orbit_embedding(c.sigma - delta), p).entries;
  const Eigen::MatrixXd dh = (hp - hm) / (2.0 * delta);
  return h.ldlt().solve(dh).trace();
}

double su2_quotient_distance(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v) {
  const Eigen::Matrix2cd w = u.adjoint() * v;
  const Complex q0 = 0.5 * w.trace();
  // Remaining components from the traceless part.
  const Eigen::Matrix2cd rest = w - q0 * Eigen::Matrix2cd::Identity();
  const double q = std::sqrt(0.5 * rest.squaredNorm());
  return std::atan2(q, std::abs(q0));
}

}  // namespace cpn
