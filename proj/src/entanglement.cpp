#include "cpn/entanglement.hpp"

#include <cmath>
#include <numbers>

#include "cpn/rotations.hpp"

namespace cpn {

namespace {

void require_two_qubits(const ProjectiveState& s) {
  if (s.dim() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "two-qubit operations need a 4-dim state");
  }
}

// wrap(ν₁ + ν₂ − ν₃ − offset).  An ABSENT phase is free, so any absent
// entry lets the relation hold exactly.
std::optional<double> phase_combination(const OctantTorusCoords& c, double offset) {
  if (c.phases.size() != 3) {
    throw Error(ErrorCode::DimensionMismatch, "CP³ coordinates need three phases");
  }
  if (!c.phases[0] && !c.phases[1] && !c.phases[2]) return std::nullopt;
  if (!c.phases[0] || !c.phases[1] || !c.phases[2]) return 0.0;
  return wrap_pi(*c.phases[0] + *c.phases[1] - *c.phases[2] - offset);
}

// det with unit modulus → e^{iα}; returns α.
double det_phase(const Eigen::Matrix2cd& m) { return std::arg(m.determinant()); }

}  // namespace

CoefficientMatrix as_coefficient_matrix(const ProjectiveState& s) {
  require_two_qubits(s);
  const Amplitudes& z = s.amplitudes();
  CoefficientMatrix c;
  c << z[0], z[1], z[2], z[3];
  return c;
}

ProjectiveState from_coefficient_matrix(const CoefficientMatrix& c) {
  Amplitudes z(4);
  z << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
  return normalize_and_gauge(z);
}

ProjectiveState product_state(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
  return from_coefficient_matrix(a * b.transpose());
}

ProjectiveState apply_local(const ProjectiveState& s, const Eigen::Matrix2cd& u1,
                            const Eigen::Matrix2cd& u2) {
  return from_coefficient_matrix(u1 * as_coefficient_matrix(s) * u2.transpose());
}

ReducedDensity partial_trace_A(const ProjectiveState& s) {
  const CoefficientMatrix c = as_coefficient_matrix(s);
  ReducedDensity r;
  r.rho = c * c.adjoint();
  const double dz = (r.rho(0, 0) - r.rho(1, 1)).real();
  r.bloch_radius = std::sqrt(dz * dz + 4.0 * std::norm(r.rho(0, 1)));
  return r;
}

SchmidtData schmidt_decompose(const ProjectiveState& s, const Tolerances& tol) {
  const CoefficientMatrix c = as_coefficient_matrix(s);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector2d sv = svd.singularValues();  // descending

  SchmidtData d;
  d.coefficients = {sv[0], sv[1]};
  d.schmidt_angle = std::atan2(sv[1], sv[0]);
  // C = U Σ V†; strip det phases so both factors are special unitary.
  const Eigen::Matrix2cd u = svd.matrixU();
  const Eigen::Matrix2cd vh = svd.matrixV().adjoint();
  const double alpha = det_phase(u);
  const double beta = det_phase(vh);
  d.u1 = u * std::polar(1.0, -alpha / 2);
  d.u2 = vh * std::polar(1.0, -beta / 2);
  d.global_phase = (alpha + beta) / 2;
  d.non_unique = std::abs(d.schmidt_angle - std::numbers::pi / 4) < tol.sigma;
  return d;
}

CoefficientMatrix schmidt_reconstruct(const SchmidtData& d) {
  const Eigen::Matrix2cd cs =
      Eigen::Vector2cd(d.coefficients[0], d.coefficients[1]).asDiagonal();
  return std::polar(1.0, d.global_phase) * d.u1 * cs * d.u2;
}

bool is_separable(const ProjectiveState& s, double tol) {
  return std::abs(as_coefficient_matrix(s).determinant()) < tol;
}

bool is_max_entangled(const ProjectiveState& s, double tol) {
  const CoefficientMatrix c = as_coefficient_matrix(s);
  return (c * c.adjoint() - 0.5 * Eigen::Matrix2cd::Identity()).norm() < tol;
}

SeparabilityResiduals separability_coordinate_residuals(const OctantTorusCoords& c) {
  if (c.radii.size() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "CP³ coordinates need four radii");
  }
  const auto& n = c.radii;
  return {n[0] * n[3] - n[1] * n[2], phase_combination(c, 0.0)};
}

MaxEntangledResiduals max_entangled_coordinate_residuals(const OctantTorusCoords& c) {
  if (c.radii.size() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "CP³ coordinates need four radii");
  }
  const auto& n = c.radii;
  return {n[0] - n[3], n[1] - n[2], phase_combination(c, std::numbers::pi)};
}

ClosestSeparable closest_separable(const ProjectiveState& s, const Tolerances& tol) {
  const SchmidtData d = schmidt_decompose(s, tol);
  // u₁|0⟩⟨0|u₂ = (u₁ e₀)(u₂ᵀ e₀)ᵀ.
  const Eigen::Vector2cd a = d.u1.col(0);
  const Eigen::Vector2cd b = d.u2.row(0).transpose();
  return {product_state(a, b), d.schmidt_angle,
          d.schmidt_angle < std::numbers::pi / 4 - tol.sigma};
}

ProjectiveState collapse_sphere_point(const ProjectiveState& s, double theta, double phi) {
  const CoefficientMatrix c = as_coefficient_matrix(s);
  const Eigen::Vector2cd a = spin_half_coherent(theta, phi);
  Eigen::Vector2cd b = c.transpose() * a.conjugate();
  b.normalize();
  return product_state(a, b);
}

std::vector<ProjectiveState> collapse_sphere(const ProjectiveState& s,
                                             std::span<const Eigen::Vector3d> directions,
                                             double tol) {
  if (!is_max_entangled(s, tol)) {
    throw Error(ErrorCode::NotMaxEntangled, "collapse sphere needs a maximally entangled state");
  }
  std::vector<ProjectiveState> out;
  out.reserve(directions.size());
  for (const auto& n : directions) {
    double theta = 0, phi = 0;
    polar_angles(n, theta, phi);
    out.push_back(collapse_sphere_point(s, theta, phi));
  }
  return out;
}

std::vector<ProjectiveState> collapse_sphere(const ProjectiveState& s, int samples,
                                             double tol) {
  const auto dirs = fibonacci_directions(samples);
  return collapse_sphere(s, dirs, tol);
}

std::vector<Eigen::Vector3d> fibonacci_directions(int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "need at least one direction");
  std::vector<Eigen::Vector3d> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = count == 1 ? 1.0 : 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    out.emplace_back(r * std::cos(golden * i), r * std::sin(golden * i), z);
  }
  return out;
}

ProjectiveState bell_phi_plus() { return normalize_and_gauge({1, 0, 0, 1}); }
ProjectiveState bell_phi_minus() { return normalize_and_gauge({1, 0, 0, -1}); }
ProjectiveState bell_psi_plus() { return normalize_and_gauge({0, 1, 1, 0}); }
ProjectiveState bell_psi_minus() { return normalize_and_gauge({0, 1, -1, 0}); }

}  // namespace cpn
