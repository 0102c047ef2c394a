#pragma once

#include <array>
#include <span>

#include <Eigen/Dense>

#include "cpn/charts.hpp"
#include "cpn/entanglement.hpp"
#include "cpn/state.hpp"

namespace cpn {

/// Coordinates on the local-unitary orbit through the Schmidt state with
/// angle σ: σ ∈ (0, π/4), θ₁, θ₂ ∈ (0, π), φ₁, φ₂, τ ∈ [0, 2π).
struct OrbitCoords {
  double sigma = 0.0;
  double tau = 0.0;
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;
};

/// C = e^{−iφ₁L_z} e^{iθ₁L_y} e^{−iτL_z} diag(cos σ, sin σ) e^{−iθ₂L_y} e^{−iφ₂L_z}.
CoefficientMatrix orbit_coefficients(const OrbitCoords& c);
ProjectiveState orbit_embed(const OrbitCoords& c);

/// C = u₁ diag(cos σ, sin σ) u₁⁻¹ u₃.
ProjectiveState orbit_embed_u3(double sigma, const Eigen::Matrix2cd& u1,
                               const Eigen::Matrix2cd& u3);

/// (u₁, u₃) reproducing orbit_embed(c) through orbit_embed_u3.
std::array<Eigen::Matrix2cd, 2> orbit_u3_factors(const OrbitCoords& c);

/// Coordinate names in metric order: theta1, phi1, theta2, phi2, tau.
std::vector<std::string> orbit_metric_names();

/// Closed-form intrinsic 5-metric in (θ₁, φ₁, θ₂, φ₂, τ).
MetricMatrix orbit_metric(const OrbitCoords& c);

/// Embedding with parameters (θ₁, φ₁, θ₂, φ₂, τ) at fixed σ.
Embedding orbit_embedding(double sigma);
/// Embedding with parameters (σ, θ₁, φ₁, θ₂, φ₂, τ).
Embedding orbit_embedding_full();

/// (1/32) cos²2σ sin2σ sinθ₁ sinθ₂.
double orbit_density(const OrbitCoords& c);

/// π³ cos²2σ sin2σ; throws OutOfRange outside [0, π/4].
double orbit_volume(double sigma);
/// Density of the Schmidt angle for Haar-random states: 6 cos²2σ sin2σ.
double schmidt_pdf(double sigma);
/// 1 − cos³2σ.
double schmidt_cdf(double sigma);

/// Mean-curvature trace K = 4(cos²2σ − 2sin²2σ)/(cos2σ sin2σ) of the orbit
/// as a hypersurface; throws OutOfRange unless 0 < σ < π/4.
double extrinsic_curvature_trace(double sigma);

/// Finite-difference estimate h^{ab} ∂_σ h_ab from numeric pullbacks at
/// σ ± delta, at the orbit point `c`.
double mean_curvature_estimate(const OrbitCoords& c, double delta = 1e-4);

/// Bi-invariant distance on SU(2)/Z₂: atan2(|q⃗|, |q₀|) with u†v = q₀ + i q⃗·σ⃗.
double su2_quotient_distance(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v);

}  // namespace cpn
