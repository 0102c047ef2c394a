#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cpn/charts.hpp"
#include "cpn/orbits.hpp"
#include "cpn/state.hpp"

namespace cpn {

/// Antisymmetric coefficient matrix of a 2-form, Ω = ½ Ω_ab dx^a ∧ dx^b.
struct TwoFormMatrix {
  std::vector<std::string> coords;
  Eigen::MatrixXd entries;
};

/// Ω = 4 Σ nᵢ dnᵢ ∧ dνᵢ in (n₁…n_n, ν₁…ν_n).  Throws EdgePoint on the boundary.
TwoFormMatrix omega_octant(const OctantTorusCoords& c,
                           const Tolerances& tol = kDefaultTolerances);

/// Coordinate names in form order: sigma, tau, theta1, phi1, theta2, phi2.
std::vector<std::string> orbit_form_names();

/// Ω = 2 sin2σ (dσ∧dτ + cosθ₁ dσ∧dφ₁ + cosθ₂ dσ∧dφ₂)
///     + cos2σ (sinθ₁ dθ₁∧dφ₁ + sinθ₂ dθ₂∧dφ₂).
TwoFormMatrix omega_orbit(const OrbitCoords& c);

/// Fubini-Study metric on CP³ in form order (σ, τ, θ₁, φ₁, θ₂, φ₂).
MetricMatrix orbit_metric_full(const OrbitCoords& c);

/// Embedding with parameters in form order (σ, τ, θ₁, φ₁, θ₂, φ₂).
Embedding orbit_form_embedding();

/// Pullback of 4 Im h through an embedding, by central differences.
TwoFormMatrix numeric_two_form_pullback(const Embedding& embedding,
                                        std::span<const double> point, double h = 1e-5);

/// A 2-form field: point → antisymmetric coefficient matrix.
using FormField = std::function<Eigen::MatrixXd(std::span<const double>)>;
/// A 1-form field: point → coefficient vector.
using OneFormField = std::function<Eigen::VectorXd(std::span<const double>)>;

/// max |∂_a Ω_bc + ∂_b Ω_ca + ∂_c Ω_ab| by central differences.
double closedness_residual(const FormField& field, std::span<const double> point,
                           double h = 1e-4);

/// (dA)_ab = ∂_a A_b − ∂_b A_a by central differences.
Eigen::MatrixXd exterior_derivative(const OneFormField& form, std::span<const double> point,
                                    double h = 1e-5);

/// 2 Σ nᵢ² dνᵢ in (n₁…n_n, ν₁…ν_n); its exterior derivative is omega_octant.
Eigen::VectorXd action_one_form(std::span<const double> point);

/// Max |pullback of Ω| over the given parameter points.
double lagrangian_residual(const Embedding& embedding,
                           std::span<const std::vector<double>> points, double h = 1e-5);

/// Maximally entangled states C = u/√2 with u = e^{−iφL_z} e^{−iθL_y} e^{−iψL_z};
/// parameters (θ, φ, ψ).
Embedding max_entangled_embedding();

/// Pfaffian of an even-dimensional antisymmetric matrix (recursive expansion
/// along the first row); 0 for odd dimension.
double pfaffian(const Eigen::MatrixXd& a);

/// Coefficient of d^{2n}x in (Ω/4)^{∧n}/n!, i.e. |Pf(Ω/4)|.
double liouville_volume_density(const TwoFormMatrix& omega);
double liouville_volume_density(const OctantTorusCoords& c);
double liouville_volume_density(const OrbitCoords& c);

/// √det g.
double metric_volume_density(const MetricMatrix& g);

struct RankReport {
  int rank = 0;
  bool clean = true;  // no singular value between the two thresholds
  Eigen::VectorXd singular_values;
};

/// Numerical rank: singular values above `high` count, below `low` do not.
RankReport form_rank(const Eigen::MatrixXd& m, double high = 1e-6, double low = 1e-10);

/// Restriction of omega_orbit to the constant-σ orbit (τ, θ₁, φ₁, θ₂, φ₂).
Eigen::MatrixXd omega_orbit_restricted(const OrbitCoords& c);

}  // namespace cpn
