#pragma once

#include <array>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cpn/charts.hpp"
#include "cpn/state.hpp"

namespace cpn {

/// Euler-angle coordinates on the CP³ octant:
///   n = (sin((τ−φ)/2) sin(θ/2), sin((τ+φ)/2) cos(θ/2),
///        cos((τ−φ)/2) sin(θ/2), cos((τ+φ)/2) cos(θ/2)).
/// The closed octant is τ ∈ [0, π], |φ| ≤ min(τ, π − τ), θ ∈ [0, π].
struct EulerOctantCoords {
  double tau = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

std::vector<double> euler_to_radii(const EulerOctantCoords& e);
bool in_euler_octant(const EulerOctantCoords& e, double slack = 1e-12);

// What the phases over an octant point are constrained to.
struct FullTorus {};
/// Σ coefficients[i]·ν_{i+1} ≡ offset (mod 2π).
struct PhaseRelation {
  std::vector<int> coefficients;
  double offset = 0.0;
};
/// cos(ν₃ − ν₁ − ν₂) = value: a 2-torus for |value| < 1, a 1-torus at ±1.
struct PhaseCosineRelation {
  double value = 0.0;
};
struct ExplicitPhases {
  std::vector<double> phases;
};
using FiberLocus = std::variant<FullTorus, PhaseRelation, PhaseCosineRelation, ExplicitPhases>;

struct SurfaceSample {
  std::vector<double> radii;
  ChartPoint chart_point;  // gnomonic
  FiberLocus fiber_locus;
};

/// One state over the sample's octant point satisfying its fiber locus
/// (free phases set to zero).
ProjectiveState representative_state(const SurfaceSample& s);

/// `count` states spread over the sample's fiber locus.
std::vector<ProjectiveState> fiber_states(const SurfaceSample& s, int count);

/// φ = 0 Euler surface with ν₁ + ν₂ − ν₃ = 0, on a tau_steps × theta_steps grid.
std::vector<SurfaceSample> separable_surface(int tau_steps, int theta_steps);

/// Octant geodesic n = (cos t, sin t, sin t, cos t)/√2, t ∈ [0, π/2], with
/// ν₁ + ν₂ − ν₃ = π.
std::vector<SurfaceSample> max_entangled_set(int steps);

/// Octant point of the maximally entangled line at parameter t.
std::vector<double> max_entangled_radii(double t);

/// Right hand side of cos(ν₃ − ν₁ − ν₂) = (n₀²n₃² + n₁²n₂² − cos²σ sin²σ)/(2n₀n₁n₂n₃).
/// Throws EdgePoint when some radius vanishes.
double fiber_cosine(std::span<const double> radii, double sigma);

/// True when (n₀n₃ − n₁n₂)² ≤ cos²σ sin²σ ≤ (n₀n₃ + n₁n₂)².
bool in_constant_sigma_region(std::span<const double> radii, double sigma, double slack = 0.0);

/// Grid points of the Euler octant (grid³ candidates) lying in the octant
/// image of the constant-σ orbit, each carrying its cosine fiber relation.
std::vector<SurfaceSample> constant_sigma_region(double sigma, int grid);

/// Boundary points of the constant-σ region on the τ = π/2 slice: half with
/// (n₀n₃ − n₁n₂)² = cos²σ sin²σ (fiber cosine +1), half with
/// (n₀n₃ + n₁n₂)² = cos²σ sin²σ (fiber cosine −1).
std::vector<SurfaceSample> constant_sigma_boundary(double sigma, int count);

/// Octant points at distance d from a corner, with full fiber tori.
/// `big_n` is 3 (CP²) or 4 (CP³); `samples` per free octant direction.
std::vector<SurfaceSample> distance_sphere(int big_n, int corner, double d, int samples);

enum class SpinSeed { Up, Zero };

/// Spin-1 rotations (θ, φ) of the m = +1 or m = 0 eigenstate of S_z.
std::vector<ProjectiveState> spin1_orbit(SpinSeed seed,
                                         std::span<const Eigen::Vector3d> directions);
ProjectiveState spin1_state(SpinSeed seed, double theta, double phi);

/// Standard basis followed by three Fourier-type bases of C³ (columns).
std::array<Eigen::Matrix3cd, 4> mub_bases();

/// Real points of CP² over an octant point: the four sign choices of the
/// phases (0 or π).
std::vector<ProjectiveState> real_locus(std::span<const double> radii);

}  // namespace cpn
