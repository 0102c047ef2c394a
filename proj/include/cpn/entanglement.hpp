#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cpn/state.hpp"

namespace cpn {

// Two-qubit structure on CP³.  Amplitudes are read as the coefficient
// matrix with (Z⁰, Z¹, Z², Z³) ≡ (C₀₀, C₀₁, C₁₀, C₁₁); subsystem A is the
// row index and B the column index.

using CoefficientMatrix = Eigen::Matrix2cd;

CoefficientMatrix as_coefficient_matrix(const ProjectiveState& s);
ProjectiveState from_coefficient_matrix(const CoefficientMatrix& c);

/// |A⟩ ⊗ |B⟩, i.e. C_ij = a_i b_j.
ProjectiveState product_state(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b);

/// Apply u₁ ⊗ u₂ to a two-qubit state (C → u₁ C u₂ᵀ).
ProjectiveState apply_local(const ProjectiveState& s, const Eigen::Matrix2cd& u1,
                            const Eigen::Matrix2cd& u2);

struct ReducedDensity {
  Eigen::Matrix2cd rho;
  double bloch_radius = 0.0;
};

/// ρ^A = C C† for a normalized state.
ReducedDensity partial_trace_A(const ProjectiveState& s);

struct SchmidtData {
  std::array<double, 2> coefficients{};  // c₀ ≥ c₁ ≥ 0
  double schmidt_angle = 0.0;            // σ = arctan(c₁/c₀) ∈ [0, π/4]
  Eigen::Matrix2cd u1;                   // det u₁ = 1
  Eigen::Matrix2cd u2;                   // det u₂ = 1
  double global_phase = 0.0;             // C = e^{iχ} u₁ diag(c₀, c₁) u₂
  bool non_unique = false;               // σ = π/4: the decomposition is not unique
};

SchmidtData schmidt_decompose(const ProjectiveState& s,
                              const Tolerances& tol = kDefaultTolerances);

/// Reconstruct e^{iχ} u₁ diag(c) u₂.
CoefficientMatrix schmidt_reconstruct(const SchmidtData& d);

bool is_separable(const ProjectiveState& s, double tol = kDefaultTolerances.predicate);
bool is_max_entangled(const ProjectiveState& s, double tol = kDefaultTolerances.predicate);

/// (n₀n₃ − n₁n₂, wrap(ν₁ + ν₂ − ν₃)).
struct SeparabilityResiduals {
  double radial = 0.0;
  std::optional<double> phase;
};

/// (n₀ − n₃, n₁ − n₂, wrap(ν₁ + ν₂ − ν₃ − π)).
struct MaxEntangledResiduals {
  double radial_03 = 0.0;
  double radial_12 = 0.0;
  std::optional<double> phase;
};

// The phase relation involves the phases of all four amplitudes.  When one
// of them vanishes its phase is free and the relation can always be met, so
// the phase residual is 0 as soon as any of ν₁, ν₂, ν₃ is ABSENT.  It is
// ABSENT itself only when all three are.
SeparabilityResiduals separability_coordinate_residuals(const OctantTorusCoords& c);
MaxEntangledResiduals max_entangled_coordinate_residuals(const OctantTorusCoords& c);

struct ClosestSeparable {
  ProjectiveState state;
  double distance = 0.0;
  bool unique = true;
};

/// Nearest product state: the dominant corner of the Schmidt simplex mapped
/// back by the local unitaries.  Its distance is the Schmidt angle.
ClosestSeparable closest_separable(const ProjectiveState& s,
                                   const Tolerances& tol = kDefaultTolerances);

/// Product states at distance π/4 from a maximally entangled state, one per
/// Bloch direction n: |n⟩ ⊗ (Cᵀ|n̄⟩ normalized).
std::vector<ProjectiveState> collapse_sphere(const ProjectiveState& s,
                                             std::span<const Eigen::Vector3d> directions,
                                             double tol = kDefaultTolerances.predicate);
/// Same, over `samples` quasi-uniform (Fibonacci) directions.
std::vector<ProjectiveState> collapse_sphere(const ProjectiveState& s, int samples,
                                             double tol = kDefaultTolerances.predicate);

/// The collapse-sphere member for Bloch angles (θ, φ).
ProjectiveState collapse_sphere_point(const ProjectiveState& s, double theta, double phi);

/// Quasi-uniform unit vectors on S² (Fibonacci lattice).
std::vector<Eigen::Vector3d> fibonacci_directions(int count);

/// Bell states (|00⟩ ± |11⟩)/√2 and (|01⟩ ± |10⟩)/√2.
ProjectiveState bell_phi_plus();
ProjectiveState bell_phi_minus();
ProjectiveState bell_psi_plus();
ProjectiveState bell_psi_minus();

}  // namespace cpn
