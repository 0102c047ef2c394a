#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cpn/error.hpp"
#include "cpn/tolerances.hpp"

namespace cpn {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

class ProjectiveState;

ProjectiveState normalize_and_gauge(const Amplitudes& raw,
                                    const Tolerances& tol = kDefaultTolerances);

/// A point of CP^n: a unit-norm amplitude vector whose first non-negligible
/// amplitude (the gauge carrier) is real and positive.
///
/// Instances are only produced by normalize_and_gauge(), so every value
/// satisfies both invariants.
class ProjectiveState {
 public:
  const Amplitudes& amplitudes() const noexcept { return z_; }
  int dim() const noexcept { return static_cast<int>(z_.size()); }
  Complex operator[](int k) const { return z_[k]; }

  /// Index of the gauge carrier amplitude.
  int carrier() const noexcept { return carrier_; }

  /// Computational basis state |k⟩ in dimension `dim`.
  static ProjectiveState basis(int dim, int k);

 private:
  friend ProjectiveState normalize_and_gauge(const Amplitudes&, const Tolerances&);
  ProjectiveState(Amplitudes z, int carrier) : z_(std::move(z)), carrier_(carrier) {}

  Amplitudes z_;
  int carrier_ = 0;
};

/// Octant radii n₀…n_n plus torus phases ν₁…ν_n.  A phase is std::nullopt
/// (ABSENT) when its radius vanishes or its index does not exceed the gauge
/// carrier.
struct OctantTorusCoords {
  std::vector<double> radii;
  std::vector<std::optional<double>> phases;
};

/// A tangent direction at `base`, represented in homogeneous coordinates.
struct TangentVector {
  ProjectiveState base;
  Amplitudes delta;
};

/// Symmetric coefficient matrix of a metric in named coordinates.
struct MetricMatrix {
  std::vector<std::string> coords;
  Eigen::MatrixXd entries;
};

ProjectiveState normalize_and_gauge(std::initializer_list<Complex> raw);

OctantTorusCoords to_octant_torus(const ProjectiveState& s,
                                  const Tolerances& tol = kDefaultTolerances);
ProjectiveState from_octant_torus(const OctantTorusCoords& c,
                                  const Tolerances& tol = kDefaultTolerances);

/// Fubini-Study distance in [0, π/2].
double fs_distance(const ProjectiveState& a, const ProjectiveState& b);

/// Hermitian form h(u, v) of the Fubini-Study structure at homogeneous
/// point z.  Its real part is the metric and 4·Im the symplectic form.
Complex fs_hermitian(const Amplitudes& z, const Amplitudes& u, const Amplitudes& v);

/// ds² along a tangent direction.
double fs_metric_homogeneous(const TangentVector& v);
double fs_metric_homogeneous(const Amplitudes& z, const Amplitudes& dz);

/// Fubini-Study metric in coordinates (n₁…n_n, ν₁…ν_n) with n₀ eliminated.
MetricMatrix octant_torus_metric(const OctantTorusCoords& c,
                                 const Tolerances& tol = kDefaultTolerances);

/// Names used for octant-torus coordinates: n1..nn, nu1..nun.
std::vector<std::string> octant_coordinate_names(int n);

/// Reduce an angle into [0, 2π).
double wrap_two_pi(double angle);
/// Reduce an angle into (−π, π].
double wrap_pi(double angle);

}  // namespace cpn
