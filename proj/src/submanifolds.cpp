#include "cpn/submanifolds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpn/rotations.hpp"

namespace cpn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Irrational step for spreading fiber samples.
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

double grid_value(double lo, double hi, int i, int steps) {
  return steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
}

SurfaceSample make_sample(std::vector<double> radii, FiberLocus locus) {
  SurfaceSample s;
  s.chart_point = gnomonic_project(radii);
  s.radii = std::move(radii);
  s.fiber_locus = std::move(locus);
  return s;
}

// Phases satisfying the locus, with the given free phases as a starting point.
std::vector<double> solve_locus(const FiberLocus& locus, std::vector<double> phases,
                                int branch) {
  if (const auto* rel = std::get_if<PhaseRelation>(&locus)) {
    // Solve for the last phase with a nonzero (±1) coefficient.
    int k = static_cast<int>(rel->coefficients.size()) - 1;
    while (k >= 0 && rel->coefficients[k] == 0) --k;
    if (k < 0) return phases;
    double rest = 0.0;
    for (int i = 0; i < static_cast<int>(rel->coefficients.size()); ++i) {
      if (i != k) rest += rel->coefficients[i] * phases[i];
    }
    phases[k] = (rel->offset - rest) / rel->coefficients[k];
  } else if (const auto* cosine = std::get_if<PhaseCosineRelation>(&locus)) {
    const double angle = std::acos(std::clamp(cosine->value, -1.0, 1.0));
    phases[2] = phases[0] + phases[1] + (branch % 2 == 0 ? angle : -angle);
  } else if (const auto* fixed = std::get_if<ExplicitPhases>(&locus)) {
    phases = fixed->phases;
  }
  for (double& p : phases) p = wrap_two_pi(p);
  return phases;
}

ProjectiveState state_from(const std::vector<double>& radii, const std::vector<double>& phases) {
  OctantTorusCoords c;
  c.radii = radii;
  c.phases.assign(phases.begin(), phases.end());
  return from_octant_torus(c);
}

}  // namespace

std::vector<double> euler_to_radii(const EulerOctantCoords& e) {
  const double a = (e.tau - e.phi) / 2.0;
  const double b = (e.tau + e.phi) / 2.0;
  const double st = std::sin(e.theta / 2.0);
  const double ct = std::cos(e.theta / 2.0);
  return {std::sin(a) * st, std::sin(b) * ct, std::cos(a) * st, std::cos(b) * ct};
}

bool in_euler_octant(const EulerOctantCoords& e, double slack) {
  return e.tau >= -slack && e.tau <= kPi + slack && e.theta >= -slack &&
         e.theta <= kPi + slack && std::abs(e.phi) <= std::min(e.tau, kPi - e.tau) + slack;
}

ProjectiveState representative_state(const SurfaceSample& s) {
  const std::vector<double> zeros(s.radii.size() - 1, 0.0);
  return state_from(s.radii, solve_locus(s.fiber_locus, zeros, 0));
}

std::vector<ProjectiveState> fiber_states(const SurfaceSample& s, int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "need at least one fiber sample");
  const std::size_t m = s.radii.size() - 1;
  std::vector<ProjectiveState> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<double> free(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double frac = std::fmod(double(i) * (k + 1) * kGolden + double(k) / (m + 1), 1.0);
      free[k] = kTwoPi * frac;
    }
    out.push_back(state_from(s.radii, solve_locus(s.fiber_locus, free, i)));
  }
  return out;
}

std::vector<SurfaceSample> separable_surface(int tau_steps, int theta_steps) {
  if (tau_steps < 2 || theta_steps < 2) {
    throw Error(ErrorCode::InvalidArgument, "separable surface grid needs at least 2 steps per axis");
  }
  std::vector<SurfaceSample> out;
  out.reserve(std::size_t(tau_steps) * theta_steps);
  for (int i = 0; i < tau_steps; ++i) {
    for (int j = 0; j < theta_steps; ++j) {
      const EulerOctantCoords e{grid_value(0, kPi, i, tau_steps), 0.0,
                                grid_value(0, kPi, j, theta_steps)};
      out.push_back(make_sample(euler_to_radii(e), PhaseRelation{{1, 1, -1}, 0.0}));
    }
  }
  return out;
}

std::vector<double> max_entangled_radii(double t) {
  const double c = std::cos(t) / std::numbers::sqrt2;
  const double s = std::sin(t) / std::numbers::sqrt2;
  return {c, s, s, c};
}

std::vector<SurfaceSample> max_entangled_set(int steps) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 steps");
  std::vector<SurfaceSample> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = grid_value(0, kPi / 2, i, steps);
    out.push_back(make_sample(max_entangled_radii(t), PhaseRelation{{1, 1, -1}, kPi}));
  }
  return out;
}

double fiber_cosine(std::span<const double> radii, double sigma) {
  if (radii.size() != 4) throw Error(ErrorCode::DimensionMismatch, "CP³ octant point expected");
  const double prod = radii[0] * radii[1] * radii[2] * radii[3];
  if (!(prod > 0.0)) throw Error(ErrorCode::EdgePoint, "fiber relation undefined on the octant boundary");
  const double a = radii[0] * radii[3];
  const double b = radii[1] * radii[2];
  const double cs = std::cos(sigma) * std::sin(sigma);
  return (a * a + b * b - cs * cs) / (2.0 * prod);
}

bool in_constant_sigma_region(std::span<const double> radii, double sigma, double slack) {
  if (radii.size() != 4) throw Error(ErrorCode::DimensionMismatch, "CP³ octant point expected");
  const double a = radii[0] * radii[3];
  const double b = radii[1] * radii[2];
  const double cs = std::cos(sigma) * std::sin(sigma);
  return (a - b) * (a - b) <= cs * cs + slack && cs * cs <= (a + b) * (a + b) + slack;
}

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0 && sigma < kPi / 4)) {
    throw Error(ErrorCode::InvalidSigma, "Schmidt angle must lie in (0, π/4)");
  }
}

}  // namespace

std::vector<SurfaceSample> constant_sigma_region(double sigma, int grid) {
  require_sigma(sigma);
  if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 steps");
  std::vector<SurfaceSample> out;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        const EulerOctantCoords e{grid_value(0, kPi, i, grid), grid_value(-kPi / 2, kPi / 2, j, grid),
                                  grid_value(0, kPi, k, grid)};
        if (!in_euler_octant(e)) continue;
        std::vector<double> n = euler_to_radii(e);
        if (*std::min_element(n.begin(), n.end()) <= kDefaultTolerances.edge) continue;
        if (!in_constant_sigma_region(n, sigma)) continue;
        const double c = fiber_cosine(n, sigma);
        out.push_back(make_sample(std::move(n), PhaseCosineRelation{c}));
      }
    }
  }
  return out;
}

std::vector<SurfaceSample> constant_sigma_boundary(double sigma, int count) {
  require_sigma(sigma);
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 boundary points");
  const double s2 = std::sin(2.0 * sigma);
  const double theta_min = std::asin(s2);
  const int lower = count / 2;
  const int upper = count - lower;
  std::vector<SurfaceSample> out;
  out.reserve(count);
  // sin θ sin φ = −sin 2σ; open parameter range keeps the point interior.
  for (int i = 0; i < lower; ++i) {
    const double theta = theta_min + (kPi - 2 * theta_min) * (i + 1.0) / (lower + 1.0);
    const double phi = -std::asin(std::clamp(s2 / std::sin(theta), -1.0, 1.0));
    std::vector<double> n = euler_to_radii({kPi / 2, phi, theta});
    out.push_back(make_sample(std::move(n), PhaseCosineRelation{1.0}));
  }
  // sin θ = sin 2σ.
  for (int i = 0; i < upper; ++i) {
    const double phi = -kPi / 2 + kPi * (i + 1.0) / (upper + 1.0);
    std::vector<double> n = euler_to_radii({kPi / 2, phi, 2.0 * sigma});
    out.push_back(make_sample(std::move(n), PhaseCosineRelation{-1.0}));
  }
  return out;
}

std::vector<SurfaceSample> distance_sphere(int big_n, int corner, double d, int samples) {
  if (big_n != 3 && big_n != 4) {
    throw Error(ErrorCode::DimensionMismatch, "distance spheres are built in CP² and CP³");
  }
  if (corner < 0 || corner >= big_n) throw Error(ErrorCode::InvalidArgument, "corner out of range");
  if (!(d > 0.0 && d <= kPi / 2)) {
    throw Error(ErrorCode::InvalidRadius, "radius must lie in (0, π/2]");
  }
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
  const double c = std::cos(d);
  const double s = std::sin(d);
  std::vector<int> others;
  for (int k = 0; k < big_n; ++k) {
    if (k != corner) others.push_back(k);
  }
  std::vector<SurfaceSample> out;
  auto emit = [&](const std::vector<double>& direction) {
    std::vector<double> n(big_n, 0.0);
    n[corner] = d == kPi / 2 ? 0.0 : c;
    for (std::size_t k = 0; k < others.size(); ++k) n[others[k]] = s * direction[k];
    out.push_back(make_sample(std::move(n), FullTorus{}));
  };
  for (int i = 0; i < samples; ++i) {
    const double a = grid_value(0, kPi / 2, i, samples);
    if (big_n == 3) {
      emit({std::cos(a), std::sin(a)});
      continue;
    }
    for (int j = 0; j < samples; ++j) {
      const double b = grid_value(0, kPi / 2, j, samples);
      emit({std::cos(a), std::sin(a) * std::cos(b), std::sin(a) * std::sin(b)});
      if (i == 0) break;  // a = 0 is a single point
    }
  }
  return out;
}

ProjectiveState spin1_state(SpinSeed seed, double theta, double phi) {
  const Eigen::Vector3cd e =
      seed == SpinSeed::Up ? Eigen::Vector3cd(1, 0, 0) : Eigen::Vector3cd(0, 1, 0);
  return normalize_and_gauge(spin_one_rotation(theta, phi) * e);
}

std::vector<ProjectiveState> spin1_orbit(SpinSeed seed,
                                         std::span<const Eigen::Vector3d> directions) {
  std::vector<ProjectiveState> out;
  out.reserve(directions.size());
  for (const auto& n : directions) {
    double theta = 0, phi = 0;
    polar_angles(n, theta, phi);
    out.push_back(spin1_state(seed, theta, phi));
  }
  return out;
}

std::array<Eigen::Matrix3cd, 4> mub_bases() {
  std::array<Eigen::Matrix3cd, 4> bases;
  bases[0] = Eigen::Matrix3cd::Identity();
  const double norm = 1.0 / std::sqrt(3.0);
  for (int k = 1; k <= 3; ++k) {
    for (int j = 0; j < 3; ++j) {
      for (int m = 0; m < 3; ++m) {
        const int power = (j * m + (k - 1) * m * m) % 3;
        bases[k](m, j) = std::polar(norm, kTwoPi * power / 3.0);
      }
    }
  }
  return bases;
}

std::vector<ProjectiveState> real_locus(std::span<const double> radii) {
  const int m = static_cast<int>(radii.size()) - 1;
  if (m < 1) throw Error(ErrorCode::DimensionMismatch, "need at least 2 radii");
  const std::vector<double> n(radii.begin(), radii.end());
  std::vector<ProjectiveState> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<double> phases(m);
    for (int k = 0; k < m; ++k) phases[k] = (mask >> k) & 1 ? kPi : 0.0;
    out.push_back(state_from(n, phases));
  }
  return out;
}

}  // namespace cpn
