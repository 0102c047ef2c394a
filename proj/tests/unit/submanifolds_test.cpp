#include <gtest/gtest.h>

#include "cpn/entanglement.hpp"
#include "cpn/error.hpp"
#include "cpn/orbits.hpp"
#include "cpn/submanifolds.hpp"
#include "oracles.hpp"

using namespace cpn;
using oracle::kPi;

namespace {

double det_abs(const ProjectiveState& s) { return std::abs(as_coefficient_matrix(s).determinant()); }

double phase_sum(const OctantTorusCoords& c) { return wrap_pi(*c.phases[0] + *c.phases[1] - *c.phases[2]); }

// |det C|² from radii and the phase combination, for a Schmidt-angle target.
double sigma_residual(const ProjectiveState& s, double sigma) {
  return std::abs(oracle::schmidt_angle(s.amplitudes()) - sigma);
}

}  // namespace

TEST(EulerOctant, RadiiAreUnitAndNonNegative) {
  oracle::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const EulerOctantCoords e{rng.uniform(0, kPi), rng.uniform(-kPi, kPi), rng.uniform(0, kPi)};
    const auto n = euler_to_radii(e);
    double s = 0.0;
    for (double x : n) s += x * x;
    EXPECT_NEAR(s, 1.0, 1e-15);
    const bool inside = std::all_of(n.begin(), n.end(), [](double x) { return x >= -1e-12; });
    EXPECT_EQ(in_euler_octant(e), inside);
  }
}

TEST(SeparableSurface, EverySampleIsSeparable) {
  const auto samples = separable_surface(9, 9);
  ASSERT_EQ(samples.size(), 81u);
  for (const auto& s : samples) {
    EXPECT_LT(det_abs(representative_state(s)), 1e-12);
    for (const auto& f : fiber_states(s, 5)) EXPECT_LT(det_abs(f), 1e-12);
    const auto& rel = std::get<PhaseRelation>(s.fiber_locus);
    EXPECT_EQ(rel.coefficients, (std::vector<int>{1, 1, -1}));
    EXPECT_EQ(rel.offset, 0.0);
  }
  const auto tiny = separable_surface(2, 2);
  EXPECT_EQ(tiny.size(), 4u);
  for (const auto& s : tiny) EXPECT_TRUE(is_separable(representative_state(s)));
}

TEST(SeparableSurface, FixedThetaSlicesAreGeodesics) {
  const int steps = 15;
  const auto samples = separable_surface(steps, steps);
  for (int j = 1; j + 1 < steps; ++j) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < steps; ++i) pts.push_back(samples[std::size_t(i) * steps + j].chart_point.coords);
    EXPECT_LT(oracle::collinearity(pts), 1e-9);
  }
}

TEST(SeparableSurface, IntrinsicMetricIsQuarterFlat) {
  const Embedding emb = [](std::span<const double> x) {
    return representative_state(
        {euler_to_radii({x[0], 0.0, x[1]}), {}, PhaseRelation{{1, 1, -1}, 0.0}});
  };
  for (const auto& p : {std::vector<double>{1.0, 1.2}, {0.7, 2.0}, {2.1, 0.6}}) {
    const Eigen::MatrixXd g = oracle::pullback_metric(oracle::amplitudes_of(emb), p);
    EXPECT_LT(oracle::max_abs(g - 0.25 * Eigen::Matrix2d::Identity()), 1e-7);
  }
}

TEST(MaxEntangledSet, SamplesAreMaximallyEntangledAndPassCenter) {
  const auto samples = max_entangled_set(21);
  for (const auto& s : samples) {
    EXPECT_TRUE(is_max_entangled(representative_state(s)));
    for (const auto& f : fiber_states(s, 4)) EXPECT_TRUE(is_max_entangled(f));
    EXPECT_NEAR(std::get<PhaseRelation>(s.fiber_locus).offset, kPi, 0.0);
  }
  for (double x : samples[10].chart_point.coords) EXPECT_NEAR(x, 0.0, 1e-15);
  for (const auto& b : {bell_phi_plus(), bell_phi_minus(), bell_psi_plus(), bell_psi_minus()}) {
    const auto r = max_entangled_coordinate_residuals(to_octant_torus(b));
    EXPECT_NEAR(r.radial_03, 0.0, 1e-15);
    EXPECT_NEAR(r.radial_12, 0.0, 1e-15);
    if (r.phase) EXPECT_NEAR(*r.phase, 0.0, 1e-15);
  }
}

TEST(MaxEntangledSet, PhaseRelationsDifferByPi) {
  const ProjectiveState sep = representative_state(separable_surface(5, 5)[12]);
  const ProjectiveState ent = representative_state(max_entangled_set(5)[2]);
  EXPECT_NEAR(std::abs(wrap_pi(phase_sum(to_octant_torus(ent)) - phase_sum(to_octant_torus(sep)))), kPi, 1e-12);
}

TEST(MaxEntangledSet, DistanceToSeparableSurfaceIsQuarterPi) {
  for (int steps : {5, 9, 17}) {
    std::vector<ProjectiveState> sep;
    for (const auto& s : separable_surface(steps, steps))
      for (const auto& f : fiber_states(s, 4)) sep.push_back(f);
    double best = 10.0;
    for (const auto& e : max_entangled_set(steps)) {
      for (const auto& me : fiber_states(e, 4)) {
        for (const auto& s : sep) {
          const double d = fs_distance(me, s);
          EXPECT_GE(d, kPi / 4 - 1e-9);
          best = std::min(best, d);
        }
      }
    }
    EXPECT_NEAR(best, kPi / 4, 1e-3);
  }
}

TEST(MaxEntangledSet, CrossesSeparableSurfaceAtLargestFiber) {
  // Along (c, s, s, c)/√2 the fiber volume is ∝ n₁n₂n₃ and the radial
  // separability residual n₀n₃ − n₁n₂ changes sign where both meet.
  const double cross = kPi / 4;
  const auto n = max_entangled_radii(cross);
  EXPECT_NEAR(n[0] * n[3] - n[1] * n[2], 0.0, 1e-15);
  double best_t = 0.0, best = -1.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = kPi / 2 * i / 20000;
    const auto m = max_entangled_radii(t);
    const double v = torus_shape(m).measure;
    if (v > best) best = v, best_t = t;
  }
  EXPECT_NEAR(best_t, cross, 1e-4);
}

TEST(ConstantSigma, RegionStatesHaveTheSchmidtAngle) {
  for (double sigma : {0.1, kPi / 8, 0.6}) {
    const auto region = constant_sigma_region(sigma, 14);
    ASSERT_FALSE(region.empty());
    for (const auto& s : region) {
      EXPECT_TRUE(in_constant_sigma_region(s.radii, sigma, 1e-12));
      EXPECT_LT(sigma_residual(representative_state(s), sigma), 1e-9);
      for (const auto& f : fiber_states(s, 3)) EXPECT_LT(sigma_residual(f, sigma), 1e-9);
    }
  }
}

TEST(ConstantSigma, BoundaryFiberDegeneratesToACircle) {
  for (double sigma : {0.2, kPi / 8, 0.6}) {
    const auto boundary = constant_sigma_boundary(sigma, 20);
    ASSERT_EQ(boundary.size(), 20u);
    for (const auto& s : boundary) {
      const double c = std::get<PhaseCosineRelation>(s.fiber_locus).value;
      EXPECT_NEAR(std::abs(c), 1.0, 1e-12);
      const double lhs = std::pow(s.radii[0] * s.radii[3] - s.radii[1] * s.radii[2], 2);
      const double rhs = std::pow(std::cos(sigma) * std::sin(sigma), 2);
      const double lhs_plus = std::pow(s.radii[0] * s.radii[3] + s.radii[1] * s.radii[2], 2);
      EXPECT_TRUE(std::abs(lhs - rhs) < 1e-12 || std::abs(lhs_plus - rhs) < 1e-12);
      EXPECT_LT(sigma_residual(representative_state(s), sigma), 1e-9);
    }
  }
}

TEST(ConstantSigma, OrbitStatesSatisfyTheRegionEquation) {
  oracle::Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const OrbitCoords c{rng.uniform(0.05, kPi / 4 - 0.05), rng.uniform(0, 2 * kPi), rng.uniform(0.1, kPi - 0.1),
                        rng.uniform(0, 2 * kPi), rng.uniform(0.1, kPi - 0.1), rng.uniform(0, 2 * kPi)};
    const OctantTorusCoords o = to_octant_torus(orbit_embed(c));
    EXPECT_TRUE(in_constant_sigma_region(o.radii, c.sigma, 1e-10));
    const double cosine = std::cos(*o.phases[2] - *o.phases[0] - *o.phases[1]);
    EXPECT_NEAR(fiber_cosine(o.radii, c.sigma), cosine, 1e-8);
  }
}

TEST(ConstantSigma, CollapsesTowardsSeparableSurfaceAndMaxEntangledLine) {
  auto hausdorff_to_separable = [](double sigma) {
    double worst = 0.0;
    for (const auto& s : constant_sigma_region(sigma, 16)) {
      const auto& n = s.radii;
      worst = std::max(worst, std::abs(n[0] * n[3] - n[1] * n[2]));
    }
    return worst;
  };
  EXPECT_LT(hausdorff_to_separable(0.02), hausdorff_to_separable(0.1));
  EXPECT_LT(hausdorff_to_separable(0.1), hausdorff_to_separable(0.3));
  EXPECT_LT(hausdorff_to_separable(0.02), 0.021);
  auto tube_radius = [](double sigma) {
    double worst = 0.0;
    for (const auto& s : constant_sigma_region(sigma, 16)) {
      const auto& n = s.radii;
      worst = std::max({worst, std::abs(n[0] - n[3]), std::abs(n[1] - n[2])});
    }
    return worst;
  };
  EXPECT_LT(tube_radius(kPi / 4 - 0.01), tube_radius(kPi / 4 - 0.1));
  EXPECT_LT(tube_radius(kPi / 4 - 0.01), 0.2);
}

TEST(ConstantSigma, InvalidSigma) {
  for (double sigma : {0.0, kPi / 4, -0.1, 1.0}) {
    try {
      constant_sigma_region(sigma, 4);
      FAIL() << sigma;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidSigma);
    }
  }
}

TEST(DistanceSphere, SamplesAtTheRadius) {
  for (int big_n = 3; big_n <= 4; ++big_n) {
    for (double d : {0.2, kPi / 4, 1.3}) {
      const ProjectiveState corner = ProjectiveState::basis(big_n, 1);
      for (const auto& s : distance_sphere(big_n, 1, d, 9)) {
        EXPECT_TRUE(std::holds_alternative<FullTorus>(s.fiber_locus));
        EXPECT_NEAR(fs_distance(corner, representative_state(s)), d, 1e-10);
        for (const auto& f : fiber_states(s, 3)) EXPECT_NEAR(fs_distance(corner, f), d, 1e-10);
      }
    }
  }
}

TEST(DistanceSphere, HalfPiIsTheOppositeEdge) {
  for (const auto& s : distance_sphere(3, 0, kPi / 2, 9)) EXPECT_EQ(s.radii[0], 0.0);
  for (double d : {0.0, -0.1, 2.0}) {
    try {
      distance_sphere(3, 0, d, 9);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidRadius);
    }
  }
}

TEST(DistanceSphere, SmallSpheresHaveRectangularTori) {
  double last = 10.0;
  for (double d : {0.5, 0.1, 0.01}) {
    const auto samples = distance_sphere(3, 0, d, 5);
    const double gap = std::abs(torus_shape(samples[2].radii).angles(0, 1) - kPi / 2);
    EXPECT_LT(gap, last);
    last = gap;
  }
  EXPECT_LT(last, 1e-4);
}

TEST(Spin1, ZeroSeedIdentifiesAntipodes) {
  oracle::Rng rng(33);
  for (int t = 0; t < 50; ++t) {
    const double theta = rng.uniform(0, kPi), phi = rng.uniform(0, 2 * kPi);
    EXPECT_LT(fs_distance(spin1_state(SpinSeed::Zero, theta, phi), spin1_state(SpinSeed::Zero, kPi - theta, phi + kPi)),
              1e-12);
  }
}

TEST(Spin1, UpSeedIsASphereOfRadiusOneOverRootTwo) {
  EXPECT_LT(fs_distance(spin1_state(SpinSeed::Up, 0, 0), ProjectiveState::basis(3, 0)), 1e-7);
  const Embedding emb = [](std::span<const double> x) { return spin1_state(SpinSeed::Up, x[0], x[1]); };
  for (double theta : {0.4, 1.1, 2.5}) {
    const std::vector<double> p{theta, 1.3};
    const Eigen::MatrixXd g = oracle::pullback_metric(oracle::amplitudes_of(emb), p);
    EXPECT_NEAR(g(0, 0), 0.5, 1e-9);
    EXPECT_NEAR(g(1, 1), 0.5 * std::pow(std::sin(theta), 2), 1e-9);
    EXPECT_NEAR(g(0, 1), 0.0, 1e-9);
  }
  // Orthogonal directions: cos d = cos²(γ/2) for an opening angle γ.
  const auto orbit = spin1_orbit(SpinSeed::Up, std::vector<Eigen::Vector3d>{Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX()});
  EXPECT_NEAR(std::cos(fs_distance(orbit[0], orbit[1])), 0.5, 1e-12);
}

TEST(Mub, OverlapsAndCenter) {
  const auto bases = mub_bases();
  for (int a = 0; a < 4; ++a) {
    EXPECT_LT((bases[a].adjoint() * bases[a] - Eigen::Matrix3cd::Identity()).norm(), 1e-14);
    for (int b = a + 1; b < 4; ++b) {
      const Eigen::Matrix3cd o = bases[a].adjoint() * bases[b];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(o(i, j)), 1 / std::sqrt(3.0), 1e-12);
    }
  }
  for (int a = 1; a < 4; ++a) {
    for (int j = 0; j < 3; ++j) {
      const OctantTorusCoords c = to_octant_torus(normalize_and_gauge(Amplitudes(bases[a].col(j))));
      for (double n : c.radii) EXPECT_NEAR(n, 1 / std::sqrt(3.0), 1e-15);
    }
  }
}

TEST(RealLocus, StatesAreRealAndCoverSignChoices) {
  const std::vector<double> n{0.5, 0.5, 0.5, 0.5};
  const auto states = real_locus(n);
  ASSERT_EQ(states.size(), 8u);
  for (const auto& s : states) EXPECT_LT(s.amplitudes().imag().norm(), 1e-15);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) EXPECT_GT(fs_distance(states[i], states[j]), 0.1);
}
