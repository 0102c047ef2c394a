#include <gtest/gtest.h>

#include "cpn/charts.hpp"
#include "cpn/error.hpp"
#include "oracles.hpp"

using namespace cpn;
using oracle::kPi;

namespace {

std::vector<double> corner(int big_n, int k) {
  std::vector<double> n(big_n, 0.0);
  n[k] = 1.0;
  return n;
}

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double arc(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace

TEST(Gnomonic, CenterMapsToOrigin) {
  for (int big_n = 3; big_n <= 4; ++big_n) {
    const std::vector<double> c(big_n, 1.0 / std::sqrt(double(big_n)));
    for (double x : gnomonic_project(c).coords) EXPECT_NEAR(x, 0.0, 1e-15);
    const auto back = gnomonic_unproject({Chart::Gnomonic, std::vector<double>(big_n - 1, 0.0)});
    for (double n : back) EXPECT_NEAR(n, 1.0 / std::sqrt(double(big_n)), 1e-15);
  }
}

TEST(Gnomonic, CornersFormUnitSimplex) {
  for (int big_n = 3; big_n <= 4; ++big_n) {
    for (int i = 0; i < big_n; ++i) {
      for (int j = i + 1; j < big_n; ++j) {
        EXPECT_NEAR(euclid(gnomonic_project(corner(big_n, i)).coords, gnomonic_project(corner(big_n, j)).coords),
                    1.0, 1e-12);
      }
      const auto back = gnomonic_unproject(gnomonic_project(corner(big_n, i)));
      EXPECT_LT(euclid(back, corner(big_n, i)), 1e-12);
    }
  }
}

TEST(Gnomonic, EdgeMidpointIsGeodesicMidpoint) {
  const ChartPoint a = gnomonic_project(corner(3, 0)), b = gnomonic_project(corner(3, 1));
  ChartPoint mid{Chart::Gnomonic, {(a.coords[0] + b.coords[0]) / 2, (a.coords[1] + b.coords[1]) / 2}};
  const auto n = gnomonic_unproject(mid);
  EXPECT_NEAR(n[0], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(n[1], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(n[2], 0.0, 1e-12);
}

TEST(Gnomonic, RoundTripAndOutsideChart) {
  oracle::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto n = rng.radii(3 + t % 2, 0.0);
    EXPECT_LT(euclid(gnomonic_unproject(gnomonic_project(n)), n), 1e-12);
  }
  try {
    gnomonic_unproject({Chart::Gnomonic, {3.0, 3.0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideChart);
  }
}

TEST(Stereographic, PoleEquatorAndRoundTrip) {
  for (double x : stereographic_project(corner(3, 0), 0).coords) EXPECT_EQ(x, 0.0);
  const auto eq = stereographic_project(std::vector<double>{0, 1, 0}, 0).coords;
  EXPECT_NEAR(eq[0] * eq[0] + eq[1] * eq[1], 1.0, 1e-15);
  oracle::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const int big_n = 3 + t % 2;
    const auto n = rng.radii(big_n, 0.0);
    const int pole = t % big_n;
    EXPECT_LT(euclid(stereographic_unproject(stereographic_project(n, pole)), n), 1e-12);
  }
  try {
    stereographic_unproject({Chart::Stereographic, {1.0, 1.0}, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideChart);
  }
}

TEST(Charts, StereographicAndGnomonicAgree) {
  oracle::Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto n = rng.radii(3, 0.0);
    const auto via_stereo = stereographic_unproject(stereographic_project(n, 1));
    const auto via_both = gnomonic_unproject(gnomonic_project(via_stereo));
    EXPECT_LT(euclid(via_both, n), 1e-10);
  }
}

TEST(GnomonicMetric, OriginIsSixTimesIdentity) {
  const MetricMatrix g = gnomonic_metric({Chart::Gnomonic, {0.0, 0.0}});
  EXPECT_LT(oracle::max_abs(g.entries - 6.0 * Eigen::Matrix2d::Identity()), 1e-15);
}

TEST(GnomonicMetric, PositiveDefiniteAndMatchesRoundPullback) {
  oracle::Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const ChartPoint p = gnomonic_project(rng.radii(3, 0.02));
    const Eigen::MatrixXd g = gnomonic_metric(p).entries;
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff(), 0.0);
    // Round metric dn₀² + dn₁² + dn₂² pulled back through the inverse chart.
    auto unproject = [](std::span<const double> x) {
      const auto n = gnomonic_unproject({Chart::Gnomonic, {x[0], x[1]}}, false);
      return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXd>(n.data(), 3).cast<std::complex<double>>());
    };
    Eigen::Matrix2d want;
    std::vector<Eigen::VectorXcd> d;
    for (int i = 0; i < 2; ++i) d.push_back(oracle::derivative(unproject, p.coords, i, 1e-3));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) want(i, j) = d[i].dot(d[j]).real();
    EXPECT_LT(oracle::max_abs(g - want), 1e-10);
  }
}

TEST(GreatCircle, EdgeIsStraightAndMidpointSymmetric) {
  const auto samples = trace_great_circle(corner(3, 0), corner(3, 1), 41);
  std::vector<std::vector<double>> pts;
  for (const auto& s : samples) pts.push_back(gnomonic_project(s.radii).coords);
  EXPECT_LT(oracle::collinearity(pts), 1e-10);
  const auto& mid = samples[20].radii;
  EXPECT_NEAR(mid[0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(mid[1], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(samples.back().arc, kPi / 2, 1e-15);
}

TEST(GreatCircle, RandomArcsAreStraight) {
  oracle::Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const int big_n = 3 + t % 2;
    std::vector<std::vector<double>> pts;
    for (const auto& s : trace_great_circle(rng.radii(big_n, 0.0), rng.radii(big_n, 0.0), 30)) {
      EXPECT_TRUE(s.in_octant);
      pts.push_back(gnomonic_project(s.radii).coords);
    }
    EXPECT_LT(oracle::collinearity(pts), 1e-9);
  }
}

TEST(GreatCircle, FlagsPointsOutsideTheOctant) {
  const std::vector<double> a{1.0, 0.0, 0.0}, b{0.0, 0.6, -0.8};
  const auto samples = trace_great_circle(a, b, 10);
  EXPECT_TRUE(samples.front().in_octant);
  EXPECT_FALSE(samples.back().in_octant);
}

TEST(GreatCircle, DegeneratePairs) {
  const std::vector<double> a{1.0, 0.0, 0.0}, b{-1.0, 0.0, 0.0};
  for (const auto& other : {a, b}) {
    try {
      trace_great_circle(a, other, 5);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegeneratePair);
    }
  }
}

TEST(GreatCircle, TrisectorsSplitTheEdgeInThirds) {
  const auto pairs = trisecting_geodesics(3, 1, 2, 0);
  ASSERT_EQ(pairs.size(), 2u);
  const auto a = corner(3, 1), b = corner(3, 2);
  for (int k = 0; k < 2; ++k) {
    const auto& edge_point = pairs[k].second;
    EXPECT_NEAR(arc(a, edge_point), (k + 1) * kPi / 6, 1e-14);
    EXPECT_NEAR(arc(edge_point, b), (2 - k) * kPi / 6, 1e-14);
    EXPECT_EQ(pairs[k].first, corner(3, 0));
  }
}

TEST(TorusShape, CenterAreaAndSides) {
  const double r = 1.0 / std::sqrt(3.0);
  const TorusShape t = torus_shape(std::vector<double>{r, r, r});
  EXPECT_NEAR(t.measure, 4 * kPi * kPi / (3 * std::sqrt(3.0)), 1e-13);
  for (double l : t.side_lengths) EXPECT_NEAR(l, 2 * kPi * r * std::sqrt(1 - r * r), 1e-14);
}

TEST(TorusShape, EdgeIsDegenerate) {
  const TorusShape t = torus_shape(std::vector<double>{0.6, 0.0, 0.8});
  EXPECT_EQ(t.side_lengths[0], 0.0);
  EXPECT_EQ(t.measure, 0.0);
}

TEST(TorusShape, AreaLawAndAngles) {
  oracle::Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const auto n = rng.radii(3, 0.01);
    const TorusShape s = torus_shape(n);
    const double theta = s.angles(0, 1);
    EXPECT_GT(theta, 0.0);
    EXPECT_LT(theta, kPi);
    const double cos_want = -n[1] * n[2] / std::sqrt((1 - n[1] * n[1]) * (1 - n[2] * n[2]));
    EXPECT_NEAR(std::cos(theta), cos_want, 1e-12);
    EXPECT_NEAR(s.measure, s.side_lengths[0] * s.side_lengths[1] * std::sin(theta), 1e-10);
    EXPECT_NEAR(s.measure, 4 * kPi * kPi * n[0] * n[1] * n[2], 1e-12);
  }
}

TEST(TorusShape, LargestOverCenter) {
  const double center = torus_shape(std::vector<double>(3, 1.0 / std::sqrt(3.0))).measure;
  oracle::Rng rng(17);
  for (int t = 0; t < 500; ++t) EXPECT_LT(torus_shape(rng.radii(3, 0.0)).measure, center);
}

TEST(TorusShape, Cp3VolumeFromPhaseBlock) {
  const TorusShape t = torus_shape(std::vector<double>(4, 0.5));
  EXPECT_NEAR(t.measure, std::pow(2 * kPi, 3) * std::sqrt(torus_phase_block(std::vector<double>(4, 0.5)).determinant()),
              1e-12);
  EXPECT_GT(t.measure, 0.0);
}

TEST(TorusShape, SmallDistanceFromCornerIsRectangular) {
  double last = 0.0;
  for (double d : {0.4, 0.2, 0.1, 0.05}) {
    const std::vector<double> n{std::cos(d), std::sin(d) * std::sqrt(0.5), std::sin(d) * std::sqrt(0.5)};
    const double gap = std::abs(torus_shape(n).angles(0, 1) - kPi / 2);
    if (last > 0.0) EXPECT_LT(gap, last);
    last = gap;
  }
  EXPECT_LT(last, 2e-3);
}

TEST(NumericPullback, ConstantEmbeddingIsZero) {
  const ProjectiveState s = normalize_and_gauge({1, 2, 3});
  const Embedding constant = [s](std::span<const double>) { return s; };
  const std::vector<double> x{0.1, 0.2};
  EXPECT_EQ(oracle::max_abs(numeric_pullback(constant, x).entries), 0.0);
}

TEST(NumericPullback, OctantEmbeddingOfCp2) {
  const std::vector<double> x{0.55, 0.6, 1.0, 2.0};
  const double n0 = std::sqrt(1 - 0.55 * 0.55 - 0.6 * 0.6);
  const MetricMatrix g = octant_torus_metric({{n0, 0.55, 0.6}, {1.0, 2.0}});
  EXPECT_LT(oracle::max_abs(numeric_pullback(octant_torus_embedding(3), x).entries - g.entries), 1e-7);
}

TEST(NumericPullback, EmbeddingRejectsOverflowingRadii) {
  const std::vector<double> x{0.9, 0.9, 0.0, 0.0};
  try {
    octant_torus_embedding(3)(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideChart);
  }
}
