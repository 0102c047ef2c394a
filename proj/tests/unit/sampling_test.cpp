#include <gtest/gtest.h>

#include <algorithm>

#include "cpn/entanglement.hpp"
#include "cpn/error.hpp"
#include "cpn/orbits.hpp"
#include "cpn/sampling.hpp"
#include "oracles.hpp"

using namespace cpn;
using oracle::kPi;

namespace {

template <class F>
void expect_error(F&& f, ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code);
  }
}

// Reference KS distance, evaluated at both sides of every jump.
double reference_ks(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
  }
  return d;
}

}  // namespace

TEST(Splitmix, StreamsDifferPerChunk) {
  EXPECT_NE(derive_stream_seed(42, 0), derive_stream_seed(42, 1));
  EXPECT_NE(derive_stream_seed(42, 0), derive_stream_seed(43, 0));
  EXPECT_EQ(derive_stream_seed(7, 3), derive_stream_seed(7, 3));
  // Published first output of splitmix64 seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(RngStream, UniformRangeAndNormalMoments) {
  RngStream rng(5);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LE(u, 1.0);
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(SampleBatch, DeterministicAndThreadIndependent) {
  const SampleBatch a = sample_batch(42, 5000);
  const SampleBatch b = sample_batch(42, 5000);
  const SampleBatch c = sample_batch(42, 5000, 4);
  EXPECT_EQ(a.sigmas, b.sigmas);
  EXPECT_EQ(a.sigmas, c.sigmas);
  EXPECT_EQ(a.bloch_radii, c.bloch_radii);
  EXPECT_NE(a.sigmas, sample_batch(43, 5000).sigmas);
  // A prefix is shared: chunks do not depend on the total count.
  const SampleBatch shorter = sample_batch(42, 1500);
  EXPECT_TRUE(std::equal(shorter.sigmas.begin(), shorter.sigmas.end(), a.sigmas.begin()));
}

TEST(SampleBatch, CountEdgeCases) {
  const SampleBatch one = sample_batch(1, 1);
  ASSERT_EQ(one.sigmas.size(), 1u);
  EXPECT_EQ(one.count, 1u);
  EXPECT_GE(one.sigmas[0], 0.0);
  EXPECT_LE(one.sigmas[0], kPi / 4);
  expect_error([] { sample_batch(1, 0); }, ErrorCode::InvalidArgument);
}

TEST(SampleBatch, RadiusIsCosineOfTwiceTheAngle) {
  const SampleBatch b = sample_batch(9, 2000);
  for (std::size_t i = 0; i < b.count; ++i) EXPECT_NEAR(b.bloch_radii[i], std::cos(2 * b.sigmas[i]), 1e-12);
}

TEST(SampleBatch, MatchesSchmidtAngleLaw) {
  const SampleBatch b = sample_batch(42, 100000);
  EXPECT_LT(ks_statistic(b.sigmas, [](double s) { return 1 - std::pow(std::cos(2 * s), 3); }), 0.01);
  EXPECT_LT(ks_statistic(b.bloch_radii, [](double r) { return r * r * r; }), 0.01);
  const double inner = std::count_if(b.bloch_radii.begin(), b.bloch_radii.end(), [](double r) { return r < 0.5; });
  EXPECT_NEAR(inner / b.count, 0.125, 0.01);
}

TEST(HaarState, FirstAmplitudeHasMeanOneQuarter) {
  RngStream rng(11);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += std::norm(haar_state(rng)[0]);
  EXPECT_NEAR(sum / n, 0.25, 0.005);
}

TEST(SampleBatch, LocalUnitariesLeaveTheLawUnchanged) {
  oracle::Rng rng(12);
  const Eigen::Matrix2cd u = rng.su2(), v = rng.su2();
  Eigen::Matrix4cd uv;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) uv.block<2, 2>(2 * i, 2 * j) = u(i, j) * v;
  const auto rotate = [&](const ProjectiveState& s) {
    return normalize_and_gauge(Eigen::VectorXcd(uv * s.amplitudes()));
  };
  const SampleBatch plain = sample_batch(42, 50000);
  const SampleBatch moved = sample_batch(7, 50000, rotate);
  EXPECT_LT(ks_two_sample(plain.sigmas, moved.sigmas), 0.015);
  // Same seed: each state's angle is unchanged.
  const SampleBatch same = sample_batch(42, 2000, rotate);
  for (std::size_t i = 0; i < same.count; ++i) EXPECT_NEAR(same.sigmas[i], plain.sigmas[i], 1e-9);
}

TEST(KsStatistic, AgreesWithReference) {
  oracle::Rng rng(13);
  std::vector<double> xs;
  for (int i = 0; i < 500; ++i) xs.push_back(rng.uniform(0, 1));
  const auto cdf = [](double x) { return x * x; };
  EXPECT_NEAR(ks_statistic(xs, cdf), reference_ks(xs, cdf), 1e-15);
}

TEST(KsStatistic, InverseTransformSampleIsClose) {
  // x = F⁻¹(u) for u on a midpoint grid has distance exactly 1/(2n).
  const int n = 1000;
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(std::acos(std::cbrt(1 - (i + 0.5) / n)) / 2);
  EXPECT_NEAR(ks_statistic(xs, schmidt_cdf), 0.5 / n, 1e-12);
}

TEST(KsStatistic, ConstantSampleAndEmpty) {
  const std::vector<double> xs(10, 0.3);
  EXPECT_NEAR(ks_statistic(xs, [](double x) { return x; }), 0.7, 1e-15);
  EXPECT_EQ(ks_two_sample(xs, xs), 0.0);
  const std::vector<double> other(5, 0.4);
  EXPECT_EQ(ks_two_sample(xs, other), 1.0);
  expect_error([] { ks_statistic(std::vector<double>{}, [](double x) { return x; }); }, ErrorCode::EmptySample);
  expect_error([&] { ks_two_sample(xs, std::vector<double>{}); }, ErrorCode::EmptySample);
}

// Ten σ bins across 40 seeds.  At 3 standard errors each bin misses with
// probability ≈ 0.0027, so about one miss in 400 is expected; more than six
// would be a 1e-4 event.
TEST(SampleBatch, HistogramBinsWithinThreeStandardErrors) {
  const int bins = 10;
  const std::size_t n = 10000;
  int misses = 0;
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const SampleBatch b = sample_batch(seed, n);
    std::vector<int> counts(bins, 0);
    for (double s : b.sigmas) ++counts[std::min(bins - 1, static_cast<int>(s / (kPi / 4) * bins))];
    for (int k = 0; k < bins; ++k) {
      const double p = schmidt_cdf((k + 1) * kPi / 4 / bins) - schmidt_cdf(k * kPi / 4 / bins);
      const double se = std::sqrt(n * p * (1 - p));
      if (std::abs(counts[k] - n * p) > 3 * se) ++misses;
    }
  }
  EXPECT_LE(misses, 6);
}
