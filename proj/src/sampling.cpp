#include "cpn/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cpn/entanglement.hpp"

namespace cpn {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed ^ splitmix64(chunk));
}

double RngStream::uniform() {
  return (double((engine_() >> 11) + 1)) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

ProjectiveState haar_state(RngStream& rng, int dim) {
  Amplitudes z(dim);
  for (int k = 0; k < dim; ++k) {
    const double re = rng.normal();
    const double im = rng.normal();
    z[k] = Complex(re, im);
  }
  return normalize_and_gauge(z);
}

SampleBatch sample_batch(std::uint64_t seed, std::size_t count,
                         const std::function<ProjectiveState(const ProjectiveState&)>& transform,
                         unsigned threads) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  SampleBatch batch;
  batch.seed = seed;
  batch.count = count;
  batch.sigmas.resize(count);
  batch.bloch_radii.resize(count);

  const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
  auto run_chunk = [&](std::size_t k) {
    RngStream rng = RngStream::for_chunk(seed, k);
    const std::size_t end = std::min(count, (k + 1) * kChunkSize);
    for (std::size_t i = k * kChunkSize; i < end; ++i) {
      ProjectiveState s = haar_state(rng);
      if (transform) s = transform(s);
      const double sigma = schmidt_decompose(s).schmidt_angle;
      batch.sigmas[i] = sigma;
      batch.bloch_radii[i] = std::cos(2.0 * sigma);
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    for (std::size_t k = 0; k < chunks; ++k) run_chunk(k);
    return batch;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < chunks; k += threads) run_chunk(k);
    });
  }
  pool.clear();  // joins
  return batch;
}

SampleBatch sample_batch(std::uint64_t seed, std::size_t count, unsigned threads) {
  return sample_batch(seed, count, nullptr, threads);
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw Error(ErrorCode::EmptySample, "KS statistic of an empty sample");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const double n = double(x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    worst = std::max({worst, f - double(i) / n, double(i + 1) / n - f});
  }
  return worst;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySample, "KS statistic of an empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = double(x.size()), ny = double(y.size());
  std::size_t i = 0, j = 0;
  double worst = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    worst = std::max(worst, std::abs(double(i) / nx - double(j) / ny));
  }
  return worst;
}

}  // namespace cpn
