#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "cpn/state.hpp"

namespace cpn {

// Samples are generated in chunks of kChunkSize.  Chunk k draws from an
// mt19937_64 seeded with splitmix64(seed ^ splitmix64(k)), so results do not
// depend on how chunks are spread over threads.

inline constexpr std::size_t kChunkSize = 1024;

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t chunk);

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}
  static RngStream for_chunk(std::uint64_t seed, std::uint64_t chunk) {
    return RngStream(derive_stream_seed(seed, chunk));
  }

  /// Uniform on (0, 1], 53-bit resolution.
  double uniform();
  /// Standard normal (Box-Muller; the spare value is cached).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-random pure state in CP^{dim−1} from 2·dim standard normals.
ProjectiveState haar_state(RngStream& rng, int dim = 4);

struct SampleBatch {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<double> sigmas;
  std::vector<double> bloch_radii;
};

/// Deterministic in (seed, count); `threads` only changes wall time.
SampleBatch sample_batch(std::uint64_t seed, std::size_t count, unsigned threads = 1);

/// As sample_batch, with every state mapped through `transform` before its
/// Schmidt angle is taken.
SampleBatch sample_batch(std::uint64_t seed, std::size_t count,
                         const std::function<ProjectiveState(const ProjectiveState&)>& transform,
                         unsigned threads = 1);

/// sup |F_empirical − cdf|.  Throws EmptySample.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// sup |F_a − F_b| for two empirical samples.  Throws EmptySample.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace cpn
