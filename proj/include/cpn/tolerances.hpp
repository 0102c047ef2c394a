#pragma once

namespace cpn {

/// Absolute tolerances on unit-norm data.
struct Tolerances {
  double norm = 1e-12;       // deviation of Σ|Z|² from 1
  double zero = 1e-14;       // smallest admissible raw-vector norm
  double edge = 1e-9;        // radius treated as zero (octant edge)
  double predicate = 1e-9;   // is_separable / is_max_entangled
  double sigma = 1e-9;       // Schmidt-angle tie detection (rad)
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace cpn
