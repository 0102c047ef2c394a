#pragma once

#include <span>
#include <vector>

#include "cpn/charts.hpp"
#include "cpn/state.hpp"

namespace cpn {

/// Barycentric coordinates on the probability simplex; validated on
/// construction (entries ≥ −1e-12, sum 1 ± 1e-12; tiny negatives clamp to 0).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> values() const { return p_; }

  static ProbabilityVector corner(std::size_t size, std::size_t k);
  static ProbabilityVector center(std::size_t size);

 private:
  std::vector<double> p_;
};

/// (1 − t) p + t q.
ProbabilityVector mixing_line(const ProbabilityVector& p, const ProbabilityVector& q, double t);

/// Bhattacharyya angle arccos Σ√(pᵢqᵢ), evaluated as 2 asin(‖√p − √q‖/2).
double round_distance(const ProbabilityVector& p, const ProbabilityVector& q);

/// √p on the octant, then the gnomonic chart.
ChartPoint simplex_to_gnomonic(const ProbabilityVector& p);

/// Flat barycentric picture in the same units as the gnomonic chart: the
/// corners sit at the gnomonic images of the octant corners.
std::vector<double> barycentric_point(const ProbabilityVector& p);

/// Chart-unit to round-metric scale at the simplex center.
double barycentric_center_scale(int big_n);
double gnomonic_center_scale(int big_n);

/// Distances from p to its nearest corner: flat barycentric and gnomonic
/// pictures (each scaled to be exact at the center) and the round value.
struct CornerDistances {
  std::size_t corner = 0;
  double barycentric = 0.0;
  double round = 0.0;
  double gnomonic = 0.0;
};
CornerDistances corner_distances(const ProbabilityVector& p);

/// Schmidt-form state Σ cᵢ |i⟩|i⟩ in C^{k²}, k = coefficients.size().
ProjectiveState schmidt_form_state(std::span<const double> coefficients);

struct SchmidtSimplexCheck {
  double fs_distance = 0.0;
  double octant_distance = 0.0;  // arccos Σ cᵢ c′ᵢ
  double residual = 0.0;
};
SchmidtSimplexCheck schmidt_simplex_check(std::span<const double> a, std::span<const double> b);

}  // namespace cpn
