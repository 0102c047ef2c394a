#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cpn/state.hpp"

namespace cpn {

enum class Chart { Gnomonic, Stereographic };

/// Real coordinates of an octant point in a flat map.  `coords` has one
/// entry fewer than the number of octant radii.
struct ChartPoint {
  Chart chart = Chart::Gnomonic;
  std::vector<double> coords;
  int pole_corner = 0;  // stereographic only
};

// Gnomonic chart of the positive (hyper)octant of S^{N-1}, N = 3 or 4.
//
// The ambient frame is the Helmert basis: X⁰ along (1,…,1)/√N and
// X^k ∝ (−1,…,−1, k, 0,…,0).  Map coordinates are x = X/(κ X⁰) with
// κ = √(2N), which puts every pair of corners at coordinate distance 1.
// For N = 3 this is exactly the classic triangle picture of CP².

/// Rows of the orthonormal ambient frame for dimension N.
Eigen::MatrixXd gnomonic_frame(int big_n);
/// Scale κ = √(2N).
double gnomonic_scale(int big_n);

ChartPoint gnomonic_project(std::span<const double> radii);
/// Throws OutsideChart when the point leaves the closed octant and
/// `require_octant` is set.
std::vector<double> gnomonic_unproject(const ChartPoint& p, bool require_octant = true);

/// Stereographic projection from the antipode of `pole_corner`; the octant
/// lands in the unit disk (ball) with the pole corner at the origin.
ChartPoint stereographic_project(std::span<const double> radii, int pole_corner);
std::vector<double> stereographic_unproject(const ChartPoint& p);

/// Round metric dn·dn expressed in gnomonic coordinates.
MetricMatrix gnomonic_metric(const ChartPoint& p);

struct GeodesicSample {
  std::vector<double> radii;
  double arc = 0.0;  // arc length from the start point
  bool in_octant = true;
};

/// `samples` equally spaced points along the shorter great-circle arc a → b.
/// Points outside the closed octant are returned with in_octant = false.
std::vector<GeodesicSample> trace_great_circle(std::span<const double> a,
                                               std::span<const double> b, int samples);

/// Pairs of endpoints of the two geodesics that run from `opposite_corner`
/// to the points dividing the edge (corner_a, corner_b) into three equal arcs.
std::vector<std::pair<std::vector<double>, std::vector<double>>> trisecting_geodesics(
    int big_n, int corner_a, int corner_b, int opposite_corner);

/// Shape of the flat fiber torus over an octant point.
struct TorusShape {
  std::vector<double> side_lengths;
  Eigen::MatrixXd angles;  // θ_ij, zero on the diagonal and when undefined
  double measure = 0.0;    // area (CP²) or volume (CP³)
};

TorusShape torus_shape(std::span<const double> radii);

/// Phase block g_{ν_i ν_j} of the octant-torus metric (valid on edges too).
Eigen::MatrixXd torus_phase_block(std::span<const double> radii);

/// A smooth map from k real parameters into CP^n.
using Embedding = std::function<ProjectiveState(std::span<const double>)>;

/// Central-difference tangent vectors ∂_a Z at `point`.  Samples are
/// phase-aligned with the base state so gauge jumps of the embedding do not
/// leak into the derivatives.
struct TangentFrame {
  Amplitudes base;
  std::vector<Amplitudes> tangents;
};
TangentFrame numeric_tangents(const Embedding& embedding, std::span<const double> point,
                              double h = 1e-5);

/// Octant-torus coordinates (n₁…n_n, ν₁…ν_n) with n₀ = √(1 − Σnᵢ²) and
/// ν₀ = 0, for `big_n` = n + 1 amplitudes.
Embedding octant_torus_embedding(int big_n);

/// Induced Fubini-Study metric by finite differences and polarization.
MetricMatrix numeric_pullback(const Embedding& embedding, std::span<const double> point,
                              double h = 1e-5, std::vector<std::string> names = {});

}  // namespace cpn
