#include "cpn/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace cpn {

namespace {

constexpr double kSimplexSlack = 1e-12;

std::vector<double> square_roots(const ProbabilityVector& p) {
  std::vector<double> n(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) n[i] = std::sqrt(p[i]);
  return n;
}

double euclid(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

void require_same_size(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "simplices differ in dimension");
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.size() < 2) throw Error(ErrorCode::DimensionMismatch, "need at least 2 probabilities");
  double sum = 0.0;
  for (double& x : p_) {
    if (!std::isfinite(x) || x < -kSimplexSlack) {
      throw Error(ErrorCode::InvalidArgument, "probabilities must be non-negative");
    }
    x = std::max(x, 0.0);
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSimplexSlack) {
    throw Error(ErrorCode::InvalidArgument, "probabilities must sum to 1");
  }
}

ProbabilityVector ProbabilityVector::corner(std::size_t size, std::size_t k) {
  std::vector<double> p(size, 0.0);
  p.at(k) = 1.0;
  return ProbabilityVector(std::move(p));
}

ProbabilityVector ProbabilityVector::center(std::size_t size) {
  return ProbabilityVector(std::vector<double>(size, 1.0 / double(size)));
}

ProbabilityVector mixing_line(const ProbabilityVector& p, const ProbabilityVector& q, double t) {
  require_same_size(p, q);
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::OutOfRange, "mixing parameter outside [0, 1]");
  std::vector<double> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = (1.0 - t) * p[i] + t * q[i];
  return ProbabilityVector(std::move(r));
}

double round_distance(const ProbabilityVector& p, const ProbabilityVector& q) {
  require_same_size(p, q);
  return 2.0 * std::asin(std::min(1.0, euclid(square_roots(p), square_roots(q)) / 2.0));
}

ChartPoint simplex_to_gnomonic(const ProbabilityVector& p) {
  return gnomonic_project(square_roots(p));
}

std::vector<double> barycentric_point(const ProbabilityVector& p) {
  const std::size_t big_n = p.size();
  std::vector<double> x(big_n - 1, 0.0);
  for (std::size_t k = 0; k < big_n; ++k) {
    const ChartPoint c = gnomonic_project(ProbabilityVector::corner(big_n, k).values());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += p[k] * c.coords[i];
  }
  return x;
}

double barycentric_center_scale(int big_n) { return std::sqrt(big_n / 2.0); }
double gnomonic_center_scale(int big_n) { return gnomonic_scale(big_n); }

CornerDistances corner_distances(const ProbabilityVector& p) {
  const int big_n = static_cast<int>(p.size());
  const auto values = p.values();
  CornerDistances d;
  d.corner = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  const ProbabilityVector corner = ProbabilityVector::corner(p.size(), d.corner);
  d.round = round_distance(p, corner);
  d.barycentric = barycentric_center_scale(big_n) *
                  euclid(barycentric_point(p), barycentric_point(corner));
  d.gnomonic = gnomonic_center_scale(big_n) *
               euclid(simplex_to_gnomonic(p).coords, simplex_to_gnomonic(corner).coords);
  return d;
}

ProjectiveState schmidt_form_state(std::span<const double> coefficients) {
  const int k = static_cast<int>(coefficients.size());
  if (k < 2) throw Error(ErrorCode::DimensionMismatch, "need at least 2 Schmidt coefficients");
  Amplitudes z = Amplitudes::Zero(k * k);
  for (int i = 0; i < k; ++i) {
    if (coefficients[i] < 0.0) throw Error(ErrorCode::InvalidArgument, "Schmidt coefficients are non-negative");
    z[i * k + i] = coefficients[i];
  }
  return normalize_and_gauge(z);
}

SchmidtSimplexCheck schmidt_simplex_check(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient lists differ in length");
  SchmidtSimplexCheck r;
  r.fs_distance = fs_distance(schmidt_form_state(a), schmidt_form_state(b));
  // Direct angle between the unit coefficient vectors.
  Eigen::VectorXd u(a.size()), v(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    u[i] = a[i];
    v[i] = b[i];
  }
  u.normalize();
  v.normalize();
  const double dot = u.dot(v);
  r.octant_distance = std::atan2((v - dot * u).norm(), dot);
  r.residual = std::abs(r.fs_distance - r.octant_distance);
  return r;
}

}  // namespace cpn
