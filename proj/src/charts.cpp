#include "cpn/charts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cpn {

namespace {

constexpr double kChartSlack = 1e-12;

void require_dim(std::size_t big_n) {
  if (big_n != 3 && big_n != 4) {
    throw Error(ErrorCode::DimensionMismatch, "charts cover the CP² and CP³ octants only");
  }
}

Eigen::VectorXd to_vector(std::span<const double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<double> clamp_to_octant(const Eigen::VectorXd& n, bool require_octant) {
  std::vector<double> out = to_std(n);
  for (double& x : out) {
    if (x < -kChartSlack && require_octant) {
      throw Error(ErrorCode::OutsideChart, "chart point lies outside the octant");
    }
    if (x < 0.0 && x >= -kChartSlack) x = 0.0;
  }
  return out;
}

}  // namespace

Eigen::MatrixXd gnomonic_frame(int big_n) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(big_n, big_n);
  h.row(0).setConstant(1.0 / std::sqrt(double(big_n)));
  for (int k = 1; k < big_n; ++k) {
    const double norm = std::sqrt(double(k) * (k + 1));
    for (int j = 0; j < k; ++j) h(k, j) = -1.0 / norm;
    h(k, k) = double(k) / norm;
  }
  return h;
}

double gnomonic_scale(int big_n) { return std::sqrt(2.0 * big_n); }

ChartPoint gnomonic_project(std::span<const double> radii) {
  require_dim(radii.size());
  const int big_n = static_cast<int>(radii.size());
  const Eigen::VectorXd x = gnomonic_frame(big_n) * to_vector(radii);
  if (!(x[0] > 0.0)) {
    throw Error(ErrorCode::OutsideChart, "point is not in the hemisphere around the octant center");
  }
  ChartPoint p;
  p.chart = Chart::Gnomonic;
  const double kappa = gnomonic_scale(big_n);
  for (int i = 1; i < big_n; ++i) p.coords.push_back(x[i] / (kappa * x[0]));
  return p;
}

std::vector<double> gnomonic_unproject(const ChartPoint& p, bool require_octant) {
  if (p.chart != Chart::Gnomonic) {
    throw Error(ErrorCode::InvalidArgument, "not a gnomonic chart point");
  }
  const int big_n = static_cast<int>(p.coords.size()) + 1;
  require_dim(big_n);
  const double kappa = gnomonic_scale(big_n);
  Eigen::VectorXd x(big_n);
  x[0] = 1.0;
  for (int i = 1; i < big_n; ++i) x[i] = kappa * p.coords[i - 1];
  x /= x.norm();
  return clamp_to_octant(gnomonic_frame(big_n).transpose() * x, require_octant);
}

ChartPoint stereographic_project(std::span<const double> radii, int pole_corner) {
  require_dim(radii.size());
  const int big_n = static_cast<int>(radii.size());
  if (pole_corner < 0 || pole_corner >= big_n) {
    throw Error(ErrorCode::InvalidArgument, "pole corner index out of range");
  }
  const double denom = 1.0 + radii[pole_corner];
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::OutsideChart, "antipode of the pole has no stereographic image");
  }
  ChartPoint p;
  p.chart = Chart::Stereographic;
  p.pole_corner = pole_corner;
  for (int i = 0; i < big_n; ++i) {
    if (i != pole_corner) p.coords.push_back(radii[i] / denom);
  }
  return p;
}

std::vector<double> stereographic_unproject(const ChartPoint& p) {
  if (p.chart != Chart::Stereographic) {
    throw Error(ErrorCode::InvalidArgument, "not a stereographic chart point");
  }
  const int big_n = static_cast<int>(p.coords.size()) + 1;
  require_dim(big_n);
  double rho2 = 0.0;
  for (double c : p.coords) rho2 += c * c;
  if (rho2 > 1.0 + kChartSlack) {
    throw Error(ErrorCode::OutsideChart, "stereographic point outside the unit disk");
  }
  Eigen::VectorXd n(big_n);
  int k = 0;
  for (int i = 0; i < big_n; ++i) {
    n[i] = i == p.pole_corner ? (1.0 - rho2) / (1.0 + rho2) : 2.0 * p.coords[k++] / (1.0 + rho2);
  }
  return clamp_to_octant(n, true);
}

MetricMatrix gnomonic_metric(const ChartPoint& p) {
  // Validates the point lies in the chart.
  gnomonic_unproject(p, true);
  const int dim = static_cast<int>(p.coords.size());
  const double k2 = 2.0 * (dim + 1);  // κ²; 6 for the CP² triangle
  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x[i] = p.coords[i];
  const double q = 1.0 + k2 * x.squaredNorm();
  MetricMatrix g;
  for (int i = 1; i <= dim; ++i) g.coords.push_back("x" + std::to_string(i));
  g.entries = (k2 / (q * q)) *
              (q * Eigen::MatrixXd::Identity(dim, dim) - k2 * x * x.transpose());
  return g;
}

std::vector<GeodesicSample> trace_great_circle(std::span<const double> a,
                                               std::span<const double> b, int samples) {
  if (a.size() != b.size() || a.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "geodesic endpoints differ in dimension");
  }
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
  Eigen::VectorXd u = to_vector(a);
  Eigen::VectorXd v = to_vector(b);
  u.normalize();
  v.normalize();
  // Orthonormal pair spanning the great circle.
  Eigen::VectorXd w = v - u.dot(v) * u;
  const double sin_len = w.norm();
  if (sin_len < 1e-12) {
    throw Error(ErrorCode::DegeneratePair, "endpoints are equal or antipodal");
  }
  w /= sin_len;
  const double length = std::atan2(sin_len, u.dot(v));

  std::vector<GeodesicSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = length * double(i) / double(samples - 1);
    GeodesicSample s;
    s.arc = t;
    s.radii = to_std(std::cos(t) * u + std::sin(t) * w);
    for (double& x : s.radii) {
      if (x < -kChartSlack) s.in_octant = false;
      else if (x < 0.0) x = 0.0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<std::vector<double>, std::vector<double>>> trisecting_geodesics(
    int big_n, int corner_a, int corner_b, int opposite_corner) {
  std::vector<std::pair<std::vector<double>, std::vector<double>>> out;
  std::vector<double> top(big_n, 0.0);
  top[opposite_corner] = 1.0;
  for (int k = 1; k <= 2; ++k) {
    const double t = k * std::numbers::pi / 6.0;  // thirds of the π/2 edge
    std::vector<double> edge_point(big_n, 0.0);
    edge_point[corner_a] = std::cos(t);
    edge_point[corner_b] = std::sin(t);
    out.emplace_back(top, edge_point);
  }
  return out;
}

Eigen::MatrixXd torus_phase_block(std::span<const double> radii) {
  const int n = static_cast<int>(radii.size()) - 1;
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    const double ni2 = radii[i + 1] * radii[i + 1];
    for (int j = 0; j < n; ++j) {
      const double nj2 = radii[j + 1] * radii[j + 1];
      g(i, j) = i == j ? ni2 * (1.0 - ni2) : -ni2 * nj2;
    }
  }
  return g;
}

TorusShape torus_shape(std::span<const double> radii) {
  require_dim(radii.size());
  const int n = static_cast<int>(radii.size()) - 1;
  const double two_pi = 2.0 * std::numbers::pi;
  const Eigen::MatrixXd g = torus_phase_block(radii);

  TorusShape shape;
  shape.side_lengths.resize(n);
  shape.angles = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double ni = radii[i + 1];
    shape.side_lengths[i] = two_pi * ni * std::sqrt(std::max(0.0, 1.0 - ni * ni));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double ni = radii[i + 1], nj = radii[j + 1];
      const double si = std::sqrt(std::max(0.0, 1.0 - ni * ni));
      const double sj = std::sqrt(std::max(0.0, 1.0 - nj * nj));
      if (shape.side_lengths[i] <= 0.0 || shape.side_lengths[j] <= 0.0) continue;
      shape.angles(i, j) = std::acos(std::clamp(-ni * nj / (si * sj), -1.0, 1.0));
    }
  }
  if (n == 2) {
    shape.measure = two_pi * two_pi * radii[0] * radii[1] * radii[2];
  } else {
    shape.measure = std::pow(two_pi, n) * std::sqrt(std::max(0.0, g.determinant()));
  }
  return shape;
}

TangentFrame numeric_tangents(const Embedding& embedding, std::span<const double> point,
                              double h) {
  TangentFrame frame;
  frame.base = embedding(point).amplitudes();
  std::vector<double> p(point.begin(), point.end());
  auto aligned = [&](std::span<const double> q) {
    Amplitudes z = embedding(q).amplitudes();
    const Complex overlap = frame.base.dot(z);
    if (std::abs(overlap) > 0.0) z *= std::conj(overlap) / std::abs(overlap);
    return z;
  };
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double x = p[a];
    p[a] = x + h;
    const Amplitudes plus = aligned(p);
    p[a] = x - h;
    const Amplitudes minus = aligned(p);
    p[a] = x;
    frame.tangents.push_back((plus - minus) / (2.0 * h));
  }
  return frame;
}

Embedding octant_torus_embedding(int big_n) {
  if (big_n < 2) throw Error(ErrorCode::DimensionMismatch, "need at least 2 amplitudes");
  return [big_n](std::span<const double> p) {
    const int n = big_n - 1;
    if (static_cast<int>(p.size()) != 2 * n) {
      throw Error(ErrorCode::DimensionMismatch, "octant-torus point has the wrong length");
    }
    Amplitudes z(big_n);
    double rest = 1.0;
    for (int i = 0; i < n; ++i) {
      z[i + 1] = std::polar(p[i], p[n + i]);
      rest -= p[i] * p[i];
    }
    if (rest < 0.0) throw Error(ErrorCode::OutsideChart, "radii exceed the unit sphere");
    z[0] = std::sqrt(rest);
    return normalize_and_gauge(z);
  };
}

MetricMatrix numeric_pullback(const Embedding& embedding, std::span<const double> point,
                              double h, std::vector<std::string> names) {
  const TangentFrame frame = numeric_tangents(embedding, point, h);
  const int k = static_cast<int>(frame.tangents.size());
  MetricMatrix g;
  if (names.empty()) {
    for (int a = 0; a < k; ++a) names.push_back("x" + std::to_string(a + 1));
  }
  g.coords = std::move(names);
  g.entries = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    const Amplitudes& u = frame.tangents[a];
    g.entries(a, a) = fs_metric_homogeneous(frame.base, u);
    for (int b = a + 1; b < k; ++b) {
      const Amplitudes& v = frame.tangents[b];
      const double value = 0.25 * (fs_metric_homogeneous(frame.base, u + v) -
                                   fs_metric_homogeneous(frame.base, u - v));
      g.entries(a, b) = g.entries(b, a) = value;
    }
  }
  return g;
}

}  // namespace cpn
