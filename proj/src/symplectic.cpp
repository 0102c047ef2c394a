#include "cpn/symplectic.hpp"

#include <cmath>

#include "cpn/rotations.hpp"

namespace cpn {

namespace {

void set_pair(Eigen::MatrixXd& m, int a, int b, double v) {
  m(a, b) += v;
  m(b, a) -= v;
}

double pfaffian_recursive(const Eigen::MatrixXd& a, std::vector<int>& idx) {
  if (idx.empty()) return 1.0;
  const int first = idx.front();
  double total = 0.0;
  double sign = 1.0;
  for (std::size_t j = 1; j < idx.size(); ++j, sign = -sign) {
    const int partner = idx[j];
    const double entry = a(first, partner);
    if (entry == 0.0) continue;
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    total += sign * entry * pfaffian_recursive(a, rest);
  }
  return total;
}

}  // namespace

TwoFormMatrix omega_octant(const OctantTorusCoords& c, const Tolerances& tol) {
  const int n = static_cast<int>(c.radii.size()) - 1;
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "need at least 2 radii");
  for (double r : c.radii) {
    if (r <= tol.edge) throw Error(ErrorCode::EdgePoint, "symplectic form chart fails on the boundary");
  }
  TwoFormMatrix w;
  w.coords = octant_coordinate_names(n);
  w.entries = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) set_pair(w.entries, i, n + i, 4.0 * c.radii[i + 1]);
  return w;
}

std::vector<std::string> orbit_form_names() {
  return {"sigma", "tau", "theta1", "phi1", "theta2", "phi2"};
}

TwoFormMatrix omega_orbit(const OrbitCoords& c) {
  enum { SIG, TAU, T1, P1, T2, P2 };
  const double s = std::sin(2.0 * c.sigma);
  const double k = std::cos(2.0 * c.sigma);
  TwoFormMatrix w;
  w.coords = orbit_form_names();
  w.entries = Eigen::MatrixXd::Zero(6, 6);
  set_pair(w.entries, SIG, TAU, 2.0 * s);
  set_pair(w.entries, SIG, P1, 2.0 * s * std::cos(c.theta1));
  set_pair(w.entries, SIG, P2, 2.0 * s * std::cos(c.theta2));
  set_pair(w.entries, T1, P1, k * std::sin(c.theta1));
  set_pair(w.entries, T2, P2, k * std::sin(c.theta2));
  return w;
}

MetricMatrix orbit_metric_full(const OrbitCoords& c) {
  const Eigen::MatrixXd h = orbit_metric(c).entries;  // θ₁, φ₁, θ₂, φ₂, τ
  // Form-order position of each metric-order coordinate.
  const int pos[5] = {2, 3, 4, 5, 1};
  MetricMatrix g;
  g.coords = orbit_form_names();
  g.entries = Eigen::MatrixXd::Zero(6, 6);
  g.entries(0, 0) = 1.0;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) g.entries(pos[a], pos[b]) = h(a, b);
  }
  return g;
}

Embedding orbit_form_embedding() {
  return [](std::span<const double> p) {
    return orbit_embed({p[0], p[1], p[2], p[3], p[4], p[5]});
  };
}

TwoFormMatrix numeric_two_form_pullback(const Embedding& embedding,
                                        std::span<const double> point, double h) {
  const TangentFrame frame = numeric_tangents(embedding, point, h);
  const int k = static_cast<int>(frame.tangents.size());
  TwoFormMatrix w;
  for (int a = 0; a < k; ++a) w.coords.push_back("x" + std::to_string(a + 1));
  w.entries = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double v = 4.0 * fs_hermitian(frame.base, frame.tangents[a], frame.tangents[b]).imag();
      w.entries(a, b) = v;
      w.entries(b, a) = -v;
    }
  }
  return w;
}

double closedness_residual(const FormField& field, std::span<const double> point, double h) {
  std::vector<double> p(point.begin(), point.end());
  const int dim = static_cast<int>(p.size());
  std::vector<Eigen::MatrixXd> deriv;
  deriv.reserve(dim);
  for (int a = 0; a < dim; ++a) {
    const double x = p[a];
    p[a] = x + h;
    const Eigen::MatrixXd plus = field(p);
    p[a] = x - h;
    const Eigen::MatrixXd minus = field(p);
    p[a] = x;
    deriv.push_back((plus - minus) / (2.0 * h));
  }
  double worst = 0.0;
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      for (int c = b + 1; c < dim; ++c) {
        const double d = deriv[a](b, c) + deriv[b](c, a) + deriv[c](a, b);
        worst = std::max(worst, std::abs(d));
      }
    }
  }
  return worst;
}

Eigen::MatrixXd exterior_derivative(const OneFormField& form, std::span<const double> point,
                                    double h) {
  std::vector<double> p(point.begin(), point.end());
  const int dim = static_cast<int>(p.size());
  Eigen::MatrixXd jac(dim, dim);  // jac(a, b) = ∂_a A_b
  for (int a = 0; a < dim; ++a) {
    const double x = p[a];
    p[a] = x + h;
    const Eigen::VectorXd plus = form(p);
    p[a] = x - h;
    const Eigen::VectorXd minus = form(p);
    p[a] = x;
    jac.row(a) = ((plus - minus) / (2.0 * h)).transpose();
  }
  return jac - jac.transpose();
}

Eigen::VectorXd action_one_form(std::span<const double> point) {
  const int n = static_cast<int>(point.size()) / 2;
  Eigen::VectorXd a = Eigen::VectorXd::Zero(2 * n);
  for (int i = 0; i < n; ++i) a[n + i] = 2.0 * point[i] * point[i];
  return a;
}

double lagrangian_residual(const Embedding& embedding,
                           std::span<const std::vector<double>> points, double h) {
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, numeric_two_form_pullback(embedding, p, h).entries.cwiseAbs().maxCoeff());
  }
  return worst;
}

Embedding max_entangled_embedding() {
  return [](std::span<const double> p) {
    const Eigen::Matrix2cd u = spin_half_z(p[1]) * spin_half_y(p[0]) * spin_half_z(p[2]);
    return from_coefficient_matrix(u / std::sqrt(2.0));
  };
}

double pfaffian(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "Pfaffian of a non-square matrix");
  if (a.rows() % 2 != 0) return 0.0;
  std::vector<int> idx(a.rows());
  for (int i = 0; i < a.rows(); ++i) idx[i] = i;
  return pfaffian_recursive(a, idx);
}

double liouville_volume_density(const TwoFormMatrix& omega) {
  return std::abs(pfaffian(omega.entries / 4.0));
}

double liouville_volume_density(const OctantTorusCoords& c) {
  return liouville_volume_density(omega_octant(c));
}

double liouville_volume_density(const OrbitCoords& c) {
  return liouville_volume_density(omega_orbit(c));
}

double metric_volume_density(const MetricMatrix& g) {
  return std::sqrt(std::max(0.0, g.entries.determinant()));
}

RankReport form_rank(const Eigen::MatrixXd& m, double high, double low) {
  RankReport r;
  r.singular_values = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  for (Eigen::Index i = 0; i < r.singular_values.size(); ++i) {
    const double s = r.singular_values[i];
    if (s > high) ++r.rank;
    else if (s >= low) r.clean = false;
  }
  return r;
}

Eigen::MatrixXd omega_orbit_restricted(const OrbitCoords& c) {
  return omega_orbit(c).entries.bottomRightCorner(5, 5);
}

}  // namespace cpn
