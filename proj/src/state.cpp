#include "cpn/state.hpp"

#include <cmath>
#include <numbers>

namespace cpn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int find_carrier(const Amplitudes& z, double threshold) {
  for (int k = 0; k < z.size(); ++k) {
    if (std::abs(z[k]) > threshold) return k;
  }
  return -1;
}

}  // namespace

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_pi(double angle) {
  double r = wrap_two_pi(angle);
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

ProjectiveState ProjectiveState::basis(int dim, int k) {
  if (dim < 2 || k < 0 || k >= dim) {
    throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }
  Amplitudes z = Amplitudes::Zero(dim);
  z[k] = 1.0;
  return normalize_and_gauge(z);
}

ProjectiveState normalize_and_gauge(const Amplitudes& raw, const Tolerances& tol) {
  if (raw.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "a projective state needs at least 2 amplitudes");
  }
  if (!raw.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
  }
  const double norm = raw.norm();
  if (!(norm >= tol.zero)) {
    throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  }
  Amplitudes z = raw / norm;
  const int carrier = find_carrier(z, tol.edge);
  // A unit vector always has some |z_k| ≥ 1/√N > ε_edge.
  const Complex phase = std::conj(z[carrier]) / std::abs(z[carrier]);
  z *= phase;
  z[carrier] = Complex(std::abs(z[carrier]), 0.0);
  return ProjectiveState(std::move(z), carrier);
}

ProjectiveState normalize_and_gauge(std::initializer_list<Complex> raw) {
  Amplitudes z(static_cast<Eigen::Index>(raw.size()));
  Eigen::Index k = 0;
  for (const Complex& c : raw) z[k++] = c;
  return normalize_and_gauge(z);
}

OctantTorusCoords to_octant_torus(const ProjectiveState& s, const Tolerances& tol) {
  const Amplitudes& z = s.amplitudes();
  const int carrier = s.carrier();
  const double carrier_arg = std::arg(z[carrier]);

  OctantTorusCoords c;
  c.radii.resize(z.size());
  c.phases.resize(z.size() - 1);
  for (int k = 0; k < z.size(); ++k) c.radii[k] = std::abs(z[k]);
  for (int k = 1; k < z.size(); ++k) {
    if (k <= carrier || c.radii[k] <= tol.edge) continue;
    c.phases[k - 1] = wrap_two_pi(std::arg(z[k]) - carrier_arg);
  }
  return c;
}

ProjectiveState from_octant_torus(const OctantTorusCoords& c, const Tolerances& tol) {
  const auto n = c.radii.size();
  if (n < 2 || c.phases.size() + 1 != n) {
    throw Error(ErrorCode::DimensionMismatch, "phases must number one less than radii");
  }
  Amplitudes z(static_cast<Eigen::Index>(n));
  bool carrier_seen = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = c.radii[k];
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::InvalidArgument, "octant radii must be finite and non-negative");
    }
    const std::optional<double> phase = k == 0 ? std::optional<double>(0.0) : c.phases[k - 1];
    if (r <= tol.edge) {
      z[k] = r;
      continue;
    }
    if (!carrier_seen) {
      // The carrier's phase is the reference and may be absent.
      carrier_seen = true;
      z[k] = phase ? std::polar(r, *phase) : Complex(r, 0.0);
      continue;
    }
    if (!phase) {
      throw Error(ErrorCode::MissingPhase,
                  "phase nu" + std::to_string(k) + " is ABSENT but its radius is nonzero");
    }
    z[k] = std::polar(r, *phase);
  }
  return normalize_and_gauge(z, tol);
}

double fs_distance(const ProjectiveState& a, const ProjectiveState& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "states live in different dimensions");
  }
  const Amplitudes& za = a.amplitudes();
  const Amplitudes& zb = b.amplitudes();
  const Complex overlap = za.dot(zb);
  // atan2 form keeps full relative precision near 0 and π/2.
  const double perp = (zb - overlap * za).norm();
  return std::atan2(perp, std::abs(overlap));
}

Complex fs_hermitian(const Amplitudes& z, const Amplitudes& u, const Amplitudes& v) {
  const double zz = z.squaredNorm();
  return (zz * u.dot(v) - u.dot(z) * z.dot(v)) / (zz * zz);
}

double fs_metric_homogeneous(const Amplitudes& z, const Amplitudes& dz) {
  const double zz = z.squaredNorm();
  const Amplitudes perp = dz - (z.dot(dz) / zz) * z;
  return perp.squaredNorm() / zz;
}

double fs_metric_homogeneous(const TangentVector& v) {
  if (v.delta.size() != v.base.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "tangent vector dimension");
  }
  return fs_metric_homogeneous(v.base.amplitudes(), v.delta);
}

std::vector<std::string> octant_coordinate_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("n" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("nu" + std::to_string(i));
  return names;
}

MetricMatrix octant_torus_metric(const OctantTorusCoords& c, const Tolerances& tol) {
  const int big_n = static_cast<int>(c.radii.size());
  if (big_n < 2) throw Error(ErrorCode::DimensionMismatch, "need at least 2 radii");
  for (double r : c.radii) {
    if (r <= tol.edge) {
      throw Error(ErrorCode::EdgePoint, "octant-torus metric is degenerate at the octant boundary");
    }
  }
  const int n = big_n - 1;
  const double n0sq = c.radii[0] * c.radii[0];

  MetricMatrix g;
  g.coords = octant_coordinate_names(n);
  g.entries = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const double ni = c.radii[i + 1];
    for (int j = 0; j < n; ++j) {
      const double nj = c.radii[j + 1];
      // dn₀ = −Σ (n_i/n₀) dn_i folded into the round block.
      g.entries(i, j) = (i == j ? 1.0 : 0.0) + ni * nj / n0sq;
      g.entries(n + i, n + j) =
          i == j ? ni * ni * (1.0 - ni * ni) : -ni * ni * nj * nj;
    }
  }
  return g;
}

}  // namespace cpn
