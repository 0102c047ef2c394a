#include "cpn/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cpn/charts.hpp"
#include "cpn/cli/search.hpp"
#include "cpn/entanglement.hpp"
#include "cpn/rotations.hpp"
#include "cpn/sampling.hpp"
#include "cpn/simplex.hpp"
#include "cpn/submanifolds.hpp"

namespace cpn::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void at_most(std::string name, double measured, double tolerance) {
    add(std::move(name), measured, tolerance, false);
  }
  void above(std::string name, double measured, double tolerance) {
    add(std::move(name), measured, tolerance, true);
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void add(std::string name, double measured, double tolerance, bool lower) {
    const bool ok = std::isfinite(measured) && (lower ? measured > tolerance : measured <= tolerance);
    results_.push_back({suite_, std::move(name), measured, tolerance, lower, ok});
  }
  std::string suite_;
  std::vector<CheckResult> results_;
};

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

double uniform(RngStream& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

std::vector<double> interior_radii(RngStream& rng, int big_n, double margin = 0.05) {
  while (true) {
    const ProjectiveState s = haar_state(rng, big_n);
    std::vector<double> n(big_n);
    for (int k = 0; k < big_n; ++k) n[k] = std::abs(s[k]);
    if (*std::min_element(n.begin(), n.end()) > margin) return n;
  }
}

// Central differences at step 1e-5 lose accuracy like h²/n₀⁵ near the
// faces, since n₀ = √(1 − Σnᵢ²) is the eliminated radius.  Pullback
// comparisons therefore draw points with every radius at least 0.35.
constexpr double kPullbackMargin = 0.35;

OctantTorusCoords interior_point(RngStream& rng, int big_n, double margin = 0.05) {
  OctantTorusCoords c;
  c.radii = interior_radii(rng, big_n, margin);
  for (int k = 1; k < big_n; ++k) c.phases.emplace_back(uniform(rng, 0, 2 * kPi));
  return c;
}

OrbitCoords random_orbit_point(RngStream& rng) {
  return {uniform(rng, 0.05, kPi / 4 - 0.05), uniform(rng, 0, 2 * kPi), uniform(rng, 0.2, kPi - 0.2),
          uniform(rng, 0, 2 * kPi), uniform(rng, 0.2, kPi - 0.2), uniform(rng, 0, 2 * kPi)};
}

Eigen::Matrix2cd random_su2(RngStream& rng) {
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = rng.normal();
  q.normalize();
  const Complex a(q[0], q[1]), b(q[2], q[3]);
  Eigen::Matrix2cd u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

std::vector<double> octant_point_vector(const OctantTorusCoords& c) {
  const int n = static_cast<int>(c.radii.size()) - 1;
  std::vector<double> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = c.radii[i + 1];
    p[n + i] = c.phases[i].value();
  }
  return p;
}

// Distance of points from the line through the first and last one.
double collinearity(const std::vector<std::vector<double>>& pts) {
  const Eigen::Map<const Eigen::VectorXd> a(pts.front().data(), pts.front().size());
  const Eigen::Map<const Eigen::VectorXd> b(pts.back().data(), pts.back().size());
  const Eigen::VectorXd dir = (b - a).normalized();
  double worst = 0.0;
  for (const auto& p : pts) {
    const Eigen::Map<const Eigen::VectorXd> x(p.data(), p.size());
    const Eigen::VectorXd d = x - a;
    worst = std::max(worst, (d - d.dot(dir) * dir).norm());
  }
  return worst;
}

// Radius R of a 2-sphere family from its induced metric R²(dθ² + sin²θ dφ²).
// Returns max(|R − expected|, model residual).
double sphere_radius_residual(const Embedding& emb, double expected) {
  double worst = 0.0;
  for (double theta : {0.4, 0.9, 1.3, 2.1, 2.7}) {
    for (double phi : {0.3, 1.7, 4.0}) {
      const std::array<double, 2> p{theta, phi};
      const Eigen::MatrixXd g = numeric_pullback(emb, p).entries;
      const double r2 = g(0, 0);
      const double s2 = std::sin(theta) * std::sin(theta);
      worst = std::max({worst, std::abs(std::sqrt(r2) - expected), std::abs(g(1, 1) - r2 * s2),
                        std::abs(g(0, 1))});
    }
  }
  return worst;
}

Eigen::Vector2cd qubit(double alpha, double beta) {
  return {std::cos(alpha / 2), std::polar(1.0, beta) * std::sin(alpha / 2)};
}

// ---------------------------------------------------------------- metric

void metric_suite(std::uint64_t seed, Report& r) {
  RngStream rng(derive_stream_seed(seed, 1));

  double worst = 0.0;
  for (int big_n = 2; big_n <= 4; ++big_n) {
    for (int i = 0; i < big_n; ++i) {
      for (int j = i + 1; j < big_n; ++j) {
        worst = std::max(worst, std::abs(fs_distance(ProjectiveState::basis(big_n, i),
                                                     ProjectiveState::basis(big_n, j)) - kPi / 2));
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const ProjectiveState a = haar_state(rng);
    Amplitudes b = haar_state(rng).amplitudes();
    b -= a.amplitudes().dot(b) * a.amplitudes();
    worst = std::max(worst, std::abs(fs_distance(a, normalize_and_gauge(b)) - kPi / 2));
  }
  r.at_most("fs-max-distance", worst, 1e-12);

  worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int big_n = t % 2 == 0 ? 4 : 3;
    const OctantTorusCoords c = interior_point(rng, big_n, kPullbackMargin);
    const MetricMatrix num = numeric_pullback(octant_torus_embedding(big_n), octant_point_vector(c));
    worst = std::max(worst, max_abs(num.entries - octant_torus_metric(c).entries));
  }
  r.at_most("octant-metric-pullback", worst, 1e-7);

  worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const int big_n = t % 2 == 0 ? 3 : 4;
    const auto a = interior_radii(rng, big_n, 0.0);
    const auto b = interior_radii(rng, big_n, 0.0);
    std::vector<std::vector<double>> pts;
    for (const auto& s : trace_great_circle(a, b, 40)) pts.push_back(gnomonic_project(s.radii).coords);
    worst = std::max(worst, collinearity(pts));
  }
  r.at_most("gnomonic-collinearity", worst, 1e-9);

  worst = 0.0;
  for (int big_n = 3; big_n <= 4; ++big_n) {
    for (int i = 0; i < big_n; ++i) {
      for (int j = i + 1; j < big_n; ++j) {
        const auto a = gnomonic_project(ProbabilityVector::corner(big_n, i).values()).coords;
        const auto b = gnomonic_project(ProbabilityVector::corner(big_n, j).values()).coords;
        double d2 = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) d2 += (a[k] - b[k]) * (a[k] - b[k]);
        worst = std::max(worst, std::abs(std::sqrt(d2) - 1.0));
      }
    }
  }
  r.at_most("gnomonic-corner-separation", worst, 1e-12);

  worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto n = interior_radii(rng, 3, 1e-3);
    const TorusShape shape = torus_shape(n);
    const double flat = shape.side_lengths[0] * shape.side_lengths[1] * std::sin(shape.angles(0, 1));
    worst = std::max(worst, std::abs(shape.measure - flat));
  }
  r.at_most("torus-area-law", worst, 1e-10);

  {
    auto negative_area = [](const std::vector<double>& x) {
      const std::vector<double> n{std::cos(x[0]), std::sin(x[0]) * std::cos(x[1]),
                                  std::sin(x[0]) * std::sin(x[1])};
      if (n[0] < 0 || n[1] < 0 || n[2] < 0) return 1.0;
      return -torus_shape(n).measure;
    };
    const SearchResult best = nelder_mead(negative_area, {0.5, 0.5}, 0.2, 1e-13);
    const double a = best.x[0], b = best.x[1];
    const Eigen::Vector3d n(std::cos(a), std::sin(a) * std::cos(b), std::sin(a) * std::sin(b));
    r.at_most("torus-area-argmax", (n - Eigen::Vector3d::Constant(1 / std::sqrt(3.0))).norm(), 1e-6);
  }

  {
    const auto bases = mub_bases();
    double overlap = 0.0, center = 0.0;
    for (int a = 0; a < 4; ++a) {
      overlap = std::max(overlap, max_abs((bases[a].adjoint() * bases[a]).cwiseAbs() -
                                          Eigen::Matrix3d::Identity()));
      for (int b = a + 1; b < 4; ++b) {
        const Eigen::Matrix3d m = (bases[a].adjoint() * bases[b]).cwiseAbs();
        overlap = std::max(overlap, max_abs(m.array() - 1.0 / std::sqrt(3.0)));
      }
      if (a == 0) continue;
      for (int j = 0; j < 3; ++j) {
        const auto c = to_octant_torus(normalize_and_gauge(Amplitudes(bases[a].col(j))));
        for (double n : c.radii) center = std::max(center, std::abs(n - 1 / std::sqrt(3.0)));
      }
    }
    r.at_most("mub-overlaps", overlap, 1e-12);
    r.at_most("mub-center", center, 1e-12);
  }

  r.at_most("spin1-up-radius",
            sphere_radius_residual([](std::span<const double> p) { return spin1_state(SpinSeed::Up, p[0], p[1]); },
                                   1 / std::numbers::sqrt2),
            1e-8);
  worst = 0.0;
  for (const auto& n : fibonacci_directions(50)) {
    double th = 0, ph = 0, th2 = 0, ph2 = 0;
    polar_angles(n, th, ph);
    polar_angles(-n, th2, ph2);
    worst = std::max(worst, fs_distance(spin1_state(SpinSeed::Zero, th, ph),
                                        spin1_state(SpinSeed::Zero, th2, ph2)));
  }
  r.at_most("spin1-zero-antipodal", worst, 1e-12);

  worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int big_n = t % 2 == 0 ? 3 : 4;
    const auto n = interior_radii(rng, big_n, 0.0);
    const auto g = gnomonic_unproject(gnomonic_project(n));
    const auto s = stereographic_unproject(stereographic_project(n, t % big_n));
    for (int k = 0; k < big_n; ++k) {
      worst = std::max({worst, std::abs(g[k] - n[k]), std::abs(s[k] - n[k])});
    }
  }
  r.at_most("chart-roundtrip", worst, 1e-12);
}

// ---------------------------------------------------------- entanglement

void entanglement_suite(std::uint64_t seed, Report& r) {
  RngStream rng(derive_stream_seed(seed, 2));

  {
    std::vector<ProjectiveState> separable, entangled;
    for (const auto& s : separable_surface(16, 16)) {
      for (auto& st : fiber_states(s, 8)) separable.push_back(std::move(st));
    }
    for (const auto& s : max_entangled_set(16)) {
      for (auto& st : fiber_states(s, 8)) entangled.push_back(std::move(st));
    }
    double best = kPi;
    for (const auto& a : entangled) {
      for (const auto& b : separable) best = std::min(best, fs_distance(a, b));
    }
    r.at_most("max-entangled-separable-distance", std::abs(best - kPi / 4), 1e-3);
    r.at_most("max-entangled-separable-lower-bound", std::max(0.0, kPi / 4 - best), 1e-9);
  }

  double exact = 0.0, beaten = 0.0;
  for (int t = 0; t < 200; ++t) {
    const ProjectiveState s = haar_state(rng);
    const ClosestSeparable c = closest_separable(s);
    exact = std::max(exact, std::abs(fs_distance(s, c.state) - c.distance));
    if (t >= 50) continue;
    auto objective = [&s](const std::vector<double>& x) {
      return fs_distance(s, product_state(qubit(x[0], x[1]), qubit(x[2], x[3])));
    };
    double found = kPi;
    for (int start = 0; start < 4; ++start) {
      const std::vector<double> x0{uniform(rng, 0, kPi), uniform(rng, 0, 2 * kPi), uniform(rng, 0, kPi),
                                   uniform(rng, 0, 2 * kPi)};
      found = std::min(found, nelder_mead(objective, x0, 0.3, 1e-10).value);
    }
    beaten = std::max(beaten, c.distance - found);
  }
  r.at_most("closest-separable-distance", exact, 1e-10);
  r.at_most("closest-separable-global", std::max(0.0, beaten), 1e-8);

  double invariance = 0.0, eigen = 0.0, reconstruct = 0.0;
  for (int t = 0; t < 200; ++t) {
    const ProjectiveState s = haar_state(rng);
    const SchmidtData d = schmidt_decompose(s);
    const SchmidtData e = schmidt_decompose(apply_local(s, random_su2(rng), random_su2(rng)));
    invariance = std::max({invariance, std::abs(d.coefficients[0] - e.coefficients[0]),
                           std::abs(d.coefficients[1] - e.coefficients[1])});
    const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(partial_trace_A(s).rho).eigenvalues();
    const double c2 = std::cos(d.schmidt_angle), s2 = std::sin(d.schmidt_angle);
    eigen = std::max({eigen, std::abs(ev[1] - c2 * c2), std::abs(ev[0] - s2 * s2),
                      std::abs(partial_trace_A(s).bloch_radius - std::cos(2 * d.schmidt_angle))});
    reconstruct = std::max(reconstruct, (schmidt_reconstruct(d) - as_coefficient_matrix(s)).norm());
  }
  r.at_most("schmidt-local-invariance", invariance, 1e-10);
  r.at_most("reduced-eigenvalues", eigen, 1e-12);
  r.at_most("schmidt-reconstruction", reconstruct, 1e-10);

  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const ProjectiveState s = t % 2 == 0 ? haar_state(rng)
                                         : product_state(haar_state(rng, 2).amplitudes(),
                                                         haar_state(rng, 2).amplitudes());
    const double sigma = schmidt_decompose(s).schmidt_angle;
    const double det = std::abs(as_coefficient_matrix(s).determinant());
    if (is_separable(s) != (det < kDefaultTolerances.predicate)) ++mismatches;
    if (is_separable(s) != (sigma < kDefaultTolerances.sigma)) ++mismatches;
  }
  r.at_most("det-criterion", mismatches, 0);

  {
    double dist = 0.0;
    for (const auto& b : {bell_phi_plus(), bell_phi_minus(), bell_psi_plus(), bell_psi_minus()}) {
      for (const auto& p : collapse_sphere(b, 60)) {
        dist = std::max({dist, std::abs(fs_distance(p, b) - kPi / 4), is_separable(p) ? 0.0 : 1.0});
      }
    }
    r.at_most("collapse-sphere-distance", dist, 1e-10);
    const ProjectiveState psi = bell_psi_minus();
    r.at_most("collapse-sphere-radius",
              sphere_radius_residual(
                  [&psi](std::span<const double> p) { return collapse_sphere_point(psi, p[0], p[1]); },
                  1 / std::numbers::sqrt2),
              1e-8);
  }

  {
    double worst = 0.0;
    for (const auto& s : separable_surface(9, 9)) {
      for (const auto& st : fiber_states(s, 4)) {
        worst = std::max(worst, std::abs(as_coefficient_matrix(st).determinant()));
        const auto res = separability_coordinate_residuals(to_octant_torus(st));
        if (*std::min_element(s.radii.begin(), s.radii.end()) > 1e-6) {
          worst = std::max({worst, std::abs(res.radial), std::abs(res.phase.value_or(0.0))});
        }
      }
    }
    for (const auto& s : max_entangled_set(9)) {
      for (const auto& st : fiber_states(s, 4)) {
        const CoefficientMatrix c = as_coefficient_matrix(st);
        worst = std::max(worst, (c * c.adjoint() - 0.5 * Eigen::Matrix2cd::Identity()).norm());
        if (*std::min_element(s.radii.begin(), s.radii.end()) > 1e-6) {
          const auto res = max_entangled_coordinate_residuals(to_octant_torus(st));
          worst = std::max({worst, std::abs(res.radial_03), std::abs(res.radial_12),
                            std::abs(res.phase.value_or(0.0))});
        }
      }
    }
    for (double sigma : {0.1, kPi / 8, 0.7}) {
      for (const auto& s : constant_sigma_region(sigma, 10)) {
        for (const auto& st : fiber_states(s, 2)) {
          worst = std::max(worst, std::abs(schmidt_decompose(st).schmidt_angle - sigma));
        }
      }
      for (const auto& s : constant_sigma_boundary(sigma, 20)) {
        worst = std::max(worst, std::abs(schmidt_decompose(representative_state(s)).schmidt_angle - sigma));
        const double expected = std::get<PhaseCosineRelation>(s.fiber_locus).value;
        worst = std::max(worst, std::abs(std::abs(fiber_cosine(s.radii, sigma)) - std::abs(expected)));
      }
    }
    r.at_most("generator-residuals", worst, 1e-9);
  }

  {
    auto negative_volume = [](double t) { return -torus_shape(max_entangled_radii(t)).measure; };
    auto crossing = [](double t) {
      const auto n = max_entangled_radii(t);
      return std::abs(n[0] * n[3] - n[1] * n[2]);
    };
    const double argmax = brent_minimize(negative_volume, 0.0, kPi / 2).x[0];
    const double cross = brent_minimize(crossing, 0.0, kPi / 2).x[0];
    r.at_most("max-entangled-crossing", std::abs(argmax - cross), 1e-6);
  }

  {
    const Embedding surface = [](std::span<const double> p) {
      OctantTorusCoords c;
      c.radii = euler_to_radii({p[0], 0.0, p[1]});
      c.phases = {0.4, 1.1, 1.5};
      return from_octant_torus(c);
    };
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const std::array<double, 2> p{uniform(rng, 0.2, kPi - 0.2), uniform(rng, 0.2, kPi - 0.2)};
      worst = std::max(worst, max_abs(numeric_pullback(surface, p).entries - 0.25 * Eigen::Matrix2d::Identity()));
    }
    r.at_most("separable-surface-metric", worst, 1e-7);
  }
}

// ---------------------------------------------------------------- orbits

void orbits_suite(std::uint64_t seed, const CheckProviders& providers, Report& r) {
  RngStream rng(derive_stream_seed(seed, 3));

  double metric = 0.0, split = 0.0, det = 0.0, foliation = 0.0, liouville = 0.0;
  for (int t = 0; t < 50; ++t) {
    const OrbitCoords c = random_orbit_point(rng);
    const std::array<double, 5> p{c.theta1, c.phi1, c.theta2, c.phi2, c.tau};
    const Eigen::MatrixXd g = providers.orbit_metric(c).entries;
    metric = std::max(metric, max_abs(numeric_pullback(orbit_embedding(c.sigma), p).entries - g));

    const std::array<double, 6> q{c.sigma, c.theta1, c.phi1, c.theta2, c.phi2, c.tau};
    const Eigen::MatrixXd full = numeric_pullback(orbit_embedding_full(), q).entries;
    split = std::max({split, std::abs(full(0, 0) - 1.0), full.row(0).tail(5).cwiseAbs().maxCoeff()});

    const double rho = orbit_density(c);
    det = std::max(det, std::abs(rho * rho - g.determinant()) / (rho * rho));
    foliation = std::max(foliation, std::abs(schmidt_decompose(orbit_embed(c)).schmidt_angle - c.sigma));

    // (Ω/4)^3/3! against √det of the 6-dimensional metric in form order.
    TwoFormMatrix omega = providers.omega_orbit(c);
    MetricMatrix g6 = orbit_metric_full(c);
    const int pos[5] = {2, 3, 4, 5, 1};
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) g6.entries(pos[a], pos[b]) = g(a, b);
    }
    const double vol = metric_volume_density(g6);
    liouville = std::max(liouville, std::abs(liouville_volume_density(omega) - vol) / vol);
  }
  r.at_most("orbit-metric-pullback", metric, 1e-6);
  r.at_most("orbit-sigma-splitting", split, 1e-7);
  r.at_most("orbit-density-det", det, 1e-8);
  r.at_most("schmidt-foliation", foliation, 1e-10);

  RngStream octant_rng(derive_stream_seed(seed, 31));
  for (int t = 0; t < 50; ++t) {
    const OctantTorusCoords c = interior_point(octant_rng, 4);
    const double vol = metric_volume_density(octant_torus_metric(c));
    liouville = std::max(liouville, std::abs(liouville_volume_density(c) - vol) / vol);
  }
  r.at_most("liouville-metric-density", liouville, 1e-8);

  {
    boost::math::quadrature::gauss_kronrod<double, 61> gk;
    const double total = gk.integrate([](double s) { return orbit_volume(s); }, 0.0, kPi / 4, 15, 1e-14);
    r.at_most("orbit-volume-integral", std::abs(total - kPi * kPi * kPi / 6), 1e-10);
    double cdf = 0.0;
    for (double s : {0.1, 0.3, kPi / 8, 0.6, kPi / 4}) {
      const double q = gk.integrate([](double x) { return schmidt_pdf(x); }, 0.0, s, 15, 1e-14);
      cdf = std::max(cdf, std::abs(q - schmidt_cdf(s)));
    }
    r.at_most("schmidt-cdf", cdf, 1e-10);
  }

  const double zero = std::atan(1 / std::sqrt(2.0)) / 2;
  r.at_most("curvature-zero", std::abs(extrinsic_curvature_trace(zero)), 1e-12);
  r.at_most("curvature-pi-8", std::abs(extrinsic_curvature_trace(kPi / 8) + 4.0), 1e-12);
  {
    double lo = 1e300, hi = -1e300, dev = 0.0;
    for (int t = 0; t < 6; ++t) {
      OrbitCoords c = random_orbit_point(rng);
      c.sigma = 0.3;
      const double k = mean_curvature_estimate(c);
      lo = std::min(lo, k);
      hi = std::max(hi, k);
      dev = std::max(dev, std::abs(k - extrinsic_curvature_trace(c.sigma)));
    }
    r.at_most("curvature-cmc-spread", hi - lo, 1e-3);
    r.at_most("curvature-numeric-vs-closed-form", dev, 1e-3);
  }

  {
    // At σ = π/4 the orbit is SU(2)/Z₂ with FS distance = quotient distance.
    double worst = 0.0, collapse = 0.0, agree = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Eigen::Matrix2cd u = random_su2(rng), v = random_su2(rng), w = random_su2(rng);
      const ProjectiveState a = orbit_embed_u3(kPi / 4, w, u);
      worst = std::max(worst, std::abs(fs_distance(a, orbit_embed_u3(kPi / 4, w, v)) - su2_quotient_distance(u, v)));
      collapse = std::max(collapse, fs_distance(a, orbit_embed_u3(kPi / 4, v, u)));
      collapse = std::max(collapse, fs_distance(a, orbit_embed_u3(kPi / 4, w, -u)));
      const OrbitCoords c = random_orbit_point(rng);
      const auto f = orbit_u3_factors(c);
      agree = std::max(agree, fs_distance(orbit_embed_u3(c.sigma, f[0], f[1]), orbit_embed(c)));
    }
    r.at_most("u3-isometry", worst, 1e-6);
    r.at_most("u3-collapse", collapse, 1e-10);
    r.at_most("u3-parametrization", agree, 1e-10);
  }
}

// ------------------------------------------------------------ symplectic

void symplectic_suite(std::uint64_t seed, const CheckProviders& providers, Report& r) {
  RngStream rng(derive_stream_seed(seed, 4));

  double orbit = 0.0, octant = 0.0, primitive = 0.0, nondeg = 1e300;
  double closed_orbit = 0.0, closed_octant = 0.0, rank_err = 0.0;
  for (int t = 0; t < 30; ++t) {
    const OrbitCoords c = random_orbit_point(rng);
    const std::array<double, 6> q{c.sigma, c.tau, c.theta1, c.phi1, c.theta2, c.phi2};
    orbit = std::max(orbit, max_abs(numeric_two_form_pullback(orbit_form_embedding(), q).entries -
                                    providers.omega_orbit(c).entries));
    const FormField orbit_field = [&providers](std::span<const double> x) {
      return providers.omega_orbit({x[0], x[1], x[2], x[3], x[4], x[5]}).entries;
    };
    closed_orbit = std::max(closed_orbit, closedness_residual(orbit_field, q));
    Eigen::MatrixXd restricted = providers.omega_orbit(c).entries.bottomRightCorner(5, 5);
    const RankReport rank = form_rank(restricted);
    rank_err = std::max(rank_err, std::abs(rank.rank - 4.0) + (rank.clean ? 0.0 : 1.0));

    const OctantTorusCoords o = interior_point(rng, 4, kPullbackMargin);
    const auto p = octant_point_vector(o);
    const Eigen::MatrixXd w = omega_octant(o).entries;
    octant = std::max(octant, max_abs(numeric_two_form_pullback(octant_torus_embedding(4), p).entries - w));
    primitive = std::max(primitive, max_abs(exterior_derivative(action_one_form, p) - w));
    nondeg = std::min(nondeg, std::abs(w.determinant()));
    const FormField octant_field = [](std::span<const double> x) {
      OctantTorusCoords cc;
      cc.radii = {0.0, x[0], x[1], x[2]};
      cc.radii[0] = std::sqrt(1.0 - x[0] * x[0] - x[1] * x[1] - x[2] * x[2]);
      cc.phases = {x[3], x[4], x[5]};
      return omega_octant(cc).entries;
    };
    closed_octant = std::max(closed_octant, closedness_residual(octant_field, p));
  }
  r.at_most("omega-orbit-pullback", orbit, 1e-7);
  r.at_most("omega-octant-pullback", octant, 1e-8);
  r.at_most("action-primitive", primitive, 1e-7);
  r.above("omega-octant-nondegenerate", nondeg, 0.0);
  r.at_most("closedness-orbit", closed_orbit, 1e-6);
  r.at_most("closedness-octant", closed_octant, 1e-6);
  r.at_most("constant-sigma-rank", rank_err, 0.0);

  {
    // n₂ dn₁∧dν₂ added to the octant form: not closed.
    const FormField perturbed = [](std::span<const double> x) {
      OctantTorusCoords cc;
      cc.radii = {std::sqrt(1.0 - x[0] * x[0] - x[1] * x[1] - x[2] * x[2]), x[0], x[1], x[2]};
      cc.phases = {x[3], x[4], x[5]};
      Eigen::MatrixXd w = omega_octant(cc).entries;
      w(0, 4) += x[1];
      w(4, 0) -= x[1];
      return w;
    };
    const std::array<double, 6> p{0.4, 0.5, 0.45, 0.3, 1.0, 2.0};
    r.above("closedness-detector", closedness_residual(perturbed, p), 0.1);
  }

  {
    std::vector<std::vector<double>> points;
    for (int t = 0; t < 30; ++t) {
      points.push_back({uniform(rng, 0.2, kPi - 0.2), uniform(rng, 0, 2 * kPi), uniform(rng, 0, 2 * kPi)});
    }
    r.at_most("lagrangian-max-entangled", lagrangian_residual(max_entangled_embedding(), points), 1e-8);
    // Tilted 3-surface mixing radii and phases.
    const Embedding tilted = [](std::span<const double> x) {
      OctantTorusCoords cc;
      cc.radii = {0.0, x[0], x[1], 0.4};
      cc.radii[0] = std::sqrt(1.0 - x[0] * x[0] - x[1] * x[1] - 0.16);
      cc.phases = {x[0] + x[2], x[1], x[2]};
      return from_octant_torus(cc);
    };
    std::vector<std::vector<double>> tilted_points{{0.4, 0.5, 1.0}, {0.3, 0.6, 2.0}};
    r.above("lagrangian-detector", lagrangian_residual(tilted, tilted_points), 0.1);
  }

  {
    // (2π)³ ∫ n₁n₂n₃ over the positive unit-ball octant.
    RngStream mc(derive_stream_seed(seed, 41));
    const int samples = 200000;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double x = mc.uniform(), y = mc.uniform(), z = mc.uniform();
      if (x * x + y * y + z * z < 1.0) sum += x * y * z;
    }
    const double volume = std::pow(2 * kPi, 3) * sum / samples;
    const double expected = kPi * kPi * kPi / 6;
    r.at_most("liouville-total-volume", std::abs(volume - expected) / expected, 0.01);
  }
}

// -------------------------------------------------------------- sampling

void sampling_suite(std::uint64_t seed, Report& r) {
  const std::size_t n = 100000;
  const SampleBatch batch = sample_batch(seed, n);
  const auto cdf = [](double s) { return schmidt_cdf(std::clamp(s, 0.0, kPi / 4)); };
  r.at_most("ks-sigma", ks_statistic(batch.sigmas, cdf), 0.01);
  r.at_most("ks-bloch-radius",
            ks_statistic(batch.bloch_radii, [](double x) { return std::pow(std::clamp(x, 0.0, 1.0), 3); }), 0.01);
  const double below = double(std::count_if(batch.bloch_radii.begin(), batch.bloch_radii.end(),
                                            [](double x) { return x < 0.5; })) / n;
  r.at_most("bloch-fraction-below-half", std::abs(below - 0.125), 0.01);

  {
    RngStream rng(derive_stream_seed(seed, 5));
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += std::norm(haar_state(rng)[0]);
    r.at_most("haar-mean-weight", std::abs(mean / n - 0.25), 0.005);
  }

  {
    RngStream rng(derive_stream_seed(seed, 6));
    const Eigen::Matrix2cd u1 = random_su2(rng), u2 = random_su2(rng);
    const SampleBatch moved = sample_batch(derive_stream_seed(seed, 7), n, [&](const ProjectiveState& s) {
      return apply_local(s, u1, u2);
    });
    r.at_most("sampler-local-invariance", ks_two_sample(batch.sigmas, moved.sigmas), 0.015);
  }

  {
    const int bins = 20;
    std::vector<int> counts(bins, 0);
    for (double s : batch.sigmas) counts[std::min(bins - 1, int(s / (kPi / 4) * bins))]++;
    double worst = 0.0;
    for (int b = 0; b < bins; ++b) {
      const double p = schmidt_cdf(kPi / 4 * (b + 1) / bins) - schmidt_cdf(kPi / 4 * b / bins);
      const double se = std::sqrt(n * p * (1 - p));
      worst = std::max(worst, std::abs(counts[b] - n * p) / se);
    }
    r.at_most("schmidt-histogram-z", worst, 3.0);
  }

  {
    const SampleBatch again = sample_batch(seed, 5000);
    const SampleBatch threaded = sample_batch(seed, 5000, 4);
    double diff = 0.0;
    for (std::size_t i = 0; i < again.sigmas.size(); ++i) {
      diff = std::max({diff, std::abs(again.sigmas[i] - batch.sigmas[i]),
                       std::abs(threaded.sigmas[i] - batch.sigmas[i])});
    }
    r.at_most("sampling-determinism", diff, 0.0);
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "metric") return Suite::Metric;
  if (name == "entanglement") return Suite::Entanglement;
  if (name == "orbits") return Suite::Orbits;
  if (name == "symplectic") return Suite::Symplectic;
  if (name == "sampling") return Suite::Sampling;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Metric: return "metric";
    case Suite::Entanglement: return "entanglement";
    case Suite::Orbits: return "orbits";
    case Suite::Symplectic: return "symplectic";
    case Suite::Sampling: return "sampling";
    case Suite::All: return "all";
  }
  return "unknown";
}

CheckProviders mutated_providers(std::string_view mutation) {
  CheckProviders p;
  if (mutation == "orbit-metric-sign") {
    p.orbit_metric = [](const OrbitCoords& c) {
      MetricMatrix g = cpn::orbit_metric(c);
      g.entries(0, 2) = g.entries(2, 0) = -g.entries(0, 2);
      return g;
    };
  } else if (mutation == "omega-orbit-sign") {
    p.omega_orbit = [](const OrbitCoords& c) {
      TwoFormMatrix w = cpn::omega_orbit(c);
      w.entries(0, 3) = -w.entries(0, 3);
      w.entries(3, 0) = -w.entries(3, 0);
      return w;
    };
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown mutation '" + std::string(mutation) + "'");
  }
  return p;
}

std::vector<CheckResult> run_checks(Suite suite, std::uint64_t seed, const CheckProviders& providers) {
  std::vector<CheckResult> out;
  auto run = [&](Suite s, auto&& body) {
    if (suite != Suite::All && suite != s) return;
    Report r{std::string(suite_name(s))};
    body(r);
    for (auto& c : r.take()) out.push_back(std::move(c));
  };
  run(Suite::Metric, [&](Report& r) { metric_suite(seed, r); });
  run(Suite::Entanglement, [&](Report& r) { entanglement_suite(seed, r); });
  run(Suite::Orbits, [&](Report& r) { orbits_suite(seed, providers, r); });
  run(Suite::Symplectic, [&](Report& r) { symplectic_suite(seed, providers, r); });
  run(Suite::Sampling, [&](Report& r) { sampling_suite(seed, r); });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace cpn::cli
