#include "cpn/cli/figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cpn/charts.hpp"
#include "cpn/entanglement.hpp"
#include "cpn/simplex.hpp"
#include "cpn/submanifolds.hpp"

namespace cpn::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Csv {
 public:
  Csv(std::ostream& out, std::string_view schema, std::string_view header) : out_(out) {
    out_ << "# schema: cpn-figure/" << schema << " v1\n" << header << '\n';
  }

  Csv& text(std::string_view s) {
    sep();
    out_ << s;
    return *this;
  }
  Csv& num(double x) {
    sep();
    std::ostringstream os;
    os.precision(15);
    os << x;
    out_ << os.str();
    return *this;
  }
  Csv& nums(std::span<const double> xs) {
    for (double x : xs) num(x);
    return *this;
  }
  Csv& maybe(const std::optional<double>& x) {
    if (x) return num(*x);
    return text("");
  }
  void end() {
    out_ << '\n';
    first_ = true;
  }

 private:
  void sep() {
    if (!first_) out_ << ',';
    first_ = false;
  }
  std::ostream& out_;
  bool first_ = true;
};

double grid_value(double lo, double hi, int i, int steps) {
  return steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
}

std::vector<double> cp2_point(double a, double b) {
  return {std::cos(a), std::sin(a) * std::cos(b), std::sin(a) * std::sin(b)};
}

void octant_charts(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "octant-charts", "kind,id,n0,n1,n2,gnomonic_x1,gnomonic_x2,stereo_x1,stereo_x2");
  auto row = [&](std::string_view kind, int id, const std::vector<double>& n) {
    csv.text(kind).num(id).nums(n).nums(gnomonic_project(n).coords);
    csv.nums(stereographic_project(n, p.corner).coords).end();
  };
  for (int k = 0; k < 3; ++k) {
    std::vector<double> n(3, 0.0);
    n[k] = 1.0;
    row("corner", k, n);
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<double> a(3, 0.0), b(3, 0.0);
    a[(k + 1) % 3] = 1.0;
    b[(k + 2) % 3] = 1.0;
    for (const auto& s : trace_great_circle(a, b, p.samples)) row("edge", k, s.radii);
  }
  for (int k = 0; k < 3; ++k) {
    int id = 0;
    for (const auto& [top, edge] : trisecting_geodesics(3, (k + 1) % 3, (k + 2) % 3, k)) {
      for (const auto& s : trace_great_circle(top, edge, p.samples)) row("trisector", 2 * k + id, s.radii);
      ++id;
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (const auto& s : distance_sphere(3, p.corner, r * kPi / 8, p.samples)) row("circle", r, s.radii);
  }
}

void torus_family(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "torus-family", "n0,n1,n2,gnomonic_x1,gnomonic_x2,side1,side2,angle,area");
  for (int i = 1; i < p.grid; ++i) {
    for (int j = 1; j < p.grid; ++j) {
      const auto n = cp2_point(kPi / 2 * i / p.grid, kPi / 2 * j / p.grid);
      const TorusShape t = torus_shape(n);
      csv.nums(n).nums(gnomonic_project(n).coords).nums(t.side_lengths);
      csv.num(t.angles(0, 1)).num(t.measure).end();
    }
  }
}

void distance_sphere_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "distance-sphere",
          "radius,n0,n1,n2,gnomonic_x1,gnomonic_x2,side1,side2,angle,area,distance_to_corner");
  const ProjectiveState corner = ProjectiveState::basis(3, p.corner);
  for (const auto& s : distance_sphere(3, p.corner, p.radius, p.samples)) {
    const TorusShape t = torus_shape(s.radii);
    csv.num(p.radius).nums(s.radii).nums(s.chart_point.coords).nums(t.side_lengths);
    csv.num(t.angles(0, 1)).num(t.measure).num(fs_distance(corner, representative_state(s))).end();
  }
}

void spin1_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "spin1", "seed,theta,phi,n0,n1,n2,nu1,nu2,gnomonic_x1,gnomonic_x2");
  for (const auto seed : {SpinSeed::Up, SpinSeed::Zero}) {
    for (int i = 0; i < p.grid; ++i) {
      for (int j = 0; j < p.grid; ++j) {
        const double theta = grid_value(0, kPi, i, p.grid);
        const double phi = 2 * kPi * j / p.grid;
        const OctantTorusCoords c = to_octant_torus(spin1_state(seed, theta, phi));
        csv.text(seed == SpinSeed::Up ? "up" : "zero").num(theta).num(phi).nums(c.radii);
        csv.maybe(c.phases[0]).maybe(c.phases[1]).nums(gnomonic_project(c.radii).coords).end();
      }
    }
  }
}

void separable_surface_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "separable-surface",
          "tau,theta,n0,n1,n2,n3,gnomonic_x1,gnomonic_x2,gnomonic_x3,phase_relation,offset,det_residual");
  const auto samples = separable_surface(p.grid, p.grid);
  for (int i = 0; i < p.grid; ++i) {
    for (int j = 0; j < p.grid; ++j) {
      const SurfaceSample& s = samples[std::size_t(i) * p.grid + j];
      const double det = std::abs(as_coefficient_matrix(representative_state(s)).determinant());
      csv.num(grid_value(0, kPi, i, p.grid)).num(grid_value(0, kPi, j, p.grid)).nums(s.radii);
      csv.nums(s.chart_point.coords).text("nu1+nu2-nu3").num(0.0).num(det).end();
    }
  }
}

void max_entangled_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "max-entangled",
          "t,n0,n1,n2,n3,gnomonic_x1,gnomonic_x2,gnomonic_x3,phase_relation,offset,unitarity_residual");
  const auto samples = max_entangled_set(p.samples);
  for (int i = 0; i < p.samples; ++i) {
    const SurfaceSample& s = samples[i];
    const CoefficientMatrix c = as_coefficient_matrix(representative_state(s));
    const double res = (c * c.adjoint() - 0.5 * Eigen::Matrix2cd::Identity()).norm();
    csv.num(grid_value(0, kPi / 2, i, p.samples)).nums(s.radii).nums(s.chart_point.coords);
    csv.text("nu1+nu2-nu3").num(kPi).num(res).end();
  }
}

void collapse_sphere_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "collapse-sphere",
          "theta,phi,n0,n1,n2,n3,nu1,nu2,nu3,gnomonic_x1,gnomonic_x2,gnomonic_x3,distance");
  const ProjectiveState psi = bell_psi_minus();
  for (int i = 0; i < p.grid; ++i) {
    for (int j = 0; j < p.grid; ++j) {
      const double theta = grid_value(0, kPi, i, p.grid);
      const double phi = 2 * kPi * j / p.grid;
      const ProjectiveState s = collapse_sphere_point(psi, theta, phi);
      const OctantTorusCoords c = to_octant_torus(s);
      csv.num(theta).num(phi).nums(c.radii);
      for (const auto& nu : c.phases) csv.maybe(nu);
      csv.nums(gnomonic_project(c.radii).coords).num(fs_distance(s, psi)).end();
    }
  }
}

void constant_sigma_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "constant-sigma",
          "kind,sigma,n0,n1,n2,n3,gnomonic_x1,gnomonic_x2,gnomonic_x3,fiber_cosine,sigma_residual");
  auto emit = [&](std::string_view kind, const std::vector<SurfaceSample>& samples) {
    for (const auto& s : samples) {
      const double c = std::get<PhaseCosineRelation>(s.fiber_locus).value;
      const double res = std::abs(schmidt_decompose(representative_state(s)).schmidt_angle - p.sigma);
      csv.text(kind).num(p.sigma).nums(s.radii).nums(s.chart_point.coords).num(c).num(res).end();
    }
  };
  emit("interior", constant_sigma_region(p.sigma, p.grid));
  emit("boundary", constant_sigma_boundary(p.sigma, p.samples));
}

void simplex_figure(const FigureParams& p, std::ostream& os) {
  Csv csv(os, "simplex", "kind,id,p0,p1,p2,barycentric_x1,barycentric_x2,gnomonic_x1,gnomonic_x2");
  auto row = [&](std::string_view kind, int id, const ProbabilityVector& q) {
    csv.text(kind).num(id).nums(q.values()).nums(barycentric_point(q)).nums(simplex_to_gnomonic(q).coords).end();
  };
  for (int i = 0; i <= p.grid; ++i) {
    for (int j = 0; i + j <= p.grid; ++j) {
      const double a = double(i) / p.grid, b = double(j) / p.grid;
      row("grid", 0, ProbabilityVector({a, b, std::max(0.0, 1.0 - a - b)}));
    }
  }
  // Round geodesics from each corner to the midpoint of the opposite edge.
  for (int k = 0; k < 3; ++k) {
    std::vector<double> corner(3, 0.0), mid(3, std::sqrt(0.5));
    corner[k] = 1.0;
    mid[k] = 0.0;
    for (const auto& s : trace_great_circle(corner, mid, p.samples)) {
      std::vector<double> q(3);
      for (int i = 0; i < 3; ++i) q[i] = s.radii[i] * s.radii[i];
      row("corner-geodesic", k, ProbabilityVector(q));
    }
  }
  const ProbabilityVector from({0.7, 0.3, 0.0}), to({0.0, 0.2, 0.8});
  for (int i = 0; i < p.samples; ++i) {
    row("mixing-line", 0, mixing_line(from, to, grid_value(0, 1, i, p.samples)));
  }
}

void validate(const FigureParams& p) {
  if (p.grid < 2 || p.samples < 2) throw Error(ErrorCode::InvalidArgument, "grid and samples must be at least 2");
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{
      "octant-charts", "torus-family", "distance-sphere", "spin1", "separable-surface",
      "max-entangled", "collapse-sphere", "constant-sigma", "simplex"};
  return names;
}

bool is_figure(std::string_view name) {
  const auto& names = figure_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

void emit_figure(std::string_view name, const FigureParams& params, std::ostream& out) {
  validate(params);
  if (name == "octant-charts") return octant_charts(params, out);
  if (name == "torus-family") return torus_family(params, out);
  if (name == "distance-sphere") return distance_sphere_figure(params, out);
  if (name == "spin1") return spin1_figure(params, out);
  if (name == "separable-surface") return separable_surface_figure(params, out);
  if (name == "max-entangled") return max_entangled_figure(params, out);
  if (name == "collapse-sphere") return collapse_sphere_figure(params, out);
  if (name == "constant-sigma") return constant_sigma_figure(params, out);
  if (name == "simplex") return simplex_figure(params, out);
  throw Error(ErrorCode::InvalidArgument, "unknown figure '" + std::string(name) + "'");
}

}  // namespace cpn::cli
