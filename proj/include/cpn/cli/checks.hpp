#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpn/orbits.hpp"
#include "cpn/symplectic.hpp"

namespace cpn::cli {

enum class Suite { Metric, Entanglement, Orbits, Symplectic, Sampling, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// A measured residual against its tolerance.  Most checks pass when
/// measured ≤ tolerance; detector checks (lower_bound) pass when
/// measured > tolerance.
struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;
  bool passed = false;
};

/// Closed-form objects under test.  Replacing them lets mutation tests
/// confirm the suites catch a wrong formula.
struct CheckProviders {
  std::function<MetricMatrix(const OrbitCoords&)> orbit_metric = cpn::orbit_metric;
  std::function<TwoFormMatrix(const OrbitCoords&)> omega_orbit = cpn::omega_orbit;
};

/// Known mutations: "orbit-metric-sign" flips the sign of the θ₁θ₂ cross
/// term of the orbit metric; "omega-orbit-sign" flips the cosθ₁ dσ∧dφ₁ term
/// of the orbit 2-form.  Throws InvalidArgument for unknown names.
CheckProviders mutated_providers(std::string_view mutation);

std::vector<CheckResult> run_checks(Suite suite, std::uint64_t seed,
                                    const CheckProviders& providers = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cpn::cli
