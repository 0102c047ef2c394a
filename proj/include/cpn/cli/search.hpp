#pragma once

#include <functional>
#include <vector>

namespace cpn::cli {

struct SearchResult {
  std::vector<double> x;
  double value = 0.0;
};

/// Derivative-free local minimization (Nelder-Mead simplex).
SearchResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> start, double step, double size_tol = 1e-12,
                         int max_iter = 20000);

/// Brent minimization on [lo, hi].
SearchResult brent_minimize(const std::function<double(double)>& f, double lo, double hi);

}  // namespace cpn::cli
