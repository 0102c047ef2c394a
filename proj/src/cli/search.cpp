#include "cpn/cli/search.hpp"

#include <limits>
#include <memory>

#include <boost/math/tools/minima.hpp>
#include <gsl/gsl_multimin.h>

namespace cpn::cli {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  return f(x);
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

SearchResult nelder_mead(const Objective& f, std::vector<double> start, double step,
                         double size_tol, int max_iter) {
  const std::size_t n = start.size();
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, VectorDeleter> steps(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, start[i]);
  gsl_vector_set_all(steps.get(), step);

  gsl_multimin_function fn;
  fn.n = n;
  fn.f = &trampoline;
  fn.params = const_cast<Objective*>(&f);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), steps.get());
  for (int iter = 0; iter < max_iter; ++iter) {
    if (gsl_multimin_fminimizer_iterate(m.get())) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), size_tol) == GSL_SUCCESS) break;
  }
  SearchResult r;
  r.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.x[i] = gsl_vector_get(m->x, i);
  r.value = m->fval;
  return r;
}

SearchResult brent_minimize(const std::function<double(double)>& f, double lo, double hi) {
  const auto [x, value] =
      boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<double>::digits / 2);
  return {{x}, value};
}

}  // namespace cpn::cli
