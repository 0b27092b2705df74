#include "frechet/ftransform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frechet/errors.hpp"
#include "frechet/meijer.hpp"

namespace frechet {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double frechet_kernel(const FrechetKernelParams& params) {
  require_positive(params.x, "frechet_kernel: x");
  require_positive(params.t, "frechet_kernel: t");
  const double g = params.gamma.gamma();
  const double log_x = std::log(params.x);
  return g * params.t * std::exp(-(1.0 + g) * log_x - params.t * std::exp(-g * log_x));
}

EvalResult<double> frechet_transform_quadrature(const TransformTarget& target, Shape gamma,
                                                double x, const QuadratureConfig& cfg) {
  require_positive(x, "frechet_transform_quadrature: x");
  if (!target.f) throw DomainError("frechet_transform_quadrature: target has no f");
  auto integrand = [&](double t) {
    if (!(t > 0.0)) return 0.0;
    return frechet_kernel({gamma, x, t}) * target.f(t);
  };
  return integrate_semi_infinite(integrand, 0.0, cfg, std::pow(x, gamma.gamma()));
}

EvalResult<double> frechet_transform_via_laplace(const TransformTarget& target, Shape gamma,
                                                 double x, const QuadratureConfig& cfg) {
  require_positive(x, "frechet_transform_via_laplace: x");
  if (!target.laplace_of_f && !target.f) {
    throw MissingLaplace("Frechet transform via Laplace needs f or its Laplace transform");
  }
  EvalResult<double> out;
  out.converged = true;
  auto laplace = [&](double u) -> double {
    if (target.laplace_of_f) {
      ++out.evaluations;
      return target.laplace_of_f(u);
    }
    auto integrand = [&](double t) { return std::exp(-u * t) * target.f(t); };
    const auto r = integrate_semi_infinite(integrand, 0.0, cfg, 1.0 / u);
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
    out.err_estimate += r.err_estimate;
    return r.value;
  };

  const double g = gamma.gamma();
  const double u = std::pow(x, -g);
  const double h = std::max(1e-6, 1e-6 * u);
  const double lo = std::max(u - h, 0.5 * u);
  const double hi = u + h;
  const double slope = (laplace(hi) - laplace(lo)) / (hi - lo);
  const double factor = g * std::pow(x, -(1.0 + g));
  out.value = -factor * slope;
  out.err_estimate = factor * out.err_estimate / (hi - lo);
  return out;
}

double frechet_transform_levy(LevyIndex alpha, Shape gamma, double x) {
  require_positive(x, "frechet_transform_levy: x");
  return frechet_pdf(Shape(gamma.gamma() * alpha.alpha()), x);
}

EvalResult<double> frechet_transform_frechet_half(Shape gamma, double x,
                                                  const ContourConfig& cfg) {
  require_positive(x, "frechet_transform_frechet_half: x");
  const double g = gamma.gamma();
  const MeijerSpec spec{{-0.5, 0.0, 0.0}};
  const double log_x = std::log(x);
  auto r = meijer_g_m0(spec, 0.25 * std::exp(-g * log_x), cfg);
  const double factor = g / (4.0 * std::sqrt(std::numbers::pi)) * std::exp(-(1.0 + g) * log_x);
  r.value *= factor;
  r.err_estimate *= factor;
  return r;
}

EvalResult<double> frechet_transform_frechet_half(Shape gamma, double x) {
  return frechet_transform_frechet_half(gamma, x, ContourConfig{});
}

}  // namespace frechet
