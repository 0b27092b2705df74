#include "frechet/laplace.hpp"

#include <cmath>
#include <string>

#include "frechet/errors.hpp"
#include "frechet/meijer.hpp"

namespace frechet {

LaplaceMethod parse_laplace_method(std::string_view name) {
  if (name == "meijer" || name == "meijerg") return LaplaceMethod::MeijerG;
  if (name == "quadrature" || name == "quad") return LaplaceMethod::Quadrature;
  if (name == "auto") return LaplaceMethod::Auto;
  throw DomainError("unknown Laplace method '" + std::string(name) + "'");
}

std::string_view to_string(LaplaceMethod method) {
  switch (method) {
    case LaplaceMethod::MeijerG:
      return "meijerg";
    case LaplaceMethod::Quadrature:
      return "quadrature";
    case LaplaceMethod::Auto:
      return "auto";
  }
  return "auto";
}

EvalResult<double> laplace_frechet(const LaplaceQuery& q, const ContourConfig& contour,
                                   const QuadratureConfig& quad) {
  if (!(q.p > 0.0) || !std::isfinite(q.p)) {
    throw DomainError("laplace_frechet: p must be positive and finite");
  }
  LaplaceMethod method = q.method;
  if (method == LaplaceMethod::Auto) {
    method = q.p >= kSmallLaplaceArgument ? LaplaceMethod::MeijerG
                                          : LaplaceMethod::Quadrature;
  }
  if (method == LaplaceMethod::Quadrature) {
    return laplace_frechet_oracle(q.shape.shape(), q.p, quad);
  }
  return build_laplace_closed_form(q.shape).evaluate(q.p, contour);
}

EvalResult<double> laplace_frechet_oracle(Shape shape, double p,
                                          const QuadratureConfig& cfg) {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw DomainError("laplace_frechet_oracle: p must be >= 0 and finite");
  }
  if (p == 0.0) {
    EvalResult<double> out;
    out.value = 1.0;
    out.converged = true;
    return out;
  }
  const double inv_gamma = 1.0 / shape.gamma();
  auto integrand = [p, inv_gamma](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp(-u - p * std::exp(-inv_gamma * std::log(u)));
  };
  return integrate_semi_infinite(integrand, 0.0, cfg, 1.0);
}

std::pair<double, double> laplace_symmetry_check(const RationalShape& shape, double p,
                                                 const ContourConfig& cfg) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("laplace_symmetry_check: p must be positive");
  }
  const auto lhs = build_laplace_closed_form(shape).evaluate(p, cfg);
  const double mapped = std::pow(p, shape.gamma());
  const auto rhs = build_laplace_closed_form(shape.swapped()).evaluate(mapped, cfg);
  return {lhs.value, rhs.value};
}

double laplace_frechet_bessel(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("laplace_frechet_bessel: p must be positive");
  }
  const double z = 2.0 * std::sqrt(p);
  return z * bessel_k1(z);
}

}  // namespace frechet
