#pragma once

#include <functional>

#include "frechet/distributions.hpp"
#include "frechet/mellin.hpp"
#include "frechet/numerics.hpp"

namespace frechet {

struct FrechetKernelParams {
  Shape gamma;
  double x;
  double t;
};

/// sigma_gamma(x, t) = gamma t x^{-(1+gamma)} exp(-t x^{-gamma}),
/// i.e. t^{-1/gamma} Fr(gamma, x / t^{1/gamma}).
double frechet_kernel(const FrechetKernelParams& params);

/// A function to be transformed, optionally with its Laplace transform in
/// closed form. Either member may be empty; callables must be pure.
struct TransformTarget {
  std::function<double(double)> f;
  std::function<double(double)> laplace_of_f;
};

/// \int_0^inf sigma_gamma(x, t) f(t) dt, split at t = x^gamma.
EvalResult<double> frechet_transform_quadrature(const TransformTarget& target, Shape gamma,
                                                double x, const QuadratureConfig& cfg = {});

/// -gamma x^{-(1+gamma)} dL[f]/du at u = x^{-gamma}, with a central
/// difference of step max(1e-6, 1e-6 u). Uses target.laplace_of_f when
/// present, otherwise builds L[f] by quadrature. MissingLaplace if neither
/// callable is set.
EvalResult<double> frechet_transform_via_laplace(const TransformTarget& target, Shape gamma,
                                                 double x, const QuadratureConfig& cfg = {});

/// Transform of the one-sided Lévy law g_alpha: Fr(gamma alpha, x).
double frechet_transform_levy(LevyIndex alpha, Shape gamma, double x);

/// Transform of Fr(1/2, .):
/// (gamma / (4 sqrt(pi))) x^{-(1+gamma)} G^{3,0}_{0,3}(x^{-gamma}/4 | -1/2, 0, 0).
/// A fixed contour must sit right of Re s = 1/2.
EvalResult<double> frechet_transform_frechet_half(Shape gamma, double x,
                                                  const ContourConfig& cfg);
EvalResult<double> frechet_transform_frechet_half(Shape gamma, double x);

}  // namespace frechet
