#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "frechet/distributions.hpp"
#include "frechet/numerics.hpp"

namespace frechet {

/// How the real part of the Mellin-Barnes contour is chosen.
enum class AbscissaPolicy {
  /// Use ContourConfig::abscissa as given.
  Fixed,
  /// Place the contour through the real-axis minimum of |integrand| inside the
  /// admissible interval (saddle point); keeps cancellation bounded when the
  /// integral is many orders smaller than the integrand.
  Saddle,
};

/// Vertical-contour quadrature controls.
///
/// `abscissa` is honoured under AbscissaPolicy::Fixed; the default policy
/// places the contour at the saddle point instead.
///
/// The trapezoidal step starts at `initial_step` and is halved up to
/// `max_halvings` times until two successive sums agree to `target_rel_tol`.
/// The contour is truncated once |integrand| drops below `truncation_tol`
/// times its running peak.
struct ContourConfig {
  double abscissa = 0.5;
  double initial_step = 0.05;
  int max_halvings = 8;
  double truncation_tol = 1e-16;
  double target_rel_tol = 1e-10;
  AbscissaPolicy policy = AbscissaPolicy::Saddle;

  void validate() const;
};

/// Log of a Mellin-Barnes integrand as a function of s = c + i tau.
using LogIntegrand = std::function<ComplexValue(ComplexValue)>;

/// (1 / 2 pi i) \int_{c - i inf}^{c + i inf} exp(log_f(s)) ds by the truncated
/// trapezoidal rule with step halving.
///
/// Returns value 0 with converged = true when the integrand peak underflows
/// below 1e-300.
EvalResult<ComplexValue> mellin_barnes_integral(const LogIntegrand& log_f, double c,
                                                const ContourConfig& cfg);

/// Abscissa in [lo, hi] minimising Re log_f on the real axis.
double saddle_abscissa(const LogIntegrand& log_f, double lo, double hi);

/// A Mellin image s -> f*(s) with its strip of validity (strip_min, strip_max).
///
/// `log_f_star`, when set, is used in preference to log(f_star(s)) so that
/// gamma-type images are evaluated without overflow. Callables must be free of
/// side effects.
struct MellinFunction {
  std::function<ComplexValue(ComplexValue)> f_star;
  std::function<ComplexValue(ComplexValue)> log_f_star;
  double strip_min = -std::numeric_limits<double>::infinity();
  double strip_max = std::numeric_limits<double>::infinity();
};

/// Mellin transform of Fr(l/k, x): Gamma(k (1 - s) / l + 1).
ComplexValue mellin_frechet(const RationalShape& shape, ComplexValue s);

/// The Fréchet Mellin image packaged for laplace_via_mellin; strip is
/// (-inf, 1 + l/k).
MellinFunction frechet_mellin_function(const RationalShape& shape);

/// a/k, (a+1)/k, ..., (a+k-1)/k.
std::vector<double> delta_list(int k, double a);

/// Below this p the Laplace operator returns its p -> 0 limit f*(1).
inline constexpr double kSmallLaplaceArgument = 1e-6;

/// L[f](p) as the inverse Mellin transform of f*(1 - s) Gamma(s), evaluated
/// on the vertical line Re s = c. Throws ContourError when c <= 0 or 1 - c is
/// outside the image's strip.
EvalResult<double> laplace_via_mellin(const MellinFunction& mf, double p,
                                      const ContourConfig& cfg = {});

}  // namespace frechet
