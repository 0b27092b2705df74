#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace frechet {

using ComplexValue = std::complex<double>;
using RealFunction = std::function<double(double)>;

/// Controls for the adaptive Gauss-Kronrod engine.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;

  /// Throws DomainError when a tolerance is not positive or the limit is < 1.
  void validate() const;
};

/// Value plus diagnostics for every iterative evaluation in the library.
///
/// `converged == false` means the tolerance was not met; `value` then holds
/// the best estimate found and `err_estimate` its (unreliable) error bound.
template <typename T>
struct EvalResult {
  T value{};
  double err_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Principal branch of log Gamma(s).
///
/// Lanczos approximation for Re(s) >= 1/2, reflection below. Throws PoleError
/// at the nonpositive integers and DomainError for non-finite input.
ComplexValue log_gamma(ComplexValue s);

/// Real log|Gamma(x)|, x > 0; a thin wrapper kept next to the complex one.
double log_gamma(double x);

/// Adaptive G7/K15 integration of f over [a, b] with optional interior breakpoints.
/// Non-finite integrand values are treated as zero.
EvalResult<double> integrate(const RealFunction& f, double a, double b,
                             const QuadratureConfig& cfg = {},
                             const std::vector<double>& breakpoints = {});

/// Integral of f over (lower, inf).
///
/// The range is split at `split` (lower + 1 when `split <= lower`); the tail is
/// mapped onto a finite interval by u = split + (split - lower)(e^y - 1),
/// y = t / (1 - t).
EvalResult<double> integrate_semi_infinite(const RealFunction& f, double lower,
                                           const QuadratureConfig& cfg = {},
                                           double split = 0.0);

/// Modified Bessel function K_1(z), z > 0, from its integral representation
/// \int_0^inf exp(-z cosh t) cosh t dt. Used as an independent check on the
/// Meijer-G path; throws DomainError for z <= 0.
double bessel_k1(double z);

}  // namespace frechet
