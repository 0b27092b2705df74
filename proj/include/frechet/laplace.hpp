#pragma once

#include <string_view>
#include <utility>

#include "frechet/distributions.hpp"
#include "frechet/mellin.hpp"
#include "frechet/numerics.hpp"

namespace frechet {

enum class LaplaceMethod { MeijerG, Quadrature, Auto };

/// Parses "meijer" / "meijerg", "quadrature" / "quad", "auto"; DomainError otherwise.
LaplaceMethod parse_laplace_method(std::string_view name);
std::string_view to_string(LaplaceMethod method);

struct LaplaceQuery {
  RationalShape shape;
  double p;
  LaplaceMethod method = LaplaceMethod::Auto;
};

/// L[Fr(l/k, x); p]. Auto takes the Meijer-G closed form for p >= 1e-6 and the
/// quadrature oracle below that. DomainError for p <= 0.
EvalResult<double> laplace_frechet(const LaplaceQuery& q, const ContourConfig& contour = {},
                                   const QuadratureConfig& quad = {});

/// \int_0^inf exp(-u - p u^{-1/gamma}) du, the Laplace transform after the
/// substitution u = x^{-gamma}. Works for any real gamma > 0; p = 0 gives 1.
EvalResult<double> laplace_frechet_oracle(Shape shape, double p,
                                          const QuadratureConfig& cfg = {});

/// Both sides of L[Fr(l,k,x); p] = L[Fr(k,l,x); p^{l/k}], each through its
/// own closed-form assembly.
std::pair<double, double> laplace_symmetry_check(const RationalShape& shape, double p,
                                                 const ContourConfig& cfg = {});

/// 2 sqrt(p) K_1(2 sqrt(p)), the gamma = 1 transform.
double laplace_frechet_bessel(double p);

}  // namespace frechet
