#pragma once

#include <vector>

#include "frechet/distributions.hpp"
#include "frechet/mellin.hpp"
#include "frechet/numerics.hpp"

namespace frechet {

/// Lower parameters b_1..b_m of G^{m,0}_{0,m}(z | b).
struct MeijerSpec {
  std::vector<double> b;

  std::size_t m() const { return b.size(); }
  double min_b() const;
  /// Throws DomainError for an empty or non-finite parameter list.
  void validate() const;
};

/// G^{m,0}_{0,m}(z | b) = (1 / 2 pi i) \int prod_j Gamma(b_j + s) z^{-s} ds
/// along Re s = c, c > -min b. Throws ContourError for an inadmissible fixed
/// abscissa and DomainError for z <= 0.
EvalResult<double> meijer_g_m0(const MeijerSpec& spec, double z,
                               const ContourConfig& cfg = {});

/// d/dz of meijer_g_m0, from the same contour integral with the integrand
/// multiplied by -s/z.
EvalResult<double> meijer_g_m0_derivative(const MeijerSpec& spec, double z,
                                          const ContourConfig& cfg = {});

/// Fixed-abscissa config: c = max(0.5, 0.5 - min b).
ContourConfig default_contour_for(const MeijerSpec& spec);

/// Closed form of L[Fr(l/k, x); p]:
/// sqrt(kl) / (2 pi)^{(k+l)/2 - 1} G^{k+l,0}_{0,k+l}(p^l / (k^k l^l) | Delta(k,1), Delta(l,0)).
struct LaplaceClosedForm {
  RationalShape shape;
  double prefactor;
  MeijerSpec spec;

  /// p -> p^l / (k^k l^l).
  double argument(double p) const;
  EvalResult<double> evaluate(double p, const ContourConfig& cfg = {}) const;
};

LaplaceClosedForm build_laplace_closed_form(const RationalShape& shape);

}  // namespace frechet
