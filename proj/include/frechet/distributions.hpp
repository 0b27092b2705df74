#pragma once

#include <cstdint>

namespace frechet {

/// Shape parameter gamma > 0 of the Fréchet law.
class Shape {
 public:
  explicit Shape(double gamma);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

/// Rational shape l/k, stored reduced.
class RationalShape {
 public:
  RationalShape(std::int64_t l, std::int64_t k);

  std::int64_t l() const { return l_; }
  std::int64_t k() const { return k_; }
  double gamma() const { return static_cast<double>(l_) / static_cast<double>(k_); }
  Shape shape() const { return Shape(gamma()); }
  /// The shape k/l.
  RationalShape swapped() const { return {k_, l_}; }

  friend bool operator==(const RationalShape&, const RationalShape&) = default;

 private:
  std::int64_t l_;
  std::int64_t k_;
};

/// Stability index of a one-sided Lévy law, 0 < alpha < 1.
class LevyIndex {
 public:
  explicit LevyIndex(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

// Fréchet law Fr(gamma, x) = gamma x^{-(1+gamma)} exp(-x^{-gamma}).

double frechet_pdf(Shape shape, double x);
double frechet_cdf(Shape shape, double x);
double frechet_quantile(Shape shape, double q);

/// \int_0^inf x^mu Fr(gamma, x) dx = Gamma(1 - mu/gamma); DivergentMoment for mu >= gamma.
double frechet_moment(Shape shape, double mu);

/// Location of the maximum of Fr(gamma, .), found by golden-section search.
double frechet_mode(Shape shape);

// One-sided Lévy stable laws.

/// g_{1/2}(x) = x^{-3/2} exp(-1/(4x)) / (2 sqrt(pi)).
double levy_pdf_half(double x);

/// \int_0^inf x^mu g_alpha(x) dx = Gamma(1 - mu/alpha) / Gamma(1 - mu), mu < alpha.
double levy_moment(LevyIndex idx, double mu);

/// Small-argument asymptotic form of the Lévy density,
/// g^a_alpha(t) = (2 pi (1 - alpha))^{-1/2} alpha^{1/(2-2alpha)} t^{-(2-alpha)/(2-2alpha)}
///                exp[-(1 - alpha) alpha^{alpha/(1-alpha)} t^{-alpha/(1-alpha)}].
/// Exact at alpha = 1/2.
double levy_asymptotic(LevyIndex idx, double t);

/// g^a evaluated at alpha = gamma/(1+gamma), t = gamma x / (1+gamma)^{1+1/gamma}.
double levy_asymptotic_rescaled(Shape shape, double x);

/// Closed form of levy_asymptotic_rescaled in terms of the Fréchet pdf:
/// ((1+gamma)^{1/gamma} / sqrt(2 pi)) ((1+gamma)/gamma)^{3/2} x^{gamma/2} Fr(gamma, x).
double levy_asymptotic_rescaled_frechet_form(Shape shape, double x);

}  // namespace frechet
