#include "frechet/distributions.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "frechet/errors.hpp"
#include "frechet/optimize.hpp"

namespace frechet {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

Shape::Shape(double gamma) : gamma_(gamma) {
  require_positive(gamma, "shape parameter gamma");
}

RationalShape::RationalShape(std::int64_t l, std::int64_t k) {
  if (l < 1 || k < 1) {
    throw DomainError("rational shape l/k needs l >= 1 and k >= 1");
  }
  const std::int64_t g = std::gcd(l, k);
  l_ = l / g;
  k_ = k / g;
}

LevyIndex::LevyIndex(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("Levy index must satisfy 0 < alpha < 1");
  }
}

double frechet_pdf(Shape shape, double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("frechet_pdf: x must be >= 0");
  if (x == 0.0 || std::isinf(x)) return 0.0;
  const double g = shape.gamma();
  // log-space: x^{-gamma} overflows long before the product underflows.
  const double log_x = std::log(x);
  const double y = std::exp(-g * log_x);
  if (std::isinf(y)) return 0.0;
  return g * std::exp(-(1.0 + g) * log_x - y);
}

double frechet_cdf(Shape shape, double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("frechet_cdf: x must be >= 0");
  if (x == 0.0) return 0.0;
  return std::exp(-std::pow(x, -shape.gamma()));
}

double frechet_quantile(Shape shape, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("frechet_quantile: q must lie in (0, 1)");
  }
  return std::pow(-std::log(q), -1.0 / shape.gamma());
}

double frechet_moment(Shape shape, double mu) {
  if (std::isnan(mu)) throw DomainError("frechet_moment: mu is NaN");
  if (mu >= shape.gamma()) {
    throw DivergentMoment("Frechet moment diverges; valid for -inf < mu < gamma = " +
                          std::to_string(shape.gamma()));
  }
  return std::tgamma(1.0 - mu / shape.gamma());
}

double frechet_mode(Shape shape) {
  const double g = shape.gamma();
  auto log_pdf = [g](double x) { return -(1.0 + g) * std::log(x) - std::pow(x, -g); };
  return unimodal_argmax(log_pdf, 1.0);
}

double levy_pdf_half(double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("levy_pdf_half: x must be > 0");
  if (x == 0.0 || std::isinf(x)) return 0.0;
  return std::exp(-1.5 * std::log(x) - 0.25 / x) / (2.0 * std::sqrt(kPi));
}

double levy_moment(LevyIndex idx, double mu) {
  if (std::isnan(mu)) throw DomainError("levy_moment: mu is NaN");
  const double a = idx.alpha();
  if (mu >= a) {
    throw DivergentMoment("Levy moment diverges; valid for -inf < mu < alpha = " +
                          std::to_string(a));
  }
  return std::exp(std::lgamma(1.0 - mu / a) - std::lgamma(1.0 - mu));
}

namespace {

// Takes 1 - alpha separately so callers that know it exactly avoid the
// cancellation in forming it.
double levy_asymptotic_impl(double a, double one_minus_a, double t) {
  const double log_t = std::log(t);
  const double log_a = std::log(a);
  const double ratio = a / one_minus_a;
  const double log_prefactor = -0.5 * std::log(2.0 * kPi * one_minus_a) +
                               log_a / (2.0 * one_minus_a) -
                               (0.5 + 0.5 / one_minus_a) * log_t;
  const double exponent = -one_minus_a * std::exp(ratio * (log_a - log_t));
  return std::exp(log_prefactor + exponent);
}

}  // namespace

double levy_asymptotic(LevyIndex idx, double t) {
  if (std::isnan(t) || t < 0.0) throw DomainError("levy_asymptotic: t must be > 0");
  if (t == 0.0 || std::isinf(t)) return 0.0;
  return levy_asymptotic_impl(idx.alpha(), 1.0 - idx.alpha(), t);
}

double levy_asymptotic_rescaled(Shape shape, double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("levy_asymptotic_rescaled: x must be > 0");
  }
  const double g = shape.gamma();
  const LevyIndex idx(g / (1.0 + g));
  if (x == 0.0 || std::isinf(x)) return 0.0;
  const double t = g * x / std::pow(1.0 + g, 1.0 + 1.0 / g);
  return levy_asymptotic_impl(idx.alpha(), 1.0 / (1.0 + g), t);
}

double levy_asymptotic_rescaled_frechet_form(Shape shape, double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("levy_asymptotic_rescaled_frechet_form: x must be > 0");
  }
  const double g = shape.gamma();
  const double factor = std::pow(1.0 + g, 1.0 / g) / std::sqrt(2.0 * kPi) *
                        std::pow((1.0 + g) / g, 1.5);
  return factor * std::pow(x, 0.5 * g) * frechet_pdf(shape, x);
}

}  // namespace frechet
