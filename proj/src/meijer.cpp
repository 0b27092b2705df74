#include "frechet/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

// Closest the saddle search may bring the contour to the rightmost pole.
constexpr double kPoleMargin = 0.1;

double choose_abscissa(const LogIntegrand& log_f, const MeijerSpec& spec,
                       double z, const ContourConfig& cfg) {
  const double pole = -spec.min_b();
  if (cfg.policy == AbscissaPolicy::Saddle) {
    // Saddle of z^{-s} prod Gamma(b + s) sits near m z^{1/m}.
    const double m = static_cast<double>(spec.m());
    const double width = std::max(200.0, 2.0 * m * std::pow(z, 1.0 / m) + 10.0);
    return saddle_abscissa(log_f, pole + kPoleMargin, pole + kPoleMargin + width);
  }
  if (!(cfg.abscissa > pole)) {
    throw ContourError("meijer_g_m0: abscissa c = " + std::to_string(cfg.abscissa) +
                       " must exceed -min(b) = " + std::to_string(pole));
  }
  return cfg.abscissa;
}

EvalResult<double> evaluate(const MeijerSpec& spec, double z, const ContourConfig& cfg,
                            bool derivative) {
  spec.validate();
  cfg.validate();
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("meijer_g_m0: z must be positive and finite");
  }
  const double log_z = std::log(z);
  LogIntegrand log_f = [&spec, log_z, derivative](ComplexValue s) {
    ComplexValue acc = -s * log_z;
    for (double b : spec.b) acc += log_gamma(b + s);
    if (derivative) acc += std::log(-s) - log_z;
    return acc;
  };
  // The saddle is located on the undifferentiated integrand.
  LogIntegrand log_base = [&spec, log_z](ComplexValue s) {
    ComplexValue acc = -s * log_z;
    for (double b : spec.b) acc += log_gamma(b + s);
    return acc;
  };
  const double c = choose_abscissa(log_base, spec, z, cfg);
  const auto contour = mellin_barnes_integral(log_f, c, cfg);

  EvalResult<double> out;
  out.value = contour.value.real();
  out.err_estimate = contour.err_estimate;
  out.evaluations = contour.evaluations;
  out.converged = contour.converged &&
                  std::abs(contour.value.imag()) <=
                      1e-10 * std::abs(out.value) + contour.err_estimate;
  return out;
}

}  // namespace

double MeijerSpec::min_b() const { return *std::min_element(b.begin(), b.end()); }

void MeijerSpec::validate() const {
  if (b.empty()) throw DomainError("MeijerSpec needs at least one parameter");
  for (double v : b) {
    if (!std::isfinite(v)) throw DomainError("MeijerSpec parameters must be finite");
  }
}

EvalResult<double> meijer_g_m0(const MeijerSpec& spec, double z, const ContourConfig& cfg) {
  return evaluate(spec, z, cfg, false);
}

EvalResult<double> meijer_g_m0_derivative(const MeijerSpec& spec, double z,
                                          const ContourConfig& cfg) {
  return evaluate(spec, z, cfg, true);
}

ContourConfig default_contour_for(const MeijerSpec& spec) {
  ContourConfig cfg;
  cfg.policy = AbscissaPolicy::Fixed;
  cfg.abscissa = std::max(0.5, 0.5 - spec.min_b());
  return cfg;
}

double LaplaceClosedForm::argument(double p) const {
  const double l = static_cast<double>(shape.l());
  const double k = static_cast<double>(shape.k());
  return std::exp(l * std::log(p) - k * std::log(k) - l * std::log(l));
}

EvalResult<double> LaplaceClosedForm::evaluate(double p, const ContourConfig& cfg) const {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("Laplace closed form: p must be positive and finite");
  }
  auto g = meijer_g_m0(spec, argument(p), cfg);
  g.value *= prefactor;
  g.err_estimate *= prefactor;
  return g;
}

LaplaceClosedForm build_laplace_closed_form(const RationalShape& shape) {
  const auto l = static_cast<int>(shape.l());
  const auto k = static_cast<int>(shape.k());
  MeijerSpec spec{delta_list(k, 1.0)};
  const auto tail = delta_list(l, 0.0);
  spec.b.insert(spec.b.end(), tail.begin(), tail.end());
  const double prefactor = std::sqrt(static_cast<double>(k) * l) /
                           std::pow(2.0 * std::numbers::pi, 0.5 * (k + l) - 1.0);
  return {shape, prefactor, std::move(spec)};
}

}  // namespace frechet
