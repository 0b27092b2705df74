#include "frechet/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "frechet/errors.hpp"
#include "frechet/optimize.hpp"

namespace frechet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUnderflowLog = -690.7755278982137;  // log(1e-300)
constexpr long kMaxContourPoints = 2'000'000;
// Consecutive sub-threshold samples needed before the contour is cut.
constexpr int kTailConfirm = 3;

double re_log(const LogIntegrand& log_f, double c, double tau) {
  return log_f(ComplexValue(c, tau)).real();
}

}  // namespace

void ContourConfig::validate() const {
  if (!std::isfinite(abscissa)) throw ContourError("contour abscissa must be finite");
  if (!(initial_step > 0.0) || !(truncation_tol > 0.0) || !(target_rel_tol > 0.0)) {
    throw DomainError("contour step and tolerances must be positive");
  }
  if (max_halvings < 1) throw DomainError("max_halvings must be at least 1");
}

EvalResult<ComplexValue> mellin_barnes_integral(const LogIntegrand& log_f, double c,
                                                const ContourConfig& cfg) {
  cfg.validate();
  EvalResult<ComplexValue> out;

  // Pass 1: locate the truncation point and the peak at the coarse step.
  double h = cfg.initial_step;
  const double log_cut = std::log(cfg.truncation_tol);
  double log_peak = re_log(log_f, c, 0.0);
  std::vector<ComplexValue> logs{log_f(ComplexValue(c, 0.0))};
  out.evaluations = 1;
  long n = 0;  // samples at +-h, ..., +-n h
  int below = 0;
  while (below < kTailConfirm) {
    ++n;
    if (2 * n > kMaxContourPoints) return out;  // converged = false
    const ComplexValue lp = log_f(ComplexValue(c, n * h));
    const ComplexValue lm = log_f(ComplexValue(c, -n * h));
    out.evaluations += 2;
    logs.push_back(lp);
    logs.push_back(lm);
    log_peak = std::max({log_peak, lp.real(), lm.real()});
    const bool small = lp.real() < log_peak + log_cut && lm.real() < log_peak + log_cut;
    below = small ? below + 1 : 0;
  }
  if (log_peak < kUnderflowLog) {
    out.converged = true;
    return out;
  }

  // Scaled by exp(-log_peak); restored at the end.
  ComplexValue sum = 0.0;
  double abs_sum = 0.0;
  for (const auto& l : logs) {
    const ComplexValue v = std::exp(l - log_peak);
    sum += v;
    abs_sum += std::abs(v);
  }
  long intervals = n;  // per side, at the current step

  ComplexValue estimate = h * sum;
  double diff = std::numeric_limits<double>::infinity();
  double noise = 0.0;
  for (int halving = 0; halving < cfg.max_halvings; ++halving) {
    const double fine = 0.5 * h;
    ComplexValue mids = 0.0;
    for (long j = 0; j < intervals; ++j) {
      const double tau = (2 * j + 1) * fine;
      const ComplexValue vp = std::exp(log_f(ComplexValue(c, tau)) - log_peak);
      const ComplexValue vm = std::exp(log_f(ComplexValue(c, -tau)) - log_peak);
      out.evaluations += 2;
      mids += vp + vm;
      abs_sum += std::abs(vp) + std::abs(vm);
    }
    sum += mids;
    h = fine;
    intervals *= 2;
    const ComplexValue refined = h * sum;
    diff = std::abs(refined - estimate);
    estimate = refined;
    noise = 64.0 * kEps * h * abs_sum;
    if (diff <= cfg.target_rel_tol * std::abs(estimate) + noise) {
      out.converged = true;
      break;
    }
  }

  const double scale = std::exp(log_peak) / (2.0 * std::numbers::pi);
  out.value = estimate * scale;
  out.err_estimate = (diff + noise) * scale;
  return out;
}

double saddle_abscissa(const LogIntegrand& log_f, double lo, double hi) {
  if (!(lo < hi)) throw ContourError("saddle search needs a non-empty interval");
  auto neg = [&log_f](double c) { return -re_log(log_f, c, 0.0); };
  return golden_section_max(neg, lo, hi, 1e-6 * std::max(1.0, hi - lo));
}

ComplexValue mellin_frechet(const RationalShape& shape, ComplexValue s) {
  const double l = static_cast<double>(shape.l());
  const double k = static_cast<double>(shape.k());
  const ComplexValue arg = k * (1.0 - s) / l + 1.0;
  return std::exp(log_gamma(arg));
}

MellinFunction frechet_mellin_function(const RationalShape& shape) {
  const double ratio = static_cast<double>(shape.k()) / static_cast<double>(shape.l());
  MellinFunction mf;
  mf.f_star = [shape](ComplexValue s) { return mellin_frechet(shape, s); };
  mf.log_f_star = [ratio](ComplexValue s) { return log_gamma(ratio * (1.0 - s) + 1.0); };
  mf.strip_max = 1.0 + shape.gamma();
  return mf;
}

std::vector<double> delta_list(int k, double a) {
  if (k < 1) throw DomainError("delta_list: k must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) out.push_back((a + j) / k);
  return out;
}

EvalResult<double> laplace_via_mellin(const MellinFunction& mf, double p,
                                      const ContourConfig& cfg) {
  cfg.validate();
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("laplace_via_mellin: p must be positive and finite");
  }
  if (!mf.f_star && !mf.log_f_star) {
    throw DomainError("laplace_via_mellin: Mellin image is empty");
  }
  if (!(mf.strip_min < mf.strip_max)) {
    throw DomainError("laplace_via_mellin: empty strip of validity");
  }

  auto log_image = [&mf](ComplexValue s) {
    return mf.log_f_star ? mf.log_f_star(s) : std::log(mf.f_star(s));
  };

  if (p < kSmallLaplaceArgument) {
    EvalResult<double> out;
    out.value = std::exp(log_image(1.0)).real();
    out.evaluations = 1;
    out.converged = true;
    return out;
  }

  // Admissible abscissae: c > 0 and strip_min < 1 - c < strip_max.
  const double c_lo = std::max(0.0, 1.0 - mf.strip_max);
  const double c_hi = 1.0 - mf.strip_min;

  const double log_p = std::log(p);
  LogIntegrand log_f = [&](ComplexValue s) {
    return -s * log_p + log_image(1.0 - s) + log_gamma(s);
  };

  double c = cfg.abscissa;
  if (cfg.policy == AbscissaPolicy::Saddle) {
    const double lo = c_lo + 0.1;
    const double hi = std::isfinite(c_hi) ? c_hi - 0.1 : lo + 200.0;
    c = lo < hi ? saddle_abscissa(log_f, lo, hi) : 0.5 * (c_lo + c_hi);
  }
  if (!(c > c_lo && c < c_hi)) {
    throw ContourError("laplace_via_mellin: abscissa c = " + std::to_string(c) +
                       " must satisfy c > 0 with 1 - c inside the Mellin strip");
  }

  const auto contour = mellin_barnes_integral(log_f, c, cfg);
  EvalResult<double> out;
  out.value = contour.value.real();
  out.evaluations = contour.evaluations;
  out.err_estimate = contour.err_estimate;
  // Conjugate symmetry makes the exact integral real.
  out.converged = contour.converged &&
                  std::abs(contour.value.imag()) <=
                      1e-10 * std::abs(out.value) + contour.err_estimate;
  return out;
}

}  // namespace frechet
