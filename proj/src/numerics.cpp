#include "frechet/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoef = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

// log Gamma(s) for Re(s) >= 1/2.
ComplexValue lanczos_log_gamma(ComplexValue s) {
  const ComplexValue z = s - 1.0;
  ComplexValue series = kLanczosCoef[0];
  for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) {
    series += kLanczosCoef[k] / (z + static_cast<double>(k));
  }
  const ComplexValue t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

// log sin(pi s) on the branch that is analytic in the closed upper half-plane
// and real-valued at s = 1/2.
ComplexValue log_sin_pi_upper(ComplexValue s) {
  const ComplexValue i(0.0, 1.0);
  const ComplexValue w = std::exp(2.0 * kPi * i * s);
  return -i * kPi * s + std::log(1.0 - w) - std::log(2.0) + i * (kPi / 2.0);
}

// --- Gauss-Kronrod 7/15 -----------------------------------------------------

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& lhs, const Segment& rhs) const {
    return lhs.error < rhs.error;
  }
};

double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }

Segment gauss_kronrod_15(const RealFunction& f, double a, double b,
                         long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 15> fv{};
  fv[7] = finite_or_zero(f(center));
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = finite_or_zero(f(center - dx));
    fv[14 - j] = finite_or_zero(f(center + dx));
  }
  evaluations += 15;

  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }

  const double width = std::abs(half);
  resk *= half;
  resabs *= width;
  resasc *= width;
  double err = std::abs((resk - resg * half));
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {a, b, resk, err};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("max_subdivisions must be at least 1");
  }
}

ComplexValue log_gamma(ComplexValue s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real()) {
    throw PoleError("log_gamma: pole at nonpositive integer " +
                    std::to_string(s.real()));
  }
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  if (s.imag() < 0.0) return std::conj(log_gamma(std::conj(s)));
  // log G(s) + log G(1 - s) = log pi - log sin(pi s)
  return std::log(kPi) - log_sin_pi_upper(s) - lanczos_log_gamma(1.0 - s);
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: real argument must be positive and finite");
  }
  return std::lgamma(x);
}

EvalResult<double> integrate(const RealFunction& f, double a, double b,
                             const QuadratureConfig& cfg,
                             const std::vector<double>& breakpoints) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: limits must be finite");
  }
  EvalResult<double> out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const double sign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push(gauss_kronrod_15(f, cuts[i], cuts[i + 1], out.evaluations));
  }

  auto totals = [&heap]() {
    double value = 0.0;
    double error = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  int subdivisions = 0;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)) &&
         subdivisions < cfg.max_subdivisions) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Interval can no longer be resolved in binary64.
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 4.0 * kEps * std::max(std::abs(mid), 1e-300)) {
      break;
    }
    heap.pop();
    heap.push(gauss_kronrod_15(f, worst.a, mid, out.evaluations));
    heap.push(gauss_kronrod_15(f, mid, worst.b, out.evaluations));
    ++subdivisions;
    std::tie(value, error) = totals();
  }

  out.value = sign * value;
  out.err_estimate = error;
  out.converged =
      error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
  return out;
}

EvalResult<double> integrate_semi_infinite(const RealFunction& f, double lower,
                                           const QuadratureConfig& cfg,
                                           double split) {
  if (!std::isfinite(lower)) {
    throw DomainError("integrate_semi_infinite: lower limit must be finite");
  }
  if (!(split > lower) || !std::isfinite(split)) split = lower + 1.0;
  const double head = split - lower;

  // [0, 1] -> [lower, split] linearly. [1, 2) -> [split, inf) through
  // u = split + head (e^y - 1), y = r / (1 - r): algebraic tails u^{-a} become
  // exp(-(a - 1) y), which the t/(1-t) map alone leaves singular at r = 1.
  auto mapped = [&](double t) -> double {
    if (t <= 1.0) return head * f(lower + head * t);
    const double r = t - 1.0;
    const double q = 1.0 - r;
    if (q <= 0.0) return 0.0;
    const double y = r / q;
    if (y > 700.0) return 0.0;
    const double grow = std::exp(y);
    const double v = f(split + head * (grow - 1.0));
    if (v == 0.0) return 0.0;
    return v * head * grow / (q * q);
  };
  return integrate(mapped, 0.0, 2.0, cfg, {1.0});
}

double bessel_k1(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("bessel_k1: argument must be positive");
  }
  // K_1(z) = e^{-z} \int_0^inf exp(-2 z sinh^2(t/2)) cosh t dt
  auto integrand = [z](double t) {
    const double sh = std::sinh(0.5 * t);
    return std::exp(-2.0 * z * sh * sh) * std::cosh(t);
  };
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-300;
  cfg.rel_tol = 1e-13;
  cfg.max_subdivisions = 400;
  // Integrand drops by e^{-1} near cosh t = 1 + 1/z.
  const double split = std::acosh(1.0 + 1.0 / z);
  const auto r = integrate_semi_infinite(integrand, 0.0, cfg, split);
  return std::exp(-z) * r.value;
}

}  // namespace frechet
