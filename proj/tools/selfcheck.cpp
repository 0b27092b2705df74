#include "selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "figures.hpp"
#include "frechet/distributions.hpp"
#include "frechet/errors.hpp"
#include "frechet/ftransform.hpp"
#include "frechet/laplace.hpp"
#include "frechet/meijer.hpp"
#include "frechet/mellin.hpp"
#include "frechet/numerics.hpp"

namespace frechet::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return g;
}

CheckOutcome verdict(double worst, double tol) {
  return {worst <= tol, "worst " + format_real(worst) + " (tol " + format_real(tol) + ")"};
}

CheckOutcome multiplication_formula(const Profile&) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-5.0, 5.0);
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < 100; ++i) {
      const ComplexValue z(re(rng), im(rng));
      const ComplexValue lhs = log_gamma(double(n) * z);
      ComplexValue rhs = 0.5 * (1.0 - n) * std::log(2 * kPi) + (double(n) * z - 0.5) * std::log(double(n));
      for (int j = 0; j < n; ++j) rhs += log_gamma(z + double(j) / n);
      // Compare modulo 2 pi i: the two sides may sit on different sheets.
      ComplexValue d = lhs - rhs;
      d.imag(std::remainder(d.imag(), 2 * kPi));
      worst = std::max(worst, std::abs(d) / std::max(1.0, std::abs(lhs)));
    }
  }
  return verdict(worst, 1e-12);
}

CheckOutcome bessel_monotone(const Profile&) {
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 500; ++i) {
    const double z = 0.05 + (50.0 - 0.05) * i / 499.0;
    const double v = bessel_k1(z);
    if (!(v > 0.0) || !(v < prev)) return {false, "fails at z = " + format_real(z)};
    prev = v;
  }
  return {true, "500 points"};
}

CheckOutcome frechet_normalization(const Profile&) {
  double worst = 0.0;
  for (double g : {1.0 / 3, 0.5, 1.0, 2.0, 3.0}) {
    const Shape s(g);
    const auto r = integrate_semi_infinite([&](double x) { return frechet_pdf(s, x); }, 0.0);
    worst = std::max(worst, std::abs(r.value - 1.0));
  }
  return verdict(worst, 1e-10);
}

CheckOutcome frechet_unimodal(const Profile&) {
  for (double g : {1.0 / 3, 0.5, 1.0, 2.0, 4.0}) {
    const Shape s(g);
    int turns = 0;
    bool rising = true;
    double prev = 0.0;
    for (double x : log_points(1e-3, 1e3, 2000)) {
      const double v = frechet_pdf(s, x);
      if (rising && v < prev) {
        rising = false;
        ++turns;
      } else if (!rising && v > prev) {
        ++turns;
      }
      prev = v;
    }
    if (turns != 1) return {false, "gamma = " + format_real(g)};
  }
  return {true, "5 shapes"};
}

CheckOutcome moments(const Profile&) {
  double worst = 0.0;
  const std::pair<double, double> cases[] = {{1.0, -2.0}, {2.0, 1.0}, {3.0, 0.5}, {0.5, -1.0}};
  for (auto [g, mu] : cases) {
    const Shape s(g);
    const auto r = integrate_semi_infinite(
        [&](double x) { return std::pow(x, mu) * frechet_pdf(s, x); }, 0.0);
    const double exact = frechet_moment(s, mu);
    worst = std::max(worst, std::abs(r.value - exact) / exact);
  }
  for (double mu : {-1.0, 0.25, -0.5}) {
    const auto r = integrate_semi_infinite(
        [&](double x) { return std::pow(x, mu) * levy_pdf_half(x); }, 0.0);
    const double exact = levy_moment(LevyIndex(0.5), mu);
    worst = std::max(worst, std::abs(r.value - exact) / exact);
  }
  bool raised = false;
  try {
    frechet_moment(Shape(1.0), 1.0);
  } catch (const DivergentMoment&) {
    raised = true;
  }
  if (!raised) return {false, "mu = gamma not rejected"};
  return verdict(worst, 1e-8);
}

CheckOutcome levy_laplace(const Profile&) {
  double worst = 0.0;
  for (double p : {0.5, 1.0, 4.0}) {
    const auto r = integrate_semi_infinite(
        [p](double x) { return std::exp(-p * x) * levy_pdf_half(x); }, 0.0);
    worst = std::max(worst, std::abs(r.value - std::exp(-std::sqrt(p))));
  }
  return verdict(worst, 1e-9);
}

CheckOutcome levy_rescaled_identity(const Profile&) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lg(std::log(0.2), std::log(4.0)), lx(std::log(0.2), std::log(5.0));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Shape s(std::exp(lg(rng)));
    const double x = std::exp(lx(rng));
    const double a = levy_asymptotic_rescaled(s, x);
    const double b = levy_asymptotic_rescaled_frechet_form(s, x);
    if (b > 0.0) worst = std::max(worst, std::abs(a - b) / b);
  }
  return verdict(worst, 1e-12);
}

CheckOutcome delta_symmetry(const Profile&) {
  for (int k = 1; k <= 6; ++k) {
    for (int l = 1; l <= 6; ++l) {
      auto left = delta_list(k, 1.0);
      auto extra = delta_list(l, 0.0);
      left.insert(left.end(), extra.begin(), extra.end());
      auto right = delta_list(l, 1.0);
      extra = delta_list(k, 0.0);
      right.insert(right.end(), extra.begin(), extra.end());
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      for (std::size_t i = 0; i < left.size(); ++i) {
        if (std::abs(left[i] - right[i]) > 1e-15) return {false, "k,l mismatch"};
      }
    }
  }
  return {true, "1 <= k, l <= 6"};
}

CheckOutcome contour_shift(const Profile&) {
  const auto form = build_laplace_closed_form({2, 3});
  std::vector<double> values;
  for (double c : {0.3, 0.5, 1.0, 1.5}) {
    ContourConfig cfg;
    cfg.policy = AbscissaPolicy::Fixed;
    cfg.abscissa = c;
    values.push_back(form.evaluate(1.0, cfg).value);
  }
  double worst = 0.0;
  for (double a : values)
    for (double b : values) worst = std::max(worst, std::abs(a - b) / std::abs(b));
  return verdict(worst, 1e-9);
}

CheckOutcome cross_path(const Profile& profile) {
  double worst = 0.0;
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= 4; ++k) {
      const RationalShape s(l, k);
      for (double p : log_points(0.01, 20.0, 20)) {
        const double m = laplace_frechet({s, p, LaplaceMethod::MeijerG}).value;
        const double o = laplace_frechet_oracle(s.shape(), p).value;
        worst = std::max(worst, rel_diff(m, o));
      }
    }
  }
  return verdict(worst, profile.cross_path_tol);
}

CheckOutcome bessel_case(const Profile&) {
  double worst = 0.0;
  for (double p : log_points(0.01, 20.0, 40)) {
    const double m = laplace_frechet({{1, 1}, p, LaplaceMethod::MeijerG}).value;
    const double b = laplace_frechet_bessel(p);
    worst = std::max(worst, std::abs(m - b) / b);
  }
  return verdict(worst, 1e-9);
}

CheckOutcome symmetry_law(const Profile&) {
  double worst = 0.0;
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= 4; ++k) {
      for (double p : {0.5, 1.0, 2.0, 5.0}) {
        const auto [lhs, rhs] = laplace_symmetry_check({l, k}, p);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      }
    }
  }
  return verdict(worst, 1e-9);
}

CheckOutcome laplace_shape(const Profile&) {
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= 4; ++k) {
      std::vector<double> v;
      for (double p : log_points(0.01, 20.0, 60)) {
        v.push_back(laplace_frechet({{l, k}, p, LaplaceMethod::MeijerG}).value);
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0 && v[i] <= 1.0)) return {false, "range"};
        if (i && !(v[i] < v[i - 1])) return {false, "not decreasing"};
      }
      // 1 - L ~ Gamma(1 - gamma) p^gamma for gamma < 1, so the limit is slow.
      const double near_zero = laplace_frechet({{l, k}, 1e-12}).value;
      if (std::abs(near_zero - 1.0) > 1e-2) return {false, "p -> 0 limit"};
    }
  }
  return {true, "16 shapes"};
}

CheckOutcome kernel_normalization(const Profile&) {
  double worst = 0.0;
  for (auto [g, t] : {std::pair{1.0, 2.0}, std::pair{0.5, 0.5}, std::pair{3.0, 1.5}}) {
    const Shape s(g);
    const auto r = integrate_semi_infinite(
        [&](double x) { return x > 0 ? frechet_kernel({s, x, t}) : 0.0; }, 0.0);
    worst = std::max(worst, std::abs(r.value - 1.0));
  }
  return verdict(worst, 1e-10);
}

CheckOutcome transform_of_levy(const Profile&) {
  double worst = 0.0;
  const TransformTarget target{levy_pdf_half, {}};
  for (double g : {0.5, 1.0, 2.0}) {
    for (double x : {0.3, 1.0, 3.0}) {
      const double q = frechet_transform_quadrature(target, Shape(g), x).value;
      const double exact = frechet_transform_levy(LevyIndex(0.5), Shape(g), x);
      worst = std::max(worst, std::abs(q - exact));
    }
  }
  return verdict(worst, 1e-8);
}

CheckOutcome transform_frechet_half(const Profile&) {
  double worst = 0.0;
  const Shape half(0.5);
  const TransformTarget target{[half](double t) { return frechet_pdf(half, t); }, {}};
  for (double g : {1.0 / 3, 1.0}) {
    for (double x : {0.5, 1.0, 2.0}) {
      const double q = frechet_transform_quadrature(target, Shape(g), x).value;
      const double closed = frechet_transform_frechet_half(Shape(g), x).value;
      worst = std::max(worst, std::abs(q - closed) / std::abs(q));
    }
  }
  return verdict(worst, 1e-6);
}

CheckOutcome transform_dual_path(const Profile&) {
  double worst = 0.0;
  const TransformTarget target{[](double t) { return std::exp(-t); },
                               [](double u) { return 1.0 / (1.0 + u); }};
  for (double g : {0.5, 1.0, 2.0}) {
    for (double x : {0.5, 1.0, 2.0}) {
      const double q = frechet_transform_quadrature(target, Shape(g), x).value;
      const double d = frechet_transform_via_laplace(target, Shape(g), x).value;
      worst = std::max(worst, std::abs(q - d) / std::abs(q));
    }
  }
  return verdict(worst, 1e-6);
}

CheckOutcome figure_ordering(const Profile&) {
  const auto fig = make_figure(FigureId::Fig4, 400);
  double sup_one = 0.0;
  double sup_third = 0.0;
  for (const auto& row : fig.rows) {
    sup_one = std::max(sup_one, std::abs(row[1] - row[2]));
    sup_third = std::max(sup_third, std::abs(row[3] - row[4]));
  }
  return {sup_third < sup_one,
          "sup gap gamma=1/3 " + format_real(sup_third) + " vs gamma=1 " + format_real(sup_one)};
}

}  // namespace

std::optional<Profile> find_profile(std::string_view name) {
  if (name == "default") return Profile{"default", 1e-8};
  if (name == "strict") return Profile{"strict", 1e-9};
  return std::nullopt;
}

const std::vector<Check>& selfcheck_suite() {
  static const std::vector<Check> suite = {
      {"log_gamma_multiplication_formula", multiplication_formula},
      {"bessel_k1_positive_decreasing", bessel_monotone},
      {"frechet_pdf_normalization", frechet_normalization},
      {"frechet_pdf_unimodal", frechet_unimodal},
      {"moments_vs_quadrature", moments},
      {"levy_half_laplace_pin", levy_laplace},
      {"levy_asymptotic_rescaled_identity", levy_rescaled_identity},
      {"delta_list_union_symmetry", delta_symmetry},
      {"contour_shift_invariance", contour_shift},
      {"laplace_meijer_vs_quadrature", cross_path},
      {"laplace_bessel_case", bessel_case},
      {"laplace_symmetry_law", symmetry_law},
      {"laplace_range_monotone_limit", laplace_shape},
      {"kernel_normalization", kernel_normalization},
      {"transform_of_levy_half", transform_of_levy},
      {"transform_of_frechet_half", transform_frechet_half},
      {"transform_dual_path", transform_dual_path},
      {"fig4_reduced_curve_ordering", figure_ordering},
  };
  return suite;
}

bool run_selfcheck(const Profile& profile, std::ostream& out) {
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& check : selfcheck_suite()) {
    CheckOutcome outcome{false, ""};
    try {
      outcome = check.run(profile);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.passed;
    out << (outcome.passed ? "PASS " : "FAIL ") << check.name << "  " << outcome.detail << '\n';
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out << (all ? "all checks passed" : "some checks FAILED") << " (profile " << profile.name
      << ", " << format_real(elapsed.count()) << " s)\n";
  return all;
}

}  // namespace frechet::cli
