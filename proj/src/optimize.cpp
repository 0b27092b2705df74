#include "frechet/optimize.hpp"

#include <cmath>

#include "frechet/errors.hpp"

namespace frechet {

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 500 && std::abs(b - a) > x_tol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double unimodal_argmax(const std::function<double(double)>& f, double guess,
                       double x_tol) {
  if (!(guess > 0.0)) throw DomainError("unimodal_argmax: guess must be positive");
  auto g = [&f](double log_x) { return f(std::exp(log_x)); };

  double mid = std::log(guess);
  double step = std::log(2.0);
  double fm = g(mid);
  // Walk uphill until the maximum is bracketed by [mid - step, mid + step].
  for (int iter = 0; iter < 2000; ++iter) {
    const double fl = g(mid - step);
    const double fr = g(mid + step);
    if (fl <= fm && fr <= fm) break;
    if (fr > fl) {
      mid += step;
      fm = fr;
    } else {
      mid -= step;
      fm = fl;
    }
  }
  const double log_arg =
      golden_section_max(g, mid - step, mid + step, x_tol);
  return std::exp(log_arg);
}

}  // namespace frechet
