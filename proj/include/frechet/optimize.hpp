#pragma once

#include <functional>

namespace frechet {

/// Golden-section search for the maximiser of a unimodal function on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double x_tol);

/// Maximiser of a unimodal function on (0, inf). The bracket is grown
/// geometrically from `guess` before the golden-section refinement; `x_tol` is
/// relative to the located maximiser.
double unimodal_argmax(const std::function<double(double)>& f, double guess,
                       double x_tol = 1e-10);

}  // namespace frechet
