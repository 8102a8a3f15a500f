#pragma once

#include <functional>

namespace gw {

/** Integrates f over [a, b] by adaptive bisection with a Gauss-Kronrod 7/15
 *  rule per panel, splitting until the embedded error estimate of every
 *  panel is below its share of target_abs_error. */
double integrate_gk15(const std::function<double(double)>& f, double a, double b,
                      double target_abs_error = 1e-12);

} // namespace gw
