#pragma once

#include <cmath>

namespace gw {

/** Result of an accelerated alternating-series evaluation. */
struct AcceleratedSum {
    double value;
    double error_bound; ///< rigorous bound on |value - exact|, fp rounding excluded
};

/** Evaluates sum_{j>=0} (-1)^j / (j + a) for a > 0 by Chebyshev-weighted
 *  acceleration (Cohen / Rodriguez Villegas / Zagier).  The weights 1/(j+a)
 *  are moments of the positive measure x^{a-1} dx on [0,1], which is exactly
 *  the total-monotonicity condition under which the scheme converges
 *  geometrically at rate (3+sqrt(8))^{-n}.  With n = 40 the mathematical
 *  truncation error is below 1e-30/a, so results are fp-limited.
 */
inline AcceleratedSum alternating_reciprocal_sum(double a, int n = 40) {
    // Chebyshev recursion: d = (x^n + x^-n)/2 at x = 3+sqrt(8).
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c / (k + a);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    const double rate = std::pow(3.0 + std::sqrt(8.0), -n);
    return {s / d, 8.0 * rate / a};
}

} // namespace gw
