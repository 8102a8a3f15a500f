#pragma once

#include <cmath>
#include <vector>

namespace gw::detail {

/** Central B-spline M_n at x: the order-n uniform B-spline B_{0,n} on integer
 *  knots 0..n evaluated at u = x + n/2, via the Cox-de Boor two-term
 *  recurrence (all weights in [0,1]: unconditionally stable).  M_1 is the
 *  half-open indicator of [-1/2, 1/2). */
inline double bspline_value(int n, double x) {
    const double u = x + n / 2.0;
    if (u < 0.0 || u >= n) return 0.0;
    if (n == 1) return 1.0;
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    v[static_cast<size_t>(u)] = 1.0; // the order-1 indicator containing u
    for (int k = 2; k <= n; ++k)
        for (int j = 0; j + k <= n; ++j)
            v[j] = ((u - j) * v[j] + (j + k - u) * v[j + 1]) / (k - 1);
    return v[0];
}

} // namespace gw::detail
