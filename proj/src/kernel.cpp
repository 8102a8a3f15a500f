#include "gibbsw/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gibbsw/alternating.hpp"
#include "bspline_detail.hpp"

namespace gw {

void validate(const TruncationPolicy& policy) {
    if (!(policy.target_abs_error > 0.0))
        throw std::invalid_argument("TruncationPolicy: target_abs_error must be positive");
    if (policy.max_radius < 1)
        throw std::invalid_argument("TruncationPolicy: max_radius must be at least 1");
}

namespace {

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(M_PI * x) / (M_PI * x);
}

/** Lower sum for sinc: sum_{n>=0} sinc(t-n).  Factoring out sin(pi t)/pi
 *  leaves the strictly alternating sum_{n>=0} (-1)^n / (t-n); its head up to
 *  the last positive denominator is summed directly and the remainder is an
 *  alternating reciprocal series accelerated with a rigorous bound. */
LatticeSumResult sinc_lower(double t, const TruncationPolicy&) {
    if (t == std::nearbyint(t)) {
        // interpolation property: only the n = t term survives
        return {t >= 0.0 ? 1.0 : 0.0, 0.0, 1, true};
    }
    const long long n0 = std::max(0LL, static_cast<long long>(std::floor(t)) + 1);
    double head = 0.0;
    double sign = 1.0;
    for (long long n = 0; n < n0; ++n) {
        head += sign / (t - n);
        sign = -sign;
    }
    const double a = static_cast<double>(n0) - t; // > 0
    const AcceleratedSum tail = alternating_reciprocal_sum(a);
    // sign at n0 is (-1)^{n0}; the reindexed tail carries (-1)^{n0+1}
    const double tail_sign = (n0 % 2 == 0) ? -1.0 : 1.0;
    const double factor = std::sin(M_PI * t) / M_PI;
    return {factor * (head + tail_sign * tail.value),
            std::abs(factor) * tail.error_bound, n0 + 40, true};
}

/** Upper sum for sinc: sum_{n<0} sinc(t-n) = sum_{m>=1} sinc(t+m). */
LatticeSumResult sinc_upper(double t, const TruncationPolicy&) {
    if (t == std::nearbyint(t)) {
        return {t < 0.0 ? 1.0 : 0.0, 0.0, 1, true};
    }
    const long long m0 = std::max(1LL, static_cast<long long>(std::floor(-t)) + 1);
    double head = 0.0;
    double sign = -1.0; // (-1)^m at m = 1
    for (long long m = 1; m < m0; ++m) {
        head += sign / (t + m);
        sign = -sign;
    }
    const double a = t + static_cast<double>(m0); // > 0
    const AcceleratedSum tail = alternating_reciprocal_sum(a);
    const double tail_sign = (m0 % 2 == 0) ? 1.0 : -1.0; // (-1)^{m0}
    const double factor = std::sin(M_PI * t) / M_PI;
    return {factor * (head + tail_sign * tail.value),
            std::abs(factor) * tail.error_bound, m0 + 39, true};
}

} // namespace

Kernel make_sinc() {
    Kernel k;
    k.name = "sinc";
    k.even = true;
    k.evaluate = [](double x) { return sinc(x); };
    k.decay = AlternatingTail{
        [](double R) { return 1.0 / (M_PI * std::max(1.0, R - 33.0)); }, 32.0};
    k.lower_override = sinc_lower;
    k.upper_override = sinc_upper;
    return k;
}

Kernel make_bspline(int n) {
    if (n < 1 || n > 40)
        throw std::invalid_argument("bspline order must be in 1..40, got " + std::to_string(n));
    Kernel k;
    k.name = "bspline:" + std::to_string(n);
    k.even = true;
    k.evaluate = [n](double x) { return detail::bspline_value(n, x); };
    k.decay = CompactSupport{n / 2.0};
    return k;
}

} // namespace gw
