#pragma once

#include <functional>
#include <string>
#include <variant>

namespace gw {

/** Controls how infinite lattice sums are truncated.  All tolerances are
 *  absolute; error bounds derived from it describe mathematical truncation
 *  only and do not account for floating-point rounding. */
struct TruncationPolicy {
    double target_abs_error = 1e-10;
    long long max_radius = 1000000;
};

/** Throws std::invalid_argument on nonpositive tolerance or radius. */
void validate(const TruncationPolicy& policy);

/** Value of a truncated (or accelerated) lattice sum together with a bound
 *  on the truncation error. */
struct LatticeSumResult {
    double value = 0.0;
    double error_bound = 0.0;     ///< |value - exact| <= error_bound (fp rounding excluded)
    long long terms_used = 0;
    bool bound_is_rigorous = true; ///< false on heuristic fallback paths
};

/** phi vanishes identically outside [-radius, radius]. */
struct CompactSupport {
    double radius;
};

/** Absolutely summable lattice translates with a declared tail majorant:
 *  bound(R) >= sum over |n| > R of sup_{s in [0,1]} |phi(s - n)|, assumed
 *  nonincreasing in R. */
struct SummableTail {
    std::function<double(double)> bound;
};

/** Conditionally convergent alternating translates.  envelope(R) bounds a
 *  single term |phi(t - n)| for |n| >= R, valid for |t| <= valid_abs_t.
 *  Generic summation pairs consecutive terms and reports the first omitted
 *  term as a (non-rigorous for general kernels) remainder estimate; kernels
 *  of this class normally ship accelerated overrides instead. */
struct AlternatingTail {
    std::function<double(double)> envelope;
    double valid_abs_t = 32.0;
};

using DecayClass = std::variant<CompactSupport, SummableTail, AlternatingTail>;

/** A sampling kernel phi together with the metadata the lattice-sum engine
 *  needs: evenness, a decay class for generic truncation, and optional
 *  accelerated evaluators for the two one-sided sums
 *      lower: sum_{n >= 0} phi(t - n),   upper: sum_{n < 0} phi(t - n). */
struct Kernel {
    std::string name;
    bool even = false;
    std::function<double(double)> evaluate;
    DecayClass decay{CompactSupport{0.0}};
    std::function<LatticeSumResult(double, const TruncationPolicy&)> lower_override;
    std::function<LatticeSumResult(double, const TruncationPolicy&)> upper_override;
};

/** The cardinal sine sin(pi x)/(pi x).  One-sided sums use head-plus-
 *  accelerated-tail evaluation (see alternating.hpp) with rigorous bounds;
 *  at integer arguments the interpolation property gives them exactly. */
Kernel make_sinc();

/** Central B-spline M_n (n >= 1): n-fold convolution of the unit-interval
 *  indicator, supported on [-n/2, n/2], evaluated by the stable two-term
 *  recurrence on integer knots.  M_1 is the half-open indicator of
 *  [-1/2, 1/2), so M_1(-1/2) = 1 and M_1(1/2) = 0. */
Kernel make_bspline(int n);

} // namespace gw
