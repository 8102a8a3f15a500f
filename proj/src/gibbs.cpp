#include "gibbsw/gibbs.hpp"

#include <cmath>
#include <string>

#include "gibbsw/errors.hpp"
#include "gibbsw/lattice.hpp"
#include "gibbsw/quadrature.hpp"

namespace gw {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::none_found: return "none-found";
        case Classification::none_exact: return "none-exact";
        case Classification::left: return "left";
        case Classification::right: return "right";
        case Classification::strong: return "strong";
    }
    return "none-found";
}

double gibbs_function(const Kernel& kernel, const JumpSpec& jump, double t,
                      const TruncationPolicy& policy) {
    const LatticeSumResult lo = one_sided_sum_lower(kernel, t, policy);
    const LatticeSumResult up = one_sided_sum_upper(kernel, t, policy);
    return jump.right_limit * lo.value + jump.left_limit * up.value;
}

double reduced_gibbs(const Kernel& kernel, double t, const TruncationPolicy& policy) {
    return gibbs_function(kernel, JumpSpec{-1.0, 1.0}, t, policy);
}

namespace {

struct ProbeResult {
    double location;
    LatticeSumResult sum;
};

/** Golden-section minimization of fn over [a, b] down to interval width tol;
 *  returns the best probed interior point and its sum. */
template <typename Fn>
ProbeResult golden_min(Fn&& fn, double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    LatticeSumResult f1 = fn(x1), f2 = fn(x2);
    ProbeResult best = f1.value <= f2.value ? ProbeResult{x1, f1} : ProbeResult{x2, f2};
    while (b - a > tol) {
        if (f1.value <= f2.value) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = fn(x2);
        }
        // the retained probe is always the best point seen so far
        best = f1.value <= f2.value ? ProbeResult{x1, f1} : ProbeResult{x2, f2};
    }
    return best;
}

void validate(const ScanConfig& config) {
    if (!(config.scan_radius > 0.0))
        throw std::invalid_argument("ScanConfig: scan_radius must be positive");
    if (!(config.grid_step > 0.0) || config.grid_step > config.scan_radius)
        throw std::invalid_argument("ScanConfig: grid_step must lie in (0, scan_radius]");
    if (!(config.refine_tolerance > 0.0))
        throw std::invalid_argument("ScanConfig: refine_tolerance must be positive");
    if (!(config.pou_tolerance > 0.0))
        throw std::invalid_argument("ScanConfig: pou_tolerance must be positive");
    gw::validate(config.sum_policy);
}

} // namespace

OvershootReport detect_overshoot(const Kernel& kernel, const ScanConfig& config) {
    validate(config);
    OvershootReport report;
    report.pou_defect =
        partition_of_unity_defect(kernel, unit_grid(64), config.sum_policy);
    if (report.pou_defect > config.pou_tolerance)
        throw PreconditionError(
            kernel.name + ": integer translates are not a partition of unity (defect " +
            std::to_string(report.pou_defect) + " > tolerance " +
            std::to_string(config.pou_tolerance) + "); the jump-response scan "
            "presupposes the partition property");

    const auto lower = [&](double t) {
        return one_sided_sum_lower(kernel, t, config.sum_policy);
    };
    const auto upper = [&](double t) {
        return one_sided_sum_upper(kernel, t, config.sum_policy);
    };

    const long long K =
        static_cast<long long>(std::floor(config.scan_radius / config.grid_step + 1e-9));

    // One outward pass per side; strict-improvement updates make the witness
    // (and extremum) of smallest |t| win ties.
    double min_left = 0.0, min_right = 0.0; // candidate witness sums (vs 0)
    double left_at = 0.0, right_at = 0.0;
    bool have_left_cand = false, have_right_cand = false;
    double gmax = -1e308, gmin = 1e308;
    double gmax_at = 0.0, gmin_at = 0.0;

    for (long long k = 1; k <= K; ++k) {
        const double y = -static_cast<double>(k) * config.grid_step;
        const LatticeSumResult slo = lower(y);
        const LatticeSumResult sup = upper(y);
        if (!have_left_cand || slo.value < min_left) {
            have_left_cand = true;
            min_left = slo.value;
            left_at = y;
        }
        const double g = slo.value - sup.value;
        if (g > gmax) { gmax = g; gmax_at = y; }
        if (g < gmin) { gmin = g; gmin_at = y; }
    }
    for (long long k = 1; k <= K; ++k) {
        const double x = static_cast<double>(k) * config.grid_step;
        const LatticeSumResult slo = lower(x);
        const LatticeSumResult sup = upper(x);
        if (!have_right_cand || sup.value < min_right) {
            have_right_cand = true;
            min_right = sup.value;
            right_at = x;
        }
        const double g = slo.value - sup.value;
        if (g > gmax) { gmax = g; gmax_at = x; }
        if (g < gmin) { gmin = g; gmin_at = x; }
    }

    // Refine witness candidates inside their bracketing cells and accept only
    // if the refined sum is negative beyond its truncation error bound.
    const double span = config.grid_step;
    if (have_left_cand) {
        const double a = std::max(-config.scan_radius, left_at - span);
        const double b = std::min(left_at + span, -1e-12);
        const ProbeResult r = golden_min(lower, a, b, config.refine_tolerance);
        if (r.sum.value < -r.sum.error_bound)
            report.left = Witness{r.location, r.sum.value, r.sum.error_bound};
    }
    if (have_right_cand) {
        const double a = std::max(1e-12, right_at - span);
        const double b = std::min(config.scan_radius, right_at + span);
        const ProbeResult r = golden_min(upper, a, b, config.refine_tolerance);
        if (r.sum.value < -r.sum.error_bound)
            report.right = Witness{r.location, r.sum.value, r.sum.error_bound};
    }

    // Even kernels: the two one-sided sums exchange values under t -> -t-1,
    // so a single-sided find has an exact mirror; verify it rather than
    // trusting the identity blindly, and upgrade to strong when it clears.
    if (kernel.even && report.left.has_value() != report.right.has_value()) {
        if (report.right) {
            const double y = even_reflection_witness(report.right->location);
            if (y >= -config.scan_radius && y < 0.0) {
                const LatticeSumResult s = lower(y);
                if (s.value < -s.error_bound)
                    report.left = Witness{y, s.value, s.error_bound};
            }
        } else {
            const double x = even_reflection_witness(report.left->location);
            if (x > 0.0 && x <= config.scan_radius) {
                const LatticeSumResult s = upper(x);
                if (s.value < -s.error_bound)
                    report.right = Witness{x, s.value, s.error_bound};
            }
        }
    }

    // Refine the jump-response extrema from their bracketing cells.
    const auto neg_g = [&](double t) {
        LatticeSumResult lo = lower(t);
        const LatticeSumResult up = upper(t);
        lo.value = -(lo.value - up.value);
        lo.error_bound += up.error_bound;
        return lo;
    };
    const auto pos_g = [&](double t) {
        LatticeSumResult lo = lower(t);
        const LatticeSumResult up = upper(t);
        lo.value = lo.value - up.value;
        lo.error_bound += up.error_bound;
        return lo;
    };
    {
        const double a = std::max(-config.scan_radius, gmax_at - span);
        const double b = std::min(config.scan_radius, gmax_at + span);
        report.max_gibbs_value = -golden_min(neg_g, a, b, config.refine_tolerance).sum.value;
    }
    {
        const double a = std::max(-config.scan_radius, gmin_at - span);
        const double b = std::min(config.scan_radius, gmin_at + span);
        report.min_gibbs_value = golden_min(pos_g, a, b, config.refine_tolerance).sum.value;
    }

    if (report.left && report.right)
        report.classification = Classification::strong;
    else if (report.left)
        report.classification = Classification::left;
    else if (report.right)
        report.classification = Classification::right;
    else if (const auto* cs = std::get_if<CompactSupport>(&kernel.decay);
             cs && config.scan_radius >= cs->radius + 1.0)
        // Beyond support+1 both one-sided sums are constant, so a clean scan
        // of a compactly supported kernel is exhaustive at grid resolution.
        report.classification = Classification::none_exact;
    else
        report.classification = Classification::none_found;
    return report;
}

HalfPointCheck half_point_identity_check(const Kernel& kernel,
                                         const TruncationPolicy& policy) {
    if (!kernel.even)
        throw PreconditionError(kernel.name +
                                ": half-point identity requires an even kernel");
    HalfPointCheck c{};
    c.series_value = reduced_gibbs(kernel, 0.5, policy);
    c.doubled_kernel_value = 2.0 * kernel.evaluate(0.5);
    c.difference = c.series_value - c.doubled_kernel_value;
    return c;
}

double fourier_gibbs_constant(double xi) {
    if (xi == 0.0) return 0.0;
    const double end = M_PI * std::abs(xi);
    const double si = integrate_gk15(
        [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }, 0.0, end, 1e-13);
    const double value = (2.0 / M_PI) * si;
    return xi < 0.0 ? -value : value;
}

} // namespace gw
