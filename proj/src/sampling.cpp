#include "gibbsw/sampling.hpp"

#include <cmath>
#include <string>

#include "gibbsw/errors.hpp"

namespace gw {

namespace {

/** Core of both series views: sum_n f(n/scale) phi(u - n) over a window
 *  chosen from the kernel's decay class so the neglected tail (weighted by
 *  the signal's sup bound) stays below the policy target where the class
 *  allows a rigorous bound.  Terms are visited in ascending |n|, negative
 *  index first on ties. */
double series_core(const Kernel& kernel, const SampledSignal& f, double scale,
                   double u, const TruncationPolicy& policy) {
    validate(policy);
    if (!(scale > 0.0))
        throw std::invalid_argument("series scale must be positive");
    long long lo = 0, hi = -1;
    if (const auto* cs = std::get_if<CompactSupport>(&kernel.decay)) {
        lo = static_cast<long long>(std::ceil(u - cs->radius));
        hi = static_cast<long long>(std::floor(u + cs->radius));
    } else if (const auto* st = std::get_if<SummableTail>(&kernel.decay)) {
        const double weight = std::max(1.0, f.sup_bound);
        double R = 1.0;
        const double cap = static_cast<double>(policy.max_radius);
        while (st->bound(R) * weight > policy.target_abs_error && R < cap)
            R = std::min(R * 2.0, cap);
        if (st->bound(R) * weight > policy.target_abs_error)
            throw TruncationBudgetError(
                kernel.name + ": series tail " + std::to_string(st->bound(R) * weight) +
                    " at max_radius exceeds target " +
                    std::to_string(policy.target_abs_error),
                st->bound(R) * weight, policy.max_radius);
        const long long q = static_cast<long long>(std::floor(u));
        lo = q - static_cast<long long>(R);
        hi = q + static_cast<long long>(R);
    } else {
        // Conditionally convergent translates admit no rigorous absolute
        // window; use a wide fixed window (documented heuristic).
        const long long R = std::min<long long>(policy.max_radius, 100000);
        const long long q = static_cast<long long>(std::floor(u));
        lo = q - R;
        hi = q + R;
    }
    double s = 0.0;
    const long long dmax = std::max(std::llabs(lo), std::llabs(hi));
    for (long long d = 0; d <= dmax; ++d) {
        for (int sgn = 0; sgn < (d == 0 ? 1 : 2); ++sgn) {
            const long long n = sgn == 0 ? -d : d;
            if (n < lo || n > hi) continue;
            const double nd = static_cast<double>(n);
            s += f.evaluate(nd / scale) * kernel.evaluate(u - nd);
        }
    }
    return s;
}

} // namespace

SampledSignal make_sign_signal() {
    return {"sgn", [](double t) { return t < 0.0 ? -1.0 : 1.0; }, 1.0,
            JumpSpec{-1.0, 1.0}};
}

SampledSignal make_cos_signal() {
    return {"cos", [](double t) { return std::cos(t); }, 1.0, std::nullopt};
}

SampledSignal make_ramp_signal() {
    return {"ramp", [](double t) { return t < 0.0 ? t - 1.0 : t + 1.0; }, 40.0,
            JumpSpec{-1.0, 1.0}};
}

double sampling_series(const Kernel& kernel, const SampledSignal& f, double W,
                       double t, const TruncationPolicy& policy) {
    return series_core(kernel, f, W, W * t, policy);
}

double rescaled_series(const Kernel& kernel, const SampledSignal& f, double N,
                       double xi, const TruncationPolicy& policy) {
    return series_core(kernel, f, N, xi, policy);
}

Eigen::ArrayXd default_xi_grid() {
    Eigen::ArrayXd g(128);
    int out = 0;
    for (int j = 0; j <= 128; ++j) {
        if (j == 64) continue; // excludes xi = 0
        g[out++] = -4.0 + j / 16.0;
    }
    return g;
}

std::vector<ProbeRow> convergence_probe(const Kernel& kernel, const SampledSignal& f,
                                        const std::vector<double>& Ns,
                                        const Eigen::Ref<const Eigen::ArrayXd>& xi_grid,
                                        const TruncationPolicy& policy) {
    if (!f.jump_at_zero)
        throw PreconditionError("convergence_probe: signal '" + f.name +
                                "' declares no jump at 0");
    std::vector<ProbeRow> rows;
    rows.reserve(Ns.size());
    for (double N : Ns) {
        if (!(N > 0.0))
            throw std::invalid_argument("convergence_probe: N must be positive");
        double sup = 0.0;
        for (Eigen::Index i = 0; i < xi_grid.size(); ++i) {
            const double xi = xi_grid[i];
            const double series = rescaled_series(kernel, f, N, xi, policy);
            const double limit = gibbs_function(kernel, *f.jump_at_zero, xi, policy);
            sup = std::max(sup, std::abs(series - limit));
        }
        rows.push_back({N, sup});
    }
    return rows;
}

std::vector<ContinuityRow> continuity_convergence_check(const Kernel& kernel,
                                                        const SampledSignal& f, double t,
                                                        const std::vector<double>& Ws,
                                                        const TruncationPolicy& policy) {
    std::vector<ContinuityRow> rows;
    rows.reserve(Ws.size());
    const double truth = f.evaluate(t);
    for (double W : Ws) {
        if (!(W > 0.0))
            throw std::invalid_argument("continuity check: W must be positive");
        rows.push_back({W, std::abs(sampling_series(kernel, f, W, t, policy) - truth)});
    }
    return rows;
}

} // namespace gw
