#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gibbsw/gibbs.hpp"
#include "gibbsw/kernel.hpp"

namespace gw {

/** A signal to be sampled on a lattice.  sup_bound bounds |f| on the range
 *  the series ops touch (|argument| <= scan ranges); jump_at_zero carries
 *  the one-sided limits when the signal has its (single) jump at 0, which
 *  the jump-convergence probe requires. */
struct SampledSignal {
    std::string name;
    std::function<double(double)> evaluate;
    double sup_bound = 1.0;
    std::optional<JumpSpec> jump_at_zero;
};

/** sgn with sgn(0) = +1; jump {-1, +1}. */
SampledSignal make_sign_signal();
/** cos, no jump. */
SampledSignal make_cos_signal();
/** sgn(t) * (1 + |t|): a jump of {-1, +1} with linear growth away from it;
 *  reproduced exactly by spline kernels up to the jump response, which makes
 *  its probe errors closed-form. */
SampledSignal make_ramp_signal();

/** Truncated sampling series sum_n f(n/W) phi(W t - n) at scale W > 0.
 *  The window is chosen from the kernel's decay class so the neglected tail
 *  is below policy.target_abs_error * sup_bound where the class allows a
 *  rigorous bound. */
double sampling_series(const Kernel& kernel, const SampledSignal& f, double W,
                       double t, const TruncationPolicy& policy = {});

/** The series viewed in jump-zoom coordinates: sum_n f(n/N) phi(xi - n).
 *  Identical summation core as sampling_series at t = xi / N. */
double rescaled_series(const Kernel& kernel, const SampledSignal& f, double N,
                       double xi, const TruncationPolicy& policy = {});

/** 129 equispaced points on [-4, 4] with the center point 0 removed. */
Eigen::ArrayXd default_xi_grid();

struct ProbeRow {
    double N;
    double sup_error;
};

/** For each N: sup over the xi grid of |rescaled series - jump response|,
 *  where the reference is gibbs_function with the signal's declared jump.
 *  Throws PreconditionError if the signal has no jump metadata. */
std::vector<ProbeRow> convergence_probe(const Kernel& kernel, const SampledSignal& f,
                                        const std::vector<double>& Ns,
                                        const Eigen::Ref<const Eigen::ArrayXd>& xi_grid,
                                        const TruncationPolicy& policy = {});

struct ContinuityRow {
    double W;
    double abs_error;
};

/** |sampling_series(W) - f(t)| at a continuity point t, for each W. */
std::vector<ContinuityRow> continuity_convergence_check(const Kernel& kernel,
                                                        const SampledSignal& f, double t,
                                                        const std::vector<double>& Ws,
                                                        const TruncationPolicy& policy = {});

} // namespace gw
