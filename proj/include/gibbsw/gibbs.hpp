#pragma once

#include <optional>
#include <string>

#include "gibbsw/kernel.hpp"

namespace gw {

/** One-sided limits of a signal at its jump: left = f(0-), right = f(0+).
 *  The convention throughout is f(0) = f(0+), matching sgn(0) = +1. */
struct JumpSpec {
    double left_limit;
    double right_limit;
};

enum class Classification {
    none_found, ///< no overshoot witness inside the scanned range
    none_exact, ///< provably no overshoot anywhere (compact support, exhaustive range)
    left,       ///< witness y < 0 with lower sum negative
    right,      ///< witness x > 0 with upper sum negative
    strong      ///< witnesses on both sides
};

std::string to_string(Classification c);

/** Scan parameters for overshoot detection.  pou_tolerance is the
 *  partition-of-unity gate: kernels whose translates deviate from 1 by more
 *  than this (on the default 64-point grid) are rejected up front, because
 *  the jump-function analysis below presupposes the partition property. */
struct ScanConfig {
    double scan_radius = 8.0;
    double grid_step = 1.0 / 64.0;
    double refine_tolerance = 1e-9;
    double pou_tolerance = 1e-6;
    TruncationPolicy sum_policy{};
};

/** A located sign witness: the one-sided lattice sum at `location` is
 *  `sum_value`, negative beyond its truncation `error_bound`. */
struct Witness {
    double location;
    double sum_value;
    double error_bound;
};

/** Outcome of an overshoot scan.  max/min_gibbs_value are the extrema of
 *  the reduced jump response over the scanned range, refined from the best
 *  bracketing grid cell. */
struct OvershootReport {
    Classification classification = Classification::none_found;
    std::optional<Witness> left;  ///< y < 0 with sum_{n>=0} phi(y-n) < 0
    std::optional<Witness> right; ///< x > 0 with sum_{n<0} phi(x-n) < 0
    double max_gibbs_value = 0.0;
    double min_gibbs_value = 0.0;
    double pou_defect = 0.0;
};

/** Jump response of the kernel: the limit shape the series takes near a jump,
 *      f(0+) * sum_{n>=0} phi(t-n) + f(0-) * sum_{n<0} phi(t-n). */
double gibbs_function(const Kernel& kernel, const JumpSpec& jump, double t,
                      const TruncationPolicy& policy = {});

/** Jump response of the unit jump {-1, +1}: lower sum minus upper sum. */
double reduced_gibbs(const Kernel& kernel, double t, const TruncationPolicy& policy = {});

/** Scans (0, R] and [-R, 0) on a fixed grid, refines candidate minima of the
 *  relevant one-sided sums by golden-section, and accepts a witness only if
 *  its refined sum is negative by more than its truncation error bound.
 *
 *  Tie-breaking: the scan walks outward from 0, and only strict improvement
 *  moves the candidate, so the witness of smallest |t| wins ties.  For even
 *  kernels a single-sided find is checked against its reflection
 *  y = -x - 1 (where the two one-sided sums exchange values) and upgraded to
 *  strong when the reflected sum also clears its bound.  For compactly
 *  supported kernels with scan_radius >= support + 1 a clean scan is
 *  exhaustive and reported as none_exact.
 *
 *  Throws PreconditionError if the kernel fails the partition-of-unity gate.
 */
OvershootReport detect_overshoot(const Kernel& kernel, const ScanConfig& config = {});

/** The reflection pairing a right witness x with its left counterpart. */
inline double even_reflection_witness(double x) { return -x - 1.0; }

/** Half-point identity: for an even kernel with the partition property the
 *  reduced jump response at 1/2 equals twice the kernel value there. */
struct HalfPointCheck {
    double series_value;        ///< reduced_gibbs at 1/2
    double doubled_kernel_value; ///< 2 * phi(1/2)
    double difference;
};

/** Throws PreconditionError if the kernel is not declared even. */
HalfPointCheck half_point_identity_check(const Kernel& kernel,
                                         const TruncationPolicy& policy = {});

/** (2/pi) * Si(pi * xi): the classical Fourier partial-sum jump response for
 *  the unit jump, evaluated by adaptive Gauss-Kronrod quadrature to better
 *  than 1e-12.  Odd in xi. */
double fourier_gibbs_constant(double xi);

} // namespace gw
