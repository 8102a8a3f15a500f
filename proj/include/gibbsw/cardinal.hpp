#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gibbsw/gibbs.hpp"
#include "gibbsw/kernel.hpp"
#include "gibbsw/sampling.hpp"

namespace gw {

/** A nonnegative even generator psi from which a cardinal interpolant is
 *  built.  Beyond pointwise evaluation it declares:
 *   - decay: truncation metadata when psi itself is used as a kernel,
 *   - integer_tail_bound(K): bound on sum_{|k| > K} psi(k),
 *   - lattice_tail(a): the exact one-sided value sum_{j >= 0} psi(a + j)
 *     for any real a (closed tail via Euler-Maclaurin or finite support),
 *     which powers O(1)-per-step accelerated lattice sums of the cardinal. */
struct Generator {
    std::string name;
    std::function<double(double)> evaluate;
    DecayClass decay{CompactSupport{0.0}};
    std::function<double(double)> integer_tail_bound;
    std::function<double(double)> lattice_tail;
};

Generator make_bspline_generator(int n);
Generator make_invmq_generator(double c); ///< 1 / (x^2 + c^2)
Generator make_poisson_generator();       ///< 1 / (x^2 + 1)
Generator make_gaussian_generator(double alpha); ///< exp(-alpha x^2)

/** DFT of the folded integer samples of psi on the grid j/P: the symbol
 *  whose reciprocal gives the interpolation coefficients.  The fold radius K
 *  is chosen so integer_tail_bound(K) <= policy.target_abs_error when that
 *  fits inside policy.max_radius, else capped there with the achieved bound
 *  recorded in tail_bound. */
struct SymbolData {
    int period = 0;
    Eigen::ArrayXcd dft_values;
    double min_modulus = 0.0;
    double max_modulus = 0.0;
    long long truncation_radius = 0;
    double tail_bound = 0.0;
};

SymbolData compute_symbol(const Generator& gen, int P, const TruncationPolicy& policy = {});

struct CardinalDiagnostics {
    double interpolation_defect = 0.0; ///< max_{|k| <= P/4} |sum_n c_n psi(k-n) - delta_k0|
    double pou_defect = 0.0;           ///< max over the 64-grid of |sum_m L(t-m) - 1|
    double symbol_min = 0.0;
    int period = 0;                    ///< final period after any automatic doubling
    long long truncation_radius = 0;
    double tail_bound = 0.0;
};

/** The interpolant L(x) = sum_n c_n psi(x - n), coefficients c_n stored for
 *  n = -P/2 .. P/2 - 1 (index i holds n = i - P/2). */
struct CardinalFunction {
    Generator generator;
    int period = 0;
    int eval_radius = 0;
    Eigen::ArrayXd coefficients;
    CardinalDiagnostics diagnostics;
};

struct CardinalConfig {
    int period = 4096;      ///< starting P; doubled while the defect misses tolerance
    int eval_radius = 512;
    int max_period = 65536; ///< doubling cap; AccuracyError beyond it
    double defect_tolerance = 1e-8;
    double symbol_floor = 1e-8; ///< SymbolNotInvertibleError below this
    TruncationPolicy policy{};
};

/** Builds the coefficients as the inverse DFT of the reciprocal symbol,
 *  measures the interpolation defect on integers |k| <= P/4 against the full
 *  stored coefficient window, and doubles P until the defect meets
 *  tolerance (or max_period is hit -> AccuracyError).  Throws
 *  SymbolNotInvertibleError when the symbol dips below symbol_floor. */
CardinalFunction cardinal_from_generator(const Generator& gen, const CardinalConfig& config = {});

/** L(t) over the window hull of [-R, R] and [round(t)-R, round(t)+R]
 *  (clipped to stored coefficients).  For the shipped generators at default
 *  R this differs from the full stored window by < 1e-9 for |t| <= 32.
 *  Throws std::domain_error outside the accuracy region |t| <= P/4. */
double eval_cardinal(const CardinalFunction& L, double t);

/** Coefficients of the sampling series in the generator basis: the a_n with
 *      sum_n f(n/W) L(Wt - n) = sum_n a_n psi(Wt - n),
 *  i.e. the discrete convolution a_j = sum_m c_m f((j - m)/W), returned for
 *  j = n_min .. n_max.  For f identically 1 every a_j is sum_m c_m. */
Eigen::ArrayXd generator_coefficients(const SampledSignal& f, double W,
                                      const CardinalFunction& L, int n_min, int n_max);

/** Wraps L as a Kernel: even, summable-tail decay derived from stored
 *  coefficient suffix sums, and accelerated one-sided lattice sums through
 *  the factorization sum_m c_m T(t - m) with T the generator's one-sided
 *  integer tail (one generator evaluation per lattice step). */
Kernel as_kernel(const CardinalFunction& L);

/** One row of a family sweep.  On construction failure `error` is non-empty
 *  and the numeric columns are NaN. */
struct SweepRow {
    std::string parameter;
    double L_half = 0.0;       ///< L(1/2)
    double gap_to_sinc = 0.0;  ///< |2 L(1/2) - 4/pi|: half-point gap of jump responses
    Classification classification = Classification::none_found;
    double max_gibbs_value = 0.0;
    std::string error;
};

/** Partition-of-unity gate used inside family sweeps.  Deliberately looser
 *  than the scan default: the inverse-multiquadric cardinals are *not*
 *  partitions of unity (defect 7.44e-3 at c = 1, closed form), yet sweeping
 *  them is exactly the point of the family comparison, so the sweep records
 *  their jump response anyway and documents the relaxation here. */
inline constexpr double kSweepPouTolerance = 0.05;

/** family is "bspline" (params are spline orders) or "invmq" (params are
 *  shape values c).  Each parameter gets a cardinal construction, a
 *  half-point evaluation and an overshoot scan; failures are recorded per
 *  row rather than aborting the sweep. */
std::vector<SweepRow> family_sweep(const std::string& family,
                                   const std::vector<double>& params,
                                   const CardinalConfig& config = {},
                                   const ScanConfig& scan = {});

} // namespace gw
