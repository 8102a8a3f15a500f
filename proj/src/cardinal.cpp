#include "gibbsw/cardinal.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "gibbsw/errors.hpp"
#include "gibbsw/lattice.hpp"
#include "bspline_detail.hpp"

namespace gw {

namespace {

double require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
    return v;
}

/** sum_{j>=0} psi(a+j) for psi(x) = 1/(x^2+c^2): direct head until the
 *  argument clears b0, then the Euler-Maclaurin closed tail with correction
 *  terms through psi^(5); the first omitted term is ~psi^(7)(b0)/1209600,
 *  below 1e-14 for the b0 used.  Derivatives come from
 *  psi^(k)(x) = (-1)^k k! Im[(x - ic)^{-(k+1)}]/c. */
double invmq_lattice_tail(double a, double c) {
    const double b0 = std::max(24.0, 12.0 * c);
    double T = 0.0;
    double x = a;
    while (x < b0) {
        T += 1.0 / (x * x + c * c);
        x += 1.0;
    }
    const std::complex<double> z = 1.0 / std::complex<double>(x, -c);
    const std::complex<double> z2 = z * z;
    const std::complex<double> z4 = z2 * z2;
    const std::complex<double> z6 = z4 * z2;
    const double psi0 = 1.0 / (x * x + c * c);
    const double psi1 = -std::imag(z2) / c;
    const double psi3 = -6.0 * std::imag(z4) / c;
    const double psi5 = -120.0 * std::imag(z6) / c;
    const double integral = std::atan(c / x) / c;
    T += integral + psi0 / 2.0 - psi1 / 12.0 + psi3 / 720.0 - psi5 / 30240.0;
    return T;
}

Generator make_invmq_like(const std::string& name, double c) {
    require_positive(c, "invmq shape c");
    Generator g;
    g.name = name;
    g.evaluate = [c](double x) { return 1.0 / (x * x + c * c); };
    g.decay = SummableTail{[](double R) { return 2.0 / std::max(1e-9, R - 1.0); }};
    g.integer_tail_bound = [](double K) { return 2.0 / std::max(1e-9, K); };
    g.lattice_tail = [c](double a) { return invmq_lattice_tail(a, c); };
    return g;
}

double gaussian_tail_bound(double alpha, double R) {
    const double r = std::max(1.0, R);
    return 2.0 * std::exp(-alpha * r * r) / std::max(1e-12, 1.0 - std::exp(-2.0 * alpha * r));
}

/** Generator decay viewed two-sided: bound on sum_{|m|>R} sup_s psi(s-m),
 *  with `fallback` (a bound on the full lattice sum) for ranges a compact
 *  support bound can't certify. */
double generator_two_sided_tail(const Generator& gen, double R, double fallback) {
    if (const auto* cs = std::get_if<CompactSupport>(&gen.decay))
        return R >= cs->radius + 1.0 ? 0.0 : fallback;
    if (const auto* st = std::get_if<SummableTail>(&gen.decay))
        return st->bound(std::max(1.0, R));
    return fallback;
}

/** max over integers 0..P/4 of |sum_n c_n psi(k-n) - delta_{k0}| over the
 *  full stored window; by evenness of psi and c this also covers negative k. */
double interpolation_defect(const Generator& gen, const Eigen::ArrayXd& c, int P) {
    const int half = P / 2;
    const int kmax = P / 4;
    const auto* cs = std::get_if<CompactSupport>(&gen.decay);
    double defect = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        double s = 0.0;
        if (cs) {
            const int nlo = std::max(-half, static_cast<int>(std::ceil(k - cs->radius)));
            const int nhi =
                std::min(half - 1, static_cast<int>(std::floor(k + cs->radius)));
            for (int n = nlo; n <= nhi; ++n)
                s += c[n + half] * gen.evaluate(static_cast<double>(k - n));
        } else {
            for (int i = 0; i < P; ++i)
                s += c[i] * gen.evaluate(static_cast<double>(k - (i - half)));
        }
        defect = std::max(defect, std::abs(s - (k == 0 ? 1.0 : 0.0)));
    }
    return defect;
}

struct CardinalKernelState {
    CardinalFunction L;
    long long nz_lo = 0, nz_hi = -1; ///< n-range where |c_n| clears the prune threshold
    double prune_residual = 0.0;
    double sum_abs = 0.0;
    std::vector<double> suffix; ///< suffix[r] = sum over |n| >= r of |c_n|
    double sigma_sup = 0.0;     ///< sup_u sum_m psi(u-m), grid estimate with margin
};

} // namespace

Generator make_bspline_generator(int n) {
    if (n < 1 || n > 40)
        throw std::invalid_argument("bspline order must be in 1..40, got " +
                                    std::to_string(n));
    Generator g;
    g.name = "bspline:" + std::to_string(n);
    g.evaluate = [n](double x) { return detail::bspline_value(n, x); };
    g.decay = CompactSupport{n / 2.0};
    g.integer_tail_bound = [n](double K) { return K >= n / 2.0 ? 0.0 : 1.0; };
    g.lattice_tail = [n](double a) {
        const double r = n / 2.0;
        long long j = std::max(0LL, static_cast<long long>(std::ceil(-r - a)));
        double T = 0.0;
        for (; a + static_cast<double>(j) < r; ++j)
            T += detail::bspline_value(n, a + static_cast<double>(j));
        return T;
    };
    return g;
}

Generator make_invmq_generator(double c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "invmq:%g", c);
    return make_invmq_like(buf, c);
}

Generator make_poisson_generator() { return make_invmq_like("poisson", 1.0); }

Generator make_gaussian_generator(double alpha) {
    require_positive(alpha, "gaussian shape alpha");
    Generator g;
    char buf[64];
    std::snprintf(buf, sizeof buf, "gaussian:%g", alpha);
    g.name = buf;
    g.evaluate = [alpha](double x) { return std::exp(-alpha * x * x); };
    g.decay = SummableTail{[alpha](double R) { return gaussian_tail_bound(alpha, R); }};
    g.integer_tail_bound = [alpha](double K) { return gaussian_tail_bound(alpha, K); };
    g.lattice_tail = [alpha](double a) {
        const double cut = std::sqrt(750.0 / alpha) + 1.0;
        double x = a;
        if (x < -cut) x = a + std::ceil(-cut - a); // skip the underflowed head
        double T = 0.0;
        for (; x <= cut; x += 1.0) T += std::exp(-alpha * x * x);
        return T;
    };
    return g;
}

SymbolData compute_symbol(const Generator& gen, int P, const TruncationPolicy& policy) {
    validate(policy);
    if (P < 4 || P % 2 != 0)
        throw std::invalid_argument("compute_symbol: period must be even and >= 4");
    if (!gen.evaluate || !gen.integer_tail_bound)
        throw std::invalid_argument("compute_symbol: generator lacks evaluate/tail data");

    // Fold radius: small enough to afford, large enough that the neglected
    // integer tail is recorded honestly when the target is out of reach.
    double K = 1.0;
    const double cap = static_cast<double>(policy.max_radius);
    while (gen.integer_tail_bound(K) > policy.target_abs_error && K < cap)
        K = std::min(K * 2.0, cap);
    const long long Ki = static_cast<long long>(K);

    std::vector<std::complex<double>> folded(static_cast<size_t>(P), {0.0, 0.0});
    for (long long k = -Ki; k <= Ki; ++k) {
        const int bin = static_cast<int>(((k % P) + P) % P);
        folded[bin] += gen.evaluate(static_cast<double>(k));
    }
    std::vector<std::complex<double>> dft;
    Eigen::FFT<double> fft;
    fft.fwd(dft, folded);

    SymbolData sym;
    sym.period = P;
    sym.dft_values = Eigen::ArrayXcd(P);
    double mn = 1e308, mx = 0.0;
    for (int j = 0; j < P; ++j) {
        sym.dft_values[j] = dft[j];
        const double m = std::abs(dft[j]);
        mn = std::min(mn, m);
        mx = std::max(mx, m);
    }
    sym.min_modulus = mn;
    sym.max_modulus = mx;
    sym.truncation_radius = Ki;
    sym.tail_bound = gen.integer_tail_bound(K);
    return sym;
}

CardinalFunction cardinal_from_generator(const Generator& gen,
                                         const CardinalConfig& config) {
    if (config.period < 64 || (config.period & (config.period - 1)) != 0)
        throw std::invalid_argument("CardinalConfig: period must be a power of two >= 64");
    if (config.max_period < config.period)
        throw std::invalid_argument("CardinalConfig: max_period must be >= period");
    if (config.eval_radius < 1)
        throw std::invalid_argument("CardinalConfig: eval_radius must be >= 1");
    require_positive(config.defect_tolerance, "CardinalConfig: defect_tolerance");
    if (config.symbol_floor < 0.0)
        throw std::invalid_argument("CardinalConfig: symbol_floor must be >= 0");
    validate(config.policy);
    if (!gen.evaluate || !gen.lattice_tail || !gen.integer_tail_bound)
        throw std::invalid_argument("cardinal_from_generator: generator incomplete");

    int P = config.period;
    SymbolData sym;
    Eigen::ArrayXd c;
    double defect = 0.0;
    while (true) {
        sym = compute_symbol(gen, P, config.policy);
        if (sym.min_modulus < config.symbol_floor)
            throw SymbolNotInvertibleError(
                gen.name + ": symbol minimum " + std::to_string(sym.min_modulus) +
                    " is below the invertibility floor " +
                    std::to_string(config.symbol_floor),
                sym.min_modulus);
        std::vector<std::complex<double>> recip(static_cast<size_t>(P));
        for (int j = 0; j < P; ++j) recip[j] = 1.0 / sym.dft_values[j];
        std::vector<std::complex<double>> craw;
        Eigen::FFT<double> fft;
        fft.inv(craw, recip);
        c.resize(P);
        const int half = P / 2;
        for (int i = 0; i < P; ++i) c[i] = craw[(i + half) % P].real();
        // The slot at n = -P/2 is the Nyquist bin of the coefficient layout:
        // it holds the merged (aliased) pair c_{-P/2} + c_{P/2} with no
        // positive-side partner, which would make the stored object slightly
        // uneven.  Dropping it keeps the coefficient sequence exactly even,
        // which downstream symmetry identities (half-point, witness
        // reflection) rely on; for generators with merely algebraic
        // coefficient decay the slot is ~|c_{P/2}| and its removal is far
        // below the interpolation defect.
        c[0] = 0.0;
        defect = interpolation_defect(gen, c, P);
        if (defect <= config.defect_tolerance) break;
        if (2 * P > config.max_period)
            throw AccuracyError(gen.name + ": interpolation defect " +
                                    std::to_string(defect) + " at period " +
                                    std::to_string(P) +
                                    " with the doubling budget exhausted",
                                defect);
        P *= 2;
    }

    CardinalFunction L;
    L.generator = gen;
    L.period = P;
    L.eval_radius = std::min(config.eval_radius, P / 2);
    L.coefficients = c;
    L.diagnostics.interpolation_defect = defect;
    L.diagnostics.symbol_min = sym.min_modulus;
    L.diagnostics.period = P;
    L.diagnostics.truncation_radius = sym.truncation_radius;
    L.diagnostics.tail_bound = sym.tail_bound;

    // Partition-of-unity defect via the periodization identity: every integer
    // shift of L periodizes psi the same way, so
    // sum_m L(u - m) = (sum_n c_n) * F(u) with F(u) = T(u) + T(1 - u).
    const double Sc = c.sum();
    const Eigen::ArrayXd grid = unit_grid(64);
    double pou = 0.0;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double u = grid[i];
        const double F = gen.lattice_tail(u) + gen.lattice_tail(1.0 - u);
        pou = std::max(pou, std::abs(Sc * F - 1.0));
    }
    L.diagnostics.pou_defect = pou;
    return L;
}

double eval_cardinal(const CardinalFunction& L, double t) {
    const int half = L.period / 2;
    if (!(std::abs(t) <= static_cast<double>(L.period) / 4.0))
        throw std::domain_error("eval_cardinal: |t| = " + std::to_string(std::abs(t)) +
                                " is outside the accuracy region |t| <= P/4 = " +
                                std::to_string(L.period / 4));
    const long long r0 = std::llround(t);
    long long lo = std::min<long long>(-L.eval_radius, r0 - L.eval_radius);
    long long hi = std::max<long long>(L.eval_radius, r0 + L.eval_radius);
    lo = std::max<long long>(lo, -half);
    hi = std::min<long long>(hi, half - 1);
    if (const auto* cs = std::get_if<CompactSupport>(&L.generator.decay)) {
        lo = std::max<long long>(lo, static_cast<long long>(std::ceil(t - cs->radius)));
        hi = std::min<long long>(hi, static_cast<long long>(std::floor(t + cs->radius)));
    }
    double s = 0.0;
    for (long long n = lo; n <= hi; ++n)
        s += L.coefficients[static_cast<Eigen::Index>(n + half)] *
             L.generator.evaluate(t - static_cast<double>(n));
    return s;
}

Eigen::ArrayXd generator_coefficients(const SampledSignal& f, double W,
                                      const CardinalFunction& L, int n_min, int n_max) {
    require_positive(W, "generator_coefficients: W");
    if (n_max < n_min)
        throw std::invalid_argument("generator_coefficients: empty index range");
    if (!f.evaluate) throw std::invalid_argument("generator_coefficients: signal incomplete");
    const int half = L.period / 2;
    Eigen::ArrayXd a(n_max - n_min + 1);
    for (int j = n_min; j <= n_max; ++j) {
        double s = 0.0;
        for (int i = 0; i < L.period; ++i) {
            const double c = L.coefficients[i];
            if (c == 0.0) continue;
            const int m = i - half;
            s += c * f.evaluate(static_cast<double>(j - m) / W);
        }
        a[j - n_min] = s;
    }
    return a;
}

Kernel as_kernel(const CardinalFunction& L) {
    auto st = std::make_shared<CardinalKernelState>();
    st->L = L;
    const int P = L.period;
    const int half = P / 2;

    const double thresh = 1e-250;
    int ilo = 0, ihi = P - 1;
    while (ilo < P && std::abs(L.coefficients[ilo]) < thresh) ++ilo;
    while (ihi >= 0 && std::abs(L.coefficients[ihi]) < thresh) --ihi;
    if (ilo > ihi) { ilo = 0; ihi = P - 1; }
    st->nz_lo = ilo - half;
    st->nz_hi = ihi - half;
    for (int i = 0; i < P; ++i) {
        const double a = std::abs(L.coefficients[i]);
        st->sum_abs += a;
        if (i < ilo || i > ihi) st->prune_residual += a;
    }
    st->suffix.assign(static_cast<size_t>(half) + 1, 0.0);
    for (int r = half; r >= 0; --r) {
        double level = 0.0;
        if (r == 0) {
            level = std::abs(L.coefficients[half]);
        } else {
            if (half - r >= 0) level += std::abs(L.coefficients[half - r]);
            if (half + r <= P - 1) level += std::abs(L.coefficients[half + r]);
        }
        st->suffix[r] = level + (r == half ? 0.0 : st->suffix[r + 1]);
    }
    {
        const Eigen::ArrayXd grid = unit_grid(64);
        double mx = 0.0;
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
            const double u = grid[i];
            mx = std::max(mx, L.generator.lattice_tail(u) +
                                  L.generator.lattice_tail(1.0 - u));
        }
        st->sigma_sup = 1.5 * mx;
    }

    Kernel k;
    k.name = "cardinal(" + L.generator.name + ")";
    k.even = true;
    k.evaluate = [st](double x) { return eval_cardinal(st->L, x); };
    k.decay = SummableTail{[st, half](double R) {
        const long long r2 =
            std::min<long long>(half, std::max<long long>(0, static_cast<long long>(R / 2)));
        const double coef_part = st->suffix[static_cast<size_t>(r2)] * st->sigma_sup;
        const double gen_part =
            st->sum_abs *
            generator_two_sided_tail(st->L.generator, R / 2.0 - 1.0, st->sigma_sup);
        return coef_part + gen_part;
    }};
    // One-sided sums by factorization: sum_{n>=0} L(t-n) = sum_m c_m W(t-m)
    // with W(s) = sum_{n>=0} psi(s-n) = T(-s), advanced by the one-step
    // recurrence W(s-1) = W(s) - psi(s); analogously for the upper side with
    // V(s) = sum_{n<0} psi(s-n) = T(s+1), V stepping up by psi.
    const double residual_bound = 1e-12 * (1.0 + st->sum_abs);
    k.lower_override = [st, half, residual_bound](double t, const TruncationPolicy&) {
        const Generator& gen = st->L.generator;
        double W = gen.lattice_tail(static_cast<double>(st->nz_lo) - t);
        double acc = 0.0;
        for (long long n = st->nz_lo; n <= st->nz_hi; ++n) {
            acc += st->L.coefficients[static_cast<Eigen::Index>(n + half)] * W;
            W -= gen.evaluate(t - static_cast<double>(n));
        }
        return LatticeSumResult{acc,
                                residual_bound + st->prune_residual * st->sigma_sup,
                                2 * (st->nz_hi - st->nz_lo + 1), true};
    };
    k.upper_override = [st, half, residual_bound](double t, const TruncationPolicy&) {
        const Generator& gen = st->L.generator;
        double V = gen.lattice_tail(t - static_cast<double>(st->nz_lo) + 1.0);
        double acc = 0.0;
        for (long long n = st->nz_lo; n <= st->nz_hi; ++n) {
            acc += st->L.coefficients[static_cast<Eigen::Index>(n + half)] * V;
            V += gen.evaluate(t - static_cast<double>(n));
        }
        return LatticeSumResult{acc,
                                residual_bound + st->prune_residual * st->sigma_sup,
                                2 * (st->nz_hi - st->nz_lo + 1), true};
    };
    return k;
}

std::vector<SweepRow> family_sweep(const std::string& family,
                                   const std::vector<double>& params,
                                   const CardinalConfig& config, const ScanConfig& scan) {
    if (family != "bspline" && family != "invmq")
        throw std::invalid_argument("family_sweep: family must be 'bspline' or 'invmq'");
    if (params.empty())
        throw std::invalid_argument("family_sweep: parameter list is empty");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepRow> rows;
    rows.reserve(params.size());
    for (double p : params) {
        SweepRow row;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%g", p);
        row.parameter = buf;
        try {
            Generator gen;
            if (family == "bspline") {
                const int n = static_cast<int>(std::llround(p));
                if (std::abs(p - n) > 1e-9)
                    throw std::invalid_argument("bspline order must be an integer");
                gen = make_bspline_generator(n);
            } else {
                gen = make_invmq_generator(p);
            }
            const CardinalFunction L = cardinal_from_generator(gen, config);
            const Kernel k = as_kernel(L);
            ScanConfig relaxed = scan;
            relaxed.pou_tolerance = std::max(scan.pou_tolerance, kSweepPouTolerance);
            const OvershootReport rep = detect_overshoot(k, relaxed);
            row.L_half = eval_cardinal(L, 0.5);
            row.gap_to_sinc = std::abs(2.0 * row.L_half - 4.0 / M_PI);
            row.classification = rep.classification;
            row.max_gibbs_value = rep.max_gibbs_value;
        } catch (const std::exception& e) {
            row.L_half = nan;
            row.gap_to_sinc = nan;
            row.max_gibbs_value = nan;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gw
