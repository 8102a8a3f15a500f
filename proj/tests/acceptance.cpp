// Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each, exit
// code = number of failures.  argv[1] is the path to the gibbsw binary (used
// by the CLI-facing criteria).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <Eigen/Dense>

#include "gibbsw/cardinal.hpp"
#include "gibbsw/errors.hpp"
#include "gibbsw/gibbs.hpp"
#include "gibbsw/kernel.hpp"
#include "gibbsw/lattice.hpp"
#include "gibbsw/registry.hpp"
#include "gibbsw/sampling.hpp"

namespace {

constexpr double kFourOverPi = 1.2732395447351627;

std::string g_bin;
std::filesystem::path g_dir;

int run_cli(const std::string& args, const std::string& stdout_name = "stdout.txt") {
    const std::string cmd = g_bin + " " + args + " >" + (g_dir / stdout_name).string() +
                            " 2>" + (g_dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -2;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/** Cardinal kernels are expensive to build; construct each id once. */
const gw::Kernel& cached_kernel(const std::string& id) {
    static std::map<std::string, gw::Kernel> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, gw::kernel_from_id(id)).first;
    return it->second;
}

struct Criterion {
    int number;
    std::function<std::string()> body; ///< returns "" on pass, else the failure reason
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-gibbsw>\n");
        return 64;
    }
    g_bin = argv[1];
    g_dir = std::filesystem::current_path() / "acceptance_tmp";
    std::filesystem::remove_all(g_dir);
    std::filesystem::create_directories(g_dir);

    // Reports kept for the symmetry criterion.
    std::map<std::string, gw::OvershootReport> scans;

    std::vector<Criterion> criteria;

    // 1. Classical Fourier jump constant through the CLI, under a second.
    criteria.push_back({1, [&]() -> std::string {
        const auto t0 = std::chrono::steady_clock::now();
        const int rc = run_cli("gibbs-constant --xi 1");
        const double dt = seconds_since(t0);
        if (rc != 0) return "CLI exited " + std::to_string(rc);
        const double value = std::stod(slurp(g_dir / "stdout.txt"));
        if (std::abs(value - 1.178980) > 5e-6)
            return "value " + std::to_string(value) + " misses 1.178980 by more than 5e-6";
        if (dt >= 1.0) return "took " + std::to_string(dt) + " s";
        return "";
    }});

    // 2. Half-point identity across the even lineup.
    criteria.push_back({2, [&]() -> std::string {
        const std::vector<std::string> ids{"bspline:2", "bspline:4",     "bspline:6",
                                           "sinc",      "bspline-cardinal:4"};
        for (const std::string& id : ids) {
            const gw::HalfPointCheck c = gw::half_point_identity_check(cached_kernel(id));
            if (std::abs(c.difference) > 1e-8)
                return id + " difference " + std::to_string(c.difference);
        }
        // The inverse-quadratic cardinal, built through the library.
        const gw::Kernel invmq_card =
            gw::as_kernel(gw::cardinal_from_generator(gw::make_invmq_generator(1.0)));
        const gw::HalfPointCheck ci = gw::half_point_identity_check(invmq_card);
        if (std::abs(ci.difference) > 1e-8)
            return "invmq:1 cardinal difference " + std::to_string(ci.difference);

        const gw::HalfPointCheck cs = gw::half_point_identity_check(cached_kernel("sinc"));
        if (std::abs(cs.series_value - kFourOverPi) > 1e-9)
            return "sinc series side misses 4/pi";
        if (std::abs(cs.doubled_kernel_value - kFourOverPi) > 1e-9)
            return "sinc kernel side misses 4/pi";
        return "";
    }});

    // 3. Detector verdicts with verified witnesses, under 10 s per kernel.
    criteria.push_back({3, [&]() -> std::string {
        {
            const gw::OvershootReport rep = gw::detect_overshoot(cached_kernel("bspline:2"));
            scans["bspline:2"] = rep;
            if (rep.classification != gw::Classification::none_exact)
                return "bspline:2 classified " + gw::to_string(rep.classification);
        }
        const std::vector<std::string> strong_ids{"sinc", "bspline-cardinal:4",
                                                  "bspline-cardinal:6", "bspline-cardinal:8",
                                                  "bspline-cardinal:10"};
        for (const std::string& id : strong_ids) {
            const gw::Kernel& k = cached_kernel(id); // construction outside the scan timer
            const auto t0 = std::chrono::steady_clock::now();
            const gw::OvershootReport rep = gw::detect_overshoot(k);
            const double dt = seconds_since(t0);
            scans[id] = rep;
            if (rep.classification != gw::Classification::strong)
                return id + " classified " + gw::to_string(rep.classification);
            if (!rep.left || !rep.right) return id + " missing a witness";
            if (!(rep.left->sum_value < -rep.left->error_bound))
                return id + " left witness not negative beyond its bound";
            if (!(rep.right->sum_value < -rep.right->error_bound))
                return id + " right witness not negative beyond its bound";
            if (dt >= 10.0) return id + " scan took " + std::to_string(dt) + " s";
        }
        return "";
    }});

    // 4. Even symmetry: reflected right witnesses verify on the left.
    criteria.push_back({4, [&]() -> std::string {
        if (scans.empty()) return "no scan reports available (criterion 3 did not run)";
        for (const auto& [id, rep] : scans) {
            const gw::Kernel& k = cached_kernel(id);
            if (!k.even || !rep.right) continue;
            const double y = gw::even_reflection_witness(rep.right->location);
            const gw::LatticeSumResult lo = gw::one_sided_sum_lower(k, y);
            if (!(lo.value < -lo.error_bound))
                return id + " reflected point fails as a left witness (sum " +
                       std::to_string(lo.value) + ")";
            if (std::abs(lo.value - rep.right->sum_value) >
                1e-8 + lo.error_bound + rep.right->error_bound)
                return id + " reflected sum does not match the right witness sum";
        }
        return "";
    }});

    // 5. Jump-response linearity under 100 random step pairs per kernel.
    criteria.push_back({5, [&]() -> std::string {
        const std::vector<std::string> ids{"bspline:2", "bspline:3", "bspline:4",
                                           "bspline:6", "sinc"};
        std::mt19937_64 rng(0x6762627377ULL);
        std::uniform_real_distribution<double> limit(-3.0, 3.0);
        std::uniform_real_distribution<double> shift(-2.0, 2.0);
        std::uniform_real_distribution<double> point(-6.0, 6.0);
        for (const std::string& id : ids) {
            const gw::Kernel& k = cached_kernel(id);
            for (int trial = 0; trial < 100; ++trial) {
                const gw::JumpSpec f{limit(rng), limit(rng)};
                const gw::JumpSpec g{limit(rng), limit(rng)};
                const double c = shift(rng);
                const double t = point(rng);
                const double Gf = gw::gibbs_function(k, f, t);
                const double Gg = gw::gibbs_function(k, g, t);
                const double Gconst = gw::gibbs_function(k, {c, c}, t);
                const double Gshift =
                    gw::gibbs_function(k, {f.left_limit + c, f.right_limit + c}, t);
                const double Gsum = gw::gibbs_function(
                    k, {f.left_limit + g.left_limit, f.right_limit + g.right_limit}, t);
                const double Gdiff = gw::gibbs_function(
                    k, {f.left_limit - g.left_limit, f.right_limit - g.right_limit}, t);
                if (std::abs(Gconst - c) > 1e-9)
                    return id + " constant reproduction off by " + std::to_string(Gconst - c);
                if (std::abs(Gshift - (Gf + c)) > 1e-9)
                    return id + " constant shift violated";
                if (std::abs(Gsum - (Gf + Gg)) > 1e-9) return id + " additivity violated";
                if (std::abs(Gdiff - (Gf - Gg)) > 1e-9) return id + " subtraction violated";
            }
        }
        return "";
    }});

    // 6. Partition property <-> continuity convergence; the Gaussian cardinal
    //    fails the partition test and is refused by the detector.
    criteria.push_back({6, [&]() -> std::string {
        const std::vector<std::string> ids{"bspline:2", "bspline:3", "bspline:4",
                                           "bspline:6", "bspline-cardinal:4"};
        const gw::SampledSignal cosf = gw::make_cos_signal();
        for (const std::string& id : ids) {
            const gw::Kernel& k = cached_kernel(id);
            const double pou = gw::partition_of_unity_defect(k, gw::unit_grid(64));
            if (!(pou < 1e-8))
                return id + " partition defect " + std::to_string(pou) + " not below 1e-8";
            const auto rows =
                gw::continuity_convergence_check(k, cosf, 0.3, {2.0, 8.0, 32.0, 128.0});
            for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
                if (!(rows[i + 1].abs_error < rows[i].abs_error))
                    return id + " continuity errors not decreasing at W=" +
                           std::to_string(rows[i + 1].W);
            }
        }
        const gw::CardinalFunction gauss =
            gw::cardinal_from_generator(gw::make_gaussian_generator(1.0));
        if (!(gauss.diagnostics.pou_defect > 1e-4))
            return "gaussian cardinal partition defect unexpectedly small: " +
                   std::to_string(gauss.diagnostics.pou_defect);
        const int rc = run_cli("scan --kernel gaussian-cardinal:1");
        if (rc != 2) return "scan gaussian-cardinal:1 exited " + std::to_string(rc) +
                            " instead of 2";
        return "";
    }});

    // 7. Cardinal constructions: defect tolerance met; hat stays a delta;
    //    the cubic coefficient matches both sqrt(3) and a dense Toeplitz solve.
    criteria.push_back({7, [&]() -> std::string {
        const struct {
            const char* label;
            gw::Generator gen;
        } cases[] = {
            {"bspline:2", gw::make_bspline_generator(2)},
            {"bspline:4", gw::make_bspline_generator(4)},
            {"bspline:10", gw::make_bspline_generator(10)},
            {"invmq:1", gw::make_invmq_generator(1.0)},
        };
        for (const auto& c : cases) {
            const gw::CardinalFunction L = gw::cardinal_from_generator(c.gen);
            if (!(L.diagnostics.interpolation_defect <= 1e-8))
                return std::string(c.label) + " defect " +
                       std::to_string(L.diagnostics.interpolation_defect);
            if (std::string(c.label) == "bspline:2") {
                double worst = 0.0;
                for (Eigen::Index i = 0; i < L.coefficients.size(); ++i) {
                    const int n = int(i) - L.period / 2;
                    worst = std::max(worst,
                                     std::abs(L.coefficients(i) - (n == 0 ? 1.0 : 0.0)));
                }
                if (worst > 1e-12)
                    return "hat coefficients deviate from delta by " + std::to_string(worst);
            }
            if (std::string(c.label) == "bspline:4") {
                const double c0 = L.coefficients(L.period / 2);
                if (std::abs(c0 - std::sqrt(3.0)) > 1e-8)
                    return "cubic c_0 = " + std::to_string(c0) + " misses sqrt(3)";
                // Independent oracle: dense LU on an 81-point section of the
                // interpolation system.
                const int half = 40, dim = 2 * half + 1;
                Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
                for (int j = 0; j < dim; ++j)
                    for (int kk = 0; kk < dim; ++kk)
                        A(j, kk) = c.gen.evaluate(double(j - kk));
                Eigen::VectorXd e0 = Eigen::VectorXd::Zero(dim);
                e0(half) = 1.0;
                const Eigen::VectorXd x = A.partialPivLu().solve(e0);
                if (std::abs(x(half) - c0) > 1e-10)
                    return "cubic c_0 disagrees with the Toeplitz oracle by " +
                           std::to_string(x(half) - c0);
            }
        }
        return "";
    }});

    // 8. Half-point gap to sinc decreases strictly across spline orders.
    criteria.push_back({8, [&]() -> std::string {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = gw::family_sweep(
            "bspline", {3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0});
        const double dt = seconds_since(t0);
        if (rows.size() != 8) return "expected 8 rows";
        for (const auto& r : rows)
            if (!r.error.empty()) return "order " + r.parameter + " errored: " + r.error;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            if (!(rows[i + 1].gap_to_sinc < rows[i].gap_to_sinc))
                return "gap not strictly decreasing at order " + rows[i + 1].parameter;
        }
        if (!(rows.back().gap_to_sinc < 0.05))
            return "final gap " + std::to_string(rows.back().gap_to_sinc);
        if (dt >= 60.0) return "sweep took " + std::to_string(dt) + " s";
        return "";
    }});

    // 9. Rescaled series of sgn equals the reduced jump response on the grid.
    criteria.push_back({9, [&]() -> std::string {
        const gw::SampledSignal sgn = gw::make_sign_signal();
        const Eigen::ArrayXd grid = gw::default_xi_grid();
        for (const std::string& id : {"bspline:2", "bspline:3", "bspline:4"}) {
            const gw::Kernel& k = cached_kernel(id);
            for (const double N : {1.0, 10.0, 100.0}) {
                double worst = 0.0;
                for (Eigen::Index i = 0; i < grid.size(); ++i) {
                    const double xi = grid(i);
                    worst = std::max(worst, std::abs(gw::rescaled_series(k, sgn, N, xi) -
                                                     gw::reduced_gibbs(k, xi)));
                }
                if (worst > 1e-9)
                    return id + " at N=" + std::to_string(N) + " deviates by " +
                           std::to_string(worst);
            }
        }
        return "";
    }});

    // 10. Byte-identical CLI output across repeated runs.
    criteria.push_back({10, [&]() -> std::string {
        const std::vector<std::pair<std::string, std::string>> jobs = {
            {"scan", "scan --kernel sinc"},
            {"cardinal", "cardinal --generator bspline:4 --coefficients " +
                             (g_dir / "det_coeff_REP.csv").string()},
            {"converge", "converge --kernel bspline:3 --signal ramp --mode probe"},
            {"sweep", "sweep --family bspline --params 3:5"},
            {"gibbs-constant", "gibbs-constant --xi 1"},
        };
        for (const auto& [label, base] : jobs) {
            std::string text[2];
            for (int rep = 0; rep < 2; ++rep) {
                std::string cmd = base;
                const std::string marker = "REP";
                if (const auto pos = cmd.find(marker); pos != std::string::npos)
                    cmd.replace(pos, marker.size(), std::to_string(rep));
                const std::string out = "det_" + label + "_" + std::to_string(rep) + ".txt";
                const int rc = run_cli(cmd, out);
                if (rc != 0) return label + " exited " + std::to_string(rc);
                text[rep] = slurp(g_dir / out);
                if (text[rep].empty()) return label + " produced no output";
            }
            if (text[0] != text[1]) return label + " output differs between runs";
        }
        const std::string c0 = slurp(g_dir / "det_coeff_0.csv");
        const std::string c1 = slurp(g_dir / "det_coeff_1.csv");
        if (c0.empty() || c0 != c1) return "coefficient CSV differs between runs";
        return "";
    }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string reason;
        try {
            reason = c.body();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        if (reason.empty()) {
            std::printf("criterion %d: PASS\n", c.number);
        } else {
            std::printf("criterion %d: FAIL — %s\n", c.number, reason.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
