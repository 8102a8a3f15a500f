#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gibbsw/cardinal.hpp"
#include "gibbsw/errors.hpp"
#include "gibbsw/gibbs.hpp"
#include "gibbsw/registry.hpp"
#include "gibbsw/sampling.hpp"
#include "gibbsw/serialize.hpp"

namespace {

/** "a,b,c" or "a:b" (inclusive integer range) -> values. */
std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto pos = text.find(':');
        const long a = std::stol(text.substr(0, pos));
        const long b = std::stol(text.substr(pos + 1));
        if (b < a) throw std::invalid_argument("range '" + text + "' is empty");
        for (long v = a; v <= b; ++v) out.push_back(static_cast<double>(v));
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
    os << content;
}

struct CommonNumerics {
    double target_abs_error = 1e-10;
    long long max_radius = 1000000;
    int period = 4096;
    int eval_radius = 512;
    int max_period = 65536;
    double defect_tolerance = 1e-8;
    double symbol_floor = 1e-8;

    gw::TruncationPolicy policy() const { return {target_abs_error, max_radius}; }
    gw::CardinalConfig cardinal() const {
        gw::CardinalConfig c;
        c.period = period;
        c.eval_radius = eval_radius;
        c.max_period = max_period;
        c.defect_tolerance = defect_tolerance;
        c.symbol_floor = symbol_floor;
        c.policy = policy();
        return c;
    }
    void attach(CLI::App* cmd, bool with_cardinal) {
        cmd->add_option("--target-error,--target_error", target_abs_error,
                        "absolute truncation target for lattice sums (default 1e-10)");
        cmd->add_option("--max-radius,--max_radius", max_radius,
                        "truncation radius budget (default 1e6)");
        if (with_cardinal) {
            cmd->add_option("--P", period, "interpolation period / coefficient count (default 4096)");
            cmd->add_option("--R", eval_radius, "cardinal evaluation radius (default 512)");
            cmd->add_option("--max-P,--max_P", max_period,
                            "cap for automatic period doubling (default 65536)");
            cmd->add_option("--defect-tolerance,--defect_tolerance", defect_tolerance,
                            "interpolation defect tolerance (default 1e-8)");
            cmd->add_option("--symbol-floor,--symbol_floor", symbol_floor,
                            "symbol invertibility floor (default 1e-8)");
        }
    }
};

struct ScanFlags {
    double scan_radius = 8.0;
    double grid_step = 1.0 / 64.0;
    double refine_tolerance = 1e-9;
    double pou_tolerance = 1e-6;

    gw::ScanConfig config(const gw::TruncationPolicy& policy) const {
        gw::ScanConfig s;
        s.scan_radius = scan_radius;
        s.grid_step = grid_step;
        s.refine_tolerance = refine_tolerance;
        s.pou_tolerance = pou_tolerance;
        s.sum_policy = policy;
        return s;
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--scan-radius,--scan_radius", scan_radius,
                        "scan range half-width (default 8)");
        cmd->add_option("--grid-step,--grid_step", grid_step,
                        "scan grid spacing (default 1/64)");
        cmd->add_option("--refine-tolerance,--refine_tolerance", refine_tolerance,
                        "witness refinement interval width (default 1e-9)");
        cmd->add_option("--pou-tolerance,--pou_tolerance", pou_tolerance,
                        "partition-of-unity gate (default 1e-6)");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"gibbsw: jump responses of generalized sampling series -- "
                 "overshoot scans, cardinal interpolants, convergence tables"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "classify the overshoot of a kernel's jump response");
    std::string scan_kernel, scan_output;
    scan->add_option("--kernel", scan_kernel, "kernel id (see README)")->required();
    scan->add_option("--output,-o", scan_output, "write JSON here instead of stdout");
    CommonNumerics scan_num;
    ScanFlags scan_flags;
    scan_num.attach(scan, true);
    scan_flags.attach(scan);

    // cardinal
    auto* cardinal = app.add_subcommand("cardinal", "build a cardinal interpolant from a generator");
    std::string card_generator, card_coeffs, card_output;
    cardinal->add_option("--generator", card_generator, "generator id")->required();
    cardinal->add_option("--coefficients,-c", card_coeffs,
                         "also write the coefficient CSV to this path");
    cardinal->add_option("--output,-o", card_output, "write diagnostics JSON here instead of stdout");
    CommonNumerics card_num;
    card_num.attach(cardinal, true);

    // converge
    auto* converge = app.add_subcommand("converge", "convergence tables for sampling series");
    std::string conv_kernel, conv_signal, conv_mode = "probe", conv_output;
    std::string conv_N = "4,16,64,256", conv_W = "2,8,32,128";
    double conv_t = 0.3;
    converge->add_option("--kernel", conv_kernel, "kernel id")->required();
    converge->add_option("--signal", conv_signal, "signal id (sgn, cos, ramp)")->required();
    converge->add_option("--mode", conv_mode, "probe (jump zoom) or continuity")
        ->check(CLI::IsMember({"probe", "continuity"}));
    converge->add_option("--N", conv_N, "scales for probe mode (default 4,16,64,256)");
    converge->add_option("--W", conv_W, "scales for continuity mode (default 2,8,32,128)");
    converge->add_option("--t", conv_t, "continuity evaluation point (default 0.3)");
    converge->add_option("--output,-o", conv_output, "write CSV here instead of stdout");
    CommonNumerics conv_num;
    conv_num.attach(converge, true);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "cardinal family sweep with per-row classification");
    std::string sweep_family, sweep_params, sweep_output;
    sweep->add_option("--family", sweep_family, "bspline or invmq")->required();
    sweep->add_option("--params", sweep_params,
                      "comma list or a:b range (defaults: bspline 3:10, invmq 1,2,4,8)");
    sweep->add_option("--output,-o", sweep_output, "write CSV here instead of stdout");
    CommonNumerics sweep_num;
    ScanFlags sweep_flags;
    sweep_num.attach(sweep, true);
    sweep_flags.attach(sweep);

    // gibbs-constant
    auto* gconst = app.add_subcommand("gibbs-constant",
                                      "classical Fourier jump response (2/pi) Si(pi xi)");
    double gc_xi = 1.0;
    std::string gc_output;
    gconst->add_option("--xi", gc_xi, "evaluation point")->required();
    gconst->add_option("--output,-o", gc_output, "write the value here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*scan) {
        const gw::Kernel k = gw::kernel_from_id(scan_kernel, scan_num.cardinal());
        const gw::OvershootReport rep =
            gw::detect_overshoot(k, scan_flags.config(scan_num.policy()));
        write_output(scan_output, gw::report_to_json(rep));
    } else if (*cardinal) {
        const gw::Generator gen = gw::generator_from_id(card_generator);
        const gw::CardinalFunction L =
            gw::cardinal_from_generator(gen, card_num.cardinal());
        if (!card_coeffs.empty()) {
            std::ostringstream os;
            gw::write_coefficients_csv(os, L);
            write_output(card_coeffs, os.str());
        }
        write_output(card_output, gw::diagnostics_to_json(L));
    } else if (*converge) {
        const gw::Kernel k = gw::kernel_from_id(conv_kernel, conv_num.cardinal());
        const gw::SampledSignal f = gw::signal_from_id(conv_signal);
        std::ostringstream os;
        if (conv_mode == "probe") {
            const auto rows = gw::convergence_probe(k, f, parse_list(conv_N),
                                                    gw::default_xi_grid(),
                                                    conv_num.policy());
            gw::write_probe_csv(os, rows);
        } else {
            const auto rows = gw::continuity_convergence_check(
                k, f, conv_t, parse_list(conv_W), conv_num.policy());
            gw::write_continuity_csv(os, rows);
        }
        write_output(conv_output, os.str());
    } else if (*sweep) {
        if (sweep_params.empty())
            sweep_params = sweep_family == "bspline" ? "3:10" : "1,2,4,8";
        const auto rows =
            gw::family_sweep(sweep_family, parse_list(sweep_params),
                             sweep_num.cardinal(),
                             sweep_flags.config(sweep_num.policy()));
        std::ostringstream os;
        gw::write_sweep_csv(os, rows);
        write_output(sweep_output, os.str());
    } else if (*gconst) {
        write_output(gc_output, gw::format_double(gw::fourier_gibbs_constant(gc_xi)) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gw::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const gw::TruncationBudgetError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const gw::SymbolNotInvertibleError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const gw::AccuracyError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
