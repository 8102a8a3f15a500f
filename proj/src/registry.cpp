#include "gibbsw/registry.hpp"

#include <stdexcept>
#include <string>

namespace gw {

namespace {

struct ParsedId {
    std::string base;
    std::string param;
    bool has_param = false;
};

ParsedId split_id(const std::string& id) {
    const auto pos = id.find(':');
    if (pos == std::string::npos) return {id, "", false};
    return {id.substr(0, pos), id.substr(pos + 1), true};
}

int parse_int_param(const std::string& id, const std::string& s) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        if (v < 1 || v > 40) throw std::invalid_argument("out of range");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + id + "': order parameter must be an integer in 1..40");
    }
}

double parse_real_param(const std::string& id, const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        if (!(v > 0.0) || !(v <= 64.0)) throw std::invalid_argument("out of range");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + id + "': shape parameter must lie in (0, 64]");
    }
}

[[noreturn]] void unknown(const std::string& kind, const std::string& id,
                          const std::vector<std::string>& known) {
    std::string msg = "unknown " + kind + " '" + id + "'; known: ";
    for (std::size_t i = 0; i < known.size(); ++i)
        msg += (i ? ", " : "") + known[i];
    throw std::invalid_argument(msg);
}

/** Generator used directly as a kernel: honest but doomed for the overshoot
 *  scan (its translates are nowhere near a partition of unity), kept so that
 *  the refusal path is reachable from the CLI. */
Kernel raw_generator_kernel(const std::string& id, const Generator& gen) {
    Kernel k;
    k.name = id;
    k.even = true;
    k.evaluate = gen.evaluate;
    k.decay = gen.decay;
    return k;
}

} // namespace

Kernel kernel_from_id(const std::string& id, const CardinalConfig& config) {
    const ParsedId p = split_id(id);
    if (p.base == "sinc" && !p.has_param) return make_sinc();
    if (p.base == "bspline" && p.has_param)
        return make_bspline(parse_int_param(id, p.param));
    if (p.base == "invmq" && p.has_param)
        return raw_generator_kernel(id, make_invmq_generator(parse_real_param(id, p.param)));
    if (p.base == "poisson" && !p.has_param)
        return raw_generator_kernel(id, make_poisson_generator());
    if (p.base == "gaussian" && p.has_param)
        return raw_generator_kernel(id, make_gaussian_generator(parse_real_param(id, p.param)));
    if (p.base == "bspline-cardinal" && p.has_param) {
        Kernel k = as_kernel(cardinal_from_generator(
            make_bspline_generator(parse_int_param(id, p.param)), config));
        k.name = id;
        return k;
    }
    if (p.base == "gaussian-cardinal" && p.has_param) {
        Kernel k = as_kernel(cardinal_from_generator(
            make_gaussian_generator(parse_real_param(id, p.param)), config));
        k.name = id;
        return k;
    }
    unknown("kernel", id, known_kernel_ids());
}

Generator generator_from_id(const std::string& id) {
    const ParsedId p = split_id(id);
    if (p.base == "bspline" && p.has_param)
        return make_bspline_generator(parse_int_param(id, p.param));
    if (p.base == "invmq" && p.has_param)
        return make_invmq_generator(parse_real_param(id, p.param));
    if (p.base == "poisson" && !p.has_param) return make_poisson_generator();
    if (p.base == "gaussian" && p.has_param)
        return make_gaussian_generator(parse_real_param(id, p.param));
    unknown("generator", id, known_generator_ids());
}

SampledSignal signal_from_id(const std::string& id) {
    if (id == "sgn") return make_sign_signal();
    if (id == "cos") return make_cos_signal();
    if (id == "ramp") return make_ramp_signal();
    unknown("signal", id, known_signal_ids());
}

std::vector<std::string> known_kernel_ids() {
    return {"sinc",       "bspline:<n>",          "invmq:<c>",
            "poisson",    "gaussian:<alpha>",     "bspline-cardinal:<n>",
            "gaussian-cardinal:<alpha>"};
}

std::vector<std::string> known_generator_ids() {
    return {"bspline:<n>", "invmq:<c>", "poisson", "gaussian:<alpha>"};
}

std::vector<std::string> known_signal_ids() { return {"sgn", "cos", "ramp"}; }

} // namespace gw
