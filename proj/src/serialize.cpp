#include "gibbsw/serialize.hpp"

#include <cstdio>

#include "json.hpp"

namespace gw {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string report_to_json(const OvershootReport& report) {
    nlohmann::ordered_json j;
    j["classification"] = to_string(report.classification);
    if (report.left) {
        j["left_witness"] = report.left->location;
        j["left_sum_value"] = report.left->sum_value;
    } else {
        j["left_witness"] = nullptr;
        j["left_sum_value"] = nullptr;
    }
    if (report.right) {
        j["right_witness"] = report.right->location;
        j["right_sum_value"] = report.right->sum_value;
    } else {
        j["right_witness"] = nullptr;
        j["right_sum_value"] = nullptr;
    }
    j["max_gibbs_value"] = report.max_gibbs_value;
    j["min_gibbs_value"] = report.min_gibbs_value;
    return j.dump(2) + "\n";
}

std::string diagnostics_to_json(const CardinalFunction& L) {
    nlohmann::ordered_json j;
    j["generator"] = L.generator.name;
    j["period"] = L.diagnostics.period;
    j["eval_radius"] = L.eval_radius;
    j["interpolation_defect"] = L.diagnostics.interpolation_defect;
    j["pou_defect"] = L.diagnostics.pou_defect;
    j["symbol_min"] = L.diagnostics.symbol_min;
    j["truncation_radius"] = L.diagnostics.truncation_radius;
    j["tail_bound"] = L.diagnostics.tail_bound;
    return j.dump(2) + "\n";
}

void write_probe_csv(std::ostream& os, const std::vector<ProbeRow>& rows) {
    os << "N,sup_error\n";
    for (const auto& r : rows)
        os << format_double(r.N) << ',' << format_double(r.sup_error) << '\n';
}

void write_continuity_csv(std::ostream& os, const std::vector<ContinuityRow>& rows) {
    os << "W,abs_error\n";
    for (const auto& r : rows)
        os << format_double(r.W) << ',' << format_double(r.abs_error) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "parameter,L_half,gap_to_sinc,classification,max_gibbs_value\n";
    for (const auto& r : rows) {
        os << r.parameter << ',' << format_double(r.L_half) << ','
           << format_double(r.gap_to_sinc) << ','
           << (r.error.empty() ? to_string(r.classification) : "error") << ','
           << format_double(r.max_gibbs_value) << '\n';
    }
}

void write_coefficients_csv(std::ostream& os, const CardinalFunction& L) {
    os << "n,c_n\n";
    const int half = L.period / 2;
    for (int i = 0; i < L.period; ++i)
        os << (i - half) << ',' << format_double(L.coefficients[i]) << '\n';
}

} // namespace gw
