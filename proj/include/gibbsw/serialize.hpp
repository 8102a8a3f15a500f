#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gibbsw/cardinal.hpp"
#include "gibbsw/gibbs.hpp"
#include "gibbsw/sampling.hpp"

namespace gw {

/** Shortest exact decimal for a double: printf %.17g. */
std::string format_double(double x);

/** OvershootReport as a JSON object with exactly the fields
 *  classification, left_witness, left_sum_value, right_witness,
 *  right_sum_value, max_gibbs_value, min_gibbs_value (absent witnesses are
 *  null), two-space indent, trailing newline. */
std::string report_to_json(const OvershootReport& report);

/** Cardinal diagnostics as JSON (generator, period, eval_radius,
 *  interpolation_defect, pou_defect, symbol_min, truncation_radius,
 *  tail_bound). */
std::string diagnostics_to_json(const CardinalFunction& L);

// CSV writers: header line then rows, LF line endings, %.17g numerics.
void write_probe_csv(std::ostream& os, const std::vector<ProbeRow>& rows);
void write_continuity_csv(std::ostream& os, const std::vector<ContinuityRow>& rows);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_coefficients_csv(std::ostream& os, const CardinalFunction& L);

} // namespace gw
