#pragma once

#include <string>
#include <vector>

#include "gibbsw/cardinal.hpp"
#include "gibbsw/kernel.hpp"
#include "gibbsw/sampling.hpp"

namespace gw {

/** Kernel identifiers:
 *    sinc                 cardinal sine
 *    bspline:n            central B-spline M_n (n >= 1)
 *    invmq:c              1/(x^2 + c^2) used directly as a kernel
 *    poisson              1/(x^2 + 1) used directly as a kernel
 *    gaussian:a           exp(-a x^2) used directly as a kernel
 *    bspline-cardinal:n   cardinal interpolant built from M_n
 *    gaussian-cardinal:a  cardinal interpolant built from exp(-a x^2)
 *  Cardinal ids run the construction with the supplied config.  Unknown ids
 *  throw std::invalid_argument. */
Kernel kernel_from_id(const std::string& id, const CardinalConfig& config = {});

/** Generator identifiers: bspline:n, invmq:c, poisson, gaussian:a. */
Generator generator_from_id(const std::string& id);

/** Signal identifiers: sgn, cos, ramp. */
SampledSignal signal_from_id(const std::string& id);

std::vector<std::string> known_kernel_ids();
std::vector<std::string> known_generator_ids();
std::vector<std::string> known_signal_ids();

} // namespace gw
