#pragma once

#include <Eigen/Core>

#include "gibbsw/kernel.hpp"

namespace gw {

/** sum_{n >= 0} phi(t - n), truncated/accelerated per the kernel's decay
 *  class or override.  Throws TruncationBudgetError if the target absolute
 *  error is unreachable within policy.max_radius. */
LatticeSumResult one_sided_sum_lower(const Kernel& kernel, double t,
                                     const TruncationPolicy& policy = {});

/** sum_{n < 0} phi(t - n); see one_sided_sum_lower. */
LatticeSumResult one_sided_sum_upper(const Kernel& kernel, double t,
                                     const TruncationPolicy& policy = {});

/** sum over all n of phi(t - n).  Summation order on generic paths is
 *  ascending |n| with the negative index first on ties. */
LatticeSumResult full_lattice_sum(const Kernel& kernel, double t,
                                  const TruncationPolicy& policy = {});

/** max over the grid of |full_lattice_sum(t) - 1|: how far the integer
 *  translates are from a partition of unity. */
double partition_of_unity_defect(const Kernel& kernel,
                                 const Eigen::Ref<const Eigen::ArrayXd>& grid,
                                 const TruncationPolicy& policy = {});

/** {j/m : j = 0..m-1}, the default grid for partition-of-unity checks. */
Eigen::ArrayXd unit_grid(int m = 64);

} // namespace gw
