#pragma once

#include <stdexcept>
#include <string>

namespace gw {

/** Raised when inputs violate a documented precondition (e.g. running the
 *  overshoot scan on a kernel whose lattice sums do not form a partition of
 *  unity, or probing a signal with no jump metadata).  CLI maps this to
 *  exit code 2. */
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Raised when a truncated sum cannot meet the requested absolute error
 *  within the radius budget of the active TruncationPolicy.  Carries the
 *  bound that was achievable at the budget edge.  CLI maps this to exit
 *  code 3. */
class TruncationBudgetError : public std::runtime_error {
public:
    TruncationBudgetError(const std::string& msg, double achieved, long long radius)
        : std::runtime_error(msg), achieved_bound(achieved), radius_used(radius) {}
    double achieved_bound;
    long long radius_used;
};

/** Raised when the interpolation symbol has (near-)zeros below the
 *  invertibility floor, so the cardinal construction would divide by a
 *  value indistinguishable from zero.  CLI maps this to exit code 3. */
class SymbolNotInvertibleError : public std::runtime_error {
public:
    SymbolNotInvertibleError(const std::string& msg, double min_mod)
        : std::runtime_error(msg), min_modulus(min_mod) {}
    double min_modulus;
};

/** Raised when an iterative construction exhausts its resolution budget with
 *  the accuracy target still unmet.  Carries the best defect achieved. */
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_defect(achieved) {}
    double achieved_defect;
};

} // namespace gw
