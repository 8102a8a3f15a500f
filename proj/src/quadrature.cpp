#include "gibbsw/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gw {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (Kronrod abscissae with
// embedded 7-point Gauss rule; the classical double-precision constants).
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth) {
    const PanelResult p = gk15(f, a, b);
    if (p.err <= tol || depth >= 48) return p.kronrod;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, tol / 2, depth + 1) + adapt(f, c, b, tol / 2, depth + 1);
}

} // namespace

double integrate_gk15(const std::function<double(double)>& f, double a, double b,
                      double target_abs_error) {
    if (!(target_abs_error > 0.0))
        throw std::invalid_argument("integrate_gk15: target must be positive");
    if (a == b) return 0.0;
    return adapt(f, a, b, target_abs_error, 0);
}

} // namespace gw
