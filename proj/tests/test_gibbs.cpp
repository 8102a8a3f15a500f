#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "gibbsw/errors.hpp"
#include "gibbsw/gibbs.hpp"
#include "gibbsw/kernel.hpp"
#include "gibbsw/lattice.hpp"

namespace {

constexpr double kFourOverPi = 1.2732395447351627;

// Independently computed (40-digit arithmetic, golden-section refinement of
// the digamma closed form): the first minimum of the upper sinc sum on
// (0, infinity) and the induced extremum of the reduced jump response.
constexpr double kSincWitnessX = 0.417735568770087;
constexpr double kSincWitnessSum = -0.14114172788771427;
constexpr double kSincGibbsMax = 1.2822834557754285;

} // namespace

TEST_CASE("reduced jump response of sinc at the half points") {
    const gw::Kernel sinc = gw::make_sinc();
    CHECK(std::abs(gw::reduced_gibbs(sinc, 0.5) - kFourOverPi) < 1e-9);
    // At -1/2 the two one-sided sums are equal by symmetry, so the reduced
    // response vanishes.
    CHECK(std::abs(gw::reduced_gibbs(sinc, -0.5)) < 1e-11);
}

TEST_CASE("reduced jump response is antisymmetric about -1/2 for even kernels") {
    const gw::Kernel sinc = gw::make_sinc();
    for (const double x : {0.25, 0.7, 1.3, 3.1}) {
        CAPTURE(x);
        CHECK(std::abs(gw::reduced_gibbs(sinc, -x - 1.0) + gw::reduced_gibbs(sinc, x)) < 1e-10);
    }
    const gw::Kernel m4 = gw::make_bspline(4);
    for (const double x : {0.25, 0.7, 1.3}) {
        CHECK(std::abs(gw::reduced_gibbs(m4, -x - 1.0) + gw::reduced_gibbs(m4, x)) < 1e-13);
    }
}

TEST_CASE("jump response is the declared combination of one-sided sums") {
    const gw::Kernel m3 = gw::make_bspline(3);
    const gw::JumpSpec jump{2.0, 5.0};
    const double t = 0.3;
    const double lo = gw::one_sided_sum_lower(m3, t).value;
    const double up = gw::one_sided_sum_upper(m3, t).value;
    CHECK(gw::gibbs_function(m3, jump, t) ==
          doctest::Approx(5.0 * lo + 2.0 * up).epsilon(1e-15));

    // Equal limits reproduce the constant: the partition property in disguise.
    const gw::JumpSpec flat{3.25, 3.25};
    for (const double s : {-1.7, 0.45, 2.2}) {
        CHECK(std::abs(gw::gibbs_function(m3, flat, s) - 3.25) < 1e-13);
    }
}

TEST_CASE("half-point identity for even partition kernels") {
    const gw::HalfPointCheck sinc_check = gw::half_point_identity_check(gw::make_sinc());
    CHECK(std::abs(sinc_check.difference) < 1e-10);
    CHECK(std::abs(sinc_check.series_value - kFourOverPi) < 1e-9);
    CHECK(std::abs(sinc_check.doubled_kernel_value - kFourOverPi) < 1e-12);

    for (const int n : {2, 3, 4, 5, 6}) {
        CAPTURE(n);
        const gw::HalfPointCheck c = gw::half_point_identity_check(gw::make_bspline(n));
        CHECK(std::abs(c.difference) < 1e-13);
    }
    // M2 pins the exact value: G(1/2) = 2 M2(1/2) = 1.
    CHECK(gw::half_point_identity_check(gw::make_bspline(2)).series_value ==
          doctest::Approx(1.0).epsilon(1e-14));

    gw::Kernel skew = gw::make_bspline(2);
    skew.even = false; // declaration is what the identity relies on
    CHECK_THROWS_AS((void)gw::half_point_identity_check(skew), gw::PreconditionError);
}

TEST_CASE("overshoot detection on sinc finds the strong phenomenon") {
    const gw::OvershootReport rep = gw::detect_overshoot(gw::make_sinc());
    CHECK(rep.classification == gw::Classification::strong);
    CHECK(gw::to_string(rep.classification) == "strong");
    REQUIRE(rep.right.has_value());
    REQUIRE(rep.left.has_value());

    CHECK(std::abs(rep.right->location - kSincWitnessX) < 1e-6);
    CHECK(std::abs(rep.right->sum_value - kSincWitnessSum) < 1e-9);
    CHECK(rep.right->sum_value < -rep.right->error_bound);

    // The deepest left witness is the reflection of the right one, with the
    // same sum value (one-sided sums of an even kernel trade places).
    CHECK(std::abs(rep.left->location - (-kSincWitnessX - 1.0)) < 1e-6);
    CHECK(std::abs(rep.left->sum_value - kSincWitnessSum) < 1e-9);
    CHECK(rep.left->sum_value < -rep.left->error_bound);

    CHECK(std::abs(rep.max_gibbs_value - kSincGibbsMax) < 1e-9);
    CHECK(std::abs(rep.min_gibbs_value + kSincGibbsMax) < 1e-9);
    CHECK(rep.pou_defect < 1e-9);
}

TEST_CASE("overshoot detection on M2 proves absence") {
    const gw::OvershootReport rep = gw::detect_overshoot(gw::make_bspline(2));
    CHECK(rep.classification == gw::Classification::none_exact);
    CHECK(gw::to_string(rep.classification) == "none-exact");
    CHECK(!rep.left.has_value());
    CHECK(!rep.right.has_value());
    CHECK(rep.max_gibbs_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.min_gibbs_value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("detector refuses kernels without the partition property") {
    // Raw Gaussian translates overshoot 1 by ~0.77: nowhere near a
    // partition of unity, and the jump-response reading is meaningless.
    gw::Kernel gauss;
    gauss.name = "gaussian:1";
    gauss.even = true;
    gauss.evaluate = [](double t) { return std::exp(-t * t); };
    gauss.decay = gw::SummableTail{[](double r) {
        const double rr = std::max(0.0, r);
        return 2.0 * std::exp(-rr * rr) / (1.0 - std::exp(-2.0 * rr) + 1e-300);
    }};
    CHECK_THROWS_AS((void)gw::detect_overshoot(gauss), gw::PreconditionError);
}

TEST_CASE("scan configuration is validated") {
    gw::ScanConfig bad;
    bad.scan_radius = -1.0;
    CHECK_THROWS_AS((void)gw::detect_overshoot(gw::make_sinc(), bad), std::invalid_argument);
    gw::ScanConfig bad2;
    bad2.grid_step = 0.0;
    CHECK_THROWS_AS((void)gw::detect_overshoot(gw::make_sinc(), bad2), std::invalid_argument);
}

TEST_CASE("classical Fourier jump response values") {
    struct Row {
        double xi;
        double value;
    };
    // (2/pi) Si(pi xi), 40-digit reference.
    constexpr Row rows[] = {
        {0.25, 0.48317905263849293}, {0.5, 0.87265429946060272},
        {1.0, 1.1789797444721673},   {1.5, 1.0239218965044222},
        {2.0, 0.90282333358028063},  {3.0, 1.066186475236544},
    };
    for (const Row& r : rows) {
        CAPTURE(r.xi);
        CHECK(std::abs(gw::fourier_gibbs_constant(r.xi) - r.value) < 1e-10);
        CHECK(std::abs(gw::fourier_gibbs_constant(-r.xi) + r.value) < 1e-10);
    }
    CHECK(gw::fourier_gibbs_constant(0.0) == 0.0);
}

TEST_CASE("reflection pairing helper") {
    CHECK(gw::even_reflection_witness(0.41) == doctest::Approx(-1.41).epsilon(1e-15));
    CHECK(gw::even_reflection_witness(gw::even_reflection_witness(0.41)) ==
          doctest::Approx(0.41).epsilon(1e-15));
}
