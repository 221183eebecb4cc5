#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mhz/numcore.hpp"

using mhz::cplx;

// Reference values frozen from a 30-digit arbitrary-precision run (mpmath);
// comments give the target quantity, tolerances the double-precision budget.

static double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

TEST_CASE("gamma matches high-precision references") {
    CHECK(rel(mhz::gamma(cplx(3.7, 0.0)), cplx(4.1706517837966031654, 0.0)) <
          1e-12);
    CHECK(rel(mhz::gamma(cplx(12.5, 0.0)), cplx(136843365.46556585726, 0.0)) <
          1e-12);
    // tiny modulus at tall arguments (|Gamma| ~ e^{-pi t / 2})
    const cplx ref_tall(-1.4459762901176066496e-10, -5.5229099255553257535e-10);
    CHECK(std::abs(mhz::gamma(cplx(0.5, 14.1347)) - ref_tall) <
          1e-12 * std::abs(ref_tall));
    // reflection region
    const cplx ref_left(0.019977353763679218151, -0.088828834683559939283);
    CHECK(std::abs(mhz::gamma(cplx(-2.3, 1.1)) - ref_left) <
          1e-11 * std::abs(ref_left));
}

TEST_CASE("gamma pole detection and guarding") {
    CHECK(mhz::near_gamma_pole(cplx(0.0, 0.0)));
    CHECK(mhz::near_gamma_pole(cplx(-3.0, 1e-13)));
    CHECK(!mhz::near_gamma_pole(cplx(-3.5, 0.0)));
    CHECK(!mhz::near_gamma_pole(cplx(2.0, 0.0)));  // positive integers are fine
    CHECK_THROWS_AS((void)mhz::gamma(cplx(0.0, 0.0)), mhz::pole_error);
    CHECK_THROWS_AS((void)mhz::gamma(cplx(-2.0, 0.0)), mhz::pole_error);
    CHECK_THROWS_AS((void)mhz::log_gamma(cplx(-1.0, 0.0)), mhz::pole_error);
}

TEST_CASE("log_gamma is consistent under exponentiation") {
    // branch offsets in Im(log_gamma) are allowed; exp must land on Gamma
    const cplx pts[] = {cplx(0.7, 0.3), cplx(3.2, -4.0), cplx(0.5, 14.1347),
                        cplx(6.0, 40.0)};
    for (const cplx z : pts) {
        const cplx via_log = std::exp(mhz::log_gamma(z));
        CHECK(std::abs(via_log - mhz::gamma(z)) <=
              1e-11 * std::abs(mhz::gamma(z)));
    }
    // real part against the frozen reference at 10+100i (branch-free)
    CHECK(mhz::log_gamma(cplx(10.0, 100.0)).real() ==
          doctest::Approx(-112.39736554967237893).epsilon(1e-12));
}

TEST_CASE("beta_factor equals the gamma ratio where both are computable") {
    const cplx z(1.2, 0.5), s(3.4, 0.0);
    const cplx direct =
        mhz::gamma(z) * mhz::gamma(s - z) / mhz::gamma(s);
    CHECK(std::abs(mhz::beta_factor(z, s) - direct) < 1e-11 * std::abs(direct));
    // huge intermediate magnitudes must cancel to something finite
    const cplx tall = mhz::beta_factor(cplx(0.5, 40.0), cplx(1.5, 80.0));
    CHECK(mhz::is_finite(tall));
    // s at a Gamma pole: 1/Gamma(s) = 0 wins
    CHECK(mhz::beta_factor(cplx(0.25, 0.0), cplx(0.0, 0.0)) == cplx(0.0, 0.0));
    CHECK_THROWS_AS((void)mhz::beta_factor(cplx(0.0, 0.0), cplx(2.5, 0.0)),
                    mhz::pole_error);
}

TEST_CASE("digamma references") {
    CHECK(mhz::digamma(1.0) ==
          doctest::Approx(-0.57721566490153286061).epsilon(1e-13));
    CHECK(mhz::digamma(0.25) ==
          doctest::Approx(-4.2274535333762654081).epsilon(1e-13));
    CHECK(mhz::digamma(7.5) ==
          doctest::Approx(1.9467574842460867881).epsilon(1e-13));
    CHECK_THROWS_AS((void)mhz::digamma(0.0), mhz::pole_error);
    CHECK_THROWS_AS((void)mhz::digamma(-2.0), mhz::pole_error);
}

TEST_CASE("smooth cutoff: plateau, bridge, support") {
    const mhz::smooth_cutoff phi;
    CHECK(phi(0.0) == 1.0);
    CHECK(phi(2.0) == 1.0);
    CHECK(phi(3.0) == 0.0);
    CHECK(phi(5.0) == 0.0);
    CHECK(phi(2.5) == doctest::Approx(0.5).epsilon(1e-14));  // bridge midpoint
    CHECK(phi(2.2) == doctest::Approx(0.97702263008997438505).epsilon(1e-13));
    // monotone non-increasing across the bridge
    double prev = 1.0;
    for (int k = 0; k <= 100; ++k) {
        const double v = phi(2.0 + 0.01 * k);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
    // derivative vs central difference inside the bridge, zero outside
    const double h = 1e-6;
    for (const double x : {2.1, 2.5, 2.9}) {
        const double cd = (phi(x + h) - phi(x - h)) / (2.0 * h);
        CHECK(phi.derivative(x) == doctest::Approx(cd).epsilon(1e-6));
    }
    CHECK(phi.derivative(1.0) == 0.0);
    CHECK(phi.derivative(3.5) == 0.0);
    CHECK_THROWS_AS(mhz::smooth_cutoff(3.0, 2.0), mhz::domain_error);
    CHECK_THROWS_AS(mhz::smooth_cutoff(0.0, 1.0), mhz::domain_error);
}

TEST_CASE("cutoff Mellin transform") {
    // integral_0^inf x^(z-1) phi(x) dx; frozen quadrature references
    CHECK(mhz::phi_mellin(cplx(1.0, 0.0)).real() ==
          doctest::Approx(2.5).epsilon(1e-9));
    CHECK(mhz::phi_mellin(cplx(2.0, 0.0)).real() ==
          doctest::Approx(3.1384593550855411089).epsilon(1e-9));
    const cplx ref(0.11486984806210453823, 0.49644648551032894939);
    CHECK(std::abs(mhz::phi_mellin(cplx(0.5, 3.0)) - ref) < 1e-8);
    CHECK_THROWS_AS((void)mhz::phi_mellin(cplx(0.0, 0.0)), mhz::domain_error);
    CHECK_THROWS_AS((void)mhz::phi_mellin(cplx(-1.0, 2.0)), mhz::domain_error);
}

TEST_CASE("quadrature kernels") {
    const auto f_exp = [](double x) { return cplx(std::exp(x), 0.0); };
    const double e1 = std::exp(1.0) - 1.0;
    CHECK(mhz::integrate_adaptive(f_exp, 0.0, 1.0, 1e-12).real() ==
          doctest::Approx(e1).epsilon(1e-12));

    const auto f_sin = [](double x) { return cplx(std::sin(x), 0.0); };
    CHECK(mhz::integrate_gauss(f_sin, 0.0, std::numbers::pi, 16).real() ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mhz::integrate_gauss(f_sin, 0.0, std::numbers::pi, 32).real() ==
          doctest::Approx(2.0).epsilon(1e-13));

    const auto f_cos = [](double x) { return cplx(std::cos(x), 0.0); };
    const mhz::panel_result pr = mhz::integrate_panels(f_cos, 0.0, 10.0);
    CHECK(pr.value.real() == doctest::Approx(std::sin(10.0)).epsilon(1e-12));
    CHECK(pr.err_estimate < 1e-10);
    CHECK(pr.err_estimate >= 0.0);

    // oscillatory complex integrand: int_0^1 e^{i a x} dx = (e^{i a} - 1)/(i a)
    const double a = 7.0;
    const auto f_osc = [&](double x) {
        return std::exp(cplx(0.0, a * x));
    };
    const cplx want = (std::exp(cplx(0.0, a)) - 1.0) / cplx(0.0, a);
    CHECK(std::abs(mhz::integrate_panels(f_osc, 0.0, 1.0).value - want) < 1e-12);
}
