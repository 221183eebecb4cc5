#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "mhz/twist.hpp"

using mhz::cplx;
using mhz::hurwitz_param;
using mhz::multi_point;
using mhz::param_vector;

namespace {

const double pi = 3.14159265358979323846;

mhz::dirichlet_character nonprincipal(std::int64_t q) {
    for (const auto& chi : mhz::character_table(q))
        if (!chi.principal) return chi;
    throw std::runtime_error("no nonprincipal character");
}

// valid rational twist: alpha = 1/2, carrier mod 3, threshold = ceil(ln 21) = 4
mhz::twist_function rational_example() {
    return mhz::make_twist(hurwitz_param::rational(1, 2), nonprincipal(3), 21);
}

}  // namespace

TEST_CASE("transcendental tail is the pure phase e^{2 pi i k / q}") {
    const auto carrier = mhz::character_table(4).front();
    const auto tw = mhz::make_twist(hurwitz_param::transcendental(pi), carrier,
                                    20);  // threshold = ceil(ln 20) = 3
    CHECK(tw.tail_kind() == mhz::twist_function::kind::transcendental_tail);
    CHECK(tw.threshold() == 3);
    CHECK(std::abs(tw(0) - cplx(1.0, 0.0)) < 1e-15);  // free defaults
    CHECK(std::abs(tw(1) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(tw(2) - cplx(1.0, 0.0)) < 1e-15);
    for (std::int64_t k = 3; k < 40; ++k) {
        const cplx want = std::exp(cplx(0.0, 2.0 * pi * static_cast<double>(k % 4) / 4.0));
        CHECK(std::abs(tw(k) - want) < 1e-14);
    }
    CHECK_THROWS_AS((void)tw(-1), mhz::domain_error);
}

TEST_CASE("alternating transcendental twist: hand-checked weighted sum") {
    const auto carrier = mhz::character_table(2).front();
    std::map<std::int64_t, cplx> free_values{{0, cplx(1.0, 0.0)},
                                             {1, cplx(-1.0, 0.0)}};
    const auto tw = mhz::make_twist(hurwitz_param::transcendental(pi), carrier,
                                    7, free_values);  // threshold = 2
    for (std::int64_t k = 0; k < 12; ++k)
        CHECK(std::abs(tw(k) - cplx(k % 2 == 0 ? 1.0 : -1.0, 0.0)) < 1e-14);

    const multi_point s{cplx(2.0, 0.0)};
    const param_vector alpha{hurwitz_param::transcendental(pi)};
    const cplx got = mhz::twisted_zeta_trunc(s, alpha, {tw}, 3);
    const double want = 1.0 / (pi * pi) - 1.0 / ((1 + pi) * (1 + pi)) +
                        1.0 / ((2 + pi) * (2 + pi)) -
                        1.0 / ((3 + pi) * (3 + pi));
    CHECK(std::abs(got - cplx(want, 0.0)) < 1e-15);
}

TEST_CASE("construction guards") {
    const auto chi3 = nonprincipal(3);
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 2), chi3, 1),
                    mhz::domain_error);  // N0 too small
    // principal carrier with a rational parameter
    mhz::dirichlet_character principal3;
    for (const auto& chi : mhz::character_table(3))
        if (chi.principal) principal3 = chi;
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 2),
                                          principal3, 21),
                    mhz::compatibility_error);
    // modulus shares a factor with the denominator
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 3), chi3, 21),
                    mhz::compatibility_error);
    // prime factor of q at/above threshold: q = 5, threshold(20) = 3
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 2),
                                          nonprincipal(5), 20),
                    mhz::compatibility_error);
    // free values must sit on the unit circle
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 2), chi3,
                                          21, {{2, cplx(0.5, 0.0)}}),
                    mhz::unimodular_error);
    // rational free keys must be primes below the threshold
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 2), chi3,
                                          21, {{5, cplx(1.0, 0.0)}}),
                    mhz::domain_error);
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::rational(1, 2), chi3,
                                          100, {{4, cplx(1.0, 0.0)}}),
                    mhz::domain_error);
    // malformed carrier table
    mhz::dirichlet_character broken = chi3;
    broken.values.pop_back();
    CHECK_THROWS_AS((void)mhz::make_twist(hurwitz_param::transcendental(pi),
                                          broken, 20),
                    mhz::domain_error);
}

TEST_CASE("trivial twist reproduces the plain truncation") {
    const multi_point s{cplx(1.5, 2.0), cplx(2.5, -1.0)};
    const param_vector alpha{hurwitz_param::transcendental(0.7),
                             hurwitz_param::rational(1, 3)};
    const std::vector<mhz::twist_function> tws{
        mhz::twist_function::trivial(hurwitz_param::transcendental(0.7)),
        mhz::twist_function::trivial(hurwitz_param::rational(1, 3))};
    const cplx a = mhz::twisted_zeta_trunc(s, alpha, tws, 200);
    const cplx b = mhz::zeta_trunc(s, alpha, 200);
    CHECK(std::abs(a - b) < 1e-15 * std::abs(b));
}

TEST_CASE("unimodularity along the lattice") {
    const auto rat = rational_example();
    const auto carrier = mhz::character_table(4).front();
    const auto trans =
        mhz::make_twist(hurwitz_param::transcendental(pi), carrier, 20);
    for (std::int64_t k = 0; k < 1000; ++k) {
        CHECK(std::abs(std::abs(rat(k)) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(trans(k)) - 1.0) < 1e-12);
    }
}

TEST_CASE("rational twist: lattice rule and complete multiplicativity") {
    const auto tw = rational_example();  // alpha = 1/2: a(k+1/2) = a(2k+1)/a(2)
    CHECK(tw.tail_kind() == mhz::twist_function::kind::rational_tail);
    for (std::int64_t k = 0; k < 200; ++k)
        CHECK(std::abs(tw(k) * tw.a_denominator() - tw.integer_value(2 * k + 1)) <
              1e-13);
    for (std::int64_t m1 = 1; m1 <= 31; ++m1)
        for (std::int64_t m2 = 1; m2 <= 31; ++m2)
            CHECK(std::abs(tw.integer_value(m1 * m2) -
                           tw.integer_value(m1) * tw.integer_value(m2)) < 1e-12);
    // tail primes take the carrier's values
    CHECK(std::abs(tw.integer_value(5) - nonprincipal(3)(5)) < 1e-14);
    CHECK(std::abs(tw.integer_value(7) - nonprincipal(3)(7)) < 1e-14);
    CHECK_THROWS_AS((void)tw.integer_value(0), mhz::domain_error);
}

TEST_CASE("partial sum growth exponents") {
    // trivial weight: S(N) ~ N
    const auto triv =
        mhz::twist_function::trivial(hurwitz_param::transcendental(pi));
    const auto g1 = mhz::partial_sum_growth(triv, 100000);
    CHECK(g1.beta > 0.9);
    CHECK(g1.beta < 1.1);
    CHECK(g1.checkpoints.size() >= 8);

    // bounded oscillation: fitted exponent near zero
    const auto carrier = mhz::character_table(4).front();
    const auto trans =
        mhz::make_twist(hurwitz_param::transcendental(pi), carrier, 20);
    const auto g2 = mhz::partial_sum_growth(trans, 100000);
    CHECK(std::abs(g2.beta) < 0.25);

    // character-dominated tail: slow growth
    const auto g3 = mhz::partial_sum_growth(rational_example(), 100000);
    CHECK(g3.beta < 0.25);

    CHECK_THROWS_AS((void)mhz::partial_sum_growth(triv, 50), mhz::domain_error);
}

TEST_CASE("phase target measure") {
    const auto alpha = hurwitz_param::transcendental(std::sqrt(2.0));
    mhz::weyl_target_spec spec;
    spec.N = 3.0;  // indices k <= N - alpha: k = 0, 1

    spec.delta = 1.0;  // the band covers the whole circle
    CHECK(mhz::weyl_set_measure(alpha, spec, 50000.0, 20000) ==
          doctest::Approx(1.0));

    mhz::weyl_target_spec empty = spec;
    empty.N = 1.0;  // below alpha: no constraints at all
    empty.delta = 0.25;
    CHECK(mhz::weyl_set_measure(alpha, empty, 50000.0, 20000) ==
          doctest::Approx(1.0));

    // two effectively independent phases: density ~ delta^2 = 1/4
    spec.delta = 0.5;
    const double rho = mhz::weyl_set_measure(alpha, spec, 50000.0, 200000);
    CHECK(rho > 0.23);
    CHECK(rho < 0.27);

    // monotone in delta at fixed seed
    mhz::weyl_target_spec narrow = spec;
    narrow.delta = 0.3;
    CHECK(mhz::weyl_set_measure(alpha, narrow, 50000.0, 50000) <=
          mhz::weyl_set_measure(alpha, spec, 50000.0, 50000));

    // quotient form and prime-constrained variants stay probabilities
    mhz::weyl_target_spec quot = spec;
    quot.quotient_phase = true;
    const double rq = mhz::weyl_set_measure(alpha, quot, 50000.0, 20000);
    CHECK(rq >= 0.0);
    CHECK(rq <= 1.0);
    mhz::weyl_target_spec pr = spec;
    pr.primes = {2, 3};
    const double rp = mhz::weyl_set_measure(hurwitz_param::rational(1, 2), pr,
                                            50000.0, 20000);
    CHECK(rp >= 0.0);
    CHECK(rp <= 1.0);

    CHECK_THROWS_AS((void)mhz::weyl_set_measure(alpha, spec, 50000.0, 10),
                    mhz::domain_error);
    mhz::weyl_target_spec bad = spec;
    bad.delta = 1.5;
    CHECK_THROWS_AS((void)mhz::weyl_set_measure(alpha, bad, 50000.0, 20000),
                    mhz::domain_error);
}

TEST_CASE("JSON round trip preserves the weight") {
    for (const auto& tw :
         {rational_example(),
          mhz::make_twist(hurwitz_param::transcendental(pi),
                          mhz::character_table(4).front(), 20),
          mhz::twist_function::trivial(hurwitz_param::rational(2, 5))}) {
        const auto back = mhz::twist_from_json(mhz::twist_to_json(tw));
        CHECK(back.tail_kind() == tw.tail_kind());
        CHECK(back.n0() == tw.n0());
        CHECK(back.threshold() == tw.threshold());
        CHECK(back.param().is_rational() == tw.param().is_rational());
        CHECK(back.param().value() == doctest::Approx(tw.param().value()));
        for (std::int64_t k = 0; k < 50; ++k)
            CHECK(std::abs(back(k) - tw(k)) < 1e-14);
    }
}

TEST_CASE("generating series factors through the carrier L-function") {
    // sum_{k>=1} a(k) k^{-s} = L(s,chi) * prod_{p < thr} (1 - chi(p) p^-s) /
    //                                                     (1 - a(p) p^-s)
    const auto tw = rational_example();
    const auto chi = nonprincipal(3);
    const cplx s(2.5, 0.0);

    cplx lhs = 0.0;
    for (std::int64_t k = 200000; k >= 1; --k)
        lhs += tw.integer_value(k) * std::pow(static_cast<double>(k), -2.5);

    cplx rhs = mhz::dirichlet_L(s, chi);
    for (std::int64_t p : {2, 3}) {
        const double pw = std::pow(static_cast<double>(p), -2.5);
        rhs *= (1.0 - chi(p) * pw) / (1.0 - tw.integer_value(p) * pw);
    }
    CHECK(std::abs(lhs - rhs) < 1e-6);
}
