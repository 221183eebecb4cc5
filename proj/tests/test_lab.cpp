#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "mhz/lab.hpp"
#include "mhz/hurwitz.hpp"

using mhz::cplx;
using mhz::hurwitz_param;
using mhz::param_vector;
using mhz::polynomial;

namespace {

param_vector ones(int n) {
    std::vector<hurwitz_param> v(static_cast<std::size_t>(n),
                                 hurwitz_param::transcendental(1.0));
    return param_vector(v);
}

polynomial zero_poly(int n) { return polynomial(n, {}); }

polynomial const_poly(int n, cplx c) {
    return polynomial(n, {{c, std::vector<int>(static_cast<std::size_t>(n), 0)}});
}

mhz::compact_box point_box(double re, double im, int grid = 2) {
    return mhz::compact_box({{re, re, im, im}}, grid);
}

}  // namespace

TEST_CASE("sup distance: self target vanishes, zero target gives |zeta|") {
    const cplx c = mhz::hurwitz_zeta(cplx(0.7, 30.05), 1.0);
    const double self = mhz::sup_distance(ones(1), {30.0}, const_poly(1, c),
                                          point_box(0.7, 0.05));
    CHECK(self < 1e-12);

    // shift 0 against the zero target at s = 3/4: plain |zeta(3/4)|
    const double mag = mhz::sup_distance(ones(1), {0.0}, zero_poly(1),
                                         point_box(0.75, 0.0));
    CHECK(mag > 3.44);
    CHECK(mag < 3.45);
}

TEST_CASE("sup distance: grid refinement is stable") {
    const mhz::compact_box coarse({{0.6, 0.8, 20.0, 21.0}}, 9);
    const mhz::compact_box fine({{0.6, 0.8, 20.0, 21.0}}, 18);
    const double a = mhz::sup_distance(ones(1), {0.0}, zero_poly(1), coarse);
    const double b = mhz::sup_distance(ones(1), {0.0}, zero_poly(1), fine);
    CHECK(a > 0.0);
    CHECK(std::abs(a - b) < 0.2);
}

TEST_CASE("sup distance: argument validation") {
    CHECK_THROWS_AS((void)mhz::sup_distance(ones(2), {30.0}, zero_poly(1),
                                            point_box(0.7, 0.0)),
                    mhz::arity_error);
    CHECK_THROWS_AS((void)mhz::sup_distance(ones(1), {30.0}, zero_poly(1),
                                            point_box(0.7, 0.0), 1.5),
                    mhz::domain_error);
    // arity >= 2 enforces the evaluator window: im floor T^xi not met
    const mhz::compact_box b2({{0.6, 0.7, -1.0, 1.0}, {0.6, 0.7, -1.0, 1.0}}, 2);
    CHECK_THROWS_AS((void)mhz::sup_distance(ones(2), {2.0, 50.0}, zero_poly(2),
                                            b2),
                    mhz::range_error);
    // inside the window: fine
    CHECK_NOTHROW((void)mhz::sup_distance(ones(2), {30.0, 40.0}, zero_poly(2),
                                          b2));
}

TEST_CASE("scan: full-pass and zero-pass densities") {
    mhz::scan_spec spec(mhz::scan_spec::mode_t::continuous, point_box(0.75, 0.0),
                        {ones(1), zero_poly(1)},
                        std::numeric_limits<double>::infinity(), 20.0);
    spec.t_min = 10.0;
    spec.step = {0.5};
    auto res = mhz::scan_shifts(spec);
    CHECK(res.evaluated == 21);
    CHECK(res.skipped == 0);
    CHECK(res.density == 1.0);
    CHECK(static_cast<std::int64_t>(res.records.size()) == res.evaluated);
    CHECK(res.best.sup_distance > 0.0);

    spec.epsilon = 0.0;  // strict inequality: nothing passes
    res = mhz::scan_shifts(spec);
    CHECK(res.density == 0.0);
}

TEST_CASE("scan: lattice mode enumerates the same shifts as continuous") {
    mhz::scan_spec a(mhz::scan_spec::mode_t::continuous, point_box(0.75, 0.0),
                     {ones(1), zero_poly(1)}, 1.0, 30.0);
    a.t_min = 10.0;
    a.step = {1.25};
    mhz::scan_spec b = a;
    b.mode = mhz::scan_spec::mode_t::lattice;
    const auto ra = mhz::scan_shifts(a);
    const auto rb = mhz::scan_shifts(b);
    REQUIRE(ra.records.size() == rb.records.size());
    for (std::size_t i = 0; i < ra.records.size(); ++i) {
        CHECK(ra.records[i].t == rb.records[i].t);
        CHECK(ra.records[i].sup_distance == rb.records[i].sup_distance);
    }
    CHECK(ra.density == rb.density);
}

TEST_CASE("scan: line mode walks the diagonal") {
    const mhz::compact_box box(
        {{0.6, 0.7, 0.0, 0.5}, {0.6, 0.7, 0.0, 0.5}}, 3);
    mhz::scan_spec spec(mhz::scan_spec::mode_t::line, box,
                        {ones(2), zero_poly(2)}, 1e9, 34.0);
    spec.t_min = 30.0;
    spec.step = {1.0};
    spec.direction = {1.0, 1.0};
    const auto res = mhz::scan_shifts(spec);
    REQUIRE(res.evaluated == 5);
    for (int i = 0; i < 5; ++i) {
        const auto& r = res.records[static_cast<std::size_t>(i)];
        REQUIRE(r.t.size() == 2);
        CHECK(r.t[0] == 30.0 + i);
        CHECK(r.t[1] == 30.0 + i);
        const double direct = mhz::sup_distance(ones(2), r.t, zero_poly(2), box);
        CHECK(r.sup_distance == direct);
    }
}

TEST_CASE("scan: window skips are excluded from the density denominator") {
    mhz::scan_spec spec(mhz::scan_spec::mode_t::continuous,
                        mhz::compact_box({{0.75, 0.75, -0.5, 0.5}}, 2),
                        {ones(1), zero_poly(1)},
                        std::numeric_limits<double>::infinity(), 5.0);
    spec.t_min = 0.5;
    spec.step = {0.5};
    const auto res = mhz::scan_shifts(spec);
    CHECK(res.evaluated + res.skipped == 10);
    CHECK(res.skipped == 3);  // t = 0.5, 1.0, 1.5 fall outside [T^xi, T]
    CHECK(res.density == 1.0);
}

TEST_CASE("scan: epsilon monotonicity, thread determinism, record toggle") {
    mhz::scan_spec spec(mhz::scan_spec::mode_t::continuous,
                        mhz::compact_box({{0.6, 0.8, 0.0, 1.0}}, 4),
                        {ones(1), zero_poly(1)}, 0.5, 40.0);
    spec.t_min = 10.0;
    spec.step = {0.25};
    const auto tight = mhz::scan_shifts(spec);
    mhz::scan_spec wide = spec;
    wide.epsilon = 2.0;
    const auto loose = mhz::scan_shifts(wide);
    CHECK(tight.density <= loose.density);

    mhz::scan_spec threaded = spec;
    threaded.threads = 3;
    const auto rt = mhz::scan_shifts(threaded);
    REQUIRE(rt.records.size() == tight.records.size());
    for (std::size_t i = 0; i < rt.records.size(); ++i) {
        CHECK(rt.records[i].t == tight.records[i].t);
        CHECK(rt.records[i].sup_distance == tight.records[i].sup_distance);
    }
    CHECK(rt.density == tight.density);
    CHECK(rt.best.t == tight.best.t);

    mhz::scan_spec bare = spec;
    bare.keep_records = false;
    const auto rb = mhz::scan_shifts(bare);
    CHECK(rb.records.empty());
    CHECK(rb.best.t == tight.best.t);
    CHECK(rb.density == tight.density);
}

TEST_CASE("scan: validation and budget") {
    mhz::scan_spec spec(mhz::scan_spec::mode_t::continuous, point_box(0.75, 0.0),
                        {ones(1), zero_poly(1)}, 1.0, 20.0);
    spec.t_min = 10.0;
    spec.step = {1e-9};
    CHECK_THROWS_AS((void)mhz::scan_shifts(spec), mhz::budget_error);
    spec.step = {0.5};
    spec.t_max = 5.0;  // below t_min
    CHECK_THROWS_AS((void)mhz::scan_shifts(spec), mhz::domain_error);
    spec.t_max = 20.0;
    spec.epsilon = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)mhz::scan_shifts(spec), mhz::domain_error);
    spec.epsilon = 1.0;
    spec.step = {0.5, 0.5};  // arity mismatch with the 1-D box
    CHECK_THROWS_AS((void)mhz::scan_shifts(spec), mhz::arity_error);
    spec.step = {0.5};
    spec.targets.clear();
    CHECK_THROWS_AS((void)mhz::scan_shifts(spec), mhz::domain_error);
}

TEST_CASE("mean square: one-variable quadrature lands near the asymptotic") {
    const auto r = mhz::mean_square(ones(1), 1, 100.0, 0.3, 1);
    CHECK(r.integral_estimate > 0.0);
    CHECK(r.ratio_to_asymptotic > 0.4);
    CHECK(r.ratio_to_asymptotic < 0.9);
    // deterministic
    const auto r2 = mhz::mean_square(ones(1), 1, 100.0, 0.3, 1);
    CHECK(r2.integral_estimate == r.integral_estimate);
}

TEST_CASE("mean square: Monte Carlo reproducibility at arity 2") {
    const auto a = mhz::mean_square(ones(2), 2, 100.0, 0.3, 20000, 7);
    const auto b = mhz::mean_square(ones(2), 2, 100.0, 0.3, 20000, 7);
    CHECK(a.integral_estimate == b.integral_estimate);
    const auto c = mhz::mean_square(ones(2), 2, 100.0, 0.3, 20000, 8);
    CHECK(c.integral_estimate != a.integral_estimate);
    CHECK(a.integral_estimate > 0.0);
    CHECK(a.ratio_to_asymptotic > 0.01);
    CHECK(a.ratio_to_asymptotic < 100.0);
}

TEST_CASE("mean square: validation") {
    CHECK_THROWS_AS((void)mhz::mean_square(ones(2), 1, 100.0, 0.3, 100),
                    mhz::arity_error);
    CHECK_THROWS_AS((void)mhz::mean_square(ones(4), 4, 100.0, 0.3, 100),
                    mhz::budget_error);
    CHECK_THROWS_AS((void)mhz::mean_square(ones(1), 1, 5.0, 0.3, 100),
                    mhz::domain_error);
    CHECK_THROWS_AS((void)mhz::mean_square(ones(1), 1, 100.0, 1.3, 100),
                    mhz::domain_error);
    CHECK_THROWS_AS((void)mhz::mean_square(ones(1), 1, 100.0, 0.3, 0),
                    mhz::budget_error);
}

TEST_CASE("winding number unit cases") {
    const cplx c(0.3, 0.7);
    CHECK(mhz::winding_number([&](cplx z) { return z - c; }, c, 0.1) == 1);
    CHECK(mhz::winding_number([&](cplx z) { return (z - c) * (z - c); }, c,
                              0.1) == 2);
    CHECK(mhz::winding_number([&](cplx z) { return 1.0 / (z - c); }, c, 0.1) ==
          -1);
    CHECK(mhz::winding_number([&](cplx) { return cplx(1.0, 0.0); }, c, 0.1) ==
          0);
    // circle passing through the zero: untrustworthy, reports 0
    CHECK(mhz::winding_number([&](cplx z) { return z - (c + cplx(0.1, 0.0)); },
                              c, 0.1) == 0);
}

TEST_CASE("zero probe: first zeta zeros with certificates") {
    const mhz::compact_box box({{0.3, 0.7, 13.0, 15.0}}, 30);
    const auto zs = mhz::find_zeros(ones(1), box, 30);
    REQUIRE(zs.size() == 1);
    CHECK(std::abs(zs[0].location[0].real() - 0.5) < 1e-6);
    CHECK(std::abs(zs[0].location[0].imag() - 14.13472514173469379) < 1e-6);
    CHECK(zs[0].residual < 1e-10);
    CHECK(zs[0].winding == 1);

    const mhz::compact_box wide({{0.3, 0.7, 13.0, 22.0}}, 40);
    const auto two = mhz::find_zeros(ones(1), wide, 40);
    REQUIRE(two.size() == 2);
    CHECK(std::abs(two[0].location[0].imag() - 14.13472514173469379) < 1e-6);
    CHECK(std::abs(two[1].location[0].imag() - 21.022039638771554993) < 1e-6);
}

TEST_CASE("zero probe: zero-free rectangle comes back empty") {
    const mhz::compact_box box({{1.5, 1.8, 0.0, 50.0}}, 40);
    CHECK(mhz::find_zeros(ones(1), box, 40).empty());
}

TEST_CASE("zero probe: validation") {
    const mhz::compact_box box({{0.3, 0.7, 13.0, 15.0}}, 30);
    CHECK_THROWS_AS((void)mhz::find_zeros(ones(2), box, 30), mhz::arity_error);
    CHECK_THROWS_AS((void)mhz::find_zeros(ones(1), box, 3), mhz::domain_error);
    CHECK_THROWS_AS((void)mhz::find_zeros(ones(1), box, 30, 0.0),
                    mhz::domain_error);
}

TEST_CASE("records CSV: exact layout") {
    std::vector<mhz::shift_record> recs{{{1.5, 2.25}, 0.25, true},
                                        {{3.0, 4.5}, 2.0, false}};
    std::ostringstream os;
    mhz::write_records_csv(os, recs);
    CHECK(os.str() ==
          "t1,t2,sup_distance,pass\n"
          "1.5,2.25,0.25,1\n"
          "3,4.5,2,0\n");
    std::ostringstream empty;
    mhz::write_records_csv(empty, {});
    CHECK(empty.str().empty());
}

TEST_CASE("summary JSON: schema and content echo") {
    mhz::scan_spec spec(mhz::scan_spec::mode_t::continuous, point_box(0.75, 0.0),
                        {ones(1), zero_poly(1)}, 0.5, 12.0);
    spec.t_min = 10.0;
    spec.step = {1.0};
    const auto res = mhz::scan_shifts(spec);
    const auto text = mhz::scan_summary_json(spec, res, 99, 1.25);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("schema_version") == "1");
    CHECK(j.at("kind") == "shift_scan");
    CHECK(j.at("spec").at("mode") == "continuous");
    CHECK(j.at("spec").at("t_min") == 10.0);
    CHECK(j.at("spec").at("t_max") == 12.0);
    CHECK(j.at("spec").at("epsilon") == 0.5);
    CHECK(j.at("spec").at("box").at("grid") == 2);
    CHECK(j.at("spec").at("targets").size() == 1);
    CHECK(j.at("spec").at("targets")[0].at("alpha")[0] == "1");
    CHECK(j.at("evaluated") == res.evaluated);
    CHECK(j.at("skipped") == res.skipped);
    CHECK(j.at("density") == res.density);
    CHECK(j.at("seed") == 99);
    CHECK(j.at("runtime_sec") == 1.25);
    CHECK(j.at("best").at("sup_distance").get<double>() ==
          res.best.sup_distance);
}
