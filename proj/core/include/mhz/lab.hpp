#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "mhz/decomp.hpp"
#include "mhz/errors.hpp"
#include "mhz/multizeta.hpp"

namespace mhz {

// one sampled shift with its grid-sup distance to the target
struct shift_record {
    std::vector<double> t;
    double sup_distance = 0.0;
    bool pass = false;
};

// a refined near-zero with its certificate
struct zero_record {
    multi_point location;
    double residual = 0.0;
    int winding = 0;  // argument-principle count on a small circle (n = 1)
                      // or on the last-coordinate slice (n >= 2)
};

struct target_pair {
    param_vector alpha;
    polynomial target;
};

/*
 * Shift-scan experiment: walk shifts t over [t_min, t_max]^n (continuous /
 * lattice modes enumerate t_min + k*step per axis; line mode walks u*direction
 * for scalar u) and record the grid sup of |zeta_n(s + it) - target(s)| over
 * the box.  Several (alpha, target) pairs make a joint scan scored by the
 * max over pairs.  Shifts outside the evaluator window [T^xi, T] are skipped
 * and excluded from the density denominator.
 */
struct scan_spec {
    enum class mode_t { continuous, lattice, line };

    mode_t mode;
    std::vector<double> step;       // per-axis step (line mode: step[0] along u)
    std::vector<double> direction;  // line mode only; strictly positive
    double t_min = 0.0;
    double t_max = 0.0;
    std::vector<target_pair> targets;
    compact_box box;
    double epsilon = 0.0;
    double xi = 0.3;
    int threads = 1;
    std::int64_t shift_cap = 2000000;
    int em_terms = 0;  // one-variable evaluator term override (0 = default)
    bool keep_records = true;

    scan_spec(mode_t m, compact_box b, target_pair primary, double eps,
              double tmax)
        : mode(m), t_max(tmax), targets{std::move(primary)}, box(std::move(b)),
          epsilon(eps) {}
};

struct scan_result {
    double density = 0.0;          // fraction of evaluated shifts passing
    shift_record best;             // smallest sup distance seen
    std::vector<shift_record> records;
    std::int64_t evaluated = 0;
    std::int64_t skipped = 0;      // shifts outside the evaluator window
};

// grid sup of |zeta_n(s + it) - target(s)| over the box; throws range_error
// when the shifted box leaves the evaluator window
double sup_distance(const param_vector& alpha, const std::vector<double>& shift,
                    const polynomial& target, const compact_box& box,
                    double xi = 0.3, int em_terms = 0);

scan_result scan_shifts(const scan_spec& spec);

struct mean_square_result {
    double integral_estimate = 0.0;
    double ratio_to_asymptotic = 0.0;  // against (T log T)^n / n!
};

/*
 * Second moment of |zeta_n| on the critical hyperplane Re = 1/2 over
 * [T^xi, T]^n: deterministic unit-panel Gauss-Legendre for n = 1, Monte
 * Carlo (counter-based RNG) for n = 2, 3.
 */
mean_square_result mean_square(const param_vector& alpha, int n, double T,
                               double xi, std::int64_t samples,
                               std::uint64_t seed = 0x5eed);

/*
 * Zero probe: seed at grid local minima of |zeta_n|, refine by damped Newton
 * (n = 1) or cyclic coordinate descent (n >= 2), then certify each find by
 * the argument principle on a radius-1e-3 circle (64 sample points).  Finds
 * with winding 0 or residual above refine_tol are dropped.
 */
std::vector<zero_record> find_zeros(const param_vector& alpha,
                                    const compact_box& box, int grid,
                                    double refine_tol = 1e-10);

// winding number of f around `center` on the circle of radius r; returns 0
// if the circle's values come too close to 0 for a trustworthy count
template <typename F>
int winding_number(F&& f, cplx center, double radius, int points = 64);

// deterministic artifacts: records as CSV (t1..tn, sup_distance, pass; %.17g)
// and a JSON run summary (spec echo, density, best record, seed, runtime)
void write_records_csv(std::ostream& os, const std::vector<shift_record>& records);
std::string scan_summary_json(const scan_spec& spec, const scan_result& result,
                              std::uint64_t seed, double runtime_sec);

// ---------------------------------------------------------------------------

template <typename F>
int winding_number(F&& f, cplx center, double radius, int points) {
    double total = 0.0;
    cplx prev = f(center + cplx(radius, 0.0));
    if (std::abs(prev) < 1e-15) return 0;
    for (int k = 1; k <= points; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / points;
        const cplx z = center + radius * cplx(std::cos(ang), std::sin(ang));
        const cplx cur = f(z);
        if (std::abs(cur) < 1e-15) return 0;
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace mhz
