#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhz/dirichlet.hpp"
#include "mhz/errors.hpp"
#include "mhz/hurwitz.hpp"
#include "mhz/multizeta.hpp"

namespace mhz {

/*
 * Completely multiplicative unimodular weight a on the shifted lattice
 * N + alpha, with character-controlled tail.
 *
 * Rational alpha = c/d (gcd(q,d) = 1, chi non-principal mod q):
 *     a(k + alpha) = a(kd + c) / a(d)
 * where a on the integers is completely multiplicative with free unimodular
 * values on primes p < threshold and a(p) = chi(p) for p >= threshold.
 * Every prime factor of q must lie below threshold, otherwise the tail rule
 * would emit chi(p) = 0 and break unimodularity.
 *
 * Transcendental alpha: free unimodular values for k < threshold and the
 * pure phase a(k + alpha) = e^{2 pi i k / q} for k >= threshold.
 *
 * threshold = ceil(log N0), stored explicitly for reproducibility.
 */
class twist_function {
public:
    enum class kind { rational_tail, transcendental_tail, trivial };

    kind tail_kind() const { return kind_; }
    const hurwitz_param& param() const { return param_; }
    const dirichlet_character& character() const { return chi_; }
    std::int64_t n0() const { return n0_; }
    std::int64_t threshold() const { return threshold_; }
    const std::map<std::int64_t, cplx>& free_values() const { return free_; }
    cplx a_denominator() const { return a_d_; }  // cached a(d), rational case

    // a(k + alpha) for k >= 0
    cplx operator()(std::int64_t k) const;

    // value of the underlying integer function a(m), rational case only
    cplx integer_value(std::int64_t m) const;

    // the weight a == 1 everywhere (plain truncation), any parameter
    static twist_function trivial(const hurwitz_param& alpha);

    friend twist_function make_twist(const hurwitz_param&,
                                     const dirichlet_character&, std::int64_t,
                                     const std::map<std::int64_t, cplx>&);

private:
    twist_function() : param_(hurwitz_param::transcendental(1.0)) {}

    kind kind_ = kind::trivial;
    hurwitz_param param_;
    dirichlet_character chi_;
    std::int64_t n0_ = 0;
    std::int64_t threshold_ = 0;
    std::map<std::int64_t, cplx> free_;
    cplx a_d_ = 1.0;
};

/*
 * Build a twist from its data; missing free values default to 1.  Rational
 * keys are primes below threshold; transcendental keys are indices
 * k < threshold.
 */
twist_function make_twist(const hurwitz_param& alpha,
                          const dirichlet_character& chi, std::int64_t N0,
                          const std::map<std::int64_t, cplx>& free_values = {});

inline cplx twist_value(const twist_function& a, std::int64_t k) { return a(k); }

// truncated multiple sum with per-coordinate twist weights:
// sum_{0 <= k_1 < ... < k_n <= N} prod_j a_j(k_j) (k_j + alpha_j)^{-s_j}
cplx twisted_zeta_trunc(const multi_point& s, const param_vector& alpha,
                        const std::vector<twist_function>& twists,
                        std::int64_t N);

struct growth_report {
    std::vector<std::pair<std::int64_t, double>> checkpoints;  // (N, |S(N)|)
    double beta;       // fitted exponent in |S(N)| ~ c N^beta
    double prefactor;  // fitted c
};

// partial sums S(N) = sum_{k <= N} a(k + alpha) at geometric checkpoints
// (x2 spacing) with a log-log least-squares exponent fit
growth_report partial_sum_growth(const twist_function& a, std::int64_t N_max,
                                 int checkpoints = 12);

/*
 * Target set for simultaneous phase approximation: shifts t whose phases
 * || t log(k + alpha) / (2 pi) - theta_k || < delta / 2 for every index
 * k <= N - alpha (or every prime in `primes` when non-empty, rational case).
 * quotient_phase switches the phase to the reciprocal form
 * || t / (2 pi log(k + alpha)) - theta_k ||.
 */
struct weyl_target_spec {
    double delta = 0.5;
    double N = 0.0;
    std::vector<double> theta;        // defaults to zeros when short
    std::vector<std::int64_t> primes; // non-empty: constrain at log p instead
    bool quotient_phase = false;
};

double weyl_set_measure(const hurwitz_param& alpha, const weyl_target_spec& spec,
                        double T, std::int64_t samples,
                        std::uint64_t seed = 0x5eed);

// JSON round-trip for replaying experiments
std::string twist_to_json(const twist_function& a);
twist_function twist_from_json(const std::string& text);

}  // namespace mhz
