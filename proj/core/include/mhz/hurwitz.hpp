#pragma once

#include <cstdint>
#include <string>

#include "mhz/numcore.hpp"

namespace mhz {

// ---------------------------------------------------------------------------
// Shift parameter alpha > 0, tagged by arithmetic nature.  The rational tag
// keeps the reduced fraction c/d so downstream code (twists, L-functions) can
// use exact integer arithmetic on k*d + c; the transcendental tag stores only
// the double value.  "Transcendental" records the caller's claim - it is not
// verifiable numerically and only gates which twist constructions apply.
// ---------------------------------------------------------------------------
class hurwitz_param {
  public:
    static hurwitz_param rational(std::int64_t c, std::int64_t d);
    static hurwitz_param transcendental(double value);

    double value() const { return value_; }
    bool is_rational() const { return rational_; }
    std::int64_t num() const;  // c  (rational only)
    std::int64_t den() const;  // d  (rational only)

    std::string str() const;

  private:
    hurwitz_param() = default;
    double value_ = 1.0;
    bool rational_ = true;
    std::int64_t c_ = 1, d_ = 1;
};

// ---------------------------------------------------------------------------
// Hurwitz zeta  zeta(s, alpha) = sum_{n>=0} (n+alpha)^(-s), continued to
// s != 1 by Euler-Maclaurin:
//
//   zeta(s,a) = sum_{k<M} (k+a)^(-s) + (M+a)^(1-s)/(s-1) + (M+a)^(-s)/2
//             + sum_{j=1}^{J} B_{2j}/(2j)! * (s)_{2j-1} * (M+a)^(-s-2j+1)
//
// with (s)_m the rising factorial.  Defaults M = max(50, 2|Im s|) and
// J = bernoulli_order/2 = 6 give relative error <= ~1e-12 for |Re s| <= 10,
// |Im s| <= 1e3 away from the cancellation-dominated deep-negative corner.
// Throws pole_error within 1e-12 of s = 1.
// ---------------------------------------------------------------------------
cplx hurwitz_zeta(cplx s, const hurwitz_param& alpha, int em_terms = 0,
                  int bernoulli_order = 12);
cplx hurwitz_zeta(cplx s, double alpha, int em_terms = 0,
                  int bernoulli_order = 12);

// derivative d/ds zeta(s, alpha) (Euler-Maclaurin, differentiated termwise)
cplx hurwitz_zeta_ds(cplx s, double alpha, int em_terms = 0,
                     int bernoulli_order = 12);

// Smoothed one-variable truncation
//   sum_{n>=0} phi((n+alpha)/T) (n+alpha)^(-s),
// a finite sum (terms vanish once n+alpha >= support_end*T), accumulated in
// ascending term magnitude.  Requires T >= 1.
cplx hurwitz_smoothed(cplx s, const hurwitz_param& alpha, double T,
                      const smooth_cutoff& phi = smooth_cutoff{});

// Windowed evaluator: returns the continued value together with the
// smoothed-truncation remainder bound for scale T.  Regimes: far_from_one
// when T^xi <= |Im s| <= T (bound O(T^-A)), near_one otherwise (bound
// O((1 + 1/|s-1|) T^(1-Re s))).  The value itself is continuation-grade:
// the literal smoothed sum differs from the function by ~T^(1-Re s) times
// the cutoff transform at 1-s, far above the window bound at small |Im s|,
// so callers wanting the literal sum use hurwitz_smoothed directly.
// |Im s| > T raises range_error; |Re s| > A raises range_error.
enum class afe_regime { far_from_one, near_one };

struct afe_result {
    cplx value;
    afe_regime regime;
    double error_estimate;
};

afe_result hurwitz_afe(cplx s, const hurwitz_param& alpha, double T, double xi,
                       double A = 2.0,
                       const smooth_cutoff& phi = smooth_cutoff{});

}  // namespace mhz
