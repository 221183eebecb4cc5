#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mhz/errors.hpp"
#include "mhz/hurwitz.hpp"
#include "mhz/numcore.hpp"

namespace mhz {

inline constexpr int max_arity = 8;

/*
 * A point s = (s_1, ..., s_n) in C^n, 1 <= n <= max_arity.  All evaluators
 * below compute the nested series
 *
 *     zeta_n(s; alpha) = sum_{0 <= k_1 < k_2 < ... < k_n}
 *                        prod_j (k_j + alpha_j)^{-s_j}
 *
 * or an analytic continuation / truncation of it.
 */
class multi_point {
public:
    multi_point() = default;
    explicit multi_point(std::vector<cplx> coords);
    multi_point(std::initializer_list<cplx> coords)
        : multi_point(std::vector<cplx>(coords)) {}

    int arity() const { return static_cast<int>(coords_.size()); }
    const cplx& operator[](std::size_t j) const { return coords_[j]; }
    const std::vector<cplx>& coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

private:
    std::vector<cplx> coords_;
};

// parameter vector alpha = (alpha_1, ..., alpha_n), all entries > 0
class param_vector {
public:
    param_vector() = default;
    explicit param_vector(std::vector<hurwitz_param> entries);
    param_vector(std::initializer_list<hurwitz_param> entries)
        : param_vector(std::vector<hurwitz_param>(entries)) {}

    int arity() const { return static_cast<int>(entries_.size()); }
    const hurwitz_param& operator[](std::size_t j) const { return entries_[j]; }
    double value(std::size_t j) const { return entries_[j].value(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<hurwitz_param> entries_;
};

void require_same_arity(const multi_point& s, const param_vector& alpha);

// per-coordinate rectangle [re_lo, re_hi] x [im_lo, im_hi]
struct axis_box {
    double re_lo;
    double re_hi;
    double im_lo;
    double im_hi;
};

/*
 * A compact product-of-rectangles target set with a per-axis evaluation grid
 * (grid x grid points per complex coordinate, endpoints included).  The
 * universality experiments want boxes inside the critical strip
 * 1/2 < Re < 1; in_strip() reports whether that holds so callers can warn,
 * but general rectangles are accepted (zero-free-region probes sit outside).
 */
class compact_box {
public:
    compact_box(std::vector<axis_box> axes, int grid = 9);

    int arity() const { return static_cast<int>(axes_.size()); }
    int grid() const { return grid_; }
    const axis_box& axis(std::size_t j) const { return axes_[j]; }
    bool in_strip() const;

    // the grid x grid lattice of one complex coordinate, row-major over
    // (re index, im index)
    std::vector<cplx> axis_points(std::size_t j) const;
    // the four corners of one axis rectangle
    std::vector<cplx> axis_corners(std::size_t j) const;
    std::int64_t total_points() const;

private:
    std::vector<axis_box> axes_;
    int grid_;
};

// ---------------------------------------------------------------------------
// evaluators

// plain truncation: sum over 0 <= k_1 < ... < k_n <= N, ascending k,
// computed by a prefix-sum recurrence in O(n N)
cplx zeta_trunc(const multi_point& s, const param_vector& alpha,
                std::int64_t N);

/*
 * Smoothly truncated sum: with gaps g_j = k_j - k_{j-1} (k_0 = 0),
 *
 *     sum prod_j phi(g_j / T) (k_j + alpha_j)^{-s_j},
 *
 * a finite sum because phi vanishes beyond support_end * T per gap.  Note the
 * n = 1 case weights phi(k/T), not phi((k+alpha)/T) as hurwitz_smoothed does;
 * the two differ by O(alpha/T) bridge terms.
 */
cplx zeta_smoothed(const multi_point& s, const param_vector& alpha, double T,
                   const smooth_cutoff& cutoff = smooth_cutoff(),
                   double cost_cap = 1e8);

/*
 * Core continuation engine: the outer n-1 variables are smoothed with
 * per-gap cutoffs while the innermost sum over k_n > k_{n-1} is replaced by
 * its analytic continuation zeta(s_n, k_{n-1} + 1 + alpha_n).  The inner
 * values for all needed k_{n-1} come from one Euler-Maclaurin evaluation at
 * the largest shift plus the downward recurrence
 * zeta(s, a) = zeta(s, a+1) + a^{-s}.  For n = 1 this degenerates to plain
 * hurwitz_zeta.  No window checks; callers police validity.
 */
cplx zeta_eval_engine(const multi_point& s, const param_vector& alpha,
                      double T, const smooth_cutoff& cutoff = smooth_cutoff(),
                      double cost_cap = 1e8);

struct eval_result {
    cplx value;
    double error_estimate;  // configured bound B * T^{-A}
};

// T selection for zeta_eval: automatic picks T = max_j Im(s_j)
struct t_policy {
    double T = 0.0;  // 0 = automatic
    static t_policy automatic() { return {0.0}; }
    static t_policy fixed(double T) { return {T}; }
    bool is_auto() const { return T == 0.0; }
};

/*
 * Windowed evaluator: requires all Im(s_j) of one sign and inside the
 * sandwich [T^xi, T] and |Re(s_j)| <= A; negative-imaginary inputs are
 * handled by conjugation symmetry.  Returns the engine value together with
 * the window error bound B * T^{-A}.
 */
eval_result zeta_eval(const multi_point& s, const param_vector& alpha,
                      double xi = 0.3, t_policy policy = t_policy(),
                      double A = 2.0, double B = 1.0,
                      const smooth_cutoff& cutoff = smooth_cutoff());

/*
 * Contour for the Mellin-Barnes recursion
 *
 *   zeta_n(s) = (1/2 pi i) Int_Gamma B(z, s_n) zeta(z, 1 + alpha_n -
 *               alpha_{n-1}) zeta_{n-1}(s_1,.., s_{n-1} + s_n - z) dz
 *
 * Gamma runs up the vertical Re(z) = -leg_half_width with a rectangular
 * bulge to Re(z) = +leg_half_width for |Im(z)| <= T^{xi/2}: legs
 *   I1 lower-left vertical, I2 bottom horizontal, I3 right vertical,
 *   I4 top horizontal, I5 upper-left vertical.
 * The bulge passes right of the fixed poles z = 1, 0, -1, -2, ... while the
 * moving poles z = s_n + k and z = s_{n-1} + s_n - 1 stay right/above (their
 * heights are >= T^xi > T^{xi/2}).  leg_half_width must be non-integer so
 * the verticals avoid Gamma-function poles.  Width is a pure conditioning
 * knob: the identity holds for any non-integer width > 1, but the legs
 * carry magnitude ~ |Gamma(s_n - z)/Gamma(s_n)| ~ |Im s_n|^{Re s_n + N}
 * that cancels down to the answer, and zeta(z, .) near Re(z) = -N with
 * small |Im z| loses ~N digits to Euler-Maclaurin cancellation.  Both
 * effects compound fast in N (width 3.5 costs ~4 digits over 1.5), so the
 * default hugs the pole at z = 1 as closely as the half-unit integer
 * clearance allows.
 */
struct contour_spec {
    double xi = 0.3;
    double T = 0.0;              // 0 = automatic: max_j |Im(s_j)|
    double leg_half_width = 1.5;
    int quad_order = 32;         // Gauss-Legendre nodes per panel
    double panel_length = 2.0;
    double tail_drop = 1e-16;    // relative leg-truncation threshold
    double max_leg_span = 400.0; // budget per infinite leg
};

cplx zeta_mb(const multi_point& s, const param_vector& alpha,
             const contour_spec& contour = contour_spec(), int depth = 1);

/*
 * Exact symmetric-function identity on the diagonal s_1 = ... = s_n = s,
 * alpha_j = alpha: with power sums S_m = sum_{k <= N} (k+alpha)^{-m s},
 *   n = 2:  (S_1^2 - S_2) / 2
 *   n = 3:  (S_1^3 - 3 S_1 S_2 + 2 S_3) / 6
 * equal to zeta_trunc on the diagonal for every N (finite-sum identity).
 */
cplx zeta_diag_powersum(cplx s, const hurwitz_param& alpha, int n,
                        std::int64_t N);

}  // namespace mhz
