#include "mhz/multizeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace mhz {

namespace {

// r^{-s} for real r > 0: one real log + complex exp, much cheaper than
// std::pow(cplx, cplx) in the hot loops
inline cplx neg_pow(double r, cplx s) {
    const double L = std::log(r);
    return std::exp(cplx(-s.real() * L, -s.imag() * L));
}

}  // namespace

multi_point::multi_point(std::vector<cplx> coords) : coords_(std::move(coords)) {
    const int n = static_cast<int>(coords_.size());
    if (n < 1 || n > max_arity)
        throw arity_error("multi_point: arity must be in [1, 8]");
    for (const cplx& c : coords_)
        if (!is_finite(c)) throw domain_error("multi_point: non-finite coordinate");
}

param_vector::param_vector(std::vector<hurwitz_param> entries)
    : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1 || n > max_arity)
        throw arity_error("param_vector: arity must be in [1, 8]");
}

void require_same_arity(const multi_point& s, const param_vector& alpha) {
    if (s.arity() != alpha.arity())
        throw arity_error("point/parameter arity mismatch");
}

compact_box::compact_box(std::vector<axis_box> axes, int grid)
    : axes_(std::move(axes)), grid_(grid) {
    const int n = static_cast<int>(axes_.size());
    if (n < 1 || n > max_arity)
        throw arity_error("compact_box: arity must be in [1, 8]");
    if (grid_ < 2) throw domain_error("compact_box: grid must be >= 2 per axis");
    for (const auto& a : axes_) {
        if (!(a.re_lo <= a.re_hi) || !(a.im_lo <= a.im_hi))
            throw domain_error("compact_box: degenerate rectangle bounds");
    }
}

bool compact_box::in_strip() const {
    for (const auto& a : axes_)
        if (!(a.re_lo > 0.5 && a.re_hi < 1.0)) return false;
    return true;
}

std::vector<cplx> compact_box::axis_points(std::size_t j) const {
    const axis_box& a = axes_[j];
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(grid_) * grid_);
    for (int i = 0; i < grid_; ++i) {
        const double re =
            grid_ == 1 ? a.re_lo : a.re_lo + (a.re_hi - a.re_lo) * i / (grid_ - 1);
        for (int k = 0; k < grid_; ++k) {
            const double im =
                grid_ == 1 ? a.im_lo : a.im_lo + (a.im_hi - a.im_lo) * k / (grid_ - 1);
            pts.emplace_back(re, im);
        }
    }
    return pts;
}

std::vector<cplx> compact_box::axis_corners(std::size_t j) const {
    const axis_box& a = axes_[j];
    return {cplx(a.re_lo, a.im_lo), cplx(a.re_lo, a.im_hi),
            cplx(a.re_hi, a.im_lo), cplx(a.re_hi, a.im_hi)};
}

std::int64_t compact_box::total_points() const {
    std::int64_t t = 1;
    for (int j = 0; j < arity(); ++j) t *= static_cast<std::int64_t>(grid_) * grid_;
    return t;
}

// ---------------------------------------------------------------------------

cplx zeta_trunc(const multi_point& s, const param_vector& alpha, std::int64_t N) {
    require_same_arity(s, alpha);
    if (N < 0) throw domain_error("zeta_trunc: N must be >= 0");
    const int n = s.arity();
    if (static_cast<double>(n) * static_cast<double>(N + 1) > 2e8)
        throw cost_error("zeta_trunc: n*N exceeds term budget");

    /*
     * Prefix-sum recurrence: with P_j(m) = sum over 0 <= k_1 < ... < k_j <= m
     * of the first j factors,
     *     P_j(m) = P_j(m-1) + (m + alpha_j)^{-s_j} P_{j-1}(m-1),
     * P_0 == 1.  Arrays are offset by one so index 0 holds P_j(-1).
     */
    std::vector<cplx> prev(static_cast<std::size_t>(N) + 2, cplx(1.0, 0.0));
    std::vector<cplx> cur(static_cast<std::size_t>(N) + 2);
    for (int j = 0; j < n; ++j) {
        const cplx sj = s[static_cast<std::size_t>(j)];
        const double aj = alpha.value(static_cast<std::size_t>(j));
        cur[0] = 0.0;
        for (std::int64_t m = 0; m <= N; ++m) {
            const std::size_t i = static_cast<std::size_t>(m);
            cur[i + 1] = cur[i] + neg_pow(static_cast<double>(m) + aj, sj) * prev[i];
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(N) + 1];
}

namespace {

// shared recursion over gap variables g_j = k_j - k_{j-1}; `inner` consumes
// (k_last, accumulated weight) at the last smoothed level
template <typename Inner>
void gap_recurse(const multi_point& s, const param_vector& alpha, double T,
                 const smooth_cutoff& cutoff, int levels, int j,
                 std::int64_t k_prev, cplx w, Inner&& inner) {
    const std::int64_t gmax =
        static_cast<std::int64_t>(std::ceil(cutoff.support_end * T));
    const std::int64_t gmin = (j == 0) ? 0 : 1;
    const cplx sj = s[static_cast<std::size_t>(j)];
    const double aj = alpha.value(static_cast<std::size_t>(j));
    for (std::int64_t g = gmin; g <= gmax; ++g) {
        const double x = static_cast<double>(g) / T;
        if (x >= cutoff.support_end) break;
        const double wphi = cutoff(x);
        if (wphi == 0.0) continue;
        const std::int64_t k = k_prev + g;
        const cplx w2 = w * wphi * neg_pow(static_cast<double>(k) + aj, sj);
        if (j + 1 == levels)
            inner(k, w2);
        else
            gap_recurse(s, alpha, T, cutoff, levels, j + 1, k, w2, inner);
    }
}

}  // namespace

cplx zeta_smoothed(const multi_point& s, const param_vector& alpha, double T,
                   const smooth_cutoff& cutoff, double cost_cap) {
    require_same_arity(s, alpha);
    if (!(T >= 1.0)) throw domain_error("zeta_smoothed: T must be >= 1");
    const int n = s.arity();
    if (std::pow(cutoff.support_end * T, n) > cost_cap)
        throw cost_error("zeta_smoothed: (support_end*T)^n exceeds cost cap");

    cplx acc = 0.0;
    gap_recurse(s, alpha, T, cutoff, n, 0, 0, cplx(1.0, 0.0),
                [&](std::int64_t, cplx w) { acc += w; });
    return acc;
}

cplx zeta_eval_engine(const multi_point& s, const param_vector& alpha, double T,
                      const smooth_cutoff& cutoff, double cost_cap) {
    require_same_arity(s, alpha);
    const int n = s.arity();
    if (n == 1) return hurwitz_zeta(s[0], alpha[0]);
    if (!(T >= 1.0)) throw domain_error("zeta_eval_engine: T must be >= 1");
    if (std::pow(cutoff.support_end * T, n - 1) > cost_cap)
        throw cost_error("zeta_eval_engine: outer sum exceeds cost cap");

    const cplx sn = s[static_cast<std::size_t>(n - 1)];
    const double an = alpha.value(static_cast<std::size_t>(n - 1));
    const std::int64_t gmax =
        static_cast<std::int64_t>(std::ceil(cutoff.support_end * T));
    const std::int64_t kmax = static_cast<std::int64_t>(n - 1) * gmax;

    // inner continuation table zin[k] = zeta(s_n, k + 1 + alpha_n): one
    // Euler-Maclaurin call at the deepest shift, then the downward recurrence
    // zeta(s, a) = zeta(s, a+1) + a^{-s} (adds small terms; no cancellation)
    std::vector<cplx> zin(static_cast<std::size_t>(kmax) + 1);
    zin[static_cast<std::size_t>(kmax)] =
        hurwitz_zeta(sn, static_cast<double>(kmax) + 1.0 + an);
    for (std::int64_t k = kmax - 1; k >= 0; --k)
        zin[static_cast<std::size_t>(k)] =
            zin[static_cast<std::size_t>(k) + 1] +
            neg_pow(static_cast<double>(k) + 1.0 + an, sn);

    cplx acc = 0.0;
    gap_recurse(s, alpha, T, cutoff, n - 1, 0, 0, cplx(1.0, 0.0),
                [&](std::int64_t k, cplx w) {
                    acc += w * zin[static_cast<std::size_t>(k)];
                });
    return acc;
}

eval_result zeta_eval(const multi_point& s, const param_vector& alpha, double xi,
                      t_policy policy, double A, double B,
                      const smooth_cutoff& cutoff) {
    require_same_arity(s, alpha);
    if (!(xi > 0.0 && xi < 1.0)) throw domain_error("zeta_eval: xi must lie in (0,1)");

    const int n = s.arity();
    int pos = 0, neg = 0;
    for (const cplx& c : s) {
        if (c.imag() > 0.0) ++pos;
        else if (c.imag() < 0.0) ++neg;
    }
    if (pos > 0 && neg > 0)
        throw sign_error("zeta_eval: imaginary parts must share one sign");
    if (pos + neg < n)
        throw range_error("zeta_eval: zero imaginary part cannot satisfy T^xi <= Im(s)");
    if (neg == n) {
        // conjugation symmetry: zeta_n(conj s) = conj zeta_n(s)
        std::vector<cplx> cc;
        cc.reserve(static_cast<std::size_t>(n));
        for (const cplx& c : s) cc.push_back(std::conj(c));
        eval_result r = zeta_eval(multi_point(cc), alpha, xi, policy, A, B, cutoff);
        return {std::conj(r.value), r.error_estimate};
    }

    for (const cplx& c : s)
        if (std::abs(c.real()) > A + 1e-12)
            throw range_error("zeta_eval: |Re(s_j)| exceeds the configured A");

    double im_min = s[0].imag(), im_max = s[0].imag();
    for (const cplx& c : s) {
        im_min = std::min(im_min, c.imag());
        im_max = std::max(im_max, c.imag());
    }
    const double T = policy.is_auto() ? im_max : policy.T;
    if (!(T > 1.0)) throw range_error("zeta_eval: window requires T > 1");
    const double floor_ = std::pow(T, xi);
    if (im_min < floor_ - 1e-9 || im_max > T * (1.0 + 1e-12) + 1e-9)
        throw range_error("zeta_eval: no T places all Im(s_j) inside [T^xi, T]");

    return {zeta_eval_engine(s, alpha, T, cutoff), B * std::pow(T, -A)};
}

// ---------------------------------------------------------------------------
// Mellin-Barnes contour evaluation

namespace {

// Gauss-Legendre panels along one straight leg z(u) = z0 + dir*u, u in [0,len]
cplx mb_integrate_leg(const std::function<cplx(cplx)>& f, cplx z0, cplx dir,
                      double len, const contour_spec& c) {
    cplx acc = 0.0;
    double u = 0.0;
    while (u < len - 1e-12) {
        const double step = std::min(c.panel_length, len - u);
        acc += integrate_gauss(
            [&](double v) { return f(z0 + dir * cplx(v, 0.0)); }, u, u + step,
            c.quad_order);
        u += step;
    }
    return acc * dir;
}

// open-ended leg from z0 in direction dir: extend panelwise until two
// consecutive panels fall below tail_drop relative to the largest panel seen
cplx mb_integrate_tail(const std::function<cplx(cplx)>& f, cplx z0, cplx dir,
                       const contour_spec& c) {
    cplx acc = 0.0;
    double u = 0.0;
    double peak = 0.0;
    int below = 0;
    while (u < c.max_leg_span) {
        const cplx p = integrate_gauss(
            [&](double v) { return f(z0 + dir * cplx(v, 0.0)); }, u,
            u + c.panel_length, c.quad_order);
        acc += p;
        u += c.panel_length;
        const double m = std::abs(p);
        peak = std::max(peak, m);
        if (m <= c.tail_drop * peak || m < 1e-300) {
            if (++below >= 2) return acc * dir;
        } else {
            below = 0;
        }
    }
    throw convergence_error("zeta_mb: leg truncation exceeded max_leg_span budget");
}

}  // namespace

cplx zeta_mb(const multi_point& s, const param_vector& alpha,
             const contour_spec& contour, int depth) {
    require_same_arity(s, alpha);
    const int n = s.arity();
    if (n < 2) throw arity_error("zeta_mb: requires arity >= 2");

    int pos = 0, neg = 0;
    for (const cplx& c : s) {
        if (c.imag() > 0.0) ++pos;
        else if (c.imag() < 0.0) ++neg;
    }
    if (pos > 0 && neg > 0)
        throw sign_error("zeta_mb: imaginary parts must share one sign");
    if (pos + neg < n) throw range_error("zeta_mb: imaginary parts must be nonzero");
    if (neg == n) {
        std::vector<cplx> cc;
        for (const cplx& c : s) cc.push_back(std::conj(c));
        return std::conj(zeta_mb(multi_point(cc), alpha, contour, depth));
    }

    const double a_inner = 1.0 + alpha.value(static_cast<std::size_t>(n - 1)) -
                           alpha.value(static_cast<std::size_t>(n - 2));
    if (!(a_inner > 0.0))
        throw contour_error(
            "zeta_mb: 1 + alpha_n - alpha_{n-1} must be positive for the inner "
            "zeta factor");

    const double N = contour.leg_half_width;
    if (!(N > 1.0)) throw contour_error("zeta_mb: leg half-width must exceed 1");
    if (std::abs(N - std::round(N)) < 0.05)
        throw contour_error(
            "zeta_mb: leg half-width must stay clear of integers (Gamma poles "
            "on the verticals)");
    if (contour.quad_order != 16 && contour.quad_order != 32)
        throw domain_error("zeta_mb: quad_order must be 16 or 32");

    double im_max = 0.0;
    for (const cplx& c : s) im_max = std::max(im_max, std::abs(c.imag()));
    const double T = contour.T > 0.0 ? contour.T : im_max;
    const cplx sn = s[static_cast<std::size_t>(n - 1)];
    const double tn = sn.imag();
    if (!(T > 1.0) || tn < std::pow(T, contour.xi) - 1e-9 ||
        tn > T * (1.0 + 1e-12) + 1e-9)
        throw range_error("zeta_mb: Im(s_n) outside the window [T^xi, T]");
    const double y0 = std::pow(T, contour.xi / 2.0);

    // the (n-1)-variable factor at shifted last coordinate s_{n-1} + s_n - z
    std::vector<cplx> head(s.begin(), s.end() - 1);
    std::vector<hurwitz_param> head_alpha(alpha.begin(), alpha.end() - 1);
    const param_vector alpha_in(head_alpha);
    const cplx w0 = s[static_cast<std::size_t>(n - 2)] + sn;

    // the moving poles z = s_n + k and z = s_{n-1} + s_n - 1 must stay right
    // of the left verticals for the contour to separate the pole sets
    if (sn.real() <= -N + 0.1 || w0.real() - 1.0 <= -N + 0.1)
        throw contour_error("zeta_mb: moving poles collide with the left legs");

    auto inner_zeta = [&](cplx z) -> cplx {
        const cplx w = w0 - z;
        if (n == 2) return hurwitz_zeta(w, alpha_in[0]);
        std::vector<cplx> coords = head;
        coords.back() = w;
        const multi_point inner_pt{coords};
        if (depth > 1) {
            try {
                return zeta_mb(inner_pt, alpha_in, contour_spec{}, depth - 1);
            } catch (const error&) {
                // point left the recursive contour's window; engine fallback
            }
        }
        double t_in = 2.0;
        for (const cplx& c : coords) t_in = std::max(t_in, std::abs(c.imag()));
        return zeta_eval_engine(inner_pt, alpha_in, t_in);
    };

    auto f = [&](cplx z) -> cplx {
        const cplx b = beta_factor(z, sn);
        if (b == cplx(0.0, 0.0)) return 0.0;
        return b * hurwitz_zeta(z, a_inner) * inner_zeta(z);
    };

    const cplx up(0.0, 1.0);
    // I1: lower-left vertical, descending from -N - i y0 (reversed: negate)
    const cplx i1 = -mb_integrate_tail(f, cplx(-N, -y0), -up, contour);
    // I2: bottom horizontal, -N - i y0 -> N - i y0
    const cplx i2 = mb_integrate_leg(f, cplx(-N, -y0), cplx(1.0, 0.0), 2.0 * N, contour);
    // I3: right vertical, N - i y0 -> N + i y0
    const cplx i3 = mb_integrate_leg(f, cplx(N, -y0), up, 2.0 * y0, contour);
    // I4: top horizontal, N + i y0 -> -N + i y0
    const cplx i4 = mb_integrate_leg(f, cplx(N, y0), cplx(-1.0, 0.0), 2.0 * N, contour);
    // I5: upper-left vertical, ascending from -N + i y0
    const cplx i5 = mb_integrate_tail(f, cplx(-N, y0), up, contour);

    const double two_pi = 2.0 * std::numbers::pi;
    return (i1 + i2 + i3 + i4 + i5) / (cplx(0.0, two_pi));
}

cplx zeta_diag_powersum(cplx s, const hurwitz_param& alpha, int n, std::int64_t N) {
    if (n != 2 && n != 3) throw arity_error("zeta_diag_powersum: n must be 2 or 3");
    if (N < 0) throw domain_error("zeta_diag_powersum: N must be >= 0");
    const double a = alpha.value();
    cplx s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::int64_t k = 0; k <= N; ++k) {
        const double r = static_cast<double>(k) + a;
        const cplx t1 = neg_pow(r, s);
        s1 += t1;
        s2 += t1 * t1;
        if (n == 3) s3 += t1 * t1 * t1;
    }
    if (n == 2) return (s1 * s1 - s2) / 2.0;
    return (s1 * s1 * s1 - 3.0 * s1 * s2 + 2.0 * s3) / 6.0;
}

}  // namespace mhz
