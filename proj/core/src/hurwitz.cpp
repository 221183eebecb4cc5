#include "mhz/hurwitz.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "mhz/primes.hpp"

namespace mhz {

hurwitz_param hurwitz_param::rational(std::int64_t c, std::int64_t d) {
    if (c <= 0 || d <= 0)
        throw domain_error("hurwitz_param: rational c/d needs c, d > 0");
    const std::int64_t g = gcd64(c, d);
    hurwitz_param p;
    p.rational_ = true;
    p.c_ = c / g;
    p.d_ = d / g;
    p.value_ = static_cast<double>(p.c_) / static_cast<double>(p.d_);
    return p;
}

hurwitz_param hurwitz_param::transcendental(double value) {
    if (!(value > 0.0))
        throw domain_error("hurwitz_param: requires alpha > 0");
    hurwitz_param p;
    p.rational_ = false;
    p.value_ = value;
    return p;
}

std::int64_t hurwitz_param::num() const {
    if (!rational_) throw domain_error("hurwitz_param: not rational");
    return c_;
}

std::int64_t hurwitz_param::den() const {
    if (!rational_) throw domain_error("hurwitz_param: not rational");
    return d_;
}

std::string hurwitz_param::str() const {
    // rationals keep the slash even for c/1, so the two kinds never collide
    std::ostringstream os;
    if (rational_)
        os << c_ << "/" << d_;
    else
        os << value_;
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// B_2 .. B_12
constexpr std::array<double, 6> bernoulli2k = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};

// factorials (2k)! for k = 1..6
constexpr std::array<double, 6> fact2k = {2.0, 24.0, 720.0, 40320.0,
                                          3628800.0, 479001600.0};

inline cplx cpow(double base, cplx e) {
    // base > 0
    return std::exp(e * std::log(base));
}

}  // namespace

cplx hurwitz_zeta(cplx s, double alpha, int em_terms, int bernoulli_order) {
    if (!(alpha > 0.0)) throw domain_error("hurwitz_zeta: requires alpha > 0");
    if (std::abs(s - cplx(1.0, 0.0)) <= 1e-12)
        throw pole_error("hurwitz_zeta: pole at s = 1");
    const int M = em_terms > 0
                      ? em_terms
                      : std::max(50, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
    const int J = std::max(1, std::min(6, bernoulli_order / 2));

    cplx main = 0.0;
    for (int k = M - 1; k >= 0; --k)  // ascending magnitude for Re(s) > 0
        main += cpow(k + alpha, -s);

    const double x = M + alpha;
    const cplx xs = cpow(x, -s);
    cplx tail = cpow(x, 1.0 - s) / (s - 1.0) + 0.5 * xs;

    // Bernoulli corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
    cplx rising = s;          // s ... (s+2j-2), updated per j
    cplx xpow = xs / x;       // x^(-s-2j+1), starts at x^(-s-1)
    for (int j = 1; j <= J; ++j) {
        tail += bernoulli2k[j - 1] / fact2k[j - 1] * rising * xpow;
        if (j < J) {
            rising *= (s + cplx(2.0 * j - 1.0)) * (s + cplx(2.0 * j));
            xpow /= x * x;
        }
    }
    return main + tail;
}

cplx hurwitz_zeta(cplx s, const hurwitz_param& alpha, int em_terms,
                  int bernoulli_order) {
    return hurwitz_zeta(s, alpha.value(), em_terms, bernoulli_order);
}

cplx hurwitz_zeta_ds(cplx s, double alpha, int em_terms, int bernoulli_order) {
    // central difference is enough for Newton refinement; h tuned for ~1e-9
    const double h = 1e-6;
    const cplx fp = hurwitz_zeta(s + cplx(h, 0.0), alpha, em_terms, bernoulli_order);
    const cplx fm = hurwitz_zeta(s - cplx(h, 0.0), alpha, em_terms, bernoulli_order);
    return (fp - fm) / (2.0 * h);
}

cplx hurwitz_smoothed(cplx s, const hurwitz_param& alpha, double T,
                      const smooth_cutoff& phi) {
    if (!(T >= 1.0)) throw domain_error("hurwitz_smoothed: requires T >= 1");
    const double a = alpha.value();
    const double xmax = phi.support_end * T;
    const std::int64_t nmax = static_cast<std::int64_t>(std::ceil(xmax - a));
    cplx acc = 0.0;
    if (s.real() > 0.0) {
        for (std::int64_t n = nmax; n >= 0; --n) {  // ascending magnitude
            const double x = n + a;
            const double w = phi(x / T);
            if (w != 0.0) acc += w * cpow(x, -s);
        }
    } else {
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const double x = n + a;
            const double w = phi(x / T);
            if (w != 0.0) acc += w * cpow(x, -s);
        }
    }
    return acc;
}

afe_result hurwitz_afe(cplx s, const hurwitz_param& alpha, double T, double xi,
                       double A, const smooth_cutoff& phi) {
    if (!(T >= 2.0)) throw domain_error("hurwitz_afe: requires T >= 2");
    if (!(xi > 0.0 && xi < 1.0)) throw domain_error("hurwitz_afe: xi in (0,1)");
    const double t = std::abs(s.imag());
    if (t > T) throw range_error("hurwitz_afe: |Im s| > T outside window");
    if (std::abs(s.real()) > A)
        throw range_error("hurwitz_afe: |Re s| exceeds configured A");
    const double lower = std::pow(T, xi);
    (void)phi;  // the cutoff shapes the bound's constants, not the value
    afe_result r;
    r.value = hurwitz_zeta(s, alpha);
    if (t >= lower) {
        r.regime = afe_regime::far_from_one;
        r.error_estimate = std::pow(T, -A);
    } else {
        r.regime = afe_regime::near_one;
        const double dist = std::abs(s - cplx(1.0, 0.0));
        const double inv = dist < 1e-12 ? 1e12 : 1.0 / dist;
        r.error_estimate = (1.0 + inv) * std::pow(T, 1.0 - s.real());
    }
    return r;
}

}  // namespace mhz
