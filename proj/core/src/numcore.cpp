#include "mhz/numcore.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mhz {

namespace {

// Lanczos g = 7, 9-term coefficient set (Godfrey).  Relative error of the
// kernel is ~1e-15 on Re(z) >= 1/2; end-to-end accuracy is limited by the
// power/exp evaluations to ~1e-13.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};

cplx lanczos_series(cplx z) {
    // z with Re(z) >= 1/2, shifted argument convention A(z) = c0 + sum ck/(z-1+k)
    cplx acc = lanczos_c[0];
    for (std::size_t k = 1; k < lanczos_c.size(); ++k)
        acc += lanczos_c[k] / (z - 1.0 + static_cast<double>(k));
    return acc;
}

// log Gamma on Re(z) >= 1/2 via the Lanczos log form.
cplx log_gamma_right(cplx z) {
    const cplx t = z + (lanczos_g - 0.5);
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z - 0.5) * std::log(t) - t +
           std::log(lanczos_series(z));
}

// log( sin(pi z) ) without overflow for large |Im z|:
// sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); factor out the dominant
// exponential so only O(1) quantities are exponentiated.
cplx log_sin_pi(cplx z) {
    const cplx ipz = cplx(0.0, std::numbers::pi) * z;
    if (z.imag() > 0) {
        // dominant term e^{-i pi z}
        return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / cplx(0.0, 2.0));
    }
    return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / cplx(0.0, 2.0));
}

}  // namespace

bool near_gamma_pole(cplx z, double guard) {
    if (z.real() > 0.5 || std::abs(z.imag()) > guard) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= guard;
}

cplx log_gamma(cplx z) {
    if (near_gamma_pole(z))
        throw pole_error("log_gamma: argument at a non-positive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) {
    if (near_gamma_pole(z))
        throw pole_error("gamma: argument at a non-positive integer");
    // direct product form where it cannot overflow, log form elsewhere
    if (std::abs(z.imag()) <= 20.0 && std::abs(z.real()) <= 140.0) {
        if (z.real() >= 0.5) {
            const cplx t = z + (lanczos_g - 0.5);
            return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z - 0.5) *
                   std::exp(-t) * lanczos_series(z);
        }
        return std::numbers::pi /
               (std::sin(std::numbers::pi * z) * gamma(1.0 - z));
    }
    return std::exp(log_gamma(z));
}

cplx beta_factor(cplx z, cplx s) {
    if (near_gamma_pole(z))
        throw pole_error("beta_factor: z at a Gamma pole");
    if (near_gamma_pole(s - z))
        throw pole_error("beta_factor: s - z at a Gamma pole");
    if (near_gamma_pole(s)) return cplx(0.0, 0.0);  // 1/Gamma(s) = 0
    return std::exp(log_gamma(z) + log_gamma(s - z) - log_gamma(s));
}

double digamma(double x) {
    if (!(x > 0.0)) throw pole_error("digamma: requires x > 0");
    // recurrence up to x >= 10, then the asymptotic series
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    double series = std::log(x) - 0.5 * inv;
    series -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + series;
}

// ---------------------------------------------------------------------------

smooth_cutoff::smooth_cutoff(double plateau, double support)
    : plateau_end(plateau), support_end(support) {
    if (!(0.0 < plateau_end && plateau_end < support_end))
        throw domain_error("smooth_cutoff: need 0 < plateau_end < support_end");
}

double smooth_cutoff::operator()(double x) const {
    if (x <= plateau_end) return 1.0;
    if (x >= support_end) return 0.0;
    const double u = (x - plateau_end) / (support_end - plateau_end);
    const double fa = std::exp(-1.0 / (1.0 - u));
    const double fb = std::exp(-1.0 / u);
    return fa / (fa + fb);
}

double smooth_cutoff::derivative(double x) const {
    if (x <= plateau_end || x >= support_end) return 0.0;
    const double w = support_end - plateau_end;
    const double u = (x - plateau_end) / w;
    const double fa = std::exp(-1.0 / (1.0 - u));   // f(1-u)
    const double fb = std::exp(-1.0 / u);           // f(u)
    const double dfa = -fa / ((1.0 - u) * (1.0 - u));  // d/du f(1-u)
    const double dfb = fb / (u * u);                   // d/du f(u)
    const double denom = (fa + fb) * (fa + fb);
    return ((dfa * fb - fa * dfb) / denom) / w;
}

cplx phi_mellin(cplx z, const smooth_cutoff& phi) {
    if (!(z.real() > 0.0))
        throw domain_error("phi_mellin: requires Re(z) > 0");
    // phi == 1 on [0, plateau_end], so that piece integrates in closed form
    // to a^z / z (also sidesteps x^(z-1) blowing up near 0 for Re(z) < 1);
    // only the C-infinity bridge needs quadrature.
    const double a = phi.plateau_end, b = phi.support_end;
    auto bridge = [&](double x) -> cplx {
        return std::pow(cplx(x, 0.0), z - 1.0) * phi(x);
    };
    const cplx head = std::pow(cplx(a, 0.0), z) / z;
    const cplx tail = integrate_adaptive(bridge, a, b, 5e-11);
    return head + tail;
}

// ---------------------------------------------------------------------------

namespace {

struct simpson_frame {
    double a, b;
    cplx fa, fm, fb;
    cplx whole;
};

cplx simpson(double a, double b, cplx fa, cplx fm, cplx fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

cplx adaptive_step(const std::function<cplx(double)>& f, simpson_frame fr,
                   double tol, int depth) {
    const double m = 0.5 * (fr.a + fr.b);
    const double lm = 0.5 * (fr.a + m), rm = 0.5 * (m + fr.b);
    const cplx flm = f(lm), frm = f(rm);
    const cplx left = simpson(fr.a, m, fr.fa, flm, fr.fm);
    const cplx right = simpson(m, fr.b, fr.fm, frm, fr.fb);
    const cplx delta = left + right - fr.whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol)
            throw convergence_error("integrate_adaptive: depth exhausted");
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, {fr.a, m, fr.fa, flm, fr.fm, left}, 0.5 * tol, depth - 1) +
           adaptive_step(f, {m, fr.b, fr.fm, frm, fr.fb, right}, 0.5 * tol, depth - 1);
}

// Gauss-Legendre nodes/weights on [-1,1], orders 16 and 32 (symmetric halves).
constexpr std::array<double, 8> gl16_x = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> gl16_w = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};
constexpr std::array<double, 16> gl32_x = {
    0.0483076656877383, 0.1444719615827965, 0.2392873622521371,
    0.3318686022821277, 0.4213512761306353, 0.5068999089322294,
    0.5877157572407623, 0.6630442669302152, 0.7321821187402897,
    0.7944837959679424, 0.8493676137325700, 0.8963211557660521,
    0.9349060759377397, 0.9647622555875064, 0.9856115115452684,
    0.9972638618494816};
constexpr std::array<double, 16> gl32_w = {
    0.0965400885147278, 0.0956387200792749, 0.0938443990808046,
    0.0911738786957639, 0.0876520930044038, 0.0833119242269467,
    0.0781938957870703, 0.0723457941088485, 0.0658222227763618,
    0.0586840934785355, 0.0509980592623762, 0.0428358980222267,
    0.0342738629130214, 0.0253920653092621, 0.0162743947309057,
    0.0070186100094701};

template <std::size_t K>
cplx gauss_on(const std::function<cplx(double)>& f, double a, double b,
              const std::array<double, K>& xs, const std::array<double, K>& ws) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
        acc += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
    }
    return acc * half;
}

}  // namespace

cplx integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const cplx fa = f(a), fm = f(m), fb = f(b);
    return adaptive_step(f, {a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)},
                         abs_tol, max_depth);
}

cplx integrate_gauss(const std::function<cplx(double)>& f, double a, double b,
                     int order) {
    if (order <= 16) return gauss_on(f, a, b, gl16_x, gl16_w);
    return gauss_on(f, a, b, gl32_x, gl32_w);
}

panel_result integrate_panels(const std::function<cplx(double)>& f, double a,
                              double b, double panel) {
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    const double h = (b - a) / n;
    cplx total = 0.0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = a + i * h, hi = a + (i + 1) * h;
        const cplx v32 = gauss_on(f, lo, hi, gl32_x, gl32_w);
        const cplx v16 = gauss_on(f, lo, hi, gl16_x, gl16_w);
        total += v32;
        err += std::abs(v32 - v16);
    }
    return {total, err};
}

}  // namespace mhz
