#include "mhz/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mhz/primes.hpp"

namespace mhz {

namespace {

// snap tiny floating fuzz so exact-root-of-unity tables stay exact
double snap(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 4e-16) return r;
    const double h = std::round(2.0 * x) / 2.0;
    if (std::abs(x - h) <= 4e-16) return h;
    return x;
}

cplx unit_root(std::int64_t num, std::int64_t den) {
    // e^{2 pi i num/den}
    std::int64_t r = num % den;
    if (r < 0) r += den;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(den);
    return cplx(snap(std::cos(angle)), snap(std::sin(angle)));
}

// one cyclic factor of (Z/q)^*: modulus p^k, generator, order, and the
// discrete-log table residue -> exponent (-1 when outside <gen>)
struct cyclic_component {
    std::int64_t modulus;
    std::int64_t order;
    std::vector<std::int64_t> dlog;
    bool half_of_pair = false;  // true for the <-1> factor of 2^k, k >= 3
};

cyclic_component make_component(std::int64_t pk, std::int64_t gen,
                                std::int64_t order, bool pair_head = false) {
    cyclic_component c{pk, order,
                       std::vector<std::int64_t>(static_cast<std::size_t>(pk), -1),
                       pair_head};
    std::int64_t x = 1 % pk;
    for (std::int64_t e = 0; e < order; ++e) {
        c.dlog[static_cast<std::size_t>(x)] = e;
        x = x * gen % pk;
    }
    return c;
}

}  // namespace

std::vector<dirichlet_character> character_table(std::int64_t q) {
    if (q < 1 || q > 1000000)
        throw domain_error("character_table: q must be in [1, 1e6]");

    std::vector<cyclic_component> comps;
    for (auto [p, e] : factorize(q)) {
        std::int64_t pk = 1;
        for (int i = 0; i < e; ++i) pk *= p;
        if (p == 2) {
            if (e == 1) continue;  // (Z/2)^* trivial
            if (e == 2) {
                comps.push_back(make_component(4, 3, 2));
            } else {
                // (Z/2^k)^* = <-1> x <5>
                comps.push_back(make_component(pk, pk - 1, 2, true));
                comps.push_back(make_component(pk, 5, pk / 4));
            }
        } else {
            comps.push_back(make_component(pk, primitive_root(pk, p),
                                           phi_prime_power(p, e)));
        }
    }

    const std::size_t ncomp = comps.size();
    std::int64_t total = 1;
    for (const auto& c : comps) total *= c.order;

    // exponent tuple of every residue coprime to q (empty vector = not coprime)
    std::vector<std::vector<std::int64_t>> res_exp(static_cast<std::size_t>(q));
    std::vector<bool> coprime(static_cast<std::size_t>(q), false);
    for (std::int64_t x = 0; x < q; ++x) {
        if (gcd64(x, q) != 1) continue;
        coprime[static_cast<std::size_t>(x)] = true;
        std::vector<std::int64_t> tup(ncomp, 0);
        std::size_t i = 0;
        while (i < ncomp) {
            const auto& c = comps[i];
            const std::int64_t r = x % c.modulus;
            if (c.half_of_pair) {
                // x = (-1)^a 5^b mod 2^k
                const auto& five = comps[i + 1];
                std::int64_t b = five.dlog[static_cast<std::size_t>(r)];
                if (b >= 0) {
                    tup[i] = 0;
                } else {
                    b = five.dlog[static_cast<std::size_t>(c.modulus - r)];
                    tup[i] = 1;
                }
                tup[i + 1] = b;
                i += 2;
            } else {
                tup[i] = c.dlog[static_cast<std::size_t>(r)];
                ++i;
            }
        }
        res_exp[static_cast<std::size_t>(x)] = std::move(tup);
    }

    std::vector<dirichlet_character> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::int64_t> a(ncomp, 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        dirichlet_character chi;
        chi.q = q;
        chi.values.assign(static_cast<std::size_t>(q), cplx(0.0, 0.0));
        bool principal = true;
        for (std::size_t i = 0; i < ncomp; ++i)
            if (a[i] != 0) principal = false;
        for (std::int64_t x = 0; x < q; ++x) {
            if (!coprime[static_cast<std::size_t>(x)]) continue;
            const auto& tup = res_exp[static_cast<std::size_t>(x)];
            // chi(x) = e^{2 pi i sum_i a_i l_i / order_i}, kept as an exact
            // reduced fraction before the single trig evaluation
            std::int64_t num = 0, den = 1;
            for (std::size_t i = 0; i < ncomp; ++i) {
                const std::int64_t oi = comps[i].order;
                num = num * oi + a[i] * tup[i] % oi * den;
                den *= oi;
                const std::int64_t g = gcd64(num, den);
                if (g > 1) {
                    num /= g;
                    den /= g;
                }
            }
            chi.values[static_cast<std::size_t>(x)] = unit_root(num, den);
        }
        chi.principal = principal;
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < ncomp; ++i) {
            const std::int64_t oi = comps[i].order / gcd64(a[i], comps[i].order);
            ord = ord / gcd64(ord, oi) * oi;
        }
        chi.order = static_cast<int>(ord);
        out.push_back(std::move(chi));

        for (std::size_t i = ncomp; i-- > 0;) {
            if (++a[i] < comps[i].order) break;
            a[i] = 0;
        }
    }
    return out;
}

cplx dirichlet_L(cplx s, const dirichlet_character& chi) {
    const std::int64_t q = chi.q;
    if (std::abs(s - cplx(1.0, 0.0)) <= 1e-12) {
        if (chi.principal) throw pole_error("dirichlet_L: pole at s = 1");
        // Hurwitz pole terms cancel (sum chi(a) = 0); take the limit via
        // zeta(s, x) = 1/(s-1) - psi(x) + O(s-1)
        cplx acc = 0.0;
        for (std::int64_t a = 1; a <= q; ++a) {
            const cplx c = chi(a);
            if (c != 0.0)
                acc += c * digamma(static_cast<double>(a) / static_cast<double>(q));
        }
        return -acc / static_cast<double>(q);
    }
    cplx acc = 0.0;
    for (std::int64_t a = 1; a <= q; ++a) {
        const cplx c = chi(a);
        if (c != 0.0)
            acc += c * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
    }
    return std::exp(-s * std::log(static_cast<double>(q))) * acc;
}

zero_scan_report permissibility_scan(const dirichlet_character& chi,
                                     double re_lo, double re_hi, double im_lo,
                                     double im_hi, int grid,
                                     double threshold) {
    if (!(re_lo < re_hi && im_lo < im_hi && grid >= 2))
        throw domain_error("permissibility_scan: bad rectangle/grid");
    zero_scan_report rep;
    rep.threshold = threshold;
    rep.min_modulus = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const double re = re_lo + (re_hi - re_lo) * i / (grid - 1);
            const double im = im_lo + (im_hi - im_lo) * j / (grid - 1);
            const cplx s(re, im);
            if (std::abs(s - cplx(1.0, 0.0)) <= 1e-9) continue;
            const double m = std::abs(dirichlet_L(s, chi));
            if (m < rep.min_modulus) {
                rep.min_modulus = m;
                rep.argmin = s;
            }
        }
    }
    rep.verdict = rep.min_modulus > threshold;
    return rep;
}

}  // namespace mhz
