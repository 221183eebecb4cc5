#include "mhz/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

namespace mhz {

namespace {

// cancel exact +/- pairs first, then sum what survives; exact_zero means the
// list vanishes with no floating tolerance involved
struct cancel_result {
    cplx sum;
    bool exact_zero;
};

cancel_result exact_cancel_sum(std::vector<cplx> v) {
    std::vector<bool> dead(v.size(), false);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (dead[j]) continue;
            if (v[i].real() == -v[j].real() && v[i].imag() == -v[j].imag()) {
                dead[i] = dead[j] = true;
                break;
            }
        }
    }
    cplx sum = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!dead[i]) {
            sum += v[i];
            any = true;
        }
    }
    return {sum, !any || sum == cplx(0.0, 0.0)};
}

// modulus extrema of one coordinate over its rectangle: the minimum is at
// the point of the rectangle nearest the origin (possibly on an edge), the
// maximum at the farthest corner
double axis_min_mod(const axis_box& a) {
    const double re = std::clamp(0.0, a.re_lo, a.re_hi);
    const double im = std::clamp(0.0, a.im_lo, a.im_hi);
    return std::hypot(re, im);
}

double axis_max_mod(const axis_box& a) {
    double m = 0.0;
    for (double re : {a.re_lo, a.re_hi})
        for (double im : {a.im_lo, a.im_hi}) m = std::max(m, std::hypot(re, im));
    return m;
}

}  // namespace

polynomial::polynomial(int arity, std::vector<poly_term> terms) : arity_(arity) {
    if (arity_ < 1 || arity_ > max_arity)
        throw arity_error("polynomial: arity must be in [1, 8]");
    for (auto& t : terms) {
        if (static_cast<int>(t.exps.size()) != arity_)
            throw arity_error("polynomial: exponent tuple arity mismatch");
        for (int e : t.exps)
            if (e < 0 || e > 64)
                throw domain_error("polynomial: exponents must lie in [0, 64]");
        if (!is_finite(t.coeff))
            throw domain_error("polynomial: non-finite coefficient");
        if (t.coeff == cplx(0.0, 0.0)) continue;
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const poly_term& u) {
            return u.exps == t.exps;
        });
        if (it == terms_.end())
            terms_.push_back(std::move(t));
        else
            it->coeff += t.coeff;
    }
    // merging may have produced zeros; drop them
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const poly_term& t) {
                                    return t.coeff == cplx(0.0, 0.0);
                                }),
                 terms_.end());
}

int polynomial::degree() const {
    int d = 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (int e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

cplx polynomial::eval(const std::vector<cplx>& s) const {
    if (static_cast<int>(s.size()) != arity_)
        throw arity_error("polynomial::eval: point arity mismatch");
    cplx acc = 0.0;
    for (const auto& t : terms_) {
        cplx m = t.coeff;
        for (int j = 0; j < arity_; ++j)
            for (int e = 0; e < t.exps[static_cast<std::size_t>(j)]; ++e)
                m *= s[static_cast<std::size_t>(j)];
        acc += m;
    }
    return acc;
}

cplx polynomial::eval(const multi_point& s) const { return eval(s.coords()); }

std::string polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (i > 0) out += " + ";
        if (t.coeff.imag() == 0.0)
            std::snprintf(buf, sizeof buf, "%g", t.coeff.real());
        else
            std::snprintf(buf, sizeof buf, "(%g%+gi)", t.coeff.real(),
                          t.coeff.imag());
        out += buf;
        for (int j = 0; j < arity_; ++j) {
            const int e = t.exps[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            std::snprintf(buf, sizeof buf, "*s%d", j + 1);
            out += buf;
            if (e > 1) {
                std::snprintf(buf, sizeof buf, "^%d", e);
                out += buf;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

monomial_tableau decompose(const polynomial& p, double C, const compact_box& box) {
    const int n = p.arity();
    if (n < 2) throw arity_error("decompose: arity must be >= 2");
    if (!(C > 0.0)) throw domain_error("decompose: C must be positive");
    if (box.arity() != n) throw arity_error("decompose: box arity mismatch");

    monomial_tableau t;
    t.arity = n;
    if (p.zero()) return t;  // M = 0, empty tableau

    const auto& terms = p.terms();
    const std::int64_t L = static_cast<std::int64_t>(terms.size());

    std::vector<double> min_mod(static_cast<std::size_t>(n));
    std::vector<double> max_mod(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        min_mod[static_cast<std::size_t>(j)] = axis_min_mod(box.axis(static_cast<std::size_t>(j)));
        max_mod[static_cast<std::size_t>(j)] = axis_max_mod(box.axis(static_cast<std::size_t>(j)));
    }

    /*
     * Smallest B = 2^k with, over the box,
     *   (1)  B^{n-1} |a_l| min|s_1^{c_{1,l}}|  >  C   for every term, and
     *   (2)  max|s_j^{c_{j,l}}| / B  <=  1            for rows j >= 2.
     * Both constraints are monotone in B, so scan k upward.
     */
    double B = 1.0;
    bool found = false;
    for (int k = 0; k <= 62; ++k, B *= 2.0) {
        bool ok = true;
        for (const auto& term : terms) {
            const double m1 = std::pow(min_mod[0], term.exps[0]);
            if (!(std::pow(B, n - 1) * std::abs(term.coeff) * m1 > C)) ok = false;
            for (int j = 1; j < n && ok; ++j) {
                const double mj = std::pow(max_mod[static_cast<std::size_t>(j)],
                                           term.exps[static_cast<std::size_t>(j)]);
                if (!(mj / B <= 1.0)) ok = false;
            }
            if (!ok) break;
        }
        if (ok) {
            found = true;
            break;
        }
    }
    if (!found)
        throw range_error(
            "decompose: no power-of-two scale satisfies the box conditions "
            "(variable-1 modulus may vanish on the box)");

    t.B = B;
    t.M = 2 * static_cast<std::int64_t>(n) * L - 1;
    const double row1_scale = std::pow(B, n - 1);  // exact: power of two
    for (std::int64_t l = 0; l < L; ++l) {
        const auto& term = terms[static_cast<std::size_t>(l)];
        const std::int64_t b = 2 * static_cast<std::int64_t>(n) * l;
        for (int i = 1; i <= n - 1; ++i) {
            const int j = n + 1 - i;  // rows n, n-1, ..., 2
            t.slots.push_back({b + i, j, cplx(-1.0 / B, 0.0),
                               term.exps[static_cast<std::size_t>(j - 1)]});
        }
        t.slots.push_back({b + n, 1, term.coeff * row1_scale, term.exps[0]});
        for (int i = 1; i <= n - 1; ++i) {
            const int j = i + 1;  // rows 2, 3, ..., n
            t.slots.push_back({b + n + i, j, cplx(1.0 / B, 0.0),
                               term.exps[static_cast<std::size_t>(j - 1)]});
        }
        if (l + 1 < L)
            t.slots.push_back({b + 2 * n, 1, -term.coeff * row1_scale, term.exps[0]});
    }
    return t;
}

// ---------------------------------------------------------------------------

namespace {

struct row_entry {
    std::int64_t m;
    cplx coeff;
    int exp;
};

using expansion_map = std::map<std::vector<int>, std::vector<cplx>>;

// accumulate ordered products over rows row..n (1-based), slots strictly
// increasing in m, into contributions keyed by exponent tuple
void expand_rows(const std::vector<std::vector<row_entry>>& rows, int arity,
                 int row, std::int64_t min_m, cplx coeff,
                 std::vector<int>& exps, expansion_map& out) {
    if (row > arity) {
        out[exps].push_back(coeff);
        return;
    }
    for (const auto& e : rows[static_cast<std::size_t>(row - 1)]) {
        if (e.m <= min_m) continue;
        exps[static_cast<std::size_t>(row - 1)] = e.exp;
        expand_rows(rows, arity, row + 1, e.m, coeff * e.coeff, exps, out);
        exps[static_cast<std::size_t>(row - 1)] = 0;
    }
}

verification_report verify_impl(const monomial_tableau& t, const polynomial& p,
                                const compact_box* box, double C) {
    const int n = t.arity;
    if (p.arity() != n) throw arity_error("verify_tableau: arity mismatch");

    verification_report rep;
    if (t.M == 0) {
        // empty tableau decomposes the zero polynomial
        rep.product_identity = p.zero();
        rep.tail_vanishing = true;
        rep.prefix_monomial = true;
        rep.box_conditions = true;
        rep.box_checked = box != nullptr;
        return rep;
    }

    // structural sanity: every slot once, ascending, owners in range
    if (static_cast<std::int64_t>(t.slots.size()) != t.M)
        throw domain_error("verify_tableau: slot count differs from M");
    for (std::size_t i = 0; i < t.slots.size(); ++i) {
        const auto& s = t.slots[i];
        if (s.m != static_cast<std::int64_t>(i) + 1)
            throw domain_error("verify_tableau: slot indices must be 1..M ascending");
        if (s.row < 1 || s.row > n)
            throw domain_error("verify_tableau: slot owner out of range");
        if (s.exp < 0) throw domain_error("verify_tableau: negative exponent");
    }

    std::vector<std::vector<row_entry>> rows(static_cast<std::size_t>(n));
    for (const auto& s : t.slots)
        rows[static_cast<std::size_t>(s.row - 1)].push_back({s.m, s.coeff, s.exp});

    double work = 1.0;
    for (const auto& r : rows) work *= static_cast<double>(r.size() + 1);
    if (work > 2e7) throw cost_error("verify_tableau: expansion too large");

    // (i) ordered products reconstruct p
    {
        expansion_map acc;
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        expand_rows(rows, n, 1, 0, cplx(1.0, 0.0), exps, acc);
        for (const auto& term : p.terms()) acc[term.exps].push_back(-term.coeff);
        rep.product_identity = true;
        for (auto& [key, contribs] : acc)
            if (!exact_cancel_sum(contribs).exact_zero) rep.product_identity = false;
    }

    // (ii) tail products over rows v..n vanish identically
    rep.tail_vanishing = true;
    for (int v = 2; v <= n; ++v) {
        expansion_map acc;
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        expand_rows(rows, n, v, 0, cplx(1.0, 0.0), exps, acc);
        bool zero = true;
        for (auto& [key, contribs] : acc)
            if (!exact_cancel_sum(contribs).exact_zero) zero = false;
        if (!zero) {
            rep.tail_vanishing = false;
            rep.tail_violation_v = v;
            break;
        }
    }

    // (iii) every row prefix is a single monomial or zero; collect the
    // distinct nonzero prefixes for the box conditions
    rep.prefix_monomial = true;
    std::vector<std::vector<std::pair<cplx, int>>> prefixes(
        static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        std::map<int, cplx> running;  // exponent -> exact coefficient sum
        for (const auto& e : rows[static_cast<std::size_t>(j - 1)]) {
            running[e.exp] += e.coeff;
            int nonzero = 0;
            for (const auto& [exp, c] : running) {
                if (c != cplx(0.0, 0.0)) {
                    ++nonzero;
                    prefixes[static_cast<std::size_t>(j - 1)].push_back({c, exp});
                }
            }
            if (nonzero > 1) rep.prefix_monomial = false;
        }
    }

    // (iv) modulus conditions on the box, certified through per-axis extrema
    if (box != nullptr) {
        rep.box_checked = true;
        if (box->arity() != n) throw arity_error("verify_tableau: box arity mismatch");
        double worst1 = std::numeric_limits<double>::infinity();
        double worst2 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double mn = axis_min_mod(box->axis(static_cast<std::size_t>(j - 1)));
            const double mx = axis_max_mod(box->axis(static_cast<std::size_t>(j - 1)));
            for (const auto& [c, exp] : prefixes[static_cast<std::size_t>(j - 1)]) {
                if (j == 1)
                    worst1 = std::min(worst1, std::abs(c) * std::pow(mn, exp));
                else
                    worst2 = std::max(worst2, std::abs(c) * std::pow(mx, exp));
            }
        }
        rep.min_row1_prefix = worst1;
        rep.max_other_prefix = worst2;
        rep.box_conditions = worst1 > C && worst2 <= 1.0 + 1e-12;
    }
    return rep;
}

}  // namespace

verification_report verify_tableau(const monomial_tableau& t, const polynomial& p) {
    return verify_impl(t, p, nullptr, 0.0);
}

verification_report verify_tableau(const monomial_tableau& t, const polynomial& p,
                                   double C, const compact_box& box) {
    return verify_impl(t, p, &box, C);
}

// ---------------------------------------------------------------------------

std::string tableau_to_json(const monomial_tableau& t) {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["arity"] = t.arity;
    j["M"] = t.M;
    j["B"] = t.B;
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : t.slots)
        slots.push_back({{"m", s.m},
                         {"row", s.row},
                         {"coeff", {s.coeff.real(), s.coeff.imag()}},
                         {"exp", s.exp}});
    j["slots"] = slots;
    return j.dump(2);
}

monomial_tableau tableau_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        monomial_tableau t;
        t.arity = j.at("arity").get<int>();
        t.M = j.at("M").get<std::int64_t>();
        t.B = j.at("B").get<double>();
        for (const auto& s : j.at("slots")) {
            t.slots.push_back({s.at("m").get<std::int64_t>(),
                               s.at("row").get<int>(),
                               cplx(s.at("coeff").at(0).get<double>(),
                                    s.at("coeff").at(1).get<double>()),
                               s.at("exp").get<int>()});
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("tableau_from_json: ") + e.what());
    }
}

}  // namespace mhz
