#include "mhz/twist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "mhz/primes.hpp"
#include "mhz/rng.hpp"

namespace mhz {

namespace {

inline cplx neg_pow(double r, cplx s) {
    const double L = std::log(r);
    return std::exp(cplx(-s.real() * L, -s.imag() * L));
}

double snap(double x) {
    const double h = std::round(2.0 * x) / 2.0;
    if (std::abs(x - h) <= 4e-16) return h;
    return x;
}

cplx unit_root(std::int64_t num, std::int64_t den) {
    std::int64_t r = num % den;
    if (r < 0) r += den;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(den);
    return cplx(snap(std::cos(angle)), snap(std::sin(angle)));
}

void require_unimodular(cplx v) {
    if (std::abs(std::abs(v) - 1.0) > 1e-12)
        throw unimodular_error("twist: free value off the unit circle");
}

double dist_to_nearest_int(double x) { return std::abs(x - std::round(x)); }

}  // namespace

cplx twist_function::integer_value(std::int64_t m) const {
    if (m <= 0) throw domain_error("twist: integer argument must be positive");
    cplx v = 1.0;
    for (auto [p, e] : factorize(m)) {
        cplx base;
        if (p < threshold_) {
            const auto it = free_.find(p);
            base = it == free_.end() ? cplx(1.0, 0.0) : it->second;
        } else {
            base = chi_(p);  // p >= threshold > every prime factor of q, so nonzero
        }
        for (int i = 0; i < e; ++i) v *= base;
    }
    return v;
}

cplx twist_function::operator()(std::int64_t k) const {
    if (k < 0) throw domain_error("twist: index must be >= 0");
    switch (kind_) {
        case kind::trivial:
            return 1.0;
        case kind::transcendental_tail: {
            if (k < threshold_) {
                const auto it = free_.find(k);
                return it == free_.end() ? cplx(1.0, 0.0) : it->second;
            }
            return unit_root(k, chi_.q);
        }
        case kind::rational_tail: {
            const std::int64_t m = k * param_.den() + param_.num();
            return integer_value(m) / a_d_;
        }
    }
    return 1.0;  // unreachable
}

twist_function twist_function::trivial(const hurwitz_param& alpha) {
    twist_function t;
    t.kind_ = kind::trivial;
    t.param_ = alpha;
    t.chi_.q = 1;
    t.chi_.values = {cplx(1.0, 0.0)};
    t.chi_.principal = true;
    t.chi_.order = 1;
    return t;
}

twist_function make_twist(const hurwitz_param& alpha,
                          const dirichlet_character& chi, std::int64_t N0,
                          const std::map<std::int64_t, cplx>& free_values) {
    if (N0 < 2) throw domain_error("make_twist: N0 must be >= 2");
    if (chi.q < 1 || chi.values.size() != static_cast<std::size_t>(chi.q))
        throw domain_error("make_twist: malformed character table");

    twist_function t;
    t.param_ = alpha;
    t.chi_ = chi;
    t.n0_ = N0;
    t.threshold_ = static_cast<std::int64_t>(
        std::ceil(std::log(static_cast<double>(N0))));

    for (const auto& [k, v] : free_values) require_unimodular(v);

    if (alpha.is_rational()) {
        t.kind_ = twist_function::kind::rational_tail;
        const std::int64_t d = alpha.den();
        if (chi.principal)
            throw compatibility_error(
                "make_twist: rational parameter requires a non-principal "
                "character");
        if (gcd64(chi.q, d) != 1)
            throw compatibility_error(
                "make_twist: character modulus must be coprime to the "
                "parameter denominator");
        if (chi.q > 1 && largest_prime_factor(chi.q) >= t.threshold_)
            throw compatibility_error(
                "make_twist: a prime factor of q at or above ceil(log N0) "
                "would put chi(p) = 0 into the tail rule");
        for (const auto& [p, v] : free_values) {
            (void)v;
            if (p < 2 || p >= t.threshold_)
                throw domain_error(
                    "make_twist: rational free keys must be primes below "
                    "ceil(log N0)");
            const auto f = factorize(p);
            if (f.size() != 1 || f[0].second != 1)
                throw domain_error("make_twist: rational free key not prime");
        }
        t.free_ = free_values;
        t.a_d_ = t.integer_value(d);
    } else {
        t.kind_ = twist_function::kind::transcendental_tail;
        for (const auto& [k, v] : free_values) {
            (void)v;
            if (k < 0 || k >= t.threshold_)
                throw domain_error(
                    "make_twist: transcendental free keys must lie in "
                    "[0, ceil(log N0))");
        }
        t.free_ = free_values;
    }
    return t;
}

cplx twisted_zeta_trunc(const multi_point& s, const param_vector& alpha,
                        const std::vector<twist_function>& twists,
                        std::int64_t N) {
    require_same_arity(s, alpha);
    const int n = s.arity();
    if (static_cast<int>(twists.size()) != n)
        throw arity_error("twisted_zeta_trunc: one twist per coordinate required");
    if (N < 0) throw domain_error("twisted_zeta_trunc: N must be >= 0");
    for (int j = 0; j < n; ++j) {
        const auto& tw = twists[static_cast<std::size_t>(j)];
        if (tw.tail_kind() == twist_function::kind::trivial) continue;
        if (std::abs(tw.param().value() - alpha.value(static_cast<std::size_t>(j))) >
            1e-12)
            throw compatibility_error(
                "twisted_zeta_trunc: twist built on a different parameter");
    }

    // same prefix-sum recurrence as zeta_trunc, with weighted factors
    std::vector<cplx> prev(static_cast<std::size_t>(N) + 2, cplx(1.0, 0.0));
    std::vector<cplx> cur(static_cast<std::size_t>(N) + 2);
    for (int j = 0; j < n; ++j) {
        const cplx sj = s[static_cast<std::size_t>(j)];
        const double aj = alpha.value(static_cast<std::size_t>(j));
        const auto& tw = twists[static_cast<std::size_t>(j)];
        cur[0] = 0.0;
        for (std::int64_t m = 0; m <= N; ++m) {
            const std::size_t i = static_cast<std::size_t>(m);
            cur[i + 1] = cur[i] +
                         tw(m) * neg_pow(static_cast<double>(m) + aj, sj) * prev[i];
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(N) + 1];
}

growth_report partial_sum_growth(const twist_function& a, std::int64_t N_max,
                                 int checkpoints) {
    if (N_max < 100) throw domain_error("partial_sum_growth: N_max must be >= 100");
    if (checkpoints < 2) throw domain_error("partial_sum_growth: need >= 2 checkpoints");

    std::vector<std::int64_t> marks;
    for (int i = 0; i < checkpoints; ++i) {
        const std::int64_t v = N_max >> i;
        if (v < 16) break;
        marks.push_back(v);
    }
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

    growth_report rep;
    cplx S = 0.0;
    std::size_t next = 0;
    for (std::int64_t k = 0; k <= N_max && next < marks.size(); ++k) {
        S += a(k);
        if (k == marks[next]) {
            rep.checkpoints.emplace_back(k, std::abs(S));
            ++next;
        }
    }

    // least squares on (log N, log |S|); zero sums floored at 1e-14
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(rep.checkpoints.size());
    for (const auto& [N, v] : rep.checkpoints) {
        const double x = std::log(static_cast<double>(N));
        const double y = std::log(std::max(v, 1e-14));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    rep.beta = denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
    rep.prefactor = std::exp((sy - rep.beta * sx) / m);
    return rep;
}

double weyl_set_measure(const hurwitz_param& alpha, const weyl_target_spec& spec,
                        double T, std::int64_t samples, std::uint64_t seed) {
    if (samples < 1000) throw domain_error("weyl_set_measure: samples must be >= 1000");
    if (!(spec.delta > 0.0 && spec.delta <= 1.0))
        throw domain_error("weyl_set_measure: delta must lie in (0, 1]");
    if (!(T > 0.0)) throw domain_error("weyl_set_measure: T must be positive");

    std::vector<double> logs;
    std::vector<double> theta;
    if (!spec.primes.empty()) {
        for (std::size_t i = 0; i < spec.primes.size(); ++i) {
            if (spec.primes[i] < 2)
                throw domain_error("weyl_set_measure: prime targets must be >= 2");
            logs.push_back(std::log(static_cast<double>(spec.primes[i])));
            theta.push_back(i < spec.theta.size() ? spec.theta[i] : 0.0);
        }
    } else {
        const double count = std::floor(spec.N - alpha.value()) + 1.0;
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
            logs.push_back(std::log(static_cast<double>(k) + alpha.value()));
            theta.push_back(static_cast<std::size_t>(k) < spec.theta.size()
                                ? spec.theta[static_cast<std::size_t>(k)]
                                : 0.0);
        }
    }
    if (spec.quotient_phase)
        for (double L : logs)
            if (L == 0.0)
                throw domain_error(
                    "weyl_set_measure: quotient form undefined at log(k+alpha)=0");

    const double two_pi = 2.0 * std::numbers::pi;
    counter_rng rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double t = rng.uniform(static_cast<std::uint64_t>(i), 0.0, T);
        bool ok = true;
        for (std::size_t j = 0; j < logs.size(); ++j) {
            const double x = spec.quotient_phase ? t / (two_pi * logs[j])
                                             : t * logs[j] / two_pi;
            if (dist_to_nearest_int(x - theta[j]) >= spec.delta / 2.0) {
                ok = false;
                break;
            }
        }
        if (ok) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

// ---------------------------------------------------------------------------
// JSON round trip

std::string twist_to_json(const twist_function& a) {
    nlohmann::json j;
    j["schema_version"] = "1";
    switch (a.tail_kind()) {
        case twist_function::kind::trivial: j["kind"] = "trivial"; break;
        case twist_function::kind::rational_tail: j["kind"] = "rational"; break;
        case twist_function::kind::transcendental_tail:
            j["kind"] = "transcendental";
            break;
    }
    if (a.param().is_rational()) {
        j["alpha"] = {{"type", "rational"},
                      {"num", a.param().num()},
                      {"den", a.param().den()}};
    } else {
        j["alpha"] = {{"type", "transcendental"}, {"value", a.param().value()}};
    }
    j["n0"] = a.n0();
    j["threshold"] = a.threshold();
    nlohmann::json chi;
    chi["q"] = a.character().q;
    chi["principal"] = a.character().principal;
    chi["order"] = a.character().order;
    nlohmann::json vals = nlohmann::json::array();
    for (const cplx& v : a.character().values)
        vals.push_back({v.real(), v.imag()});
    chi["values"] = vals;
    j["chi"] = chi;
    nlohmann::json fv = nlohmann::json::array();
    for (const auto& [k, v] : a.free_values())
        fv.push_back({k, v.real(), v.imag()});
    j["free_values"] = fv;
    return j.dump(2);
}

twist_function twist_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        const auto& ja = j.at("alpha");
        const hurwitz_param alpha =
            ja.at("type") == "rational"
                ? hurwitz_param::rational(ja.at("num").get<std::int64_t>(),
                                          ja.at("den").get<std::int64_t>())
                : hurwitz_param::transcendental(ja.at("value").get<double>());
        if (j.at("kind") == "trivial") return twist_function::trivial(alpha);

        dirichlet_character chi;
        const auto& jc = j.at("chi");
        chi.q = jc.at("q").get<std::int64_t>();
        chi.principal = jc.at("principal").get<bool>();
        chi.order = jc.at("order").get<int>();
        for (const auto& v : jc.at("values"))
            chi.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());

        std::map<std::int64_t, cplx> free_values;
        for (const auto& f : j.at("free_values"))
            free_values[f.at(0).get<std::int64_t>()] =
                cplx(f.at(1).get<double>(), f.at(2).get<double>());

        return make_twist(alpha, chi, j.at("n0").get<std::int64_t>(),
                          free_values);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("twist_from_json: ") + e.what());
    }
}

}  // namespace mhz
