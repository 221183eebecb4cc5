#include "mhz/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mhz/rng.hpp"

namespace mhz {

namespace {

// one-variable Euler-Maclaurin term count that tracks the oscillation scale;
// cheaper than the library default 2|t| and still ~1e-10 accurate on the strip
int em_terms_for(double t) {
    return std::max(50, static_cast<int>(std::ceil(1.3 * std::abs(t))));
}

// continuation-grade value at an arbitrary point; callers police windows
cplx eval_point(const std::vector<cplx>& s, const param_vector& alpha,
                int em_terms) {
    if (alpha.arity() == 1) {
        const int em = em_terms > 0 ? em_terms : em_terms_for(s[0].imag());
        return hurwitz_zeta(s[0], alpha[0], em);
    }
    double T = 2.0;
    for (const cplx& c : s) T = std::max(T, std::abs(c.imag()));
    return zeta_eval_engine(multi_point(s), alpha, T);
}

const char* mode_name(scan_spec::mode_t m) {
    switch (m) {
        case scan_spec::mode_t::continuous: return "continuous";
        case scan_spec::mode_t::lattice: return "lattice";
        case scan_spec::mode_t::line: return "line";
    }
    return "?";
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

namespace {

// true when the shifted box violates the sandwich min_j Im >= (max_j Im)^xi
bool outside_window(const compact_box& box, const std::vector<double>& shift,
                    double xi) {
    double T = 0.0;
    double im_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < box.arity(); ++j) {
        T = std::max(T, shift[j] + box.axis(j).im_hi);
        im_min = std::min(im_min, shift[j] + box.axis(j).im_lo);
    }
    return !(T > 1.0) || im_min < std::pow(T, xi) - 1e-9;
}

}  // namespace

// ---------------------------------------------------------------------------
// sup over the box grid of |zeta_n(s + it) - target(s)|, target evaluated at
// the unshifted point.  For n >= 2 the shifted box must sit inside the
// evaluator window min_j Im >= T^xi with T = max_j Im (the engine's error
// law holds only there); the one-variable continuation is valid at every
// shift, so n = 1 accepts any t, including 0.
// ---------------------------------------------------------------------------
double sup_distance(const param_vector& alpha, const std::vector<double>& shift,
                    const polynomial& target, const compact_box& box,
                    double xi, int em_terms) {
    const int n = alpha.arity();
    if (box.arity() != n || static_cast<int>(shift.size()) != n ||
        target.arity() != n)
        throw arity_error("sup_distance: alpha, shift, target, box arity mismatch");
    if (!(xi > 0.0 && xi < 1.0))
        throw domain_error("sup_distance: xi must lie in (0,1)");
    if (n >= 2 && outside_window(box, shift, xi))
        throw range_error("sup_distance: shifted box leaves the evaluator window");

    std::vector<std::vector<cplx>> pts;
    pts.reserve(n);
    for (int j = 0; j < n; ++j) pts.push_back(box.axis_points(j));

    std::vector<std::size_t> idx(n, 0);
    std::vector<cplx> base(n), shifted(n);
    double sup = 0.0;
    for (;;) {
        for (int j = 0; j < n; ++j) {
            base[j] = pts[j][idx[j]];
            shifted[j] = base[j] + cplx(0.0, shift[j]);
        }
        const cplx v = eval_point(shifted, alpha, em_terms);
        sup = std::max(sup, std::abs(v - target.eval(base)));
        int j = n - 1;
        while (j >= 0 && ++idx[j] == pts[j].size()) {
            idx[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return sup;
}

// ---------------------------------------------------------------------------
// shift scan: enumerate the shift family (mixed-radix over per-axis counts,
// last axis fastest; line mode walks u * direction), score each shift by the
// max of sup_distance over the (alpha, target) pairs, and tally the passing
// fraction.  Shifts whose window check fails are skipped and excluded from
// the density denominator.  Threading splits the index range into contiguous
// blocks merged in order, so results are deterministic for any thread count.
// ---------------------------------------------------------------------------
scan_result scan_shifts(const scan_spec& spec) {
    const int n = spec.box.arity();
    if (spec.targets.empty())
        throw domain_error("scan_shifts: at least one (alpha, target) pair required");
    for (const auto& tp : spec.targets)
        if (tp.alpha.arity() != n || tp.target.arity() != n)
            throw arity_error("scan_shifts: target pair arity mismatch with box");
    if (!(spec.t_max > spec.t_min))
        throw domain_error("scan_shifts: t_max must exceed t_min");
    if (!(spec.epsilon >= 0.0) && !(spec.epsilon > 0.0))  // rejects NaN
        throw domain_error("scan_shifts: epsilon must be non-negative");

    const bool line = spec.mode == scan_spec::mode_t::line;
    std::vector<std::int64_t> counts(n, 1);
    std::int64_t total = 1;
    if (line) {
        if (static_cast<int>(spec.direction.size()) != n)
            throw arity_error("scan_shifts: direction arity mismatch");
        for (double d : spec.direction)
            if (!(d > 0.0))
                throw domain_error("scan_shifts: direction must be strictly positive");
        if (spec.step.empty() || !(spec.step[0] > 0.0))
            throw domain_error("scan_shifts: step must be positive");
        const double c =
            std::floor((spec.t_max - spec.t_min) / spec.step[0] + 1e-9) + 1.0;
        if (!(c <= static_cast<double>(spec.shift_cap)))
            throw budget_error("scan_shifts: shift count exceeds shift_cap");
        total = static_cast<std::int64_t>(c);
    } else {
        if (static_cast<int>(spec.step.size()) != n)
            throw arity_error("scan_shifts: one step per axis required");
        double dtotal = 1.0;
        for (int j = 0; j < n; ++j) {
            if (!(spec.step[j] > 0.0))
                throw domain_error("scan_shifts: step must be positive");
            const double c =
                std::floor((spec.t_max - spec.t_min) / spec.step[j] + 1e-9) + 1.0;
            dtotal *= c;
            if (!(dtotal <= static_cast<double>(spec.shift_cap)))
                throw budget_error("scan_shifts: shift count exceeds shift_cap");
            counts[j] = static_cast<std::int64_t>(c);
            total *= counts[j];
        }
    }

    auto shift_at = [&](std::int64_t i) {
        std::vector<double> t(n);
        if (line) {
            const double u = spec.t_min + static_cast<double>(i) * spec.step[0];
            for (int j = 0; j < n; ++j) t[j] = u * spec.direction[j];
        } else {
            for (int j = n - 1; j >= 0; --j) {
                t[j] = spec.t_min + static_cast<double>(i % counts[j]) * spec.step[j];
                i /= counts[j];
            }
        }
        return t;
    };

    struct block {
        std::vector<shift_record> recs;
        std::int64_t evaluated = 0, skipped = 0, passed = 0;
        shift_record best;
        bool has_best = false;
    };

    const int nthr = std::max(1, spec.threads);
    std::vector<block> blocks(nthr);
    auto work = [&](int b) {
        block& blk = blocks[b];
        const std::int64_t lo = total * b / nthr;
        const std::int64_t hi = total * (b + 1) / nthr;
        for (std::int64_t i = lo; i < hi; ++i) {
            std::vector<double> t = shift_at(i);
            // window skip applies to every arity: outside it the evaluator
            // error law gives no guarantee, so the shift joins neither the
            // numerator nor the denominator of the density
            if (outside_window(spec.box, t, spec.xi)) {
                ++blk.skipped;
                continue;
            }
            double sup = 0.0;
            for (const auto& tp : spec.targets)
                sup = std::max(sup, sup_distance(tp.alpha, t, tp.target,
                                                 spec.box, spec.xi,
                                                 spec.em_terms));
            ++blk.evaluated;
            shift_record rec{std::move(t), sup, sup < spec.epsilon};
            if (rec.pass) ++blk.passed;
            if (!blk.has_best || sup < blk.best.sup_distance) {
                blk.best = rec;
                blk.has_best = true;
            }
            if (spec.keep_records) blk.recs.push_back(std::move(rec));
        }
    };

    if (nthr == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthr);
        for (int b = 0; b < nthr; ++b) pool.emplace_back(work, b);
        for (auto& th : pool) th.join();
    }

    scan_result out;
    std::int64_t passed = 0;
    bool has_best = false;
    for (auto& blk : blocks) {
        out.evaluated += blk.evaluated;
        out.skipped += blk.skipped;
        passed += blk.passed;
        if (blk.has_best &&
            (!has_best || blk.best.sup_distance < out.best.sup_distance)) {
            out.best = blk.best;
            has_best = true;
        }
        out.records.insert(out.records.end(),
                           std::make_move_iterator(blk.recs.begin()),
                           std::make_move_iterator(blk.recs.end()));
    }
    out.density = out.evaluated > 0
                      ? static_cast<double>(passed) / static_cast<double>(out.evaluated)
                      : 0.0;
    return out;
}

// ---------------------------------------------------------------------------
// second moment on Re = 1/2 over the window cube [T^xi, T]^n.
//
//   n = 1: Int |zeta(1/2 + it, alpha)|^2 dt by unit-length Gauss-Legendre
//          panels (order 16; the integrand oscillates on scale ~2 pi / log t,
//          slow enough for unit panels well past T = 1e5).
//   n = 2,3: volume * mean of |zeta_n|^2 over `samples` counter-RNG draws,
//          indices n*i+j so the stream is reproducible and order-free.
//
// The reported ratio divides by the leading-order mass (T log T)^n / n!.
// ---------------------------------------------------------------------------
mean_square_result mean_square(const param_vector& alpha, int n, double T,
                               double xi, std::int64_t samples,
                               std::uint64_t seed) {
    if (n != alpha.arity())
        throw arity_error("mean_square: n must equal the parameter arity");
    if (n < 1 || n > 3)
        throw budget_error("mean_square: quadrature budget covers n <= 3");
    if (!(T >= 10.0)) throw domain_error("mean_square: T must be >= 10");
    if (!(xi > 0.0 && xi < 1.0))
        throw domain_error("mean_square: xi must lie in (0,1)");
    if (samples < 1) throw budget_error("mean_square: samples must be positive");

    const double lo = std::pow(T, xi);
    double integral = 0.0;
    if (n == 1) {
        for (double a = lo; a < T; a += 1.0) {
            const double b = std::min(a + 1.0, T);
            integral += integrate_gauss(
                            [&](double t) {
                                const cplx v = hurwitz_zeta(cplx(0.5, t), alpha[0],
                                                            em_terms_for(t));
                                return cplx(std::norm(v), 0.0);
                            },
                            a, b, 16)
                            .real();
        }
    } else {
        const counter_rng rng(seed);
        double vol = 1.0;
        for (int j = 0; j < n; ++j) vol *= (T - lo);
        std::vector<cplx> s(n);
        double acc = 0.0;
        for (std::int64_t i = 0; i < samples; ++i) {
            for (int j = 0; j < n; ++j)
                s[j] = cplx(0.5, rng.uniform(static_cast<std::uint64_t>(i) * n + j,
                                             lo, T));
            acc += std::norm(zeta_eval_engine(multi_point(s), alpha, T));
        }
        integral = vol * acc / static_cast<double>(samples);
    }

    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double main_term = std::pow(T * std::log(T), n) / fact;
    return {integral, integral / main_term};
}

// ---------------------------------------------------------------------------
// zero probe.  Seeds are strict-ish local minima of |zeta_n| on the lattice
// with value < 0.75 (any true zero inside a cell drags a neighbouring lattice
// value well below that).  n = 1 refines by damped Newton with the analytic
// derivative; n >= 2 by cyclic coordinate descent with central-difference
// slopes.  Every survivor is certified by the argument principle on a
// radius-1e-3 circle; for n >= 2 the circle lives in the last coordinate.
// ---------------------------------------------------------------------------
namespace {

struct candidate {
    std::vector<cplx> s;
    double residual;
    int winding;
};

void keep_candidate(std::vector<candidate>& found, candidate cand) {
    for (auto& c : found) {
        double dist = 0.0;
        for (std::size_t j = 0; j < c.s.size(); ++j)
            dist = std::max(dist, std::abs(c.s[j] - cand.s[j]));
        if (dist < 1e-6) {
            if (cand.residual < c.residual) c = std::move(cand);
            return;
        }
    }
    found.push_back(std::move(cand));
}

}  // namespace

std::vector<zero_record> find_zeros(const param_vector& alpha,
                                    const compact_box& box, int grid,
                                    double refine_tol) {
    const int n = alpha.arity();
    if (box.arity() != n)
        throw arity_error("find_zeros: box arity must equal parameter arity");
    if (grid < 4) throw domain_error("find_zeros: grid must be >= 4");
    if (!(refine_tol > 0.0))
        throw domain_error("find_zeros: refine_tol must be positive");

    std::vector<candidate> found;

    if (n == 1) {
        const axis_box& ax = box.axis(0);
        const double a = alpha.value(0);
        auto f = [&](cplx s) -> cplx {
            if (std::abs(s - cplx(1.0, 0.0)) < 1e-9)
                return cplx(1e30, 0.0);  // pole: dominates every minimum test
            return hurwitz_zeta(s, a, em_terms_for(s.imag()));
        };

        std::vector<double> re(grid), im(grid);
        for (int i = 0; i < grid; ++i) {
            re[i] = ax.re_lo + (ax.re_hi - ax.re_lo) * i / (grid - 1);
            im[i] = ax.im_lo + (ax.im_hi - ax.im_lo) * i / (grid - 1);
        }
        std::vector<double> mag(static_cast<std::size_t>(grid) * grid);
        for (int ii = 0; ii < grid; ++ii)
            for (int ri = 0; ri < grid; ++ri)
                mag[static_cast<std::size_t>(ii) * grid + ri] =
                    std::abs(f(cplx(re[ri], im[ii])));

        const double cell = std::max(ax.re_hi - ax.re_lo, ax.im_hi - ax.im_lo) /
                            (grid - 1);
        std::vector<cplx> seeds;
        for (int ii = 0; ii < grid; ++ii)
            for (int ri = 0; ri < grid; ++ri) {
                const double v = mag[static_cast<std::size_t>(ii) * grid + ri];
                if (v >= 0.75) continue;
                bool is_min = true;
                for (int dii = -1; dii <= 1 && is_min; ++dii)
                    for (int dri = -1; dri <= 1; ++dri) {
                        if (dii == 0 && dri == 0) continue;
                        const int i2 = ii + dii, r2 = ri + dri;
                        if (i2 < 0 || i2 >= grid || r2 < 0 || r2 >= grid) continue;
                        if (mag[static_cast<std::size_t>(i2) * grid + r2] < v) {
                            is_min = false;
                            break;
                        }
                    }
                if (is_min) seeds.push_back(cplx(re[ri], im[ii]));
            }

        for (const cplx seed : seeds) {
            cplx s = seed;
            cplx fv = f(s);
            for (int it = 0; it < 80; ++it) {
                if (std::abs(fv) < 1e-14) break;
                const cplx d = hurwitz_zeta_ds(s, a, em_terms_for(s.imag()));
                if (!(std::abs(d) > 1e-18)) break;
                cplx step = fv / d;
                if (std::abs(step) > cell) step *= cell / std::abs(step);
                double lam = 1.0;
                bool moved = false;
                for (int h = 0; h < 12; ++h) {
                    const cplx s2 = s - lam * step;
                    const cplx f2 = f(s2);
                    if (std::abs(f2) < std::abs(fv)) {
                        s = s2;
                        fv = f2;
                        moved = true;
                        break;
                    }
                    lam *= 0.5;
                }
                if (!moved) break;
            }
            const double res = std::abs(fv);
            if (!(res < refine_tol)) continue;
            // one-cell slack per direction; a shared pad from the longer axis
            // would let Newton hand back zeros far outside a thin box
            const double pad_re = (ax.re_hi - ax.re_lo) / (grid - 1);
            const double pad_im = (ax.im_hi - ax.im_lo) / (grid - 1);
            if (s.real() < ax.re_lo - pad_re || s.real() > ax.re_hi + pad_re ||
                s.imag() < ax.im_lo - pad_im || s.imag() > ax.im_hi + pad_im)
                continue;
            const int w = winding_number(f, s, 1e-3);
            if (w < 1) continue;
            keep_candidate(found, candidate{{s}, res, w});
        }
    } else {
        std::int64_t lattice = 1;
        for (int j = 0; j < n; ++j) {
            lattice *= static_cast<std::int64_t>(grid) * grid;
            if (lattice > 400000)
                throw budget_error("find_zeros: lattice exceeds the evaluation budget");
        }

        auto g = [&](const std::vector<cplx>& s) -> cplx {
            double T = 2.0;
            for (const cplx& c : s) T = std::max(T, std::abs(c.imag()));
            return zeta_eval_engine(multi_point(s), alpha, T);
        };

        // per-axis grid x grid lattices (re-major, then im)
        std::vector<std::vector<cplx>> pts(n);
        for (int j = 0; j < n; ++j) {
            const axis_box& ax = box.axis(j);
            pts[j].reserve(static_cast<std::size_t>(grid) * grid);
            for (int ri = 0; ri < grid; ++ri)
                for (int ii = 0; ii < grid; ++ii)
                    pts[j].push_back(cplx(
                        ax.re_lo + (ax.re_hi - ax.re_lo) * ri / (grid - 1),
                        ax.im_lo + (ax.im_hi - ax.im_lo) * ii / (grid - 1)));
        }

        std::vector<std::pair<double, std::vector<cplx>>> scored;
        std::vector<std::size_t> idx(n, 0);
        std::vector<cplx> s(n);
        for (;;) {
            for (int j = 0; j < n; ++j) s[j] = pts[j][idx[j]];
            const double v = std::abs(g(s));
            if (v < 0.75) scored.emplace_back(v, s);
            int j = n - 1;
            while (j >= 0 && ++idx[j] == pts[j].size()) {
                idx[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (scored.size() > 8) scored.resize(8);

        for (auto& [v0, seed] : scored) {
            std::vector<cplx> cur = seed;
            cplx fv = g(cur);
            for (int sweep = 0; sweep < 40 && std::abs(fv) > 1e-13; ++sweep) {
                const double before = std::abs(fv);
                for (int j = 0; j < n; ++j) {
                    const double h = 1e-6;
                    std::vector<cplx> sp = cur, sm = cur;
                    sp[j] += h;
                    sm[j] -= h;
                    const cplx d = (g(sp) - g(sm)) / (2.0 * h);
                    if (!(std::abs(d) > 1e-18)) continue;
                    cplx step = fv / d;
                    if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
                    double lam = 1.0;
                    for (int hh = 0; hh < 10; ++hh) {
                        std::vector<cplx> s2 = cur;
                        s2[j] -= lam * step;
                        const cplx f2 = g(s2);
                        if (std::abs(f2) < std::abs(fv)) {
                            cur = std::move(s2);
                            fv = f2;
                            break;
                        }
                        lam *= 0.5;
                    }
                }
                if (std::abs(fv) > 0.9 * before) break;  // stalled
            }
            const double res = std::abs(fv);
            if (!(res < refine_tol)) continue;
            bool inside = true;
            for (int j = 0; j < n && inside; ++j) {
                const axis_box& ax = box.axis(j);
                const double pad_re = (ax.re_hi - ax.re_lo) / (grid - 1);
                const double pad_im = (ax.im_hi - ax.im_lo) / (grid - 1);
                if (cur[j].real() < ax.re_lo - pad_re ||
                    cur[j].real() > ax.re_hi + pad_re ||
                    cur[j].imag() < ax.im_lo - pad_im ||
                    cur[j].imag() > ax.im_hi + pad_im)
                    inside = false;
            }
            if (!inside) continue;
            auto f_slice = [&](cplx w) {
                std::vector<cplx> s2 = cur;
                s2[n - 1] = w;
                return g(s2);
            };
            const int wind = winding_number(f_slice, cur[n - 1], 1e-3);
            if (wind < 1) continue;
            keep_candidate(found, candidate{cur, res, wind});
        }
    }

    std::sort(found.begin(), found.end(), [](const candidate& a, const candidate& b) {
        for (std::size_t j = 0; j < a.s.size(); ++j) {
            if (a.s[j].imag() != b.s[j].imag()) return a.s[j].imag() < b.s[j].imag();
            if (a.s[j].real() != b.s[j].real()) return a.s[j].real() < b.s[j].real();
        }
        return false;
    });

    std::vector<zero_record> out;
    out.reserve(found.size());
    for (auto& c : found)
        out.push_back(zero_record{multi_point(std::move(c.s)), c.residual, c.winding});
    return out;
}

// ---------------------------------------------------------------------------
// artifacts
// ---------------------------------------------------------------------------
void write_records_csv(std::ostream& os, const std::vector<shift_record>& records) {
    if (records.empty()) return;
    const int n = static_cast<int>(records[0].t.size());
    for (int j = 0; j < n; ++j) os << (j ? ",t" : "t") << (j + 1);
    os << ",sup_distance,pass\n";
    for (const auto& r : records) {
        for (int j = 0; j < n; ++j) os << fmt17(r.t[j]) << ',';
        os << fmt17(r.sup_distance) << ',' << (r.pass ? 1 : 0) << '\n';
    }
}

std::string scan_summary_json(const scan_spec& spec, const scan_result& result,
                              std::uint64_t seed, double runtime_sec) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = "shift_scan";

    nlohmann::ordered_json sp;
    sp["mode"] = mode_name(spec.mode);
    sp["t_min"] = spec.t_min;
    sp["t_max"] = spec.t_max;
    sp["step"] = spec.step;
    if (spec.mode == scan_spec::mode_t::line) sp["direction"] = spec.direction;
    sp["epsilon"] = spec.epsilon;
    sp["xi"] = spec.xi;
    sp["threads"] = spec.threads;
    sp["em_terms"] = spec.em_terms;
    sp["shift_cap"] = spec.shift_cap;

    nlohmann::ordered_json axes = nlohmann::ordered_json::array();
    for (int a = 0; a < spec.box.arity(); ++a) {
        const axis_box& ax = spec.box.axis(a);
        axes.push_back({{"re_lo", ax.re_lo},
                        {"re_hi", ax.re_hi},
                        {"im_lo", ax.im_lo},
                        {"im_hi", ax.im_hi}});
    }
    sp["box"] = {{"grid", spec.box.grid()}, {"axes", axes}};

    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (const auto& tp : spec.targets) {
        nlohmann::ordered_json al = nlohmann::ordered_json::array();
        for (const auto& p : tp.alpha) al.push_back(p.str());
        targets.push_back({{"alpha", al}, {"target", tp.target.str()}});
    }
    sp["targets"] = targets;
    j["spec"] = sp;

    j["evaluated"] = result.evaluated;
    j["skipped"] = result.skipped;
    j["density"] = result.density;
    if (!result.best.t.empty())
        j["best"] = {{"t", result.best.t},
                     {"sup_distance", result.best.sup_distance},
                     {"pass", result.best.pass}};
    j["seed"] = seed;
    j["runtime_sec"] = runtime_sec;
    return j.dump(2) + "\n";
}

}  // namespace mhz
