// mhz: command-line front end for the multiple-Hurwitz-zeta laboratory.
//
// Subcommands: eval, scan, meansquare, zeros, decomp, twist.  Every artifact
// embeds the effective config and the seed; JSON fields are snake_case and
// carry schema_version "1".  Exit codes: 0 ok, 2 argument/parse error,
// 3 evaluator error (message on stderr).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mhz/config.hpp"
#include "mhz/decomp.hpp"
#include "mhz/dirichlet.hpp"
#include "mhz/errors.hpp"
#include "mhz/hurwitz.hpp"
#include "mhz/lab.hpp"
#include "mhz/multizeta.hpp"
#include "mhz/polyparse.hpp"
#include "mhz/primes.hpp"
#include "mhz/twist.hpp"

namespace {

using json = nlohmann::ordered_json;
using mhz::cplx;

// argument-content errors (exit 2), distinct from evaluator errors (exit 3)
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& txt, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(txt, &pos);
        if (pos != txt.size()) throw usage_error("");
        return v;
    } catch (const usage_error&) {
    } catch (const std::exception&) {
    }
    throw usage_error(std::string(what) + ": cannot parse '" + txt + "'");
}

std::int64_t parse_int(const std::string& txt, const char* what) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(txt, &pos);
        if (pos != txt.size()) throw usage_error("");
        return v;
    } catch (const usage_error&) {
    } catch (const std::exception&) {
    }
    throw usage_error(std::string(what) + ": cannot parse '" + txt + "'");
}

std::vector<std::string> split(const std::string& txt, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : txt) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// "re,im" (or bare "re")
cplx parse_point(const std::string& txt) {
    const auto parts = split(txt, ',');
    if (parts.empty() || parts.size() > 2)
        throw usage_error("--s: expected re,im but got '" + txt + "'");
    const double re = parse_double(parts[0], "--s");
    const double im = parts.size() == 2 ? parse_double(parts[1], "--s") : 0.0;
    return {re, im};
}

// "r:c/d", "r:c", or "t:value"
mhz::hurwitz_param parse_alpha(const std::string& txt) {
    if (txt.rfind("r:", 0) == 0) {
        const std::string body = txt.substr(2);
        const auto parts = split(body, '/');
        if (parts.size() > 2 || parts[0].empty())
            throw usage_error("--alpha: expected r:c/d but got '" + txt + "'");
        const std::int64_t c = parse_int(parts[0], "--alpha");
        const std::int64_t d =
            parts.size() == 2 ? parse_int(parts[1], "--alpha") : 1;
        return mhz::hurwitz_param::rational(c, d);
    }
    if (txt.rfind("t:", 0) == 0)
        return mhz::hurwitz_param::transcendental(
            parse_double(txt.substr(2), "--alpha"));
    throw usage_error("--alpha: expected r:c/d or t:value, got '" + txt + "'");
}

mhz::param_vector parse_alphas(const std::vector<std::string>& txts) {
    std::vector<mhz::hurwitz_param> entries;
    entries.reserve(txts.size());
    for (const auto& t : txts) entries.push_back(parse_alpha(t));
    return mhz::param_vector(std::move(entries));
}

// "re_lo,re_hi,im_lo,im_hi"
mhz::axis_box parse_axis(const std::string& txt) {
    const auto parts = split(txt, ',');
    if (parts.size() != 4)
        throw usage_error("--box: expected re_lo,re_hi,im_lo,im_hi but got '" +
                          txt + "'");
    return {parse_double(parts[0], "--box"), parse_double(parts[1], "--box"),
            parse_double(parts[2], "--box"), parse_double(parts[3], "--box")};
}

json config_echo(const mhz::run_config& cfg) {
    return json::parse(mhz::config_to_json(cfg));
}

json point_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json alpha_json(const mhz::param_vector& a) {
    json out = json::array();
    for (const auto& p : a) out.push_back(p.str());
    return out;
}

json box_json(const mhz::compact_box& box) {
    json axes = json::array();
    for (int j = 0; j < box.arity(); ++j) {
        const mhz::axis_box& ax = box.axis(j);
        axes.push_back({{"re_lo", ax.re_lo},
                        {"re_hi", ax.re_hi},
                        {"im_lo", ax.im_lo},
                        {"im_hi", ax.im_hi}});
    }
    return {{"grid", box.grid()}, {"axes", axes}};
}

void write_file(const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);  // best effort
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mhz::error("cannot open output file " + path);
    out << text;
    if (!out) throw mhz::error("write failed for " + path);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------
struct eval_args {
    int n = 0;  // 0 = infer from --s
    std::vector<std::string> s;
    std::vector<std::string> alpha;
    std::string method = "afe";
    std::int64_t N = 1000;
    double T = 0.0;  // 0 = automatic
    double xi = 0.0;  // 0 = config
};

int cmd_eval(const eval_args& args, const mhz::run_config& cfg) {
    std::vector<cplx> coords;
    coords.reserve(args.s.size());
    for (const auto& t : args.s) coords.push_back(parse_point(t));
    const int n = args.n > 0 ? args.n : static_cast<int>(coords.size());
    if (static_cast<int>(coords.size()) != n)
        throw usage_error("--s: expected " + std::to_string(n) + " points");
    if (static_cast<int>(args.alpha.size()) != n)
        throw usage_error("--alpha: expected " + std::to_string(n) + " entries");
    const mhz::multi_point s{coords};
    const mhz::param_vector alpha = parse_alphas(args.alpha);
    const double xi = args.xi > 0.0 ? args.xi : cfg.xi;
    const mhz::smooth_cutoff cutoff(cfg.cutoff_plateau, cfg.cutoff_support);

    double max_im = 0.0;
    for (const cplx& c : coords) max_im = std::max(max_im, std::abs(c.imag()));

    json out;
    out["schema_version"] = cfg.schema_version;
    out["kind"] = "eval";
    out["method"] = args.method;
    out["n"] = n;
    json spts = json::array();
    for (const cplx& c : coords) spts.push_back(point_json(c));
    out["s"] = spts;
    out["alpha"] = alpha_json(alpha);

    cplx value;
    json err = nullptr;
    if (args.method == "trunc") {
        value = mhz::zeta_trunc(s, alpha, args.N);
        out["N"] = args.N;
    } else if (args.method == "smoothed") {
        const double T = args.T > 0.0 ? args.T : std::max(10.0, 2.0 * max_im);
        value = mhz::zeta_smoothed(s, alpha, T, cutoff, cfg.cost_cap);
        out["T"] = T;
    } else if (args.method == "afe") {
        const mhz::t_policy pol = args.T > 0.0 ? mhz::t_policy::fixed(args.T)
                                               : mhz::t_policy::automatic();
        const mhz::eval_result r =
            mhz::zeta_eval(s, alpha, xi, pol, cfg.error_exponent_a,
                           cfg.error_prefactor_b, cutoff);
        value = r.value;
        err = r.error_estimate;
        out["xi"] = xi;
    } else if (args.method == "mb") {
        mhz::contour_spec contour;
        contour.xi = xi;
        contour.T = args.T;
        value = mhz::zeta_mb(s, alpha, contour);
        out["xi"] = xi;
    } else if (args.method == "diag") {
        for (const cplx& c : coords)
            if (c != coords[0])
                throw usage_error("--method diag requires identical coordinates");
        for (const auto& p : alpha)
            if (p.str() != alpha[0].str())
                throw usage_error("--method diag requires identical parameters");
        value = mhz::zeta_diag_powersum(coords[0], alpha[0], n, args.N);
        out["N"] = args.N;
    } else {
        throw usage_error("--method: unknown method '" + args.method + "'");
    }

    out["value"] = point_json(value);
    out["error_estimate"] = err;
    out["seed"] = cfg.seed;
    out["config"] = config_echo(cfg);
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------
struct scan_args {
    std::string mode = "continuous";
    std::vector<std::string> alpha;
    std::string target = "1";
    std::vector<std::string> box;
    int grid = 9;
    double t_min = 0.0;
    double t_max = 0.0;
    std::vector<double> step;
    std::vector<double> direction;
    double epsilon = 0.0;
    double xi = 0.0;
    int em_terms = 0;
    int threads = 0;
    bool no_records = false;
    std::string records_file = "scan_records.csv";
    std::string summary_file = "scan_summary.json";
};

int cmd_scan(const scan_args& args, const mhz::run_config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (args.box.empty()) throw usage_error("--box: at least one axis required");
    std::vector<mhz::axis_box> axes;
    for (const auto& b : args.box) axes.push_back(parse_axis(b));
    const int n = static_cast<int>(axes.size());
    mhz::compact_box box(std::move(axes), args.grid);

    if (static_cast<int>(args.alpha.size()) != n)
        throw usage_error("--alpha: expected " + std::to_string(n) + " entries");
    const mhz::param_vector alpha = parse_alphas(args.alpha);
    const mhz::polynomial target = mhz::parse_polynomial(args.target, n);

    mhz::scan_spec::mode_t mode;
    if (args.mode == "continuous") mode = mhz::scan_spec::mode_t::continuous;
    else if (args.mode == "lattice") mode = mhz::scan_spec::mode_t::lattice;
    else if (args.mode == "line") mode = mhz::scan_spec::mode_t::line;
    else throw usage_error("--mode: unknown mode '" + args.mode + "'");

    mhz::scan_spec spec(mode, box, mhz::target_pair{alpha, target},
                        args.epsilon, args.t_max);
    spec.t_min = args.t_min;
    spec.step = args.step;
    if (spec.step.empty())
        throw usage_error("--step: at least one step required");
    if (mode != mhz::scan_spec::mode_t::line &&
        static_cast<int>(spec.step.size()) == 1)
        spec.step.assign(n, spec.step[0]);  // broadcast a single step
    spec.direction = args.direction;
    spec.xi = args.xi > 0.0 ? args.xi : cfg.xi;
    spec.threads = args.threads > 0 ? args.threads : cfg.threads;
    spec.em_terms = args.em_terms;
    spec.keep_records = !args.no_records;

    const mhz::scan_result result = mhz::scan_shifts(spec);
    const double secs = seconds_since(t0);

    json summary =
        json::parse(mhz::scan_summary_json(spec, result, cfg.seed, secs));
    summary["config"] = config_echo(cfg);
    const std::string summary_text = summary.dump(2) + "\n";
    write_file(cfg.out_dir + "/" + args.summary_file, summary_text);
    if (spec.keep_records) {
        std::ostringstream csv;
        mhz::write_records_csv(csv, result.records);
        write_file(cfg.out_dir + "/" + args.records_file, csv.str());
    }
    std::cout << summary_text;
    return 0;
}

// ---------------------------------------------------------------------------
// meansquare
// ---------------------------------------------------------------------------
struct meansquare_args {
    std::vector<std::string> alpha;
    int n = 1;
    double T = 0.0;
    double xi = 0.0;
    std::int64_t samples = 100000;
    std::string out_file = "meansquare.json";
};

int cmd_meansquare(const meansquare_args& args, const mhz::run_config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const mhz::param_vector alpha = parse_alphas(args.alpha);
    const double xi = args.xi > 0.0 ? args.xi : cfg.xi;
    const mhz::mean_square_result r =
        mhz::mean_square(alpha, args.n, args.T, xi, args.samples, cfg.seed);

    json out;
    out["schema_version"] = cfg.schema_version;
    out["kind"] = "mean_square";
    out["n"] = args.n;
    out["alpha"] = alpha_json(alpha);
    out["T"] = args.T;
    out["xi"] = xi;
    out["samples"] = args.samples;
    out["integral_estimate"] = r.integral_estimate;
    out["ratio_to_asymptotic"] = r.ratio_to_asymptotic;
    out["seed"] = cfg.seed;
    out["runtime_sec"] = seconds_since(t0);
    out["config"] = config_echo(cfg);
    const std::string text = out.dump(2) + "\n";
    write_file(cfg.out_dir + "/" + args.out_file, text);
    std::cout << text;
    return 0;
}

// ---------------------------------------------------------------------------
// zeros
// ---------------------------------------------------------------------------
struct zeros_args {
    std::vector<std::string> alpha;
    std::vector<std::string> box;
    int grid = 40;
    double refine_tol = 1e-10;
    std::string out_file = "zeros.json";
};

int cmd_zeros(const zeros_args& args, const mhz::run_config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (args.box.empty()) throw usage_error("--box: at least one axis required");
    std::vector<mhz::axis_box> axes;
    for (const auto& b : args.box) axes.push_back(parse_axis(b));
    mhz::compact_box box(std::move(axes), 9);
    const mhz::param_vector alpha = parse_alphas(args.alpha);

    const std::vector<mhz::zero_record> zeros =
        mhz::find_zeros(alpha, box, args.grid, args.refine_tol);

    json out;
    out["schema_version"] = cfg.schema_version;
    out["kind"] = "zero_scan";
    out["alpha"] = alpha_json(alpha);
    out["box"] = box_json(box);
    out["grid"] = args.grid;
    out["refine_tol"] = args.refine_tol;
    json zs = json::array();
    for (const auto& z : zeros) {
        json loc = json::array();
        for (const cplx& c : z.location) loc.push_back(point_json(c));
        zs.push_back({{"location", loc},
                      {"residual", z.residual},
                      {"winding", z.winding}});
    }
    out["zeros"] = zs;
    out["seed"] = cfg.seed;
    out["runtime_sec"] = seconds_since(t0);
    out["config"] = config_echo(cfg);
    const std::string text = out.dump(2) + "\n";
    write_file(cfg.out_dir + "/" + args.out_file, text);
    std::cout << text;
    return 0;
}

// ---------------------------------------------------------------------------
// decomp
// ---------------------------------------------------------------------------
struct decomp_args {
    std::string poly;
    double C = 10.0;
    std::vector<std::string> box;
    int grid = 9;
    std::string out_file = "decomp.json";
};

int cmd_decomp(const decomp_args& args, const mhz::run_config& cfg) {
    const mhz::polynomial p = mhz::parse_polynomial(args.poly);
    const int n = p.arity();
    std::vector<mhz::axis_box> axes;
    if (args.box.empty()) {
        // default: the standard strip rectangle per axis
        for (int j = 0; j < n; ++j) axes.push_back({0.55, 0.95, -1.0, 1.0});
    } else {
        for (const auto& b : args.box) axes.push_back(parse_axis(b));
    }
    mhz::compact_box box(std::move(axes), args.grid);

    const mhz::monomial_tableau tab = mhz::decompose(p, args.C, box);
    const mhz::verification_report rep = mhz::verify_tableau(tab, p, args.C, box);

    json out;
    out["schema_version"] = cfg.schema_version;
    out["kind"] = "decomposition";
    out["poly"] = p.str();
    out["C"] = args.C;
    out["box"] = box_json(box);
    out["tableau"] = json::parse(mhz::tableau_to_json(tab));
    out["verification"] = {{"product_identity", rep.product_identity},
                           {"tail_vanishing", rep.tail_vanishing},
                           {"tail_violation_v", rep.tail_violation_v},
                           {"prefix_monomial", rep.prefix_monomial},
                           {"box_conditions", rep.box_conditions},
                           {"min_row1_prefix", rep.min_row1_prefix},
                           {"max_other_prefix", rep.max_other_prefix},
                           {"pass", rep.pass()}};
    out["seed"] = cfg.seed;
    out["config"] = config_echo(cfg);
    const std::string text = out.dump(2) + "\n";
    write_file(cfg.out_dir + "/" + args.out_file, text);
    std::cout << text;
    return 0;
}

// ---------------------------------------------------------------------------
// twist
// ---------------------------------------------------------------------------
struct twist_args {
    std::string alpha = "r:1/2";
    std::string kind = "rational";
    std::int64_t q = 3;
    int char_index = -1;  // -1 = first non-principal
    std::int64_t n0 = 100;
    std::int64_t N_max = 100000;
    std::string out_file = "twist.json";
};

int cmd_twist(const twist_args& args, const mhz::run_config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const mhz::hurwitz_param alpha = parse_alpha(args.alpha);

    json out;
    out["schema_version"] = cfg.schema_version;
    out["kind"] = "twist_diagnostics";
    out["alpha"] = alpha.str();
    out["q"] = args.q;
    out["n0"] = args.n0;

    mhz::twist_function tw = mhz::twist_function::trivial(alpha);
    if (args.kind == "rational") {
        if (!alpha.is_rational())
            throw usage_error("--kind rational requires a rational --alpha");
        const auto table = mhz::character_table(args.q);
        int idx = args.char_index;
        if (idx < 0)
            for (std::size_t i = 0; i < table.size() && idx < 0; ++i)
                if (!table[i].principal) idx = static_cast<int>(i);
        if (idx < 0 || idx >= static_cast<int>(table.size()))
            throw usage_error("--char-index: no usable character mod " +
                              std::to_string(args.q));
        const mhz::dirichlet_character& chi = table[idx];
        out["char_index"] = idx;
        out["char_order"] = chi.order;
        tw = mhz::make_twist(alpha, chi, args.n0);

        // permissibility heuristic: L(s, chi chi*) zero-scan over the strip
        // rectangle for every chi* modulo the parameter denominator
        const std::int64_t d = alpha.den();
        double worst = 1e300;
        cplx worst_at = 0.0;
        bool all_pass = true;
        for (const auto& chis : mhz::character_table(d)) {
            mhz::dirichlet_character prod;
            prod.q = args.q * d;
            prod.values.resize(prod.q);
            for (std::int64_t a = 0; a < prod.q; ++a)
                prod.values[a] = chi(a) * chis(a);
            prod.principal = chi.principal && chis.principal;
            prod.order = 1;
            const auto scan = mhz::permissibility_scan(prod, 0.55, 0.95, -1.0, 1.0);
            if (scan.min_modulus < worst) {
                worst = scan.min_modulus;
                worst_at = scan.argmin;
            }
            all_pass = all_pass && scan.verdict;
        }
        out["permissibility"] = {{"min_modulus", worst},
                                 {"argmin", point_json(worst_at)},
                                 {"verdict", all_pass}};

        // generating series at s = 2.5:
        //   sum_k a(k) k^-s  vs  prod_{p<thr} (1 - chi(p) p^-s)/(1 - a(p) p^-s)
        //                        * L(s, chi)
        const cplx sgen(2.5, 0.0);
        cplx lhs = 0.0;
        for (std::int64_t k = 200000; k >= 1; --k)
            lhs += tw.integer_value(k) *
                   std::exp(-sgen * std::log(static_cast<double>(k)));
        cplx rhs = mhz::dirichlet_L(sgen, chi);
        for (std::int64_t p : mhz::primes_up_to(tw.threshold() - 1)) {
            const cplx ps = std::exp(-sgen * std::log(static_cast<double>(p)));
            rhs *= (1.0 - chi(p) * ps) / (1.0 - tw.integer_value(p) * ps);
        }
        out["series_check"] = {{"s", 2.5},
                               {"lhs", point_json(lhs)},
                               {"rhs", point_json(rhs)},
                               {"abs_err", std::abs(lhs - rhs)}};
    } else if (args.kind == "transcendental") {
        if (alpha.is_rational())
            throw usage_error("--kind transcendental requires a t: --alpha");
        const auto table = mhz::character_table(args.q);
        tw = mhz::make_twist(alpha, table[0], args.n0);  // q carries the phase
    } else {
        throw usage_error("--kind: rational | transcendental");
    }
    out["threshold"] = tw.threshold();

    double max_dev = 0.0;
    for (std::int64_t k = 0; k < 1000; ++k)
        max_dev = std::max(max_dev, std::abs(std::abs(tw(k)) - 1.0));
    out["unimodularity_max_dev"] = max_dev;

    if (tw.tail_kind() == mhz::twist_function::kind::rational_tail) {
        // complete multiplicativity spot check on the integer weight
        double mult_dev = 0.0;
        for (std::int64_t m1 = 2; m1 <= 31; ++m1)
            for (std::int64_t m2 = 2; m2 <= 31; ++m2)
                mult_dev = std::max(
                    mult_dev,
                    std::abs(tw.integer_value(m1 * m2) -
                             tw.integer_value(m1) * tw.integer_value(m2)));
        out["multiplicativity_max_dev"] = mult_dev;
    }

    const mhz::growth_report growth = mhz::partial_sum_growth(tw, args.N_max);
    json cps = json::array();
    for (const auto& [N, S] : growth.checkpoints)
        cps.push_back({{"N", N}, {"abs_sum", S}});
    out["partial_sum_growth"] = {{"beta", growth.beta},
                                 {"prefactor", growth.prefactor},
                                 {"checkpoints", cps}};
    out["twist"] = json::parse(mhz::twist_to_json(tw));
    out["seed"] = cfg.seed;
    out["runtime_sec"] = seconds_since(t0);
    out["config"] = config_echo(cfg);
    const std::string text = out.dump(2) + "\n";
    write_file(cfg.out_dir + "/" + args.out_file, text);
    std::cout << text;
    return 0;
}

// ---------------------------------------------------------------------------
int run(int argc, char** argv) {
    mhz::run_config cfg = mhz::load_config();

    CLI::App app{"multiple Hurwitz zeta laboratory"};
    app.require_subcommand(1);
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
    app.add_option("--out", out_dir, "output directory (default: config)");
    app.add_option("--seed", seed, "RNG seed override")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--threads", threads, "worker thread override");

    eval_args ev;
    auto* c_eval = app.add_subcommand("eval", "evaluate zeta_n at one point");
    c_eval->add_option("--n", ev.n, "arity (default: inferred from --s)");
    c_eval->add_option("--s", ev.s, "coordinates as re,im")->required();
    c_eval->add_option("--alpha", ev.alpha, "parameters as r:c/d or t:value")
        ->required();
    c_eval->add_option("--method", ev.method,
                       "trunc | smoothed | afe | mb | diag (default afe)");
    c_eval->add_option("--N", ev.N, "truncation bound (trunc/diag)");
    c_eval->add_option("--T", ev.T, "smoothing scale (smoothed/afe/mb)");
    c_eval->add_option("--xi", ev.xi, "window exponent override");

    scan_args sc;
    auto* c_scan = app.add_subcommand("scan", "universality shift scan");
    c_scan->add_option("--mode", sc.mode, "continuous | lattice | line");
    c_scan->add_option("--alpha", sc.alpha, "parameters")->required();
    c_scan->add_option("--target", sc.target, "target polynomial (s1..sn)");
    c_scan->add_option("--box", sc.box, "axis re_lo,re_hi,im_lo,im_hi")
        ->required();
    c_scan->add_option("--grid", sc.grid, "grid points per axis (default 9)");
    c_scan->add_option("--tmin", sc.t_min, "shift range start");
    c_scan->add_option("--tmax", sc.t_max, "shift range end")->required();
    c_scan->add_option("--step", sc.step, "per-axis step (single value broadcasts)")
        ->required();
    c_scan->add_option("--direction", sc.direction, "line-mode direction");
    c_scan->add_option("--epsilon", sc.epsilon, "pass threshold")->required();
    c_scan->add_option("--xi", sc.xi, "window exponent override");
    c_scan->add_option("--em-terms", sc.em_terms, "series terms override (n=1)");
    c_scan->add_flag("--no-records", sc.no_records, "skip the CSV stream");
    c_scan->add_option("--records-file", sc.records_file, "CSV file name");
    c_scan->add_option("--summary-file", sc.summary_file, "summary file name");

    meansquare_args ms;
    auto* c_ms = app.add_subcommand("meansquare", "critical-line second moment");
    c_ms->add_option("--alpha", ms.alpha, "parameters")->required();
    c_ms->add_option("--n", ms.n, "arity");
    c_ms->add_option("--T", ms.T, "upper integration limit")->required();
    c_ms->add_option("--xi", ms.xi, "window exponent override");
    c_ms->add_option("--samples", ms.samples, "Monte Carlo samples (n >= 2)");
    c_ms->add_option("--out-file", ms.out_file, "artifact file name");

    zeros_args zr;
    auto* c_zeros = app.add_subcommand("zeros", "zero probe on a box");
    c_zeros->add_option("--alpha", zr.alpha, "parameters")->required();
    c_zeros->add_option("--box", zr.box, "axis re_lo,re_hi,im_lo,im_hi")
        ->required();
    c_zeros->add_option("--grid", zr.grid, "seed lattice resolution");
    c_zeros->add_option("--refine-tol", zr.refine_tol, "residual acceptance");
    c_zeros->add_option("--out-file", zr.out_file, "artifact file name");

    decomp_args dc;
    auto* c_decomp = app.add_subcommand("decomp", "monomial decomposition");
    c_decomp->add_option("--poly", dc.poly, "polynomial in s1..s8")->required();
    c_decomp->add_option("--C", dc.C, "row-1 prefix lower bound");
    c_decomp->add_option("--box", dc.box, "axis re_lo,re_hi,im_lo,im_hi");
    c_decomp->add_option("--grid", dc.grid, "certification grid");
    c_decomp->add_option("--out-file", dc.out_file, "artifact file name");

    twist_args tw;
    auto* c_twist = app.add_subcommand("twist", "twist diagnostics");
    c_twist->add_option("--alpha", tw.alpha, "parameter (r:c/d or t:value)");
    c_twist->add_option("--kind", tw.kind, "rational | transcendental");
    c_twist->add_option("--q", tw.q, "character / phase modulus");
    c_twist->add_option("--char-index", tw.char_index,
                        "character index in the table (-1 = first non-principal)");
    c_twist->add_option("--n0", tw.n0, "tail threshold parameter N0");
    c_twist->add_option("--N", tw.N_max, "growth-fit upper limit");
    c_twist->add_option("--out-file", tw.out_file, "artifact file name");

    // let --out/--seed/--threads appear after the subcommand name too
    for (CLI::App* sub : {c_eval, c_scan, c_ms, c_zeros, c_decomp, c_twist})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (seed_set) cfg.seed = seed;
    if (threads > 0) cfg.threads = threads;

    if (c_eval->parsed()) return cmd_eval(ev, cfg);
    if (c_scan->parsed()) return cmd_scan(sc, cfg);
    if (c_ms->parsed()) return cmd_meansquare(ms, cfg);
    if (c_zeros->parsed()) return cmd_zeros(zr, cfg);
    if (c_decomp->parsed()) return cmd_decomp(dc, cfg);
    if (c_twist->parsed()) return cmd_twist(tw, cfg);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mhz::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mhz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
