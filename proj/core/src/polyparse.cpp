#include "mhz/polyparse.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

namespace mhz {

namespace {

// working representation: term list over 8-wide exponent tuples, merged on
// first appearance so the final listed order follows the input text
struct poly_builder {
    std::vector<poly_term> terms;

    void add_term(const std::vector<int>& exps, cplx coeff) {
        if (coeff == cplx(0.0, 0.0)) return;
        for (auto& t : terms) {
            if (t.exps == exps) {
                t.coeff += coeff;
                return;
            }
        }
        terms.push_back({coeff, exps});
    }

    void add(const poly_builder& o) {
        for (const auto& t : o.terms) add_term(t.exps, t.coeff);
    }
};

poly_builder pb_constant(cplx c) {
    poly_builder b;
    b.add_term(std::vector<int>(max_arity, 0), c);
    return b;
}

poly_builder pb_mul(const poly_builder& a, const poly_builder& b) {
    poly_builder out;
    for (const auto& x : a.terms) {
        for (const auto& y : b.terms) {
            std::vector<int> e(max_arity);
            for (int j = 0; j < max_arity; ++j)
                e[static_cast<std::size_t>(j)] =
                    x.exps[static_cast<std::size_t>(j)] +
                    y.exps[static_cast<std::size_t>(j)];
            out.add_term(e, x.coeff * y.coeff);
        }
    }
    if (out.terms.size() > 4096)
        throw cost_error("parse_polynomial: expansion too large");
    return out;
}

struct parser {
    const std::string& text;
    std::size_t pos = 0;
    int max_var = 0;

    explicit parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("parse_polynomial: " + what + " at position " +
                          std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("integer too large");
            ++pos;
        }
        return static_cast<int>(v);
    }

    double parse_decimal() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            while (pos < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
        }
        if (pos == start) fail("expected a number");
        return std::strtod(text.substr(start, pos - start).c_str(), nullptr);
    }

    poly_builder parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            poly_builder e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 's') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected a variable index after 's'");
            const int idx = parse_uint();
            if (idx < 1 || idx > max_arity) fail("variable index must be 1..8");
            max_var = std::max(max_var, idx);
            poly_builder b;
            std::vector<int> e(max_arity, 0);
            e[static_cast<std::size_t>(idx - 1)] = 1;
            b.add_term(e, cplx(1.0, 0.0));
            return b;
        }
        if (c == 'i') {
            ++pos;
            return pb_constant(cplx(0.0, 1.0));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const double v = parse_decimal();
            if (pos < text.size() && text[pos] == 'i') {
                ++pos;
                return pb_constant(cplx(0.0, v));
            }
            return pb_constant(cplx(v, 0.0));
        }
        fail("unexpected character");
    }

    poly_builder parse_factor() {
        poly_builder base = parse_atom();
        if (eat('^')) {
            const int e = parse_uint();
            if (e > 64) fail("exponent must be <= 64");
            poly_builder acc = pb_constant(cplx(1.0, 0.0));
            for (int i = 0; i < e; ++i) acc = pb_mul(acc, base);
            return acc;
        }
        return base;
    }

    poly_builder parse_term() {
        poly_builder acc = parse_factor();
        while (eat('*')) acc = pb_mul(acc, parse_factor());
        return acc;
    }

    poly_builder parse_expr() {
        poly_builder acc;
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        poly_builder first = parse_term();
        if (negate)
            for (auto& t : first.terms) t.coeff = -t.coeff;
        acc.add(first);
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            poly_builder next = parse_term();
            if (c == '-')
                for (auto& t : next.terms) t.coeff = -t.coeff;
            acc.add(next);
        }
        return acc;
    }
};

}  // namespace

polynomial parse_polynomial(const std::string& text, int arity) {
    if (arity < 0 || arity > max_arity)
        throw arity_error("parse_polynomial: arity must be in [0, 8]");
    parser p(text);
    poly_builder b = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");

    if (arity > 0 && p.max_var > arity)
        throw parse_error("parse_polynomial: variable index exceeds requested arity");
    const int n = arity > 0 ? arity : std::max(p.max_var, 1);

    std::vector<poly_term> terms;
    for (auto& t : b.terms) {
        for (int j = n; j < max_arity; ++j)
            if (t.exps[static_cast<std::size_t>(j)] != 0)
                throw parse_error("parse_polynomial: variable index exceeds arity");
        t.exps.resize(static_cast<std::size_t>(n));
        terms.push_back(std::move(t));
    }
    return polynomial(n, std::move(terms));
}

}  // namespace mhz
