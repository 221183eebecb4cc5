#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhz/errors.hpp"
#include "mhz/multizeta.hpp"
#include "mhz/numcore.hpp"

namespace mhz {

// one polynomial term: coeff * prod_j s_j^{exps[j]}
struct poly_term {
    cplx coeff;
    std::vector<int> exps;
};

/*
 * Polynomial in s_1..s_n with complex coefficients.  Terms keep their listed
 * order (the tableau layout below assigns slot blocks term by term);
 * duplicate exponent tuples are merged into the first occurrence and
 * zero-coefficient terms dropped, so the invariants "no duplicate tuples,
 * coefficients nonzero" always hold.
 */
class polynomial {
public:
    polynomial(int arity, std::vector<poly_term> terms);

    int arity() const { return arity_; }
    const std::vector<poly_term>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    int degree() const;

    cplx eval(const std::vector<cplx>& s) const;
    cplx eval(const multi_point& s) const;

    std::string str() const;  // human-readable, e.g. "(2+1i)*s1^2*s2"

private:
    int arity_;
    std::vector<poly_term> terms_;
};

/*
 * Slot m of the monomial tableau: the single nonzero row entry
 * q_{row,m}(s) = coeff * s_row^{exp}; all other rows are zero at this slot.
 */
struct tableau_slot {
    std::int64_t m;  // 1-based slot index
    int row;         // owner j_m, 1-based
    cplx coeff;
    int exp;
};

/*
 * Decomposition of an n-variable polynomial with L terms into M = 2nL - 1
 * slot monomials.  Term l (1-based) occupies the block of 2n slots starting
 * at b = 2n(l-1):
 *     slots b+1 .. b+n-1 : rows n, n-1, ..., 2 with  -s_j^{c_{j,l}}
 *     slot  b+n          : row 1 with  a_l s_1^{c_{1,l}}
 *     slots b+n+1..b+2n-1: rows 2, 3, ..., n  with  +s_j^{c_{j,l}}
 *     slot  b+2n         : row 1 with  -a_l s_1^{c_{1,l}}  (dropped for l=L)
 * so each row's prefix sums are single monomials or zero, ordered products
 * over m_1 < ... < m_n telescope back to p, and every tail product over rows
 * v..n vanishes identically.  Row 1 is scaled by B^{n-1} and rows 2..n by
 * 1/B with B a power of two (exact in binary floating point), chosen
 * smallest such that on the target box every nonzero row-1 prefix has
 * modulus > C and every other row's prefix has modulus <= 1.
 */
struct monomial_tableau {
    int arity = 0;
    std::int64_t M = 0;
    double B = 1.0;
    std::vector<tableau_slot> slots;  // ascending m, one entry per slot
};

monomial_tableau decompose(const polynomial& p, double C, const compact_box& box);

struct verification_report {
    bool product_identity = false;   // ordered products reconstruct p exactly
    bool tail_vanishing = false;     // all tail sums over rows v..n are 0
    int tail_violation_v = 0;        // first violating v (0 = none)
    bool prefix_monomial = false;    // every row prefix is one monomial or 0
    bool box_conditions = false;     // modulus conditions on the box
    bool box_checked = false;
    double min_row1_prefix = 0.0;    // certified min over box, nonzero prefixes
    double max_other_prefix = 0.0;   // certified max over box, rows 2..n

    bool pass() const {
        return product_identity && tail_vanishing && prefix_monomial &&
               (!box_checked || box_conditions);
    }
};

// checks (i)-(iii) symbolically with zero tolerance (exact pair cancellation)
verification_report verify_tableau(const monomial_tableau& t, const polynomial& p);
// additionally certifies the box modulus conditions against threshold C
verification_report verify_tableau(const monomial_tableau& t, const polynomial& p,
                                   double C, const compact_box& box);

// JSON array-of-slots serialization; round-trips bit-exactly
std::string tableau_to_json(const monomial_tableau& t);
monomial_tableau tableau_from_json(const std::string& text);

}  // namespace mhz
