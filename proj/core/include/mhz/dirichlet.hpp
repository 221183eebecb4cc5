#pragma once

#include <cstdint>
#include <vector>

#include "mhz/hurwitz.hpp"
#include "mhz/numcore.hpp"

namespace mhz {

// ---------------------------------------------------------------------------
// Dirichlet character mod q, stored as its full value table chi(0..q-1).
// Values at residues coprime to q are exact roots of unity (components
// snapped to the exact lattice when within 4e-16); elsewhere 0.
// ---------------------------------------------------------------------------
struct dirichlet_character {
    std::int64_t q = 1;
    std::vector<cplx> values;  // size q, values[a] = chi(a)
    bool principal = false;
    int order = 1;  // least n with chi^n principal

    cplx operator()(std::int64_t n) const {
        std::int64_t r = n % q;
        if (r < 0) r += q;
        return values[static_cast<std::size_t>(r)];
    }
};

// All phi(q) characters mod q, built from prime-power generator
// decomposition via CRT.  Order of the list is deterministic (lexicographic
// in the generator exponent tuple).  q = 1 yields the single trivial
// character.  Requires 1 <= q <= 10^6.
std::vector<dirichlet_character> character_table(std::int64_t q);

// L(s, chi) = q^{-s} sum_{a=1..q} chi(a) zeta(s, a/q).
// At s = 1: principal characters raise pole_error; non-principal ones use the
// digamma limit  L(1,chi) = -(1/q) sum_a chi(a) psi(a/q)  (the Hurwitz pole
// terms cancel because sum chi(a) = 0).
cplx dirichlet_L(cplx s, const dirichlet_character& chi);

// Heuristic zero scan over a rectangle: records the minimum |L(s,chi)| on an
// evaluation grid.  A verdict of true means "no numerical evidence of a zero"
// (min modulus above the threshold); it is a diagnostic, not a proof.
struct zero_scan_report {
    double min_modulus = 0.0;
    cplx argmin;
    bool verdict = false;
    double threshold = 0.0;
};

zero_scan_report permissibility_scan(const dirichlet_character& chi,
                                     double re_lo, double re_hi, double im_lo,
                                     double im_hi, int grid = 24,
                                     double threshold = 1e-3);

}  // namespace mhz
