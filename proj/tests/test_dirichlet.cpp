#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "mhz/dirichlet.hpp"

using mhz::cplx;

namespace {

std::int64_t euler_phi(std::int64_t q) {
    std::int64_t count = 0;
    for (std::int64_t a = 1; a <= q; ++a) {
        std::int64_t x = a, y = q;
        while (y) { const std::int64_t t = x % y; x = y; y = t; }
        if (x == 1) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("character table sizes and value structure") {
    for (std::int64_t q : {1, 2, 3, 4, 5, 8, 12, 24, 40}) {
        const auto tab = mhz::character_table(q);
        CHECK(static_cast<std::int64_t>(tab.size()) == euler_phi(q));
        int principal_count = 0;
        for (const auto& chi : tab) {
            CHECK(chi.q == q);
            CHECK(static_cast<std::int64_t>(chi.values.size()) == q);
            if (chi.principal) ++principal_count;
            for (std::int64_t a = 0; a < q; ++a) {
                std::int64_t g = a, h = q;
                while (h) { const std::int64_t t = g % h; g = h; h = t; }
                const double m = std::abs(chi(a));
                if (g == 1)
                    CHECK(m == doctest::Approx(1.0).epsilon(1e-14));
                else
                    CHECK(m == 0.0);
            }
            CHECK(std::abs(chi(1) - cplx(1.0, 0.0)) < 1e-15);
        }
        CHECK(principal_count == 1);
    }
    CHECK_THROWS_AS((void)mhz::character_table(0), mhz::domain_error);
    CHECK_THROWS_AS((void)mhz::character_table(2000000), mhz::domain_error);
}

TEST_CASE("complete multiplicativity") {
    for (std::int64_t q : {5, 8, 12, 24, 40}) {
        for (const auto& chi : mhz::character_table(q)) {
            for (std::int64_t m = 0; m < q; ++m)
                for (std::int64_t n = 0; n < q; ++n)
                    CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-13);
        }
    }
}

TEST_CASE("orders mod 5 are 1,2,4,4") {
    const auto tab = mhz::character_table(5);
    std::vector<int> orders;
    for (const auto& chi : tab) orders.push_back(chi.order);
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 4, 4});
    for (const auto& chi : tab) {
        // order really is the least n with chi^n trivial on units
        for (int n = 1; n < chi.order; ++n) {
            bool all_one = true;
            for (std::int64_t a = 1; a < 5; ++a) {
                cplx p(1.0, 0.0);
                for (int i = 0; i < n; ++i) p *= chi(a);
                if (std::abs(p - cplx(1.0, 0.0)) > 1e-12) all_one = false;
            }
            CHECK(!all_one);
        }
        bool all_one = true;
        for (std::int64_t a = 1; a < 5; ++a) {
            cplx p(1.0, 0.0);
            for (int i = 0; i < chi.order; ++i) p *= chi(a);
            if (std::abs(p - cplx(1.0, 0.0)) > 1e-12) all_one = false;
        }
        CHECK(all_one);
    }
}

TEST_CASE("orthogonality sum over characters") {
    for (std::int64_t q = 2; q <= 30; ++q) {
        const auto tab = mhz::character_table(q);
        for (std::int64_t a = 0; a < q; ++a) {
            cplx sum = 0.0;
            for (const auto& chi : tab) sum += chi(a);
            const double want = (a % q == 1 % q)
                                    ? static_cast<double>(tab.size())
                                    : 0.0;
            CHECK(std::abs(sum - want) < 1e-11);
        }
    }
}

TEST_CASE("orthogonality sum over residues") {
    for (std::int64_t q : {5, 12, 24}) {
        for (const auto& chi : mhz::character_table(q)) {
            cplx sum = 0.0;
            for (std::int64_t a = 0; a < q; ++a) sum += chi(a);
            const double want = chi.principal ? std::abs(sum) : 0.0;
            if (!chi.principal) CHECK(std::abs(sum) < 1e-12);
            else CHECK(std::abs(sum - want) < 1e-12);
        }
    }
}

TEST_CASE("L-values against references") {
    // chi_4: the nontrivial character mod 4. L(2, chi_4) = Catalan.
    const auto tab4 = mhz::character_table(4);
    const mhz::dirichlet_character* chi4 = nullptr;
    for (const auto& chi : tab4)
        if (!chi.principal) chi4 = &chi;
    REQUIRE(chi4 != nullptr);
    CHECK(std::abs(mhz::dirichlet_L(cplx(2.0, 0.0), *chi4) -
                   cplx(0.91596559417721901505, 0.0)) < 1e-12);

    // mod 5: quadratic chi has chi(2) = -1; order-4 pick with chi(2) = i
    const auto tab5 = mhz::character_table(5);
    const mhz::dirichlet_character* quad5 = nullptr;
    const mhz::dirichlet_character* quart5 = nullptr;
    for (const auto& chi : tab5) {
        if (chi.order == 2) quad5 = &chi;
        if (chi.order == 4 && std::abs(chi(2) - cplx(0.0, 1.0)) < 1e-12)
            quart5 = &chi;
    }
    REQUIRE(quad5 != nullptr);
    REQUIRE(quart5 != nullptr);
    CHECK(std::abs(mhz::dirichlet_L(cplx(2.0, 0.0), *quad5) -
                   cplx(0.70621140325974095743, 0.0)) < 1e-12);
    CHECK(std::abs(mhz::dirichlet_L(cplx(1.0, 0.0), *quad5) -
                   cplx(0.43040894096400403889, 0.0)) < 1e-12);
    // the five zeta(2, a/5) terms reach magnitude ~26 before the q^-s
    // rescale, so the summed Euler-Maclaurin error lands near 4e-12
    CHECK(std::abs(mhz::dirichlet_L(cplx(2.0, 0.0), *quart5) -
                   cplx(0.95871612271313315539, 0.14556587678383959046)) <
          1e-11);

    // principal character mod 4: L(s, chi0) = (1 - 2^-s) zeta(s)
    const mhz::dirichlet_character* chi0 = nullptr;
    for (const auto& chi : tab4)
        if (chi.principal) chi0 = &chi;
    REQUIRE(chi0 != nullptr);
    const cplx s(2.5, 0.0);
    const cplx want = (1.0 - std::pow(2.0, -2.5)) *
                      mhz::hurwitz_zeta(s, 1.0);
    CHECK(std::abs(mhz::dirichlet_L(s, *chi0) - want) < 1e-12);
    CHECK_THROWS_AS((void)mhz::dirichlet_L(cplx(1.0, 0.0), *chi0),
                    mhz::pole_error);
}

TEST_CASE("L is an Euler product: compare partial products") {
    // crude sanity at s = 3 where the product converges fast
    const auto tab = mhz::character_table(5);
    for (const auto& chi : tab) {
        if (chi.principal) continue;
        cplx prod(1.0, 0.0);
        for (std::int64_t p : {2, 3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                               43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
                               97}) {
            prod /= (1.0 - chi(p) * std::pow(static_cast<double>(p), -3.0));
        }
        CHECK(std::abs(prod - mhz::dirichlet_L(cplx(3.0, 0.0), chi)) < 1e-5);
    }
}

TEST_CASE("zero scan on the strip box") {
    const auto tab4 = mhz::character_table(4);
    const mhz::dirichlet_character* chi4 = nullptr;
    for (const auto& chi : tab4)
        if (!chi.principal) chi4 = &chi;
    const auto rep = mhz::permissibility_scan(*chi4, 0.55, 0.95, -1.0, 1.0);
    CHECK(rep.verdict);
    CHECK(rep.min_modulus > rep.threshold);
    CHECK(rep.min_modulus < 10.0);
}
