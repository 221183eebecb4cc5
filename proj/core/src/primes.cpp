#include "mhz/primes.hpp"

#include <cmath>
#include <mutex>

#include "mhz/errors.hpp"

namespace mhz {

namespace {

constexpr std::int64_t sieve_limit = 1000000;

const std::vector<std::int64_t>& cached_primes() {
    static std::vector<std::int64_t> table;
    static std::once_flag once;
    std::call_once(once, [] { table = primes_up_to(sieve_limit); });
    return table;
}

}  // namespace

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q <= n; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw domain_error("factorize: requires n >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p : cached_primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (n > sieve_limit * sieve_limit)
            throw budget_error("factorize: cofactor beyond sieve range");
        out.emplace_back(n, 1);  // n is prime (no factor <= sqrt(n) found)
    }
    return out;
}

std::int64_t largest_prime_factor(std::int64_t n) {
    auto f = factorize(n);
    return f.empty() ? 1 : f.back().first;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

std::int64_t phi_prime_power(std::int64_t p, int k) {
    std::int64_t r = p - 1;
    for (int i = 1; i < k; ++i) r *= p;
    return r;
}

std::int64_t primitive_root(std::int64_t pk, std::int64_t p) {
    if (pk == 2) return 1;
    if (pk == 4) return 3;
    const std::int64_t order = pk / p * (p - 1);
    auto ord_factors = factorize(order);
    for (std::int64_t g = 2; g < pk; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [q, e] : ord_factors) {
            if (pow_mod(g, order / q, pk) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw domain_error("primitive_root: none found (modulus not p^k?)");
}

}  // namespace mhz
