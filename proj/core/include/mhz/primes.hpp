#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mhz {

// Primes up to n inclusive (simple sieve).
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Factorization of n >= 1 as (prime, exponent) pairs, trial division against
// a cached sieve up to 10^6; throws budget_error if a cofactor above the
// sieve square survives (caller is expected to stay within the sieve range).
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Largest prime factor (1 for n = 1).
std::int64_t largest_prime_factor(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// a^e mod m (m < 2^31 expected)
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m);

// smallest primitive root modulo p^k (p odd prime) or modulo 2, 4
std::int64_t primitive_root(std::int64_t pk, std::int64_t p);

// Euler phi of a prime power p^k
std::int64_t phi_prime_power(std::int64_t p, int k);

}  // namespace mhz
