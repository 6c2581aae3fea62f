#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace locnil {

using Integer = mpz_class;

bool is_prime_u64(std::uint64_t n);

/// Prime factorization of n >= 1, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Prime factorization of |n| (n != 0), primes ascending.
///
/// Trial division up to 10^6 followed by Pollard-Brent rho on the cofactor.
/// Throws FactorizationExhausted when rho fails to split a composite within
/// its iteration budget; no partial answer is ever returned.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Largest power of the prime q dividing n (n >= 1).
std::uint64_t prime_part(std::uint64_t n, std::uint64_t q);

/// Exponent of q in n.
unsigned valuation(std::uint64_t n, std::uint64_t q);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace locnil
