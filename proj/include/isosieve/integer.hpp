#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace isosieve {

using Int = mpz_class;
using Rat = mpq_class;

Int isqrt(const Int& n);
bool is_square(const Int& n);

/// Primality. Deterministic below 2^64 via GMP's BPSW-backed test; probable
/// prime above.
bool is_prime(const Int& n);
bool is_prime(std::int64_t n);

/// Sorted primes p with lo <= p <= hi.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Kronecker symbol (a | n), n != 0.
int kronecker(const Int& a, const Int& n);

/// Some x with x^2 = a mod p for an odd prime p and a a square mod p.
Int sqrt_mod(const Int& a, const Int& p);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

/// Floor division with a positive or negative divisor.
Int floor_div(const Int& a, const Int& b);
/// Representative of a mod m in [0, |m|).
Int mod_floor(const Int& a, const Int& m);

Int ipow(const Int& base, unsigned long exp);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

/// Remove every prime factor p <= bound from n (n != 0); returns |cofactor|.
Int strip_small_factors(const Int& n, std::int64_t bound);

}  // namespace isosieve
