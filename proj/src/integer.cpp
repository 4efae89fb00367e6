#include "isosieve/integer.hpp"

#include "isosieve/errors.hpp"

namespace isosieve {

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative integer " + n.get_str());
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_prime(std::int64_t n) { return is_prime(Int(static_cast<long>(n))); }

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
  for (std::int64_t i = 2; i * i <= hi; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  for (std::int64_t i = std::max<std::int64_t>(2, lo); i <= hi; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

int kronecker(const Int& a, const Int& n) {
  if (n == 0) throw DomainError("kronecker symbol with n = 0");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// Tonelli-Shanks.
Int sqrt_mod(const Int& a_in, const Int& p) {
  if (p == 2) return mod_floor(a_in, 2);
  Int a = mod_floor(a_in, p);
  if (a == 0) return 0;
  if (kronecker(a, p) != 1) throw DomainError(a.get_str() + " is not a square mod " + p.get_str());
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (kronecker(z, p) != -1) ++z;
  Int c, t, r, tmp;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  Int e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long mm = s;
  while (t != 1) {
    unsigned long i = 0;
    tmp = t;
    while (tmp != 1) {
      tmp = tmp * tmp % p;
      ++i;
      if (i == mm) throw DomainError("sqrt_mod: modulus is not prime");
    }
    Int b = c;
    for (unsigned long j = 0; j + 1 < mm - i; ++j) b = b * b % p;
    mm = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) throw DomainError("modulus zero");
  Int r;
  Int am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Int strip_small_factors(const Int& n, std::int64_t bound) {
  Int r = abs(n);
  if (r == 0) return r;
  static const std::vector<std::int64_t> small = primes_in_range(2, 100000);
  const std::vector<std::int64_t> large = bound > 100000 ? primes_in_range(2, bound) : std::vector<std::int64_t>{};
  for (std::int64_t p : large.empty() ? small : large) {
    if (p > bound) break;
    const unsigned long up = static_cast<unsigned long>(p);
    while (mpz_divisible_ui_p(r.get_mpz_t(), up)) r /= up;
    if (r == 1) break;
  }
  return r;
}

}  // namespace isosieve
