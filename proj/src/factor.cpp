#include "isosieve/factor.hpp"

#include <algorithm>
#include <map>

namespace isosieve {

namespace {

// Brent's cycle-finding rho with batched gcds. Returns a nontrivial factor
// or 0 when the iteration budget runs out.
Int brent_rho(const Int& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c0 = 1; c0 < 20 && budget > 0; ++c0) {
    const Int c = c0;
    Int y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += lim;
        budget = budget > lim ? budget - lim : 0;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split(const Int& n, const FactorBudget& budget, std::map<Int, unsigned>& out,
           std::vector<Int>& stuck) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (is_square(n)) {
    const Int r = isqrt(n);
    split(r, budget, out, stuck);
    split(r, budget, out, stuck);
    return;
  }
  const Int d = brent_rho(n, budget.rho_iterations);
  if (d == 0) {
    stuck.push_back(n);
    return;
  }
  split(d, budget, out, stuck);
  split(n / d, budget, out, stuck);
}

}  // namespace

Factorization factor(const Int& n_in, const FactorBudget& budget) {
  Factorization result;
  Int n = abs(n_in);
  if (n <= 1) return result;
  std::map<Int, unsigned> found;
  static const std::vector<std::int64_t> small = primes_in_range(2, 100000);
  const std::vector<std::int64_t> large =
      budget.trial_bound > 100000 ? primes_in_range(2, budget.trial_bound) : std::vector<std::int64_t>{};
  for (std::int64_t p : large.empty() ? small : large) {
    if (p > budget.trial_bound) break;
    const unsigned long up = static_cast<unsigned long>(p);
    if (Int(up) * up > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), up)) {
      n /= up;
      ++found[Int(up)];
    }
  }
  std::vector<Int> stuck;
  split(n, budget, found, stuck);
  for (const auto& [p, e] : found) result.factors.push_back({p, e});
  for (const Int& s : stuck) result.cofactor *= s;
  return result;
}

std::vector<Int> prime_divisors(const Int& n, Int* unfactored, const FactorBudget& budget) {
  const Factorization f = factor(n, budget);
  std::vector<Int> out;
  out.reserve(f.factors.size());
  for (const auto& pp : f.factors) out.push_back(pp.prime);
  if (unfactored != nullptr) *unfactored = f.cofactor;
  return out;
}

}  // namespace isosieve
