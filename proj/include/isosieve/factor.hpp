#pragma once

#include <cstdint>
#include <vector>

#include "isosieve/integer.hpp"

namespace isosieve {

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
};

/// Result of a budgeted factorization. `cofactor` is 1 when the
/// factorization is complete; otherwise it is a composite whose prime
/// divisors were not separated within the budget.
struct Factorization {
  std::vector<PrimePower> factors;  // sorted by prime
  Int cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

struct FactorBudget {
  std::int64_t trial_bound = 100000;
  std::uint64_t rho_iterations = 2000000;
};

/// Trial division, then Brent's variant of Pollard rho on what remains.
Factorization factor(const Int& n, const FactorBudget& budget = {});

/// Distinct prime divisors only (convenience over factor()).
std::vector<Int> prime_divisors(const Int& n, Int* unfactored = nullptr,
                                const FactorBudget& budget = {});

}  // namespace isosieve
