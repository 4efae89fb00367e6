#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isosieve/field.hpp"
#include "isosieve/integer.hpp"
#include "isosieve/poly.hpp"

namespace isosieve {

/// Product of p^n over primes p with (p-1) p^(n-1) <= 2g < (p-1) p^n.
Int compute_cg(int g);

/// n-th cyclotomic polynomial.
IntPoly cyclotomic(int n);

/// A candidate characteristic polynomial of Frobenius, split by root
/// magnitude: unit_part has roots of absolute value 1 (roots of unity),
/// dual_part = q^t unit_part(x/q) has roots of absolute value q, and
/// weil_part = x^k real_part(x + q/x) has roots of absolute value sqrt(q).
struct WeilPolynomial {
  IntPoly poly;
  Int q;
  int g = 1;
  std::vector<int> cyclotomic_indices;  // Phi_n factors of unit_part
  IntPoly unit_part;
  IntPoly dual_part;
  IntPoly weil_part;
  IntPoly real_part;

  /// Factor tags such as "unit-pair(+)", "unit-pair(-)", "good-pair(a)",
  /// "cyclotomic(n)", "real(h)".
  std::vector<std::string> profile() const;
};

struct EnumerationBudget {
  std::size_t max_polys = 50000;
  std::size_t max_candidates = 20000;
};

/// All Weil polynomials of degree 2g for q. Throws ResourceError for g > 3
/// or when the budget is exceeded.
std::vector<WeilPolynomial> enumerate_frobenius_polys(const Int& q, int g, const EnumerationBudget& budget = {});

/// Monic integer h of degree k whose roots are all real and lie in
/// [-2 sqrt q, 2 sqrt q]. k <= 3.
std::vector<IntPoly> real_weil_polys(const Int& q, int k, std::size_t limit = static_cast<std::size_t>(-1));

/// x^(2g) P(q/x) = q^g P(x)
bool satisfies_functional_equation(const IntPoly& P, const Int& q, int g);

/// Products of d distinct roots of some Weil polynomial, all of absolute
/// value q^(mag_exp/2). `minpoly` is monic and squarefree; it may be
/// reducible, in which case it stands for all of its roots at once.
struct FrobeniusCandidate {
  IntPoly minpoly;
  int mag_exp = 0;
  std::size_t source = 0;  // index of the first Weil polynomial producing it
  int from_unit = 0;       // roots chosen from each magnitude class
  int from_weil = 0;
  int from_dual = 0;
};

std::vector<FrobeniusCandidate> frobenius_candidates(const std::vector<WeilPolynomial>& polys, int d,
                                                     const EnumerationBudget& budget = {});
std::vector<FrobeniusCandidate> frobenius_candidates(const Int& q, int g, int d,
                                                     const EnumerationBudget& budget = {});

/// y^m mod f for the monic candidate polynomial f.
IntPoly candidate_power(const IntPoly& minpoly, const Int& m);

/// |Res_y(f(y), charpoly_t(y^m mod f))|: the absolute norm of c^m - t over
/// all roots c of f and all conjugates of t. Zero exactly when some c^m = t.
Int divisibility_integer(const IntPoly& minpoly, const Int& m, const FieldElement& t, const QuadField& K);
/// Same value from a precomputed power residue (see candidate_power).
Int divisibility_from_power(const IntPoly& minpoly, const IntPoly& power, const IntPoly& target_charpoly);
/// Same value computed as a determinant of a multiplication matrix.
Int divisibility_by_determinant(const IntPoly& minpoly, const Int& m, const FieldElement& t, const QuadField& K);

/// Explicit upper bound on the number of possible character values at a
/// prime of norm q, following the coefficient count for Weil polynomials.
Int possible_value_bound(const Int& q, int g);

}  // namespace isosieve
