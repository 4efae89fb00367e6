#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "isosieve/integer.hpp"

namespace isosieve {

/// Dense univariate polynomial over Z, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t degree);
  /// x - root
  static IntPoly linear(const Int& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const;

  Int eval(const Int& x) const;
  Int content() const;  // nonnegative gcd of coefficients
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  /// x^deg * p(1/x)
  IntPoly reversed() const;
  /// p(c * x)
  IntPoly scale_argument(const Int& c) const;
  /// p(x + c)
  IntPoly shift(const Int& c) const;
  /// Exact division of every coefficient by d (throws when inexact).
  IntPoly div_exact(const Int& d) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// a mod m for monic m.
IntPoly rem_monic(const IntPoly& a, const IntPoly& m);
IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& monic);
IntPoly powmod(const IntPoly& base, const Int& exp, const IntPoly& monic);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over Z (throws when b does not divide a).
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Z[x] (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);

/// Resultant via the subresultant pseudo-remainder sequence.
Int resultant(const IntPoly& a, const IntPoly& b);

using IntMatrix = std::vector<std::vector<Int>>;

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);
IntMatrix sylvester_matrix(const IntPoly& a, const IntPoly& b);
/// Matrix of multiplication by z on Z[y]/(monic f) in the basis 1, y, ...
IntMatrix multiplication_matrix(const IntPoly& monic_f, const IntPoly& z);
/// Norm of z from Z[y]/(f) to Z, as det of the multiplication matrix. Equal
/// to resultant(f, z) for monic f; computed by an independent route.
Int norm_by_determinant(const IntPoly& monic_f, const IntPoly& z);

IntMatrix companion_matrix(const IntPoly& monic);
IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b);
/// Matrix of the k-th exterior power (k x k minors, lexicographic subsets).
IntMatrix exterior_power(const IntMatrix& m, std::size_t k);
/// det(xI - m), Faddeev-LeVerrier with exact integer division.
IntPoly charpoly(const IntMatrix& m);

/// Number of distinct real roots (Sturm sequence).
int count_distinct_real_roots(const IntPoly& p);

/// Floating-point roots of the squarefree part (Durand-Kerner), for
/// verification only; never used in exact decisions.
std::vector<std::complex<long double>> numeric_roots(const IntPoly& p);

}  // namespace isosieve
