#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isosieve/integer.hpp"
#include "isosieve/poly.hpp"

namespace isosieve {

/// x + y*w with w = (D + sqrt(D))/2. For K = Q (D = 1) y is always 0.
struct FieldElement {
  Rat x = 0;
  Rat y = 0;

  FieldElement() = default;
  FieldElement(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {
    x.canonicalize();
    y.canonicalize();
  }
  static FieldElement integer(const Int& n) { return {Rat(n), Rat(0)}; }

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

/// Ideal of the maximal order in Hermite normal form: Z*a + Z*(b + c*w),
/// with c | a, c | b and 0 <= b < a.
struct Ideal {
  Int a = 1;
  Int b = 0;
  Int c = 1;

  Int norm() const { return a * c; }
  friend bool operator==(const Ideal& l, const Ideal& r) { return l.a == r.a && l.b == r.b && l.c == r.c; }
};

/// Reduced binary quadratic form (A, B, C), B^2 - 4AC = D. For real fields
/// these are the reduced ideals [A, (B + sqrt D)/2] and C < 0.
struct ReducedForm {
  std::int64_t A = 1;
  std::int64_t B = 0;
  std::int64_t C = 0;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

struct PrimeIdealData {
  Int p;
  int residue_degree = 1;
  int ramification = 1;
  FieldElement second_generator;  // ideal = (p, second_generator)
  Ideal ideal;
  std::size_t ideal_class = 0;

  Int norm() const { return residue_degree == 1 ? p : p * p; }
};

class QuadField;

QuadField make_field(const Int& disc);

/// Empty when `disc` is 1 or fundamental; otherwise the reason it is rejected.
std::optional<std::string> fundamental_discriminant_error(const Int& disc);

class QuadField {
 public:
  const Int& disc() const { return disc_; }
  int degree() const { return is_rational() ? 1 : 2; }
  std::pair<int, int> signature() const;
  bool is_rational() const { return disc_ == 1; }
  bool is_imaginary() const { return disc_ < 0; }
  bool is_real() const { return disc_ > 1; }

  const Int& class_number() const { return h_; }
  const Int& class_exponent() const { return h_exp_; }
  const std::optional<FieldElement>& fundamental_unit() const { return unit_; }
  /// Norm of the fundamental unit (+1 or -1); 0 when there is none.
  int unit_norm() const { return unit_norm_; }
  /// Number of roots of unity in K.
  int roots_of_unity() const;

  // Class group, indexed so that class 0 is principal.
  std::size_t class_count() const { return classes_.size(); }
  const ReducedForm& class_rep(std::size_t i) const { return classes_[i]; }
  const Int& class_order(std::size_t i) const { return orders_[i]; }
  /// All reduced forms (imaginary) or reduced ideals (real).
  const std::vector<ReducedForm>& reduced_forms() const { return reduced_; }
  std::size_t class_of(const Ideal& I) const;
  std::size_t class_mul(std::size_t i, std::size_t j) const;
  std::size_t class_pow(std::size_t i, const Int& e) const;
  Ideal class_ideal(std::size_t i) const;

  FieldElement omega() const { return {Rat(0), Rat(is_rational() ? 0 : 1)}; }
  FieldElement sqrt_disc() const;
  /// r + s*sqrt(D)
  FieldElement from_parts(const Rat& r, const Rat& s) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement conj(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, const Int& e) const;
  Rat norm(const FieldElement& a) const;
  Rat trace(const FieldElement& a) const;
  /// Characteristic polynomial over Q of the integral element t (degree = degree()).
  IntPoly char_poly(const FieldElement& t) const;
  /// Approximate image under embedding `sigma` (0 or 1). Verification only.
  std::complex<long double> embed(const FieldElement& a, int sigma) const;
  /// log |sigma(a)| for a != 0, robust for very large coordinates.
  long double log_abs(const FieldElement& a, int sigma) const;
  std::string format(const FieldElement& a) const;

  Ideal ideal_from_generators(const std::vector<FieldElement>& gens) const;
  Ideal principal_ideal(const FieldElement& x) const { return ideal_from_generators({x}); }
  Ideal ideal_mul(const Ideal& I, const Ideal& J) const;
  Ideal ideal_pow(const Ideal& I, const Int& e) const;
  Ideal ideal_conj(const Ideal& I) const;
  bool contains(const Ideal& I, const FieldElement& x) const;
  bool is_valid_ideal(const Ideal& I) const;

  /// Generator of a principal ideal, or nothing when I is not principal or
  /// the search budget is exhausted.
  std::optional<FieldElement> generator(const Ideal& I) const;

 private:
  friend QuadField make_field(const Int& disc);

  struct Reduction {
    std::int64_t A;
    std::int64_t B;
    FieldElement gamma;  // primitive input = gamma * [A, (B + sqrt D)/2]
  };
  Reduction reduce(const Int& A, const Int& B, bool track) const;
  void build_class_group();
  void compute_unit();

  Int disc_ = 1;
  Int k_ = 0;  // w^2 = D*w - k
  Int h_ = 1;
  Int h_exp_ = 1;
  std::optional<FieldElement> unit_;
  int unit_norm_ = 0;
  std::vector<ReducedForm> classes_;
  std::vector<Int> orders_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> class_index_;
  std::vector<ReducedForm> reduced_;
};

std::vector<PrimeIdealData> split_prime(const QuadField& K, const Int& p);

/// x with (x) = v^power. Throws DomainError when power is not a multiple of
/// the order of v's class; empty when the bounded search fails.
std::optional<FieldElement> principal_generator(const QuadField& K, const PrimeIdealData& v, const Int& power);

/// Largest discriminant magnitude accepted by make_field.
inline constexpr std::int64_t kMaxDisc = 100000000;

}  // namespace isosieve
