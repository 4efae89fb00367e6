#include "isosieve/cmtypes.hpp"

#include <set>

#include "isosieve/errors.hpp"
#include "isosieve/weil.hpp"

namespace isosieve {

namespace {

void require_imaginary(const QuadField& K) {
  if (!K.is_imaginary()) throw DomainError("CM class criterion needs an imaginary quadratic field");
}

}  // namespace

Int ctheta_order(const QuadField& K, const Signature& S) {
  require_imaginary(K);
  const Int k = S.S.at(0) - S.S.at(1);
  // |image of x -> x^k| = h / #{x : ord(x) | k}
  long kernel = 0;
  for (std::size_t i = 0; i < K.class_count(); ++i) {
    const Int& o = K.class_order(i);
    if (mpz_divisible_p(k.get_mpz_t(), o.get_mpz_t())) ++kernel;
  }
  return K.class_number() / kernel;
}

Int ctheta_order_brute(const QuadField& K, const Signature& S) {
  require_imaginary(K);
  const Int k = S.S.at(0) - S.S.at(1);
  std::set<std::size_t> image;
  for (std::size_t i = 0; i < K.class_count(); ++i) {
    // [a]^S0 [conj a]^S1, with the conjugate class computed from the ideal
    const Ideal I = K.class_ideal(i);
    const std::size_t ci = K.class_of(K.ideal_conj(I));
    image.insert(K.class_mul(K.class_pow(i, S.S.at(0)), K.class_pow(ci, S.S.at(1))));
  }
  (void)k;
  return Int(static_cast<unsigned long>(image.size()));
}

bool contains_hcf(const QuadField& K) { return K.is_imaginary() && K.class_number() == 1; }

CMVerdict cm_verdict(const QuadField& K) {
  CMVerdict v;
  if (K.is_imaginary()) v.ctheta_order = ctheta_order(K, Signature{{Int(1), Int(0)}, Int(1)});
  v.contains_hcf = contains_hcf(K);
  v.unbounded = v.contains_hcf;
  return v;
}

FieldElement psi_fphi_value(const QuadField& K, const Signature& S, const PrimeIdealData& v) {
  require_imaginary(K);
  const Ideal J = K.ideal_mul(K.ideal_pow(v.ideal, S.S.at(0)), K.ideal_pow(K.ideal_conj(v.ideal), S.S.at(1)));
  const std::size_t cls = K.class_of(J);
  if (cls != 0) {
    const ReducedForm& f = K.class_rep(cls);
    throw DomainError("ideal theta^S(v) lies in the nontrivial class of the form (" + std::to_string(f.A) + "," +
                      std::to_string(f.B) + "," + std::to_string(f.C) + ")");
  }
  const auto w = K.generator(J);
  if (!w) throw ResourceError("generator search failed");
  const Rat ww = K.norm(*w);
  if (ww != Rat(ipow(v.norm(), Int(S.S.at(0) + S.S.at(1)).get_ui()))) throw DomainError("Weil element check failed");
  return *w;
}

Int bchar_term(const QuadField& K, const Signature& S, int g) {
  if (!K.is_real()) return 1;
  const Int cg = compute_cg(g);
  const FieldElement t = K.pow(evaluate(K, S, *K.fundamental_unit()), cg / S.e);
  const Rat n = K.norm(K.sub(FieldElement::integer(1), t));
  return abs(n.get_num());
}

BcharBound bchar_bound(const QuadField& K, int g, int d) {
  BcharBound b;
  if (!K.is_real()) return b;
  for (const Signature& S : enumerate_reduced_pairs(K, g, d)) {
    if (is_balanced(K, S).balanced) continue;
    const Int term = bchar_term(K, S, g);
    b.terms.emplace_back(S, term);
    b.product *= term;
  }
  return b;
}

}  // namespace isosieve
