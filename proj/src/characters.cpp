#include "isosieve/characters.hpp"

#include <sstream>

#include "isosieve/errors.hpp"
#include "isosieve/factor.hpp"
#include "isosieve/weil.hpp"

namespace isosieve {

std::string to_string(TypeTag tag) {
  switch (tag) {
    case TypeTag::Trivial: return "Trivial";
    case TypeTag::Cyclotomic: return "Cyclotomic";
    case TypeTag::TypeTwo: return "TypeTwo";
    case TypeTag::CMCandidate: return "CMCandidate";
    case TypeTag::MixedSurviving: return "MixedSurviving";
    case TypeTag::Unbalanced: return "Unbalanced";
  }
  return "?";
}

TypeTag parse_type_tag(const std::string& s) {
  for (TypeTag t : {TypeTag::Trivial, TypeTag::Cyclotomic, TypeTag::TypeTwo, TypeTag::CMCandidate,
                    TypeTag::MixedSurviving, TypeTag::Unbalanced}) {
    if (to_string(t) == s) return t;
  }
  throw DomainError("unknown type tag " + s);
}

bool Signature::reduced() const {
  Int g = e;
  for (const Int& s : S) g = gcd(g, s);
  return g == 1;
}

bool Signature::is_constant() const {
  for (const Int& s : S)
    if (s != S.front()) return false;
  return true;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < S.size(); ++i) os << (i ? "," : "") << S[i].get_str();
  os << ";e=" << e.get_str() << ")";
  return os.str();
}

std::vector<Signature> enumerate_reduced_pairs(const QuadField& K, int g, int d) {
  if (d < 1 || d > 2 * g) throw DomainError("d must satisfy 1 <= d <= 2g");
  const Int cg = compute_cg(g);
  std::vector<Int> divisors;
  for (Int e = 1; e <= cg; ++e)
    if (mpz_divisible_p(cg.get_mpz_t(), e.get_mpz_t())) divisors.push_back(e);
  const int n = K.degree();
  std::vector<Signature> out;
  for (const Int& e : divisors) {
    const Int top = d * e;
    std::vector<Int> cur(static_cast<std::size_t>(n), Int(0));
    while (true) {
      Signature s{cur, e};
      if (s.reduced()) out.push_back(s);
      int i = n - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == top) cur[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

FieldElement evaluate(const QuadField& K, const Signature& S, const FieldElement& x) {
  if (x.is_zero()) {
    for (const Int& s : S.S)
      if (s > 0) throw DomainError("evaluation of a character at zero");
    return FieldElement::integer(1);
  }
  FieldElement r = K.pow(x, S.S.at(0));
  if (K.degree() == 2) r = K.mul(r, K.pow(K.conj(x), S.S.at(1)));
  return r;
}

BalanceResult is_balanced(const QuadField& K, const Signature& S) {
  BalanceResult r;
  if (!K.is_real()) return r;
  const bool coeff = S.S.at(0) == S.S.at(1);
  const FieldElement v = evaluate(K, S, *K.fundamental_unit());
  const bool unit = v == FieldElement::integer(1) || v == FieldElement::integer(-1);
  if (coeff != unit) throw DomainError("balance tests disagree for " + S.to_string());
  r.balanced = coeff;
  if (!coeff) r.witness = K.fundamental_unit();
  return r;
}

Signature dual(const Signature& S, int d) {
  Signature r = S;
  for (Int& s : r.S) s = d * S.e - s;
  return r;
}

std::optional<int> conjugate_sum(const QuadField& K, const Signature& S, int d) {
  // Complex conjugation fixes the embeddings of Q and of a real quadratic
  // field and swaps the two embeddings of an imaginary one.
  Int sum;
  if (K.is_imaginary()) {
    sum = S.S.at(0) + S.S.at(1);
  } else {
    if (!S.is_constant()) return std::nullopt;
    sum = 2 * S.S.at(0);
  }
  if (!mpz_divisible_p(sum.get_mpz_t(), S.e.get_mpz_t())) return std::nullopt;
  const Int a = sum / S.e;
  if (a < 0 || a > 2 * d) return std::nullopt;
  return static_cast<int>(a.get_si());
}

TypeTag classify(const QuadField& K, const Signature& S, int d) {
  if (!is_balanced(K, S).balanced) return TypeTag::Unbalanced;
  bool zero = true;
  for (const Int& s : S.S) zero = zero && s == 0;
  if (zero) return TypeTag::Trivial;
  if (S.is_constant()) {
    if (S.S.front() == d * S.e) return TypeTag::Cyclotomic;
    if (2 * S.S.front() == S.e) return TypeTag::TypeTwo;
  }
  if (K.is_imaginary() && !S.is_constant()) return TypeTag::CMCandidate;
  return TypeTag::MixedSurviving;
}

}  // namespace isosieve
