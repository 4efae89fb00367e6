#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isosieve/field.hpp"
#include "isosieve/integer.hpp"

namespace isosieve {

enum class TypeTag { Trivial, Cyclotomic, TypeTwo, CMCandidate, MixedSurviving, Unbalanced };

std::string to_string(TypeTag tag);
TypeTag parse_type_tag(const std::string& s);

/// Exponent vector S over the embeddings of K (index 0 = identity, 1 =
/// conjugation) together with the exponent e.
struct Signature {
  std::vector<Int> S;
  Int e = 1;

  bool reduced() const;
  bool is_constant() const;
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.e == b.e && a.S == b.S; }
  friend bool operator<(const Signature& a, const Signature& b) {
    if (a.e != b.e) return a.e < b.e;
    return a.S < b.S;
  }
};

/// All reduced pairs (S, e): e | c_g, 0 <= S(sigma) <= d e, gcd(e, S) = 1.
std::vector<Signature> enumerate_reduced_pairs(const QuadField& K, int g, int d);

struct BalanceResult {
  bool balanced = true;
  std::optional<FieldElement> witness;  // fundamental unit when unbalanced
};

/// Coefficient test, cross-checked against theta^S(u) = +-1 for the
/// fundamental unit u. Throws if the two tests disagree.
BalanceResult is_balanced(const QuadField& K, const Signature& S);

/// prod sigma(x)^S(sigma)
FieldElement evaluate(const QuadField& K, const Signature& S, const FieldElement& x);

/// S'(sigma) = d e - S(sigma)
Signature dual(const Signature& S, int d);

/// The a with S(sigma) + S(conj sigma) = a e for every sigma, if it exists
/// and 0 <= a <= 2d.
std::optional<int> conjugate_sum(const QuadField& K, const Signature& S, int d);

TypeTag classify(const QuadField& K, const Signature& S, int d);

}  // namespace isosieve
