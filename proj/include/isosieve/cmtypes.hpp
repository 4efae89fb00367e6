#pragma once

#include <utility>
#include <vector>

#include "isosieve/characters.hpp"
#include "isosieve/field.hpp"

namespace isosieve {

struct CMVerdict {
  Int ctheta_order = 1;
  bool contains_hcf = false;
  bool unbounded = false;
};

/// Order of the image of [a] -> [a]^(S0 - S1) on the class group, from the
/// element orders.
Int ctheta_order(const QuadField& K, const Signature& S);
/// Same value by composing every class explicitly.
Int ctheta_order_brute(const QuadField& K, const Signature& S);

bool contains_hcf(const QuadField& K);

CMVerdict cm_verdict(const QuadField& K);

/// Generator w of v^S0 * conj(v)^S1, determined up to roots of unity.
/// Throws DomainError when that ideal is not principal.
FieldElement psi_fphi_value(const QuadField& K, const Signature& S, const PrimeIdealData& v);

struct BcharBound {
  Int product = 1;
  std::vector<std::pair<Signature, Int>> terms;
};

/// |N(1 - theta^S(u)^(c_g/e))| for one signature (u the fundamental unit).
Int bchar_term(const QuadField& K, const Signature& S, int g);
/// Product of bchar_term over the unbalanced reduced pairs.
BcharBound bchar_bound(const QuadField& K, int g, int d = 1);

}  // namespace isosieve
