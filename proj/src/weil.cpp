#include "isosieve/weil.hpp"

#include <map>

#include "isosieve/errors.hpp"

namespace isosieve {

Int compute_cg(int g) {
  if (g < 1) throw DomainError("g must be positive");
  const long two_g = 2L * g;
  Int cg = 1;
  for (std::int64_t p : primes_in_range(2, two_g + 1)) {
    // largest n with (p-1) p^(n-1) <= 2g
    long n = 0;
    long val = p - 1;
    while (val <= two_g) {
      ++n;
      val *= p;
    }
    if (n > 0) cg *= ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(n));
  }
  return cg;
}

IntPoly cyclotomic(int n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  IntPoly f = IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) f = div_exact(f, cyclotomic(d));
  }
  return f;
}

std::vector<std::string> WeilPolynomial::profile() const {
  std::vector<std::string> out;
  for (int n : cyclotomic_indices) {
    if (n == 1) out.emplace_back("unit-pair(+)");
    else if (n == 2) out.emplace_back("unit-pair(-)");
    else out.push_back("cyclotomic-pair(" + std::to_string(n) + ")");
  }
  if (real_part.degree() == 1) {
    out.push_back("good-pair(" + Int(-real_part.coeff(0)).get_str() + ")");
  } else if (real_part.degree() > 1) {
    out.push_back("weil-block(" + real_part.to_string('y') + ")");
  }
  return out;
}

std::vector<IntPoly> real_weil_polys(const Int& q, int k, std::size_t limit) {
  if (q < 2) throw DomainError("q must be at least 2");
  std::vector<IntPoly> out;
  auto push = [&](IntPoly p) {
    out.push_back(std::move(p));
    if (out.size() > limit) throw ResourceError("Weil polynomial enumeration exceeds budget for q = " + q.get_str());
  };
  const Int q4 = 4 * q;
  switch (k) {
    case 0:
      push(IntPoly::constant(1));
      break;
    case 1: {
      const Int T = isqrt(q4);
      for (Int b = -T; b <= T; ++b) push(IntPoly(std::vector<Int>{b, Int(1)}));
      break;
    }
    case 2: {
      const Int bmax = isqrt(16 * q);
      for (Int b = -bmax; b <= bmax; ++b) {
        const Int cmax = floor_div(b * b, 4);
        for (Int c = -q4; c <= cmax; ++c) {
          const Int u = q4 + c;
          if (u * u < q4 * b * b) continue;
          push(IntPoly(std::vector<Int>{c, b, Int(1)}));
        }
      }
      break;
    }
    case 3: {
      const Int bmax = isqrt(36 * q);
      for (Int b = -bmax; b <= bmax; ++b) {
        const Int cmax = floor_div(b * b, 3);
        for (Int c = -12 * q; c <= cmax; ++c) {
          const Int v = 12 * q + c;
          if (v * v < 16 * q * b * b) continue;  // critical points outside
          const Int u = q4 + c;
          if (u < 0) continue;
          const Int R = isqrt(q4 * u * u);
          Int lo = -R - q4 * b, hi = R - q4 * b;
          // discriminant as a quadratic in d: -27 d^2 + L d + M
          const Int L = 18 * b * c - 4 * b * b * b;
          const Int M = b * b * c * c - 4 * c * c * c;
          const Int delta = L * L + 108 * M;
          if (delta < 0) continue;
          const Int s = isqrt(delta);
          lo = std::max<Int>(lo, floor_div(L - s, 54) - 1);
          hi = std::min<Int>(hi, floor_div(L + s, 54) + 1);
          for (Int d = lo; d <= hi; ++d) {
            if (-27 * d * d + L * d + M < 0) continue;
            push(IntPoly(std::vector<Int>{d, c, b, Int(1)}));
          }
        }
      }
      break;
    }
    default:
      throw ResourceError("real Weil polynomials only up to degree 3");
  }
  return out;
}

bool satisfies_functional_equation(const IntPoly& P, const Int& q, int g) {
  if (P.degree() != 2 * g) return false;
  // coefficient of x^i in x^(2g) P(q/x) is P_(2g-i) q^(2g-i)
  for (int i = 0; i <= 2 * g; ++i) {
    const auto j = static_cast<std::size_t>(2 * g - i);
    if (P.coeff(j) * ipow(q, j) != P.coeff(static_cast<std::size_t>(i)) * ipow(q, static_cast<unsigned long>(g)))
      return false;
  }
  return true;
}

namespace {

const std::vector<int>& small_cyclotomic_indices() {
  static const std::vector<int> idx = {1, 2, 3, 4, 6};
  return idx;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

void cyclotomic_multisets(int g, int remaining, std::size_t start, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  const auto& idx = small_cyclotomic_indices();
  for (std::size_t i = start; i < idx.size(); ++i) {
    const int phi = euler_phi(idx[i]);
    if (phi > g || phi > remaining) continue;
    cur.push_back(idx[i]);
    cyclotomic_multisets(g, remaining - phi, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeilPolynomial> enumerate_frobenius_polys(const Int& q, int g, const EnumerationBudget& budget) {
  if (g < 1) throw DomainError("g must be positive");
  if (g > 3) throw ResourceError("Weil polynomial enumeration is limited to g <= 3");
  if (q < 2) throw DomainError("q must be at least 2");
  std::vector<WeilPolynomial> out;
  const IntPoly x2q(std::vector<Int>{q, Int(0), Int(1)});
  for (int t = 0; t <= g; ++t) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    cyclotomic_multisets(g, t, 0, cur, sets);
    const int k = g - t;
    const std::vector<IntPoly> reals = real_weil_polys(q, k, budget.max_polys);
    for (const auto& set : sets) {
      IntPoly C = IntPoly::constant(1);
      for (int n : set) C = C * cyclotomic(n);
      std::vector<Int> dc(C.coeffs().size());
      for (std::size_t i = 0; i < dc.size(); ++i) dc[i] = C.coeff(i) * ipow(q, static_cast<unsigned long>(t) - i);
      const IntPoly Dp(std::move(dc));
      for (const IntPoly& h : reals) {
        // x^k h(x + q/x) = sum h_i x^(k-i) (x^2 + q)^i
        IntPoly W;
        IntPoly pw = IntPoly::constant(1);
        for (int i = 0; i <= k; ++i) {
          W = W + h.coeff(static_cast<std::size_t>(i)) * (IntPoly::monomial(1, static_cast<std::size_t>(k - i)) * pw);
          pw = pw * x2q;
        }
        WeilPolynomial wp;
        wp.q = q;
        wp.g = g;
        wp.cyclotomic_indices = set;
        wp.unit_part = C;
        wp.dual_part = Dp;
        wp.weil_part = W;
        wp.real_part = h;
        wp.poly = C * Dp * W;
        out.push_back(std::move(wp));
        if (out.size() > budget.max_polys)
          throw ResourceError("Weil polynomial enumeration exceeds budget for q = " + q.get_str());
      }
    }
  }
  return out;
}

std::vector<FrobeniusCandidate> frobenius_candidates(const std::vector<WeilPolynomial>& polys, int d,
                                                     const EnumerationBudget& budget) {
  std::vector<FrobeniusCandidate> out;
  std::map<IntPoly, std::size_t> seen;
  std::map<std::pair<IntPoly, int>, IntMatrix> ext_cache;
  auto ext = [&](const IntPoly& f, int k) -> const IntMatrix& {
    auto key = std::pair(f, k);
    auto it = ext_cache.find(key);
    if (it != ext_cache.end()) return it->second;
    IntMatrix m = f.degree() > 0 ? exterior_power(companion_matrix(f), static_cast<std::size_t>(k)) : IntMatrix{{Int(1)}};
    return ext_cache.emplace(key, std::move(m)).first->second;
  };
  for (std::size_t s = 0; s < polys.size(); ++s) {
    const WeilPolynomial& P = polys[s];
    if (d < 1 || d > 2 * P.g) throw DomainError("d must satisfy 1 <= d <= 2g");
    const int t = P.unit_part.degree();
    const int kw = P.weil_part.degree();
    for (int a = 0; a <= 2 * d; ++a) {
      IntPoly F = IntPoly::constant(1);
      bool any = false;
      int fi = 0, fj = 0, fk = 0;
      for (int i = 0; i <= std::min(d, t); ++i) {
        for (int k = 0; k <= std::min(d - i, t); ++k) {
          const int j = d - i - k;
          if (j > kw || j + 2 * k != a) continue;
          const IntMatrix m = kronecker_product(kronecker_product(ext(P.unit_part, i), ext(P.weil_part, j)),
                                                ext(P.dual_part, k));
          F = F * charpoly(m);
          if (!any) {
            fi = i;
            fj = j;
            fk = k;
          }
          any = true;
        }
      }
      if (!any) continue;
      IntPoly sf = squarefree_part(F);
      if (seen.count(sf)) continue;
      seen.emplace(sf, out.size());
      FrobeniusCandidate c;
      c.minpoly = std::move(sf);
      c.mag_exp = a;
      c.source = s;
      c.from_unit = fi;
      c.from_weil = fj;
      c.from_dual = fk;
      out.push_back(std::move(c));
      if (out.size() > budget.max_candidates) throw ResourceError("Frobenius candidate count exceeds budget");
    }
  }
  return out;
}

std::vector<FrobeniusCandidate> frobenius_candidates(const Int& q, int g, int d, const EnumerationBudget& budget) {
  if (d < 1 || d > 2 * g) throw DomainError("d must satisfy 1 <= d <= 2g");
  return frobenius_candidates(enumerate_frobenius_polys(q, g, budget), d, budget);
}

IntPoly candidate_power(const IntPoly& minpoly, const Int& m) {
  return powmod(IntPoly::monomial(1, 1), m, minpoly);
}

Int divisibility_from_power(const IntPoly& minpoly, const IntPoly& power, const IntPoly& target_charpoly) {
  IntPoly z;
  const auto& c = target_charpoly.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) z = rem_monic(z * power + IntPoly::constant(c[i]), minpoly);
  return abs(resultant(minpoly, z));
}

Int divisibility_integer(const IntPoly& minpoly, const Int& m, const FieldElement& t, const QuadField& K) {
  if (m < 1) throw DomainError("exponent must be positive");
  return divisibility_from_power(minpoly, candidate_power(minpoly, m), K.char_poly(t));
}

namespace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix r(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

}  // namespace

Int divisibility_by_determinant(const IntPoly& minpoly, const Int& m, const FieldElement& t, const QuadField& K) {
  // det(charpoly_t(M^m)) for the companion matrix M of the candidate.
  const IntMatrix M = companion_matrix(minpoly);
  const std::size_t n = M.size();
  IntMatrix P(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
  IntMatrix base = M;
  Int e = m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) P = mat_mul(P, base);
    e /= 2;
    if (e > 0) base = mat_mul(base, base);
  }
  const IntPoly mt = K.char_poly(t);
  IntMatrix Z(n, std::vector<Int>(n, Int(0)));
  IntMatrix pw(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
  for (std::size_t k = 0; k < mt.coeffs().size(); ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) Z[i][j] += mt.coeff(k) * pw[i][j];
    pw = mat_mul(pw, P);
  }
  return abs(determinant(std::move(Z)));
}

Int possible_value_bound(const Int& q, int g) {
  Int polys = 1;
  Int binom = 1;
  for (int i = 0; i <= g; ++i) {
    if (i > 0) binom = binom * (2 * g - i + 1) / i;
    // ceil(sqrt(q)^i)
    Int root = isqrt(ipow(q, static_cast<unsigned long>(i)));
    if (root * root != ipow(q, static_cast<unsigned long>(i))) ++root;
    polys *= 2 * binom * root;
  }
  return polys * ipow(2, static_cast<unsigned long>(2 * g)) * compute_cg(g) * (g + 1);
}

}  // namespace isosieve
