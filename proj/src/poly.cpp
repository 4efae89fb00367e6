#include "isosieve/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isosieve/errors.hpp"

namespace isosieve {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Int& root) { return IntPoly(std::vector<Int>{-root, Int(1)}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    g = isosieve::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int c = content();
  if (leading() < 0) c = -c;
  return div_exact(c);
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_argument(const Int& c) const {
  std::vector<Int> v = coeffs_;
  Int pw = 1;
  for (Int& x : v) {
    x *= pw;
    pw *= c;
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shift(const Int& c) const {
  // Horner in polynomial arithmetic.
  IntPoly r;
  const IntPoly xc(std::vector<Int>{c, Int(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * xc + constant(*it);
  return r;
}

IntPoly IntPoly::div_exact(const Int& d) const {
  if (d == 0) throw DomainError("polynomial division by zero");
  std::vector<Int> v = coeffs_;
  for (Int& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) throw DomainError("inexact coefficient division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> v = coeffs_;
  for (Int& x : v) x = -x;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  std::vector<Int> v = a.coeffs_;
  for (Int& x : v) x *= c;
  return IntPoly(std::move(v));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i == 0) continue;
    if (mag != 1) os << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& m) {
  if (!m.is_monic()) throw DomainError("rem_monic: modulus not monic");
  std::vector<Int> r = a.coeffs();
  const auto dm = static_cast<std::size_t>(m.degree());
  const auto& mc = m.coeffs();
  for (std::size_t i = r.size(); i-- > dm;) {
    if (r[i] == 0) continue;
    const Int t = r[i];
    for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= t * mc[j];
  }
  if (r.size() > dm) r.resize(dm);
  return IntPoly(std::move(r));
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& monic) {
  return rem_monic(a * b, monic);
}

IntPoly powmod(const IntPoly& base, const Int& exp, const IntPoly& monic) {
  if (exp < 0) throw DomainError("powmod: negative exponent");
  IntPoly result = rem_monic(IntPoly::constant(1), monic);
  IntPoly b = rem_monic(base, monic);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, monic);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = mulmod(result, b, monic);
  }
  return result;
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo_rem by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.leading();
  const auto& bc = b.coeffs();
  int steps = a.degree() - b.degree() + 1;
  for (std::size_t i = r.size(); i-- > db;) {
    const Int t = r[i];
    for (Int& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
    --steps;
  }
  IntPoly out(std::move(r));
  if (steps > 0) out = ipow(lb, static_cast<unsigned long>(steps)) * out;
  return out;
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  std::vector<Int> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Int> q(r.size() - db, Int(0));
  const Int& lb = b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) throw DomainError("inexact polynomial division");
    const Int t = r[i] / lb;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) throw DomainError("inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = a_in.primitive_part();
  IntPoly b = b_in.primitive_part();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  const IntPoly g = gcd(p, p.derivative());
  return div_exact(p.primitive_part(), g).primitive_part();
}

Int resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly A = a_in;
  IntPoly B = b_in;
  Int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
  }
  if (B.degree() == 0) return s * ipow(B.leading(), static_cast<unsigned long>(A.degree()));
  const Int ca = A.content();
  const Int cb = B.content();
  const Int t = ipow(ca, static_cast<unsigned long>(B.degree())) * ipow(cb, static_cast<unsigned long>(A.degree()));
  A = A.div_exact(ca);
  B = B.div_exact(cb);
  Int g = 1, h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPoly R = pseudo_rem(A, B);
    A = std::move(B);
    B = R.div_exact(g * ipow(h, static_cast<unsigned long>(delta)));
    g = A.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      Int num = ipow(g, static_cast<unsigned long>(delta));
      Int den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.is_zero()) return 0;
    if (B.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(A.degree());
  Int num = ipow(B.leading(), da);
  Int den = ipow(h, da - 1);
  Int hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix sylvester_matrix(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree();
  const int n = b.degree();
  if (m < 0 || n < 0) throw DomainError("sylvester matrix of zero polynomial");
  const auto size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, std::vector<Int>(size, Int(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a.coeff(static_cast<std::size_t>(m - j));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b.coeff(static_cast<std::size_t>(n - j));
  }
  return s;
}

IntMatrix multiplication_matrix(const IntPoly& monic_f, const IntPoly& z) {
  const auto n = static_cast<std::size_t>(monic_f.degree());
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  IntPoly col = rem_monic(z, monic_f);
  const IntPoly x = IntPoly::monomial(1, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeff(i);
    col = rem_monic(col * x, monic_f);
  }
  return m;
}

Int norm_by_determinant(const IntPoly& monic_f, const IntPoly& z) {
  return determinant(multiplication_matrix(monic_f, z));
}

IntMatrix companion_matrix(const IntPoly& monic) {
  if (!monic.is_monic()) throw DomainError("companion matrix of non-monic polynomial");
  const auto n = static_cast<std::size_t>(monic.degree());
  IntMatrix c(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -monic.coeff(i);
  return c;
}

IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const std::size_t ra = a.size(), rb = b.size();
  IntMatrix k(ra * rb, std::vector<Int>(ra * rb, Int(0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t p = 0; p < rb; ++p)
        for (std::size_t q = 0; q < rb; ++q) k[i * rb + p][j * rb + q] = a[i][j] * b[p][q];
    }
  return k;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

IntMatrix exterior_power(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k == 0) return IntMatrix{{Int(1)}};
  if (k > n) return {};
  std::vector<std::vector<std::size_t>> subs;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, subs);
  IntMatrix e(subs.size(), std::vector<Int>(subs.size(), Int(0)));
  for (std::size_t r = 0; r < subs.size(); ++r)
    for (std::size_t c = 0; c < subs.size(); ++c) {
      IntMatrix minor(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[subs[r][i]][subs[c][j]];
      e[r][c] = determinant(std::move(minor));
    }
  return e;
}

IntPoly charpoly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix mk(n, std::vector<Int>(n, Int(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    IntMatrix next(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    Int kk = static_cast<unsigned long>(k);
    Int q;
    mpz_divexact(q.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

namespace {

int sign_of(const Int& x) { return sgn(x); }

int sign_changes(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_distinct_real_roots(const IntPoly& p) {
  if (p.degree() <= 0) return 0;
  std::vector<IntPoly> seq{p.primitive_part(), p.derivative().primitive_part()};
  while (seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_rem(a, b);
    // Keep the sign of the true remainder: prem multiplies by lc(b)^(da-db+1).
    if (b.leading() < 0 && (a.degree() - b.degree() + 1) % 2 == 1) r = -r;
    if (r.is_zero()) break;
    Int c = r.content();
    seq.push_back((-r).div_exact(c));
  }
  std::vector<int> at_pos, at_neg;
  for (const IntPoly& q : seq) {
    at_pos.push_back(sign_of(q.leading()));
    at_neg.push_back(sign_of(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

std::vector<std::complex<long double>> numeric_roots(const IntPoly& p) {
  using C = std::complex<long double>;
  const IntPoly f = squarefree_part(p);
  const int n = f.degree();
  if (n <= 0) return {};
  std::vector<long double> c(static_cast<std::size_t>(n + 1));
  const long double lead = f.leading().get_d();
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(i)).get_d() / lead;
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  radius = 1 + radius;
  std::vector<C> z(static_cast<std::size_t>(n));
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * std::min<long double>(radius, 2.0L);
  auto eval = [&](const C& x) {
    C r = 1;
    for (int i = n - 1; i >= 0; --i) r = r * x + c[static_cast<std::size_t>(i)];
    return r;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      const C step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

}  // namespace isosieve
