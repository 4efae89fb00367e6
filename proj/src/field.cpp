#include "isosieve/field.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "isosieve/errors.hpp"
#include "isosieve/factor.hpp"

namespace isosieve {

namespace {

constexpr std::uint64_t kCycleBudget = 1000000;
constexpr std::size_t kMaxUnitDigits = 10000;

std::int64_t to_i64(const Int& n) {
  if (!n.fits_slong_p()) throw ResourceError("integer exceeds 64 bits: " + n.get_str());
  return n.get_si();
}

Int from_i64(std::int64_t v) { return Int(static_cast<long>(v)); }

Int ext_gcd(const Int& a, const Int& b, Int& u, Int& v) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// HNF of the Z-lattice spanned by integer coordinate vectors (x, y).
Ideal hnf(const std::vector<std::pair<Int, Int>>& vecs) {
  Int a = 0, pb = 0, pc = 0;
  for (const auto& [x, y] : vecs) {
    if (y == 0) {
      a = gcd(a, x);
      continue;
    }
    if (pc == 0) {
      pb = x;
      pc = y;
      continue;
    }
    Int u, v;
    const Int g = ext_gcd(pc, y, u, v);
    const Int eliminated = (y / g) * pb - (pc / g) * x;
    a = gcd(a, eliminated);
    pb = u * pb + v * x;
    pc = g;
  }
  if (pc < 0) {
    pb = -pb;
    pc = -pc;
  }
  a = abs(a);
  if (a == 0 || pc == 0) throw DomainError("generators do not span a full-rank ideal");
  return {a, mod_floor(pb, a), pc};
}

Int require_integer(const Rat& r) {
  if (r.get_den() != 1) throw DomainError("element is not integral: " + r.get_str());
  return r.get_num();
}

}  // namespace

std::optional<std::string> fundamental_discriminant_error(const Int& disc) {
  if (disc == 1) return std::nullopt;
  if (disc == 0) return "discriminant 0 is not allowed";
  if (is_square(disc)) return "discriminant " + disc.get_str() + " is a perfect square";
  const Int r = mod_floor(disc, 4);
  if (r == 2 || r == 3) return "discriminant " + disc.get_str() + " is not 0 or 1 mod 4";
  const Factorization f = factor(disc);
  if (!f.complete()) return "could not factor discriminant " + disc.get_str();
  Int squarefree = disc < 0 ? Int(-1) : Int(1);
  for (const auto& pp : f.factors) {
    if (pp.exponent % 2 == 1) squarefree *= pp.prime;
  }
  const Int fundamental = mod_floor(squarefree, 4) == 1 ? squarefree : 4 * squarefree;
  if (fundamental == disc) return std::nullopt;
  const Int conductor = isqrt(disc / fundamental);
  return "discriminant " + disc.get_str() + " is not fundamental: it equals " + conductor.get_str() + "^2 * " +
         fundamental.get_str() + " (conductor " + conductor.get_str() + ")";
}

QuadField make_field(const Int& disc) {
  if (auto err = fundamental_discriminant_error(disc)) throw DomainError(*err);
  if (abs(disc) > kMaxDisc) throw ResourceError("discriminant magnitude exceeds " + std::to_string(kMaxDisc));
  QuadField K;
  K.disc_ = disc;
  K.k_ = disc * (disc - 1) / 4;
  if (K.is_rational()) {
    K.classes_ = {ReducedForm{1, 0, 0}};
    K.reduced_ = K.classes_;
    K.orders_ = {Int(1)};
    K.class_index_[{1, 0}] = 0;
    return K;
  }
  K.build_class_group();
  if (K.is_real()) K.compute_unit();
  return K;
}

std::pair<int, int> QuadField::signature() const {
  if (is_rational()) return {1, 0};
  return is_real() ? std::pair{2, 0} : std::pair{0, 1};
}

int QuadField::roots_of_unity() const {
  if (disc_ == -4) return 4;
  if (disc_ == -3) return 6;
  return 2;
}

// ---------------------------------------------------------------- elements

FieldElement QuadField::sqrt_disc() const {
  if (is_rational()) throw DomainError("sqrt of discriminant in Q");
  return {Rat(-disc_), Rat(2)};
}

FieldElement QuadField::from_parts(const Rat& r, const Rat& s) const {
  if (is_rational()) {
    if (s != 0) throw DomainError("irrational part in Q");
    return {r, Rat(0)};
  }
  return {r - s * disc_, 2 * s};
}

FieldElement QuadField::add(const FieldElement& a, const FieldElement& b) const { return {a.x + b.x, a.y + b.y}; }

FieldElement QuadField::sub(const FieldElement& a, const FieldElement& b) const { return {a.x - b.x, a.y - b.y}; }

FieldElement QuadField::neg(const FieldElement& a) const { return {-a.x, -a.y}; }

FieldElement QuadField::mul(const FieldElement& a, const FieldElement& b) const {
  const Rat bd = a.y * b.y;
  return {a.x * b.x - bd * k_, a.x * b.y + a.y * b.x + bd * disc_};
}

FieldElement QuadField::conj(const FieldElement& a) const {
  if (is_rational()) return a;
  return {a.x + a.y * disc_, -a.y};
}

Rat QuadField::norm(const FieldElement& a) const {
  if (is_rational()) return a.x;
  return a.x * a.x + a.x * a.y * disc_ + a.y * a.y * k_;
}

Rat QuadField::trace(const FieldElement& a) const {
  if (is_rational()) return a.x;
  return 2 * a.x + a.y * disc_;
}

FieldElement QuadField::inv(const FieldElement& a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  const Rat n = norm(a);
  const FieldElement c = conj(a);
  if (is_rational()) return {1 / a.x, Rat(0)};
  return {c.x / n, c.y / n};
}

FieldElement QuadField::pow(const FieldElement& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElement r = FieldElement::integer(1);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

IntPoly QuadField::char_poly(const FieldElement& t) const {
  if (!t.is_integral()) throw DomainError("char_poly of non-integral element");
  if (is_rational()) return IntPoly::linear(t.x.get_num());
  return IntPoly(std::vector<Int>{require_integer(norm(t)), -require_integer(trace(t)), Int(1)});
}

std::complex<long double> QuadField::embed(const FieldElement& a, int sigma) const {
  const long double x = a.x.get_d();
  const long double y = a.y.get_d();
  if (is_rational()) return {x, 0.0L};
  const long double d = disc_.get_d();
  const long double root = std::sqrt(std::fabs(d));
  const long double sign = sigma == 0 ? 1.0L : -1.0L;
  if (is_real()) return {x + y * (d + sign * root) / 2, 0.0L};
  return {x + y * d / 2, sign * y * root / 2};
}

long double QuadField::log_abs(const FieldElement& a, int sigma) const {
  if (a.is_zero()) throw DomainError("log of zero");
  auto log_mpf = [](const mpf_class& f) {
    long exp = 0;
    const double d = mpf_get_d_2exp(&exp, f.get_mpf_t());
    return std::log(std::fabs(static_cast<long double>(d))) + static_cast<long double>(exp) * std::log(2.0L);
  };
  auto log_rat = [&](const Rat& r) {
    const auto bits = static_cast<mp_bitcnt_t>(64 + mpz_sizeinbase(r.get_num_mpz_t(), 2) +
                                               mpz_sizeinbase(r.get_den_mpz_t(), 2));
    return log_mpf(mpf_class(r, bits));
  };
  if (is_rational()) return log_rat(a.x);
  if (is_imaginary()) return log_rat(abs(norm(a))) / 2;
  std::size_t size = 0;
  for (const Rat* r : {&a.x, &a.y})
    size = std::max({size, mpz_sizeinbase(r->get_num_mpz_t(), 2), mpz_sizeinbase(r->get_den_mpz_t(), 2)});
  const auto bits = static_cast<mp_bitcnt_t>(128 + 3 * size);
  // t = x + y*D/2, u = y*sqrt(D)/2; the embeddings are t + u and t - u. The
  // larger magnitude |t| + |u| is free of cancellation; get the other from
  // the norm.
  const mpf_class t(Rat(a.x + a.y * disc_ / 2), bits);
  mpf_class u(Rat(a.y / 2), bits);
  u *= sqrt(mpf_class(disc_, bits));
  const long double big = log_mpf(mpf_class(abs(t) + abs(u), bits));
  const long double small = log_rat(abs(norm(a))) - big;
  const bool first_big = (sgn(t) >= 0) == (sgn(u) >= 0);
  return (sigma == 0) == first_big ? big : small;
}

std::string QuadField::format(const FieldElement& a) const {
  if (is_rational()) return a.x.get_str();
  const Rat rational = a.x + a.y * disc_ / 2;
  const Rat irr = a.y / 2;
  std::ostringstream os;
  if (irr == 0) return rational.get_str();
  if (rational != 0) os << rational.get_str() << (irr < 0 ? " - " : " + ");
  else if (irr < 0) os << "-";
  const Rat mag = abs(irr);
  if (mag != 1) os << mag.get_str() << "*";
  os << "sqrt(" << disc_.get_str() << ")";
  return os.str();
}

// ------------------------------------------------------------------ ideals

Ideal QuadField::ideal_from_generators(const std::vector<FieldElement>& gens) const {
  if (is_rational()) {
    Int a = 0;
    for (const auto& g : gens) a = gcd(a, require_integer(g.x));
    if (a == 0) throw DomainError("zero ideal");
    return {a, 0, 1};
  }
  std::vector<std::pair<Int, Int>> vecs;
  for (const auto& g : gens) {
    const Int x = require_integer(g.x);
    const Int y = require_integer(g.y);
    vecs.emplace_back(x, y);
    vecs.emplace_back(-y * k_, x + y * disc_);
  }
  return hnf(vecs);
}

Ideal QuadField::ideal_mul(const Ideal& I, const Ideal& J) const {
  if (is_rational()) return {I.a * J.a, 0, 1};
  const FieldElement i1 = FieldElement::integer(I.a), i2{Rat(I.b), Rat(I.c)};
  const FieldElement j1 = FieldElement::integer(J.a), j2{Rat(J.b), Rat(J.c)};
  std::vector<std::pair<Int, Int>> vecs;
  for (const auto* u : {&i1, &i2})
    for (const auto* v : {&j1, &j2}) {
      const FieldElement p = mul(*u, *v);
      vecs.emplace_back(p.x.get_num(), p.y.get_num());
    }
  return hnf(vecs);
}

Ideal QuadField::ideal_pow(const Ideal& I, const Int& e) const {
  if (e < 0) throw DomainError("negative ideal power");
  Ideal r;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = ideal_mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = ideal_mul(r, I);
  }
  return r;
}

Ideal QuadField::ideal_conj(const Ideal& I) const {
  if (is_rational()) return I;
  return hnf({{I.a, Int(0)}, {I.b + I.c * disc_, -I.c}});
}

bool QuadField::contains(const Ideal& I, const FieldElement& x) const {
  if (!x.is_integral()) return false;
  const Int xx = x.x.get_num();
  const Int yy = x.y.get_num();
  if (is_rational()) return mpz_divisible_p(xx.get_mpz_t(), I.a.get_mpz_t()) != 0;
  if (!mpz_divisible_p(yy.get_mpz_t(), I.c.get_mpz_t())) return false;
  const Int t = yy / I.c;
  const Int rest = xx - t * I.b;
  return mpz_divisible_p(rest.get_mpz_t(), I.a.get_mpz_t()) != 0;
}

bool QuadField::is_valid_ideal(const Ideal& I) const {
  if (I.a <= 0 || I.c <= 0 || I.b < 0 || I.b >= I.a) return false;
  if (is_rational()) return I.b == 0 && I.c == 1;
  if (!mpz_divisible_p(I.a.get_mpz_t(), I.c.get_mpz_t()) || !mpz_divisible_p(I.b.get_mpz_t(), I.c.get_mpz_t()))
    return false;
  const FieldElement w = omega();
  return contains(I, mul(w, FieldElement::integer(I.a))) && contains(I, mul(w, FieldElement{Rat(I.b), Rat(I.c)}));
}

// ------------------------------------------------------------- reduction

QuadField::Reduction QuadField::reduce(const Int& A_in, const Int& B_in, bool track) const {
  Int a = A_in, b = B_in;
  FieldElement gamma = FieldElement::integer(1);
  const Int D = disc_;
  auto rho = [&]() {
    const Int c = (b * b - D) / (4 * a);
    if (track) {
      const FieldElement beta{Rat((b - D) / 2), Rat(1)};
      gamma = mul(gamma, FieldElement{beta.x / c, beta.y / c});
    }
    a = abs(c);
    b = -b;
  };
  if (is_imaginary()) {
    auto normalize = [&]() {
      b = mod_floor(b, 2 * a);
      if (b > a) b -= 2 * a;
    };
    normalize();
    while (true) {
      const Int c = (b * b - D) / (4 * a);
      if (a > c || (a == c && b < 0)) {
        rho();
        normalize();
        continue;
      }
      break;
    }
    return {to_i64(a), to_i64(b), gamma};
  }
  const Int s = isqrt(D);
  auto normalize = [&]() {
    if (a > s) {
      b = mod_floor(b, 2 * a);
      if (b > a) b -= 2 * a;
    } else {
      b = s - mod_floor(s - b, 2 * a);
    }
  };
  auto reduced = [&]() { return b > 0 && b <= s && 2 * a >= s - b + 1 && 2 * a <= s + b; };
  normalize();
  std::uint64_t steps = 0;
  while (!reduced()) {
    if (++steps > kCycleBudget) throw ResourceError("ideal reduction did not terminate");
    rho();
    normalize();
  }
  return {to_i64(a), to_i64(b), gamma};
}

void QuadField::build_class_group() {
  const std::int64_t D = to_i64(disc_);
  std::vector<ReducedForm> forms;
  if (D < 0) {
    for (std::int64_t A = 1; 3 * A * A <= -D; ++A) {
      for (std::int64_t B = -A + 1; B <= A; ++B) {
        if (((B - D) & 1) != 0) continue;
        const std::int64_t num = B * B - D;
        if (num % (4 * A) != 0) continue;
        const std::int64_t C = num / (4 * A);
        if (C < A) continue;
        if (C == A && B < 0) continue;
        forms.push_back({A, B, C});
      }
    }
    std::sort(forms.begin(), forms.end(), [](const ReducedForm& l, const ReducedForm& r) {
      return std::pair(l.A, l.B) < std::pair(r.A, r.B);
    });
    reduced_ = forms;
    classes_ = forms;
    for (std::size_t i = 0; i < forms.size(); ++i) class_index_[{forms[i].A, forms[i].B}] = i;
  } else {
    const std::int64_t s = to_i64(isqrt(disc_));
    for (std::int64_t B = 1; B <= s; ++B) {
      if (((B - D) & 1) != 0) continue;
      const std::int64_t N = (D - B * B) / 4;
      const std::int64_t lo = std::max<std::int64_t>(1, (s - B + 2) / 2);
      const std::int64_t hi = (s + B) / 2;
      for (std::int64_t A = lo; A <= hi; ++A) {
        if (N % A == 0) forms.push_back({A, B, -(N / A)});
      }
    }
    reduced_ = forms;
    auto rho = [&](const ReducedForm& f) {
      const std::int64_t A2 = -f.C;
      const std::int64_t r = ((s + f.B) % (2 * A2) + 2 * A2) % (2 * A2);
      const std::int64_t B2 = s - r;
      return ReducedForm{A2, B2, (B2 * B2 - D) / (4 * A2)};
    };
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> cycle_of;
    std::vector<std::vector<ReducedForm>> cycles;
    for (const auto& f : forms) {
      if (cycle_of.count({f.A, f.B})) continue;
      std::vector<ReducedForm> cyc;
      ReducedForm cur = f;
      do {
        cycle_of[{cur.A, cur.B}] = cycles.size();
        cyc.push_back(cur);
        cur = rho(cur);
        if (cyc.size() > kCycleBudget) throw ResourceError("reduced ideal cycle too long");
      } while (!(cur == f));
      cycles.push_back(std::move(cyc));
    }
    std::vector<std::size_t> order(cycles.size());
    std::vector<ReducedForm> canon(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      order[i] = i;
      canon[i] = *std::min_element(cycles[i].begin(), cycles[i].end(), [](const auto& l, const auto& r) {
        return std::pair(l.A, l.B) < std::pair(r.A, r.B);
      });
    }
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return std::pair(canon[l].A, canon[l].B) < std::pair(canon[r].A, canon[r].B);
    });
    std::vector<std::size_t> rank(cycles.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
      classes_.push_back(canon[order[i]]);
    }
    for (const auto& [key, cyc] : cycle_of) class_index_[key] = rank[cyc];
  }
  h_ = Int(static_cast<unsigned long>(classes_.size()));
  // Element orders: strip prime factors of h while the power stays trivial.
  const Factorization hf = factor(h_);
  orders_.assign(classes_.size(), h_);
  h_exp_ = 1;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    Int d = h_;
    for (const auto& pp : hf.factors) {
      while (mpz_divisible_p(d.get_mpz_t(), pp.prime.get_mpz_t()) && class_pow(i, d / pp.prime) == 0) d /= pp.prime;
    }
    orders_[i] = d;
    h_exp_ = lcm(h_exp_, d);
  }
}

std::size_t QuadField::class_of(const Ideal& I) const {
  if (is_rational()) return 0;
  const Int A = I.a / I.c;
  const Int B = 2 * (I.b / I.c) + disc_;
  const Reduction r = reduce(A, B, false);
  auto it = class_index_.find({r.A, r.B});
  if (it == class_index_.end()) throw DomainError("reduced ideal missing from class table");
  return it->second;
}

Ideal QuadField::class_ideal(std::size_t i) const {
  if (is_rational()) return {};
  const ReducedForm& f = classes_.at(i);
  const Int A = from_i64(f.A);
  return {A, mod_floor((from_i64(f.B) - disc_) / 2, A), 1};
}

std::size_t QuadField::class_mul(std::size_t i, std::size_t j) const {
  if (i == 0) return j;
  if (j == 0) return i;
  return class_of(ideal_mul(class_ideal(i), class_ideal(j)));
}

std::size_t QuadField::class_pow(std::size_t i, const Int& e_in) const {
  Int e = mod_floor(e_in, h_);
  std::size_t r = 0;
  std::size_t b = i;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = class_mul(r, b);
    e /= 2;
    if (e > 0) b = class_mul(b, b);
  }
  return r;
}

// ------------------------------------------------------------- units

void QuadField::compute_unit() {
  const Int D = disc_;
  const Int s = isqrt(D);
  // b0: largest integer below sqrt(D) with b0 = D mod 2.
  Int b0 = s;
  if (b0 * b0 == D) --b0;
  if (mod_floor(b0 - D, 2) != 0) --b0;
  const Int P0 = b0, Q0 = 2;
  Int P = P0, Q = Q0;
  Int q_prev2 = 1, q_prev = 0;  // q_{-2}, q_{-1}
  do {
    const Int a = floor_div(P + s, Q);
    const Int q = a * q_prev + q_prev2;
    q_prev2 = q_prev;
    q_prev = q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    if (mpz_sizeinbase(q_prev.get_mpz_t(), 10) > kMaxUnitDigits)
      throw ResourceError("fundamental unit of discriminant " + D.get_str() + " exceeds " +
                          std::to_string(kMaxUnitDigits) + " digits");
  } while (!(P == P0 && Q == Q0));
  // xi = (b0 + sqrt D)/2; eps = q_{k-1} xi + q_{k-2}.
  const FieldElement xi{Rat((b0 - D) / 2), Rat(1)};
  FieldElement eps = add(mul(FieldElement::integer(q_prev), xi), FieldElement::integer(q_prev2));
  const Rat n = norm(eps);
  if (n != 1 && n != -1) throw DomainError("continued fraction produced a non-unit");
  unit_norm_ = n == 1 ? 1 : -1;
  if (embed(eps, 0).real() < 0) eps = neg(eps);
  unit_ = eps;
}

// ------------------------------------------------------------- generators

std::optional<FieldElement> QuadField::generator(const Ideal& I) const {
  if (is_rational()) return FieldElement::integer(I.a);
  const Int m = I.c;
  const Int A = I.a / I.c;
  const Int B = 2 * (I.b / I.c) + disc_;
  Reduction r = reduce(A, B, true);
  FieldElement gamma = r.gamma;
  if (is_real()) {
    // Walk the cycle of reduced ideals looking for the unit ideal.
    const Int D = disc_;
    const Int s = isqrt(D);
    Int a = from_i64(r.A), b = from_i64(r.B);
    const Int a0 = a, b0 = b;
    std::uint64_t steps = 0;
    while (a != 1) {
      if (++steps > kCycleBudget) return std::nullopt;
      const Int c = (b * b - D) / (4 * a);
      const FieldElement beta{Rat((b - D) / 2), Rat(1)};
      gamma = mul(gamma, FieldElement{beta.x / c, beta.y / c});
      a = abs(c);
      b = s - mod_floor(s + b, 2 * a);
      if (a == a0 && b == b0) return std::nullopt;
    }
  } else if (r.A != 1) {
    return std::nullopt;
  }
  FieldElement g = mul(FieldElement::integer(m), gamma);
  if (is_real() && unit_) {
    // Balance the two embeddings with a power of the fundamental unit.
    const long double R = log_abs(*unit_, 0);
    const long double diff = log_abs(g, 1) - log_abs(g, 0);
    const auto k = static_cast<long>(std::llround(diff / (2 * R)));
    if (k != 0) g = mul(g, pow(*unit_, Int(k)));
  }
  if (!g.is_integral() || !(principal_ideal(g) == I)) return std::nullopt;
  return g;
}

std::vector<PrimeIdealData> split_prime(const QuadField& K, const Int& p) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  std::vector<PrimeIdealData> out;
  if (K.is_rational()) {
    PrimeIdealData v;
    v.p = p;
    v.second_generator = FieldElement::integer(p);
    v.ideal = Ideal{p, 0, 1};
    out.push_back(v);
    return out;
  }
  const Int& D = K.disc();
  const int kr = kronecker(D, p);
  auto make = [&](const Int& b, int e) {
    PrimeIdealData v;
    v.p = p;
    v.ramification = e;
    v.second_generator = FieldElement{Rat((b - D) / 2), Rat(1)};
    v.ideal = Ideal{p, mod_floor((b - D) / 2, p), 1};
    v.ideal_class = K.class_of(v.ideal);
    return v;
  };
  if (kr == -1) {
    PrimeIdealData v;
    v.p = p;
    v.residue_degree = 2;
    v.second_generator = FieldElement::integer(p);
    v.ideal = Ideal{p, 0, p};
    v.ideal_class = 0;
    out.push_back(v);
    return out;
  }
  // b with b = D mod 2 and b^2 = D mod 4p.
  Int b = -1;
  if (p == 2) {
    for (long t = 0; t < 4; ++t) {
      if (mod_floor(Int(t) * t - D, 8) == 0) {
        b = t;
        break;
      }
    }
  } else {
    b = sqrt_mod(D, p);
    if (mod_floor(b - D, 2) != 0) b = p - b;
  }
  if (b < 0) throw DomainError("no square root of the discriminant mod 4p");
  if (kr == 0) {
    out.push_back(make(b, 2));
    return out;
  }
  Int b2 = mod_floor(-b, 2 * p);
  Int b1 = mod_floor(b, 2 * p);
  if (b2 < b1) std::swap(b1, b2);
  out.push_back(make(b1, 1));
  out.push_back(make(b2, 1));
  return out;
}

std::optional<FieldElement> principal_generator(const QuadField& K, const PrimeIdealData& v, const Int& power) {
  if (power <= 0) throw DomainError("power must be positive");
  const Int& ord = K.class_order(v.ideal_class);
  if (!mpz_divisible_p(power.get_mpz_t(), ord.get_mpz_t()))
    throw DomainError("power " + power.get_str() + " does not kill the ideal class of order " + ord.get_str());
  if (K.is_rational()) return FieldElement::integer(ipow(v.p, power.get_ui()));
  return K.generator(K.ideal_pow(v.ideal, power));
}

}  // namespace isosieve
