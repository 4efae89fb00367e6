#include <cmath>
#include <random>

#include "doctest.h"
#include "isosieve/errors.hpp"
#include "isosieve/field.hpp"

using namespace isosieve;

namespace {

const long double kPi = 3.141592653589793238462643383279502884L;

// Dirichlet class number formula, independent of any form reduction.
long analytic_class_number(const QuadField& K) {
  const long D = K.disc().get_si();
  if (D == -3 || D == -4) return 1;
  if (D < 0) {
    long sum = 0;
    for (long a = 1; a < -D; ++a) sum += kronecker(D, a) * a;
    return -sum / (-D);
  }
  long double sum = 0;
  for (long a = 1; a < D; ++a) sum += kronecker(D, a) * std::log(std::sin(kPi * a / D));
  const long double reg = K.log_abs(*K.fundamental_unit(), 0);
  return std::lround(-sum / (2 * reg));
}

// Fundamental discriminants found by brute squarefree testing.
bool fundamental_oracle(long D) {
  auto squarefree = [](long n) {
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  const long r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D) && D != 1;
  if (r != 0) return false;
  const long m = D / 4;
  const long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree(m);
}

FieldElement random_element(const QuadField& K, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 30);
  return {Rat(num(rng), den(rng)), K.is_rational() ? Rat(0) : Rat(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("make_field basics") {
  const QuadField Q = make_field(1);
  CHECK(Q.degree() == 1);
  CHECK(Q.class_number() == 1);
  CHECK_FALSE(Q.fundamental_unit().has_value());

  CHECK(make_field(-163).class_number() == 1);
  const QuadField K = make_field(-20);
  CHECK(K.class_number() == 2);
  CHECK(K.class_exponent() == 2);
  REQUIRE(K.reduced_forms().size() == 2);
  CHECK(K.reduced_forms()[0] == ReducedForm{1, 0, 5});
  CHECK(K.reduced_forms()[1] == ReducedForm{2, 2, 3});
  CHECK(K.signature() == std::pair{0, 1});

  const QuadField F = make_field(5);
  CHECK(F.class_number() == 1);
  REQUIRE(F.fundamental_unit().has_value());
  CHECK(*F.fundamental_unit() == F.from_parts(Rat(1, 2), Rat(1, 2)));
  CHECK(F.unit_norm() == -1);
  CHECK(F.signature() == std::pair{2, 0});
}

TEST_CASE("discriminant validation") {
  CHECK_NOTHROW(make_field(12));
  CHECK_NOTHROW(make_field(-4));
  CHECK_NOTHROW(make_field(-8));
  CHECK_THROWS_AS(make_field(20), DomainError);
  CHECK_THROWS_AS(make_field(-3 * 4), DomainError);
  CHECK_THROWS_AS(make_field(0), DomainError);
  CHECK_THROWS_AS(make_field(9), DomainError);
  CHECK_THROWS_AS(make_field(7), DomainError);
  const auto err = fundamental_discriminant_error(48);
  REQUIRE(err.has_value());
  CHECK(err->find("conductor 2") != std::string::npos);
  for (long D = -3000; D <= 3000; ++D) {
    if (D == 1) continue;
    CHECK(fundamental_oracle(D) == !fundamental_discriminant_error(D).has_value());
  }
}

TEST_CASE("class numbers agree with the analytic formula") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> dist(-9999, 9999);
  int imag = 0, real = 0;
  while (imag < 50 || real < 20) {
    const long D = dist(rng);
    if (!fundamental_oracle(D)) continue;
    if (D < 0 && imag >= 50) continue;
    if (D > 0 && real >= 20) continue;
    const QuadField K = make_field(D);
    CHECK_MESSAGE(K.class_number() == analytic_class_number(K), "disc " << D);
    (D < 0 ? imag : real)++;
  }
  const std::vector<std::pair<long, long>> table = {{-23, 3}, {-47, 5}, {-56, 4}, {-84, 4},  {-3, 1},
                                                    {40, 2},  {60, 2},  {229, 3}, {328, 4}, {8, 1}};
  for (const auto& [D, h] : table) CHECK_MESSAGE(make_field(D).class_number() == h, "disc " << D);
}

TEST_CASE("class exponent and group law") {
  const QuadField K = make_field(-84);  // (Z/2)^2
  CHECK(K.class_number() == 4);
  CHECK(K.class_exponent() == 2);
  const QuadField L = make_field(-47);  // Z/5
  CHECK(L.class_exponent() == 5);
  for (std::size_t i = 0; i < L.class_count(); ++i) {
    CHECK(L.class_of(L.class_ideal(i)) == i);
    for (std::size_t j = 0; j < L.class_count(); ++j) CHECK(L.class_mul(i, j) == L.class_mul(j, i));
  }
  const QuadField R = make_field(328);
  CHECK(R.class_exponent() == 4);
}

TEST_CASE("fundamental units agree with a Pell search") {
  for (long D = 5; D < 200; ++D) {
    if (!fundamental_oracle(D)) continue;
    const QuadField K = make_field(D);
    // smallest y > 0 with x^2 - D y^2 = +-4
    long x = 0, y = 1;
    for (;; ++y) {
      bool found = false;
      for (int s : {-4, 4}) {
        const Int t = Int(D) * y * y + s;
        if (t > 0 && is_square(t)) {
          x = isqrt(t).get_si();
          found = true;
          break;
        }
      }
      if (found) break;
    }
    const FieldElement expect = K.from_parts(Rat(x, 2), Rat(y, 2));
    CHECK_MESSAGE(*K.fundamental_unit() == expect, "disc " << D);
    CHECK(abs(K.norm(expect)) == 1);
  }
  CHECK(*make_field(8).fundamental_unit() == make_field(8).from_parts(1, Rat(1, 2)));
  CHECK(*make_field(12).fundamental_unit() == make_field(12).from_parts(2, Rat(1, 2)));
}

TEST_CASE("element arithmetic is exact") {
  std::mt19937_64 rng(99);
  for (long D : {1L, -4L, -20L, 5L, 12L, -163L}) {
    const QuadField K = make_field(D);
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = random_element(K, rng), b = random_element(K, rng);
      CHECK(K.norm(K.mul(a, b)) == K.norm(a) * K.norm(b));
      CHECK(K.trace(K.add(a, b)) == K.trace(a) + K.trace(b));
      if (!a.is_zero()) CHECK(K.mul(a, K.inv(a)) == FieldElement::integer(1));
    }
  }
  const QuadField G = make_field(-4);
  const FieldElement i = G.from_parts(0, Rat(1, 2));
  CHECK(G.mul(i, i) == FieldElement::integer(-1));
  CHECK(G.format(G.from_parts(2, Rat(1, 2))) == "2 + 1/2*sqrt(-4)");
}

TEST_CASE("split_prime classification") {
  const QuadField K = make_field(-20);
  auto s3 = split_prime(K, 3);
  CHECK(s3.size() == 2);
  auto r2 = split_prime(K, 2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].residue_degree == 1);
  CHECK(r2[0].ramification == 2);
  const QuadField F = make_field(5);
  auto i7 = split_prime(F, 7);
  REQUIRE(i7.size() == 1);
  CHECK(i7[0].residue_degree == 2);
  CHECK(split_prime(F, 11).size() == 2);
  CHECK(split_prime(make_field(1), 7).size() == 1);
}

TEST_CASE("prime ideals and generator recovery") {
  for (long D : {-4L, -20L, -23L, 60L, 229L}) {
    const QuadField K = make_field(D);
    const Int hexp = K.class_exponent();
    for (std::int64_t p : primes_in_range(2, 9999)) {
      const auto primes = split_prime(K, p);
      int efsum = 0;
      for (const auto& v : primes) {
        efsum += v.residue_degree * v.ramification;
        CHECK(K.is_valid_ideal(v.ideal));
        CHECK(v.ideal.norm() == v.norm());
        CHECK(K.contains(v.ideal, v.second_generator));
        CHECK(K.contains(v.ideal, FieldElement::integer(p)));
        CHECK(K.class_of(v.ideal) == v.ideal_class);
        if (v.residue_degree == 2) continue;
        const auto g = principal_generator(K, v, hexp);
        REQUIRE_MESSAGE(g.has_value(), "disc " << D << " p " << p);
        const Ideal pw = K.ideal_pow(v.ideal, hexp);
        CHECK(K.contains(pw, *g));
        CHECK(abs(K.norm(*g)) == ipow(Int(p), hexp.get_ui()));
        CHECK(K.principal_ideal(*g) == pw);
      }
      CHECK(efsum == 2);
      if (primes.size() == 2) {
        CHECK(K.ideal_mul(primes[0].ideal, primes[1].ideal) == K.principal_ideal(FieldElement::integer(p)));
        CHECK(K.ideal_conj(primes[0].ideal) == primes[1].ideal);
        CHECK(K.class_mul(primes[0].ideal_class, primes[1].ideal_class) == 0);
      }
    }
  }
}

TEST_CASE("generator examples") {
  const QuadField G = make_field(-4);
  const FieldElement two_i = G.from_parts(2, Rat(1, 2));  // 2 + i
  for (const auto& v : split_prime(G, 5)) {
    const auto g = principal_generator(G, v, 1);
    REQUIRE(g.has_value());
    if (G.contains(v.ideal, two_i)) {
      CHECK(G.principal_ideal(*g) == G.principal_ideal(two_i));
      CHECK(G.norm(*g) == 5);
    }
  }
  const QuadField K = make_field(-20);
  const Ideal v = K.ideal_from_generators({FieldElement::integer(3), K.from_parts(1, Rat(1, 2))});
  PrimeIdealData pv;
  pv.p = 3;
  pv.ideal = v;
  pv.ideal_class = K.class_of(v);
  CHECK(pv.ideal_class == 1);
  CHECK_THROWS_AS(principal_generator(K, pv, 1), DomainError);
  const auto g = principal_generator(K, pv, 2);
  REQUIRE(g.has_value());
  const FieldElement expect = K.from_parts(2, Rat(-1, 2));  // 2 - sqrt(-5)
  CHECK((*g == expect || *g == K.neg(expect)));

  const QuadField Q = make_field(1);
  const auto q = principal_generator(Q, split_prime(Q, 13)[0], 1);
  CHECK(*q == FieldElement::integer(13));
}

TEST_CASE("real generators are balanced") {
  const QuadField K = make_field(229);
  const long double R = K.log_abs(*K.fundamental_unit(), 0);
  for (std::int64_t p : primes_in_range(3, 400)) {
    for (const auto& v : split_prime(K, p)) {
      if (v.residue_degree == 2) continue;
      const auto g = principal_generator(K, v, K.class_exponent());
      REQUIRE(g.has_value());
      CHECK(std::fabs(K.log_abs(*g, 0) - K.log_abs(*g, 1)) <= R + 1e-9L);
    }
  }
}

TEST_CASE("generator of arbitrary principal ideals") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-60, 60);
  for (long D : {-4L, -3L, -20L, 5L, 60L, 229L, 1L}) {
    const QuadField K = make_field(D);
    for (int i = 0; i < 200; ++i) {
      const FieldElement x{Rat(dist(rng)), Rat(K.is_rational() ? 0 : dist(rng))};
      if (x.is_zero()) continue;
      const Ideal I = K.principal_ideal(x);
      const auto g = K.generator(I);
      REQUIRE(g.has_value());
      CHECK(K.principal_ideal(*g) == I);
      // g / x is a unit
      const FieldElement u = K.mul(*g, K.inv(x));
      CHECK(u.is_integral());
      CHECK(abs(K.norm(u)) == 1);
    }
  }
}
