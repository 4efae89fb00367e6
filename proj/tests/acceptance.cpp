// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "isosieve/characters.hpp"
#include "isosieve/cmtypes.hpp"
#include "isosieve/errors.hpp"
#include "isosieve/report.hpp"
#include "isosieve/sieve.hpp"
#include "isosieve/weil.hpp"

using namespace isosieve;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << " " << what << "\n";
  if (!ok) ++failures;
}

Signature sig(std::vector<long> s, long e) {
  Signature r;
  for (long v : s) r.S.push_back(Int(v));
  r.e = e;
  return r;
}

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// ---- high precision complex numbers for the out-of-band check

constexpr unsigned long kBits = 4096;

struct Cx {
  mpf_class re{0, kBits}, im{0, kBits};
};

Cx cmul(const Cx& a, const Cx& b) {
  Cx r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

Cx cpow(Cx a, unsigned long e) {
  Cx r;
  r.re = 1;
  while (e) {
    if (e & 1) r = cmul(r, a);
    a = cmul(a, a);
    e >>= 1;
  }
  return r;
}

Cx from_rat(const Rat& q) {
  Cx r;
  r.re = mpf_class(q, kBits);
  return r;
}

// Roots of a monic integer polynomial of degree <= 2.
std::vector<Cx> small_roots(const IntPoly& f) {
  std::vector<Cx> out;
  if (f.degree() == 1) {
    out.push_back(from_rat(Rat(-f.coeff(0))));
    return out;
  }
  const Int b = f.coeff(1), c = f.coeff(0);
  const Int disc = b * b - 4 * c;
  mpf_class s(0, kBits);
  mpf_class ad(abs(disc), kBits);
  s = sqrt(ad);
  for (int sign : {1, -1}) {
    Cx r;
    r.re = mpf_class(-b, kBits) / 2;
    if (disc >= 0)
      r.re += sign * s / 2;
    else
      r.im = sign * s / 2;
    out.push_back(r);
  }
  return out;
}

// |prod over roots c of f and both embeddings of t of (c^m - sigma(t))|,
// computed numerically from the raw certificate data.
bool out_of_band(const EliminationCertificate& c, Int& mismatches) {
  const Int D = c.disc;
  // omega = (D + sqrt D)/2 in the first embedding
  Cx w;
  w.re = mpf_class(D, kBits) / 2;
  w.im = sqrt(mpf_class(abs(D), kBits)) / 2;
  if (D > 0) return false;  // only used for imaginary fields
  auto embed = [&](const FieldElement& x, bool conj) {
    Cx r = from_rat(x.x);
    Cx yw = cmul(from_rat(x.y), w);
    r.re += yw.re;
    r.im += conj ? -yw.im : yw.im;
    return r;
  };
  const unsigned long k = Int(Int(compute_cg(c.g)) / c.signature.e).get_ui();
  Cx t0 = cmul(cpow(embed(c.generator, false), c.signature.S[0].get_ui()),
               cpow(embed(c.generator, true), c.signature.S[1].get_ui()));
  t0 = cpow(t0, k);
  Cx t1 = t0;
  t1.im = -t1.im;
  bool all = true;
  for (const auto& e : c.entries) {
    if (e.minpoly.degree() > 2) return false;
    Cx prod;
    prod.re = 1;
    for (const Cx& root : small_roots(e.minpoly)) {
      const Cx cm = cpow(root, c.exponent.get_ui());
      for (const Cx* t : {&t0, &t1}) {
        Cx diff;
        diff.re = cm.re - t->re;
        diff.im = cm.im - t->im;
        prod = cmul(prod, diff);
      }
    }
    mpf_class mag = abs(prod.re) + mpf_class(0.5, kBits);
    const Int value(floor(mag));
    if (value != e.value) {
      ++mismatches;
      all = false;
    }
    for (const Int& l : c.ells) all = all && !mpz_divisible_p(value.get_mpz_t(), l.get_mpz_t());
  }
  return all;
}

const SignatureReport* find(const PrimeReport& r, const Signature& S) {
  for (const auto* list : {&r.signatures, &r.discarded})
    for (const auto& s : *list)
      if (s.S == S) return &s;
  return nullptr;
}

// -------------------------------------------------------------- criteria

void criterion1() {
  const auto t0 = Clock::now();
  const bool ok = compute_cg(1) == 12 && compute_cg(2) == 120 && compute_cg(3) == 2520;
  const double ms = ms_since(t0);
  std::ostringstream os;
  os << "c_g = 12, 120, 2520 for g = 1, 2, 3 (" << ms << " ms)";
  report(1, ok && ms < 1.0, os.str());
}

void criterion2() {
  const auto t0 = Clock::now();
  const QuadField Q = make_field(1);
  std::set<TypeTag> tags;
  std::size_t kept = 0;
  for (const auto& S : enumerate_reduced_pairs(Q, 1, 1)) {
    if (!is_balanced(Q, S).balanced || !conjugate_sum(Q, S, 1)) continue;
    ++kept;
    tags.insert(classify(Q, S, 1));
  }
  const double ms = ms_since(t0);
  const bool ok = kept == 3 && tags == std::set<TypeTag>{TypeTag::Trivial, TypeTag::Cyclotomic, TypeTag::TypeTwo};
  std::ostringstream os;
  os << "Q, g=d=1: " << kept << " classes {Trivial, Cyclotomic, TypeTwo} remain (" << ms << " ms)";
  report(2, ok && ms < 1000, os.str());
}

void criterion3() {
  const QuadField K = make_field(5);
  bool ok = true;
  for (const auto& S : enumerate_reduced_pairs(K, 1, 1)) {
    const auto b = is_balanced(K, S);
    if (S.is_constant()) continue;
    ok = ok && classify(K, S, 1) == TypeTag::Unbalanced && b.witness && *b.witness == *K.fundamental_unit();
  }
  // Lucas numbers: L_12 = 322, N(1 - u^12) = 1 - L_12 + 1
  Int a = 2, b = 1;
  for (int i = 0; i < 12; ++i) {
    const Int c = a + b;
    a = b;
    b = c;
  }
  const Int lucas12 = a;
  const Int term = bchar_term(K, sig({1, 0}, 1), 1);
  ok = ok && lucas12 == 322 && term == abs(Int(2 - lucas12)) && term == 320;
  SieveConfig cfg;
  const PrimeReport r = run_sieve(K, 1, 1, cfg);
  for (const auto* list : {&r.signatures, &r.discarded})
    for (const auto& s : *list) ok = ok && s.tag != TypeTag::CMCandidate;
  report(3, ok, "Q(sqrt 5): nonconstant signatures unbalanced with unit witness, term 320 = |2 - L_12|, no CM tags");
}

void criterion4() {
  const QuadField K = make_field(-4);
  const PrimeReport r = run_sieve(K, 1, 1);
  bool ok = contains_hcf(K) && r.cm.contains_hcf && r.cm.unbounded;
  const auto j = report_to_json(r);
  ok = ok && j.at("cm").at("unbounded") == true;
  for (const Signature& S : {sig({1, 0}, 1), sig({0, 1}, 1)}) {
    const auto* s = find(r, S);
    ok = ok && s && s->tag == TypeTag::CMCandidate && s->all_survive;
  }
  // no certificate eliminates anything for the CM family
  for (const auto& c : r.certificates)
    if (c.kind != CertKind::TypeTwo && (c.signature == sig({1, 0}, 1) || c.signature == sig({0, 1}, 1))) ok = false;
  report(4, ok, "Q(i): contains its Hilbert class field, CM family reported unbounded, none of its primes eliminated");
}

void criterion5() {
  const QuadField Q = make_field(1);
  const SieveConfig cfg;
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t parity = 0, witness = 0, open = 0;
  for (std::int64_t l : primes_in_range(26, 10000)) {
    if (72 % l == 0) continue;
    const auto c = type2_eliminate(Q, Int(static_cast<long>(l)), cfg);
    if (l % 4 == 1) {
      ok = ok && c && c->reason == "parity" && verify_certificate(*c, Q).ok;
      ++parity;
    } else if (c) {
      ++witness;
    } else {
      ++open;
    }
  }
  const double ms = ms_since(t0);
  const auto c31 = type2_eliminate(Q, 31, cfg);
  bool ok31 = c31 && c31->reason == "witness" && c31->aux_prime.p == 2 && verify_certificate(*c31, Q).ok;
  if (ok31) {
    // independent recomputation of the entries for p = 2
    std::vector<Int> expect;
    for (long k : {4L, 1L, 3L})
      for (long a = 1; a * a <= 8; ++a) expect.push_back(Int(std::labs(a * a - k * 2)));
    ok31 = c31->norm_values == expect && expect == std::vector<Int>{7, 4, 1, 2, 5, 2} && legendre(-8, 31) == -1 &&
           c31->kron_nonresidue == -1;
    for (const Int& v : expect) ok31 = ok31 && v % 31 != 0;
  }
  std::ostringstream os;
  os << "type-2 scan over Q: " << parity << " parity, " << witness << " witness, " << open
     << " open; ell = 31 witness p = 2 with {7,4,1,2,5,2} (" << ms << " ms)";
  report(5, ok && ok31 && ms < 30000, os.str());
}

void criterion6() {
  bool ok = true;
  for (long q : {2L, 3L, 5L, 7L}) {
    const auto polys = enumerate_frobenius_polys(Int(q), 1);
    const long expect = 2 * static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q)) + 1e-12)) + 1 + 2;
    // brute force: monic x^2 + b x + c whose roots have absolute values in
    // {1, sqrt q, q} and pair up as r1 r2 = q
    long brute = 0;
    for (long b = -(q + 1); b <= q + 1; ++b) {
      for (long c = -q * q; c <= q * q; ++c) {
        const std::complex<long double> disc(static_cast<long double>(b * b - 4 * c), 0);
        const auto s = std::sqrt(disc);
        const std::complex<long double> r1 = (-static_cast<long double>(b) + s) / 2.0L;
        const std::complex<long double> r2 = (-static_cast<long double>(b) - s) / 2.0L;
        auto mag_ok = [&](std::complex<long double> r) {
          const long double a = std::abs(r);
          return std::fabs(a - 1) < 1e-9 || std::fabs(a - std::sqrt((long double)q)) < 1e-9 || std::fabs(a - q) < 1e-9;
        };
        auto img = [&](std::complex<long double> r) { return (long double)q / std::conj(r); };
        auto near = [](std::complex<long double> x, std::complex<long double> y) { return std::abs(x - y) < 1e-9; };
        if (!mag_ok(r1) || !mag_ok(r2)) continue;
        const bool closed = (near(img(r1), r1) && near(img(r2), r2)) || (near(img(r1), r2) && near(img(r2), r1));
        if (closed && near(r1 * r2, (long double)q)) ++brute;
      }
    }
    ok = ok && static_cast<long>(polys.size()) == expect && brute == expect;
  }
  const QuadField Q = make_field(1);
  const Int d1 = divisibility_integer(IntPoly{3, 0, 1}, 12, FieldElement::integer(1), Q);
  const Int per = Int(ipow(Int(-3), 6) - 1);  // c^12 - 1 with c^2 = -3
  const Int d2 = divisibility_integer(IntPoly{2, -1, 1}, 12, FieldElement::integer(1), Q);
  // |c^12 - 1|^2 for c = (1 + sqrt(-7))/2
  const std::complex<long double> c(0.5L, std::sqrt(7.0L) / 2);
  const long double mag = std::norm(std::pow(c, 12) - 1.0L);
  ok = ok && per == 728 && d1 == per * per && d2 == 4144 && std::llround(mag) == 4144;
  report(6, ok, "Weil counts for q = 2, 3, 5, 7 match the brute-force filter; divisibility integers 728 (per conjugate) and 4144");
}

void criterion7() {
  bool ok = make_field(-163).class_number() == 1 && make_field(-20).class_number() == 2 &&
            make_field(5).class_number() == 1;
  std::mt19937_64 rng(2024);
  const std::vector<long> discs{-4, -20, -23, 60, 229};
  const auto primes = primes_in_range(2, 9999);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  int checked = 0;
  while (checked < 100) {
    const QuadField K = make_field(discs[static_cast<std::size_t>(checked) % discs.size()]);
    const Int p(static_cast<long>(primes[pick(rng)]));
    if (kronecker(K.disc(), p) != 1) continue;
    for (const auto& v : split_prime(K, p)) {
      const Int ord = K.class_order(v.ideal_class);
      const auto x = principal_generator(K, v, ord);
      ok = ok && x && K.principal_ideal(*x) == K.ideal_pow(v.ideal, ord) &&
           abs(K.norm(*x)) == Rat(ipow(p, ord.get_ui()));
    }
    ++checked;
  }
  report(7, ok, "h(-163) = 1, h(-20) = 2, h(5) = 1; 100 random split primes recover exact generators");
}

void criterion8() {
  const QuadField K = make_field(-20);
  SieveConfig small, large;
  small.aux_bound = 50;
  large.aux_bound = 200;
  const PrimeReport a = run_sieve(K, 1, 1, small);
  const PrimeReport b = run_sieve(K, 1, 1, large);
  bool mono = true;
  for (const auto* list : {&b.signatures, &b.discarded}) {
    for (const auto& sb : *list) {
      const auto* sa = find(a, sb.S);
      if (!sa) {
        mono = false;
        continue;
      }
      if (sa->all_survive) continue;
      if (sb.all_survive) mono = false;
      const std::set<Int> A(sa->survivors.begin(), sa->survivors.end());
      for (const Int& l : sb.survivors) mono = mono && A.count(l);
    }
  }
  const std::set<Int> t2(a.type2_survivors.begin(), a.type2_survivors.end());
  for (const Int& l : b.type2_survivors) mono = mono && t2.count(l);

  const PrimeReport r = run_sieve(K, 1, 1);
  std::vector<int> verdict(r.certificates.size(), -1);
  auto verified = [&](std::size_t i) {
    if (verdict[i] < 0) verdict[i] = verify_certificate(r.certificates[i], K).ok ? 1 : 0;
    return verdict[i] == 1;
  };
  bool sound = true;
  std::size_t checked = 0;
  for (const auto* list : {&r.signatures, &r.discarded}) {
    for (const auto& s : *list) {
      if (s.all_survive || s.sieved_as) continue;
      const std::set<Int> surv(s.survivors.begin(), s.survivors.end());
      for (std::int64_t l : primes_in_range(26, 1000)) {
        const Int L(static_cast<long>(l));
        if (surv.count(L)) continue;
        bool covered = false;
        for (std::size_t i = 0; i < r.certificates.size(); ++i) {
          const auto& c = r.certificates[i];
          if (c.kind == CertKind::TypeTwo || !(c.signature == s.S)) continue;
          if (std::find(c.ells.begin(), c.ells.end(), L) == c.ells.end()) continue;
          covered = verified(i);
          break;
        }
        sound = sound && covered;
        ++checked;
      }
    }
  }
  const std::set<Int> t2s(r.type2_survivors.begin(), r.type2_survivors.end());
  for (std::int64_t l : primes_in_range(26, 1000)) {
    const Int L(static_cast<long>(l));
    if (t2s.count(L)) continue;
    bool covered = false;
    for (std::size_t i = 0; i < r.certificates.size(); ++i)
      if (r.certificates[i].kind == CertKind::TypeTwo && r.certificates[i].ells[0] == L) covered = verified(i);
    sound = sound && covered;
    ++checked;
  }

  std::size_t oob = 0;
  Int mismatches = 0;
  std::set<std::pair<Int, Int>> seen;  // one per aux prime and exponent e
  for (const auto& c : r.certificates) {
    if (oob == 10) break;
    if (c.kind != CertKind::Divisibility || !seen.insert({c.aux_prime.p, c.signature.e}).second) continue;
    sound = sound && out_of_band(c, mismatches);
    ++oob;
  }
  std::ostringstream os;
  os << "disc -20: survivors shrink from aux bound 50 to 200; " << checked
     << " eliminations up to 1000 verified; " << oob << " certificates recomputed numerically";
  report(8, mono && sound && oob == 10 && mismatches == 0, os.str());
}

void criterion9() {
  const QuadField K = make_field(-20);
  const auto t0 = Clock::now();
  const PrimeReport r = run_sieve(K, 1, 1);
  const std::string first = emit_report(r, ReportFormat::Json);
  const double ms = ms_since(t0);
  const std::string second = emit_report(run_sieve(K, 1, 1), ReportFormat::Json);
  const std::set<std::string> allowed{"trivial-Merel", "cyclotomic-Merel", "type2-unresolved", "CM-candidate",
                                      "mixed-survivor"};
  const std::int64_t F = r.config.floor;
  std::set<Int> survivors;
  for (const auto* list : {&r.signatures, &r.discarded})
    for (const auto& s : *list)
      for (const Int& l : s.survivors) survivors.insert(l);
  for (const Int& l : r.type2_survivors) survivors.insert(l);
  for (const auto& [l, why] : r.always_included)
    if (l > F) survivors.insert(l);
  bool tagged = true;
  for (const Int& l : survivors) {
    auto it = r.survivor_tags.find(l);
    tagged = tagged && it != r.survivor_tags.end() && allowed.count(it->second);
  }
  for (const auto& [l, t] : r.survivor_tags) tagged = tagged && survivors.count(l) && l > F;
  std::ostringstream os;
  os << "Q(sqrt -5): " << survivors.size() << " survivors above the floor, each with one tag; identical JSON on two runs ("
     << ms << " ms)";
  report(9, ms < 60000 && first == second && tagged, os.str());
}

}  // namespace

int main() {
  const std::vector<void (*)()> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                    criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  return failures ? 1 : 0;
}
