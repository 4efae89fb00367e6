#include "isosieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "isosieve/errors.hpp"
#include "isosieve/factor.hpp"

namespace isosieve {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

bool divides(const Int& ell, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), ell.get_mpz_t()) != 0; }

Int exponent_quotient(const Int& cg, const Signature& S) { return cg / S.e; }

std::string merel_bound(int degree) { return "(3^(6*" + std::to_string(degree) + ")+1)^2"; }

// Candidates whose absolute value can equal that of some conjugate of t come
// first, so that exact matches are found early.
std::vector<std::size_t> magnitude_order(const QuadField& K, const AuxData& ad, const FieldElement& t, const Int& p,
                                         const Int& m) {
  std::vector<long double> logs;
  for (int s = 0; s < K.degree(); ++s) logs.push_back(K.log_abs(t, s));
  const long double lp = std::log(static_cast<long double>(p.get_d())) * static_cast<long double>(m.get_d()) / 2;
  std::vector<std::size_t> first, rest;
  for (std::size_t j = 0; j < ad.candidates.size(); ++j) {
    const long double lc = lp * ad.candidates[j].mag_exp;
    bool match = false;
    for (long double l : logs) match = match || std::fabs(lc - l) <= 1e-6L * (1 + std::fabs(l));
    (match ? first : rest).push_back(j);
  }
  first.insert(first.end(), rest.begin(), rest.end());
  return first;
}

}  // namespace

std::int64_t effective_floor(const SieveConfig& cfg, int g) {
  if (cfg.floor > 0) return cfg.floor;
  return std::max<std::int64_t>(25, 2 * g * compute_cg(g).get_si());
}

void validate_config(const SieveConfig& cfg, int g, int d) {
  if (g < 1 || g > 3) throw ConfigError("g must be 1, 2 or 3");
  if (d < 1 || d > 2 * g) throw ConfigError("d must satisfy 1 <= d <= 2g");
  if (cfg.aux_bound < 2) throw ConfigError("aux_bound must be at least 2");
  if (cfg.aux_bound > kMaxAuxBound) throw ResourceError("aux_bound above " + std::to_string(kMaxAuxBound));
  if (cfg.ell_scan_bound < 1) throw ConfigError("ell_scan_bound must be positive");
  if (cfg.ell_scan_bound > 10000000) throw ResourceError("ell_scan_bound above 10^7");
  if (cfg.floor < 0) throw ConfigError("floor must be positive");
  if (g == 1 && effective_floor(cfg, g) < 25) throw ConfigError("floor must be at least 25 when g = 1");
}

unsigned worker_count(const SieveConfig& cfg) {
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ISOGENY_SIEVE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) throw ConfigError("ISOGENY_SIEVE_THREADS must be a positive integer");
    n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// ------------------------------------------------------------- aux primes

AuxSelection select_aux_primes(const QuadField& K, int g, const SieveConfig& cfg) {
  AuxSelection sel;
  const Int bad = 6 * compute_cg(g) * K.class_number();
  const Int hp = K.class_exponent();
  for (std::int64_t p : primes_in_range(2, cfg.aux_bound)) {
    const Int P(static_cast<long>(p));
    if (divides(P, bad)) continue;
    for (const PrimeIdealData& v : split_prime(K, P)) {
      if (v.residue_degree != 1 || v.ramification != 1) continue;
      const auto x = principal_generator(K, v, hp);
      if (!x) {
        sel.notes.push_back("skipped aux prime over " + P.get_str() + ": generator search failed");
        continue;
      }
      sel.primes.push_back({v, *x});
    }
  }
  std::stable_sort(sel.primes.begin(), sel.primes.end(), [](const AuxPrime& a, const AuxPrime& b) {
    if (a.v.p != b.v.p) return a.v.p < b.v.p;
    return a.v.ideal.b < b.v.ideal.b;
  });
  if (sel.primes.empty()) throw ConfigError("no auxiliary primes up to aux_bound; increase --aux-bound");
  sel.per_class.assign(K.class_count(), 0);
  for (const AuxPrime& a : sel.primes) ++sel.per_class[a.v.ideal_class];
  for (std::size_t i = 0; i < sel.per_class.size(); ++i) {
    if (sel.per_class[i]) continue;
    const ReducedForm& f = K.class_rep(i);
    sel.notes.push_back("warning: no aux prime in class " + std::to_string(i) + " (" + std::to_string(f.A) + "," +
                        std::to_string(f.B) + "," + std::to_string(f.C) + ")");
  }
  return sel;
}

struct AuxCache::Slot {
  std::once_flag once;
  std::atomic<bool> done{false};
  AuxData data;
};

AuxCache::AuxCache(const QuadField& K, int g, int d, const SieveConfig& cfg, AuxSelection aux)
    : K_(K), g_(g), d_(d), cfg_(cfg), aux_(std::move(aux)), m_(compute_cg(g) * K.class_exponent()) {
  for (std::size_t i = 0; i < aux_.primes.size(); ++i) slots_.push_back(new Slot);
}

AuxCache::~AuxCache() {
  for (Slot* s : slots_) delete s;
}

const AuxData& AuxCache::at(std::size_t i) const {
  Slot& s = *slots_.at(i);
  std::call_once(s.once, [&] {
    AuxData& a = s.data;
    try {
      a.candidates = frobenius_candidates(aux_.primes[i].v.p, g_, d_, cfg_.budget);
      for (const auto& c : a.candidates) a.powers.push_back(candidate_power(c.minpoly, m_));
      a.usable = true;
    } catch (const ResourceError& e) {
      a.candidates.clear();
      a.powers.clear();
      a.skip_reason = "skipped aux prime over " + aux_.primes[i].v.p.get_str() + ": " + e.what();
    }
    s.done = true;
  });
  return s.data;
}

const AuxData* AuxCache::peek(std::size_t i) const {
  const Slot& s = *slots_.at(i);
  return s.done ? &s.data : nullptr;
}

// ------------------------------------------------------------- elimination

SignatureOutcome eliminate_signature(const AuxCache& cache, const Signature& S, const SieveConfig& cfg) {
  const QuadField& K = cache.field();
  const int g = cache.g();
  const int d = cache.d();
  if (cache.size() == 0) throw ConfigError("no auxiliary primes");
  const std::int64_t F = effective_floor(cfg, g);
  const Int cg = compute_cg(g);

  SignatureOutcome out;
  out.S = S;
  out.tag = classify(K, S, d);

  std::vector<std::int64_t> remaining = primes_in_range(F + 1, std::max(F, cfg.ell_scan_bound));
  Int G = 0;

  auto base = [&] {
    EliminationCertificate c;
    c.disc = K.disc();
    c.g = g;
    c.d = d;
    c.signature = S;
    return c;
  };

  if (out.tag == TypeTag::Unbalanced) {
    const Int term = bchar_term(K, S, g);
    if (term == 0) throw DomainError("unit term vanishes for unbalanced " + S.to_string());
    out.bchar_term = term;
    EliminationCertificate c = base();
    c.kind = CertKind::Unbalanced;
    c.generator = *K.fundamental_unit();
    c.entries.push_back({K.char_poly(K.pow(evaluate(K, S, c.generator), exponent_quotient(cg, S))), term});
    std::vector<std::int64_t> keep;
    for (std::int64_t l : remaining) {
      if (mpz_fdiv_ui(term.get_mpz_t(), static_cast<unsigned long>(l)) != 0)
        c.ells.push_back(Int(static_cast<long>(l)));
      else
        keep.push_back(l);
    }
    remaining.swap(keep);
    if (!c.ells.empty()) out.certificates.push_back(std::move(c));
    G = strip_small_factors(term, F);
  }

  const AuxSelection& sel = cache.selection();
  for (std::size_t i = 0; i < cache.size() && G != 1; ++i) {
    const AuxData& ad = cache.at(i);
    if (!ad.usable) continue;
    const AuxPrime& aux = sel.primes[i];
    const Int& p = aux.v.p;
    const FieldElement t = K.pow(evaluate(K, S, aux.generator), exponent_quotient(cg, S));
    const IntPoly tpoly = K.char_poly(t);
    const std::vector<std::size_t> order = magnitude_order(K, ad, t, p, cache.exponent());

    std::vector<CertEntry> entries;
    bool zero = false;
    for (std::size_t j : order) {
      Int D = divisibility_from_power(ad.candidates[j].minpoly, ad.powers[j], tpoly);
      if (D == 0) {
        // some candidate matches exactly: no information at this prime
        zero = true;
        break;
      }
      entries.push_back({ad.candidates[j].minpoly, std::move(D)});
    }
    if (zero) {
      ++out.aux_zero;
      continue;
    }
    Int Z = p;
    for (const CertEntry& en : entries) Z *= en.value;
    G = strip_small_factors(G == 0 ? Z : gcd(G, Z), F);
    ++out.aux_used;

    EliminationCertificate c = base();
    c.kind = CertKind::Divisibility;
    c.aux_prime = aux.v;
    c.generator = aux.generator;
    c.exponent = cache.exponent();
    std::vector<std::int64_t> keep;
    for (std::int64_t l : remaining) {
      const unsigned long ul = static_cast<unsigned long>(l);
      unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), ul);
      for (const CertEntry& en : entries) {
        if (r == 0) break;
        r = static_cast<unsigned long>((static_cast<unsigned __int128>(r) * mpz_fdiv_ui(en.value.get_mpz_t(), ul)) % ul);
      }
      if (r != 0)
        c.ells.push_back(Int(static_cast<long>(l)));
      else
        keep.push_back(l);
    }
    remaining.swap(keep);
    if (!c.ells.empty()) {
      c.entries = std::move(entries);
      out.certificates.push_back(std::move(c));
    }
  }

  out.all_survive = G == 0;
  if (out.all_survive) {
    if (!out.certificates.empty()) throw DomainError("internal: eliminations without a finite survivor set");
    return out;
  }
  Int unfactored = 1;
  std::vector<Int> primes = prime_divisors(G, &unfactored);
  for (const Int& l : primes)
    if (l > F) out.survivors.push_back(l);
  out.unfactored = unfactored;
  std::vector<std::int64_t> listed;
  for (const Int& l : out.survivors)
    if (l <= cfg.ell_scan_bound) listed.push_back(l.get_si());
  if (unfactored == 1 && listed != remaining)
    throw DomainError("internal: survivor gcd disagrees with per-prime elimination for " + S.to_string());
  return out;
}

// ------------------------------------------------------------- type 2

std::vector<Int> type2_norm_values(const Int& p) {
  std::vector<Int> out;
  const Int top = isqrt(4 * p);
  for (long k : {4L, 1L, 3L})
    for (Int a = 1; a <= top; ++a) out.push_back(abs(Int(a * a - k * p)));
  return out;
}

std::vector<Int> type2_extra_values(const Int& p) {
  std::vector<Int> out;
  const Int top = isqrt(4 * p);
  for (Int a = 1; a <= top; ++a) out.push_back(a);
  const Int a = 1 + p;
  for (long k : {4L, 1L, 3L}) out.push_back(abs(Int(a * a - k * p)));
  out.push_back(a);
  return out;
}

namespace {

void check_type2_pre(const QuadField& K, const Int& ell) {
  if (!is_prime(ell)) throw DomainError(ell.get_str() + " is not prime");
  if (ell <= 25) throw DomainError("type-2 elimination needs ell > 25");
  if (!K.is_rational() && kronecker(K.disc(), ell) == 0) throw DomainError("ell ramifies in K");
  if (divides(ell, Int(72))) throw DomainError("ell divides 6 c_g");
}

bool type2_witness_ok(const QuadField& K, const Int& ell, const Int& p) {
  if (p == 3 || p == ell) return false;
  if (!K.is_rational() && kronecker(K.disc(), p) != 1) return false;
  if (kronecker(-ell, p) != 1) return false;
  if (kronecker(-4 * p, ell) != -1) return false;
  for (const Int& v : type2_norm_values(p))
    if (divides(ell, v)) return false;
  for (const Int& v : type2_extra_values(p))
    if (divides(ell, v)) return false;
  return true;
}

}  // namespace

std::optional<EliminationCertificate> type2_eliminate(const QuadField& K, const Int& ell, const SieveConfig& cfg) {
  check_type2_pre(K, ell);
  EliminationCertificate c;
  c.kind = CertKind::TypeTwo;
  c.disc = K.disc();
  c.ells = {ell};
  if (mpz_fdiv_ui(ell.get_mpz_t(), 4) == 1) {
    c.reason = "parity";
    return c;
  }
  for (std::int64_t pp : primes_in_range(2, cfg.aux_bound)) {
    const Int p(static_cast<long>(pp));
    if (!type2_witness_ok(K, ell, p)) continue;
    c.reason = "witness";
    c.aux_prime = split_prime(K, p).front();
    c.kron_split = kronecker(-ell, p);
    c.kron_nonresidue = kronecker(-4 * p, ell);
    c.norm_values = type2_norm_values(p);
    c.extra_values = type2_extra_values(p);
    return c;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- verification

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::Divisibility: return "Divisibility";
    case CertKind::TypeTwo: return "TypeTwo";
    case CertKind::Unbalanced: return "Unbalanced";
  }
  return "?";
}

CertKind parse_cert_kind(const std::string& s) {
  for (CertKind k : {CertKind::Divisibility, CertKind::TypeTwo, CertKind::Unbalanced})
    if (to_string(k) == s) return k;
  throw DomainError("unknown certificate kind " + s);
}

namespace {

struct Fail {
  std::string msg;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Fail{msg};
}

void check_ells(const EliminationCertificate& c) {
  require(!c.ells.empty(), "no eliminated primes");
  for (const Int& l : c.ells) require(l > 1 && is_prime(l), l.get_str() + " is not prime");
}

void verify_signature_shape(const EliminationCertificate& c, const QuadField& K) {
  require(c.g >= 1 && c.g <= 3 && c.d >= 1 && c.d <= 2 * c.g, "bad (g, d)");
  require(c.signature.S.size() == static_cast<std::size_t>(K.degree()), "signature length");
  const Int cg = compute_cg(c.g);
  require(c.signature.e > 0 && divides(c.signature.e, cg), "e does not divide c_g");
  for (const Int& s : c.signature.S) require(s >= 0 && s <= c.d * c.signature.e, "signature entry out of range");
}

void verify_divisibility(const EliminationCertificate& c, const QuadField& K) {
  verify_signature_shape(c, K);
  check_ells(c);
  const Int& p = c.aux_prime.p;
  require(is_prime(p), "aux norm is not prime");
  require(K.is_valid_ideal(c.aux_prime.ideal) && c.aux_prime.ideal.norm() == p, "aux ideal is not a prime of norm p");
  require(K.is_rational() || kronecker(K.disc(), p) == 1, "aux prime is not split");
  const Int hp = K.class_exponent();
  const Int cg = compute_cg(c.g);
  require(c.exponent == cg * hp, "exponent is not c_g h'");
  require(c.generator.is_integral() && !c.generator.is_zero(), "generator is not integral");
  require(K.principal_ideal(c.generator) == K.ideal_pow(c.aux_prime.ideal, hp), "generator does not generate v^h'");
  const FieldElement t = K.pow(evaluate(K, c.signature, c.generator), cg / c.signature.e);

  std::vector<IntPoly> expect;
  for (const auto& cand : frobenius_candidates(p, c.g, c.d)) expect.push_back(cand.minpoly);
  std::vector<IntPoly> got;
  for (const auto& e : c.entries) got.push_back(e.minpoly);
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  require(expect == got, "candidate list is incomplete or altered");

  for (const auto& e : c.entries) {
    const Int D = divisibility_by_determinant(e.minpoly, c.exponent, t, K);
    require(D == e.value, "entry for " + e.minpoly.to_string() + " does not match recomputation");
    require(D != 0, "zero entry");
    for (const Int& l : c.ells) {
      require(l != p, "ell equals the aux residue characteristic");
      require(!divides(l, D), l.get_str() + " divides an entry");
    }
  }
}

void verify_unbalanced(const EliminationCertificate& c, const QuadField& K) {
  verify_signature_shape(c, K);
  check_ells(c);
  require(K.is_real(), "unit certificate needs a real field");
  require(!is_balanced(K, c.signature).balanced, "signature is balanced");
  require(c.generator == *K.fundamental_unit(), "unit differs from the fundamental unit");
  require(c.entries.size() == 1, "expected one unit term");
  const Int cg = compute_cg(c.g);
  const FieldElement t = K.pow(evaluate(K, c.signature, c.generator), cg / c.signature.e);
  const Int term = abs(K.norm(K.sub(FieldElement::integer(1), t)).get_num());
  require(term == c.entries[0].value && term != 0, "unit term does not match recomputation");
  require(c.entries[0].minpoly == K.char_poly(t), "unit term polynomial mismatch");
  for (const Int& l : c.ells) require(!divides(l, term), l.get_str() + " divides the unit term");
}

void verify_type2(const EliminationCertificate& c, const QuadField& K) {
  require(c.g == 1 && c.d == 1, "type-2 certificates need g = d = 1");
  require(c.ells.size() == 1, "type-2 certificates cover one prime");
  const Int& ell = c.ells.front();
  try {
    check_type2_pre(K, ell);
  } catch (const DomainError& e) {
    throw Fail{e.what()};
  }
  if (c.reason == "parity") {
    require(mpz_fdiv_ui(ell.get_mpz_t(), 4) == 1, "parity reason needs ell = 1 mod 4");
    return;
  }
  require(c.reason == "witness", "unknown type-2 reason");
  const Int& p = c.aux_prime.p;
  require(is_prime(p) && p != 3 && p != ell, "bad witness prime");
  require(K.is_rational() || kronecker(K.disc(), p) == 1, "witness prime is not split in K");
  require(kronecker(-ell, p) == 1 && c.kron_split == 1, "(-ell | p) != 1");
  require(kronecker(-4 * p, ell) == -1 && c.kron_nonresidue == -1, "-4p is a residue mod ell");
  require(c.norm_values == type2_norm_values(p), "norm values do not match recomputation");
  require(c.extra_values == type2_extra_values(p), "extra values do not match recomputation");
  for (const Int& v : c.norm_values) require(!divides(ell, v), "ell divides a norm value");
  for (const Int& v : c.extra_values) require(!divides(ell, v), "ell divides an extra value");
}

}  // namespace

VerifyResult verify_certificate(const EliminationCertificate& cert, const QuadField& K) {
  VerifyResult r;
  try {
    require(cert.disc == K.disc(), "certificate is for a different field");
    switch (cert.kind) {
      case CertKind::Divisibility: verify_divisibility(cert, K); break;
      case CertKind::Unbalanced: verify_unbalanced(cert, K); break;
      case CertKind::TypeTwo: verify_type2(cert, K); break;
    }
  } catch (const Fail& f) {
    r.ok = false;
    r.diagnostics = f.msg;
  } catch (const std::exception& e) {
    r.ok = false;
    r.diagnostics = std::string("malformed certificate: ") + e.what();
  }
  return r;
}

// ------------------------------------------------------------- full run

namespace {

const char* survivor_tag(TypeTag t) {
  switch (t) {
    case TypeTag::Trivial: return "trivial-Merel";
    case TypeTag::Cyclotomic: return "cyclotomic-Merel";
    case TypeTag::TypeTwo: return "type2-unresolved";
    case TypeTag::CMCandidate: return "CM-candidate";
    default: return "mixed-survivor";
  }
}

int tag_rank(const std::string& t) {
  static const std::vector<std::string> order{"type2-unresolved", "CM-candidate", "trivial-Merel", "cyclotomic-Merel",
                                              "mixed-survivor"};
  return static_cast<int>(std::find(order.begin(), order.end(), t) - order.begin());
}

}  // namespace

PrimeReport run_sieve(const QuadField& K, int g, int d, const SieveConfig& cfg_in) {
  validate_config(cfg_in, g, d);
  SieveConfig cfg = cfg_in;
  cfg.floor = effective_floor(cfg_in, g);
  const std::int64_t F = cfg.floor;
  const unsigned workers = worker_count(cfg);

  PrimeReport rep;
  rep.version = kVersion;
  rep.disc = K.disc();
  rep.g = g;
  rep.d = d;
  rep.degree = K.degree();
  rep.signature = K.signature();
  rep.class_number = K.class_number();
  rep.class_exponent = K.class_exponent();
  rep.unit = K.fundamental_unit();
  if (rep.unit) rep.unit_text = K.format(*rep.unit);
  rep.cg = compute_cg(g);
  rep.config = cfg;
  rep.cm = cm_verdict(K);
  if (g == 1) rep.merel_tag = merel_bound(K.degree());

  AuxSelection sel = select_aux_primes(K, g, cfg);
  for (const AuxPrime& a : sel.primes) rep.aux_norms.push_back(a.v.p);
  rep.aux_per_class = sel.per_class;
  rep.notes = sel.notes;
  AuxCache cache(K, g, d, cfg, std::move(sel));

  const std::vector<Signature> pairs = enumerate_reduced_pairs(K, g, d);
  std::vector<Signature> reps;
  std::vector<std::size_t> rep_index(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Signature r = std::min(pairs[i], dual(pairs[i], d));
    auto it = std::find(reps.begin(), reps.end(), r);
    rep_index[i] = static_cast<std::size_t>(it - reps.begin());
    if (it == reps.end()) reps.push_back(r);
  }
  std::vector<SignatureOutcome> outcomes(reps.size());
  parallel_for(reps.size(), workers, [&](std::size_t i) { outcomes[i] = eliminate_signature(cache, reps[i], cfg); });

  const bool type2_scan = g == 1 && d == 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Signature& S = pairs[i];
    const SignatureOutcome& o = outcomes[rep_index[i]];
    SignatureReport sr;
    sr.S = S;
    sr.tag = classify(K, S, d);
    if (!(o.S == S)) sr.sieved_as = o.S;
    sr.all_survive = o.all_survive;
    sr.survivors = o.survivors;
    sr.unfactored = o.unfactored;
    sr.bchar_term = o.bchar_term;
    sr.aux_used = o.aux_used;
    sr.aux_zero = o.aux_zero;
    const BalanceResult bal = is_balanced(K, S);
    if (!bal.balanced) {
      sr.discard_reason = "unbalanced";
      sr.unit_witness = bal.witness;
    } else if (!conjugate_sum(K, S, d)) {
      sr.discard_reason = "conjugate-sum";
    }
    if (sr.all_survive) {
      switch (sr.tag) {
        case TypeTag::Trivial:
          sr.bound = g == 1 ? "merel: ell <= " + rep.merel_tag : "trivial type: no finite bound from the sieve";
          break;
        case TypeTag::Cyclotomic:
          sr.bound = g == 1 ? "merel: ell <= " + rep.merel_tag : "cyclotomic type: no finite bound from the sieve";
          break;
        case TypeTag::TypeTwo:
          sr.bound = type2_scan ? "type2: see type2_survivors; ell > " + std::to_string(cfg.ell_scan_bound) +
                                      " not scanned"
                                : "type2: no per-prime routine for this (g, d)";
          break;
        case TypeTag::CMCandidate:
          sr.bound = rep.cm.contains_hcf ? "CM: unbounded, K contains its Hilbert class field"
                                         : "CM: exact match at every auxiliary prime";
          break;
        default: sr.bound = "no auxiliary prime separated the candidates"; break;
      }
    }
    (sr.discard_reason.empty() ? rep.signatures : rep.discarded).push_back(std::move(sr));
  }
  for (auto& o : outcomes)
    for (auto& c : o.certificates) rep.certificates.push_back(std::move(c));

  std::set<Int> ramified;
  if (!K.is_rational())
    for (const Int& l : prime_divisors(abs(K.disc()))) ramified.insert(l);

  if (type2_scan) {
    const std::vector<std::int64_t> ells = primes_in_range(F + 1, std::max(F, cfg.ell_scan_bound));
    std::vector<std::optional<EliminationCertificate>> res(ells.size());
    std::vector<char> skip(ells.size(), 0);
    parallel_for(ells.size(), workers, [&](std::size_t i) {
      const Int l(static_cast<long>(ells[i]));
      if (ramified.count(l) || divides(l, Int(72))) {
        skip[i] = 1;
        return;
      }
      res[i] = type2_eliminate(K, l, cfg);
    });
    for (std::size_t i = 0; i < ells.size(); ++i) {
      if (skip[i]) continue;
      if (res[i])
        rep.certificates.push_back(std::move(*res[i]));
      else
        rep.type2_survivors.push_back(Int(static_cast<long>(ells[i])));
    }
    rep.type2_note = "primes above " + std::to_string(cfg.ell_scan_bound) + " not scanned";
  }

  std::map<Int, std::string> always;
  for (std::int64_t l : primes_in_range(2, F)) always.emplace(Int(static_cast<long>(l)), "floor");
  for (const Int& l : ramified) always.emplace(l, "ramified");
  for (const Int& l : prime_divisors(6 * rep.cg * K.class_number())) always.emplace(l, "divides-aux");
  for (const auto& sr : rep.discarded)
    if (sr.discard_reason == "unbalanced")
      for (const Int& l : sr.survivors) always.emplace(l, "divides-bchar-term");
  for (auto& [l, why] : always) rep.always_included.emplace_back(l, why);

  auto tag = [&](const Int& l, const std::string& t) {
    if (l <= F) return;
    auto it = rep.survivor_tags.find(l);
    if (it == rep.survivor_tags.end() || tag_rank(t) < tag_rank(it->second)) rep.survivor_tags[l] = t;
  };
  for (const auto* list : {&rep.signatures, &rep.discarded})
    for (const auto& sr : *list)
      for (const Int& l : sr.survivors) tag(l, sr.discard_reason.empty() ? survivor_tag(sr.tag) : "mixed-survivor");
  for (const Int& l : rep.type2_survivors) tag(l, "type2-unresolved");
  for (const auto& [l, why] : rep.always_included) tag(l, "mixed-survivor");

  for (std::size_t i = 0; i < cache.size(); ++i)
    if (const AuxData* a = cache.peek(i); a && !a->usable) rep.notes.push_back(a->skip_reason);
  if (cfg.assume_grh)
    rep.grh_note =
        "annotation only: under GRH the Chebotarev bound supplies type-2 witness primes for every ell beyond an "
        "explicit bound; no prime is removed on that basis";
  return rep;
}

}  // namespace isosieve
