#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isosieve/characters.hpp"
#include "isosieve/cmtypes.hpp"
#include "isosieve/field.hpp"
#include "isosieve/weil.hpp"

namespace isosieve {

struct SieveConfig {
  std::int64_t aux_bound = 1000;
  std::int64_t ell_scan_bound = 10000;
  std::int64_t floor = 0;  // 0 selects max(25, 2 g c_g)
  bool assume_grh = false;
  unsigned threads = 0;  // 0: ISOGENY_SIEVE_THREADS, else hardware concurrency
  EnumerationBudget budget;
};

inline constexpr std::int64_t kMaxAuxBound = 100000;

std::int64_t effective_floor(const SieveConfig& cfg, int g);
/// Throws ConfigError for invalid settings, ResourceError for oversized ones.
void validate_config(const SieveConfig& cfg, int g, int d);
unsigned worker_count(const SieveConfig& cfg);

struct AuxPrime {
  PrimeIdealData v;
  FieldElement generator;  // (generator) = v^(h')
};

struct AuxSelection {
  std::vector<AuxPrime> primes;          // sorted by norm, then ideal
  std::vector<std::size_t> per_class;    // aux primes in each ideal class
  std::vector<std::string> notes;        // skipped primes, missing classes
};

AuxSelection select_aux_primes(const QuadField& K, int g, const SieveConfig& cfg);

enum class CertKind { Divisibility, TypeTwo, Unbalanced };
std::string to_string(CertKind kind);
CertKind parse_cert_kind(const std::string& s);

struct CertEntry {
  IntPoly minpoly;
  Int value;
};

struct EliminationCertificate {
  CertKind kind = CertKind::Divisibility;
  Int disc = 1;
  int g = 1;
  int d = 1;
  Signature signature;              // Divisibility, Unbalanced
  PrimeIdealData aux_prime;         // Divisibility; TypeTwo witness uses aux_prime.p
  FieldElement generator;           // x with (x) = v^(h'); the unit for Unbalanced
  Int exponent = 0;                 // c_g h'
  std::vector<CertEntry> entries;   // one per candidate; Unbalanced: the single unit term
  std::vector<Int> ells;            // primes eliminated by this certificate
  std::string reason;               // TypeTwo: "parity" or "witness"
  std::vector<Int> norm_values;     // TypeTwo witness: |a^2 - k p|, k = 4, 1, 3
  std::vector<Int> extra_values;    // |a| and the multiplicative traces +-(1+p)
  int kron_split = 0;               // (-ell | p)
  int kron_nonresidue = 0;          // (-4p | ell)
};

struct VerifyResult {
  bool ok = true;
  std::string diagnostics;
  explicit operator bool() const { return ok; }
};

VerifyResult verify_certificate(const EliminationCertificate& cert, const QuadField& K);

/// Candidate data for one aux prime, computed on first use.
struct AuxData {
  bool usable = false;
  std::string skip_reason;
  std::vector<FrobeniusCandidate> candidates;
  std::vector<IntPoly> powers;  // y^m mod minpoly
};

class AuxCache {
 public:
  AuxCache(const QuadField& K, int g, int d, const SieveConfig& cfg, AuxSelection aux);
  ~AuxCache();
  AuxCache(const AuxCache&) = delete;
  AuxCache& operator=(const AuxCache&) = delete;

  const QuadField& field() const { return K_; }
  int g() const { return g_; }
  int d() const { return d_; }
  const Int& exponent() const { return m_; }
  const AuxSelection& selection() const { return aux_; }
  std::size_t size() const { return aux_.primes.size(); }
  const AuxData& at(std::size_t i) const;
  /// nullptr when slot i has not been computed.
  const AuxData* peek(std::size_t i) const;

 private:
  struct Slot;
  const QuadField& K_;
  int g_, d_;
  SieveConfig cfg_;
  AuxSelection aux_;
  Int m_;
  std::vector<Slot*> slots_;
};

struct SignatureOutcome {
  Signature S;
  TypeTag tag = TypeTag::MixedSurviving;
  bool all_survive = false;      // zero difference at every usable aux prime
  std::vector<Int> survivors;    // explicit primes > floor
  Int unfactored = 1;            // composite cofactor of the survivor gcd
  Int bchar_term = 0;            // Unbalanced only
  std::size_t aux_used = 0;
  std::size_t aux_zero = 0;
  std::vector<EliminationCertificate> certificates;
};

SignatureOutcome eliminate_signature(const AuxCache& cache, const Signature& S, const SieveConfig& cfg);

/// |a^2 - k p| for k = 4, 1, 3 (in that order) and 0 < a^2 <= 4p.
std::vector<Int> type2_norm_values(const Int& p);
/// |a| for the same traces, then the values for the traces +-(1+p) of
/// multiplicative reduction.
std::vector<Int> type2_extra_values(const Int& p);

std::optional<EliminationCertificate> type2_eliminate(const QuadField& K, const Int& ell, const SieveConfig& cfg);

struct SignatureReport {
  Signature S;
  TypeTag tag = TypeTag::MixedSurviving;
  std::string discard_reason;               // empty for kept signatures
  std::optional<Signature> sieved_as;       // dual representative
  bool all_survive = false;
  std::string bound;
  std::vector<Int> survivors;
  Int unfactored = 1;
  std::optional<FieldElement> unit_witness;
  Int bchar_term = 0;
  std::size_t aux_used = 0;
  std::size_t aux_zero = 0;
};

struct PrimeReport {
  std::string version;
  Int disc = 1;
  int g = 1;
  int d = 1;
  int degree = 1;
  std::pair<int, int> signature{1, 0};
  Int class_number = 1;
  Int class_exponent = 1;
  std::optional<FieldElement> unit;
  std::string unit_text;
  Int cg = 12;
  SieveConfig config;  // floor resolved
  std::vector<SignatureReport> signatures;
  std::vector<SignatureReport> discarded;
  std::vector<std::pair<Int, std::string>> always_included;
  std::vector<Int> type2_survivors;
  std::string type2_note;
  CMVerdict cm;
  std::string merel_tag;
  std::map<Int, std::string> survivor_tags;
  std::vector<Int> aux_norms;
  std::vector<std::size_t> aux_per_class;
  std::vector<std::string> notes;
  std::vector<EliminationCertificate> certificates;
  std::string grh_note;
};

PrimeReport run_sieve(const QuadField& K, int g, int d, const SieveConfig& cfg = {});

inline constexpr const char* kVersion = "0.1.0";

}  // namespace isosieve
