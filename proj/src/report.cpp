#include "isosieve/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "isosieve/errors.hpp"

namespace isosieve {

using nlohmann::json;

json int_to_json(const Int& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad integer " + j.get<std::string>());
    return n;
  }
  throw DomainError("expected an integer");
}

namespace {

json rat_to_json(const Rat& r) { return r.get_str(); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad rational " + j.get<std::string>());
  r.canonicalize();
  return r;
}

json element_to_json(const FieldElement& x) { return json{{"x", rat_to_json(x.x)}, {"y", rat_to_json(x.y)}}; }

FieldElement element_from_json(const json& j) { return {rat_from_json(j.at("x")), rat_from_json(j.at("y"))}; }

json poly_to_json(const IntPoly& p) {
  json a = json::array();
  for (const Int& c : p.coeffs()) a.push_back(int_to_json(c));
  return a;
}

IntPoly poly_from_json(const json& j) {
  std::vector<Int> c;
  for (const auto& x : j) c.push_back(int_from_json(x));
  return IntPoly(std::move(c));
}

json ints_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& n : v) a.push_back(int_to_json(n));
  return a;
}

std::vector<Int> ints_from_json(const json& j) {
  std::vector<Int> v;
  for (const auto& n : j) v.push_back(int_from_json(n));
  return v;
}

json signature_to_json(const Signature& S) { return json{{"S", ints_to_json(S.S)}, {"e", int_to_json(S.e)}}; }

Signature signature_from_json(const json& j) {
  Signature S;
  S.S = ints_from_json(j.at("S"));
  S.e = int_from_json(j.at("e"));
  return S;
}

}  // namespace

json certificate_to_json(const EliminationCertificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["disc"] = int_to_json(c.disc);
  j["g"] = c.g;
  j["d"] = c.d;
  j["ells"] = ints_to_json(c.ells);
  if (c.kind == CertKind::TypeTwo) {
    j["reason"] = c.reason;
    if (c.reason == "witness") {
      j["p"] = int_to_json(c.aux_prime.p);
      j["kron_split"] = c.kron_split;
      j["kron_nonresidue"] = c.kron_nonresidue;
      j["norm_values"] = ints_to_json(c.norm_values);
      j["extra_values"] = ints_to_json(c.extra_values);
    }
    return j;
  }
  j["signature"] = signature_to_json(c.signature);
  j["generator"] = element_to_json(c.generator);
  json entries = json::array();
  for (const auto& e : c.entries) entries.push_back(json{{"minpoly", poly_to_json(e.minpoly)}, {"value", e.value.get_str()}});
  j["entries"] = entries;
  if (c.kind == CertKind::Divisibility) {
    const Ideal& I = c.aux_prime.ideal;
    j["aux_prime"] = json{{"p", int_to_json(c.aux_prime.p)},
                          {"ideal", json::array({int_to_json(I.a), int_to_json(I.b), int_to_json(I.c)})}};
    j["exponent"] = int_to_json(c.exponent);
  }
  return j;
}

EliminationCertificate certificate_from_json(const json& j) {
  try {
    EliminationCertificate c;
    c.kind = parse_cert_kind(j.at("kind").get<std::string>());
    c.disc = int_from_json(j.at("disc"));
    c.g = j.at("g").get<int>();
    c.d = j.at("d").get<int>();
    c.ells = ints_from_json(j.at("ells"));
    if (c.kind == CertKind::TypeTwo) {
      c.reason = j.at("reason").get<std::string>();
      if (c.reason == "witness") {
        c.aux_prime.p = int_from_json(j.at("p"));
        c.kron_split = j.at("kron_split").get<int>();
        c.kron_nonresidue = j.at("kron_nonresidue").get<int>();
        c.norm_values = ints_from_json(j.at("norm_values"));
        c.extra_values = ints_from_json(j.at("extra_values"));
      }
      return c;
    }
    c.signature = signature_from_json(j.at("signature"));
    c.generator = element_from_json(j.at("generator"));
    for (const auto& e : j.at("entries")) {
      CertEntry ce{poly_from_json(e.at("minpoly")), int_from_json(e.at("value"))};
      c.entries.push_back(std::move(ce));
    }
    if (c.kind == CertKind::Divisibility) {
      const auto& a = j.at("aux_prime");
      c.aux_prime.p = int_from_json(a.at("p"));
      const auto& I = a.at("ideal");
      if (!I.is_array() || I.size() != 3) throw DomainError("ideal must have three entries");
      c.aux_prime.ideal = Ideal{int_from_json(I[0]), int_from_json(I[1]), int_from_json(I[2])};
      c.exponent = int_from_json(j.at("exponent"));
    }
    return c;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<EliminationCertificate> certificates_from_document(const json& j) {
  std::vector<EliminationCertificate> out;
  if (j.is_object() && j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) out.push_back(certificate_from_json(c));
  } else if (j.is_array()) {
    for (const auto& c : j) out.push_back(certificate_from_json(c));
  } else if (j.is_object()) {
    out.push_back(certificate_from_json(j));
  } else {
    throw DomainError("expected a report, a certificate or a certificate array");
  }
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw ResourceError("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string certificates_digest(const std::vector<EliminationCertificate>& certs) {
  json a = json::array();
  for (const auto& c : certs) a.push_back(certificate_to_json(c));
  return sha256_hex(a.dump());
}

namespace {

json signature_report_json(const SignatureReport& s) {
  json j = signature_to_json(s.S);
  j["tag"] = to_string(s.tag);
  if (s.all_survive) {
    j["survivors"] = json{{"bound", s.bound}};
  } else {
    json sv{{"list", ints_to_json(s.survivors)}};
    if (s.unfactored != 1) sv["unfactored"] = s.unfactored.get_str();
    j["survivors"] = sv;
  }
  if (s.sieved_as) j["sieved_as"] = signature_to_json(*s.sieved_as);
  j["aux_used"] = s.aux_used;
  j["aux_zero"] = s.aux_zero;
  if (!s.discard_reason.empty()) j["reason"] = s.discard_reason;
  if (s.bchar_term != 0) j["bchar_term"] = int_to_json(s.bchar_term);
  return j;
}

}  // namespace

json report_to_json(const PrimeReport& r) {
  json j;
  j["version"] = r.version;
  json field{{"disc", int_to_json(r.disc)},
             {"degree", r.degree},
             {"signature", json::array({r.signature.first, r.signature.second})},
             {"class_number", int_to_json(r.class_number)},
             {"class_exponent", int_to_json(r.class_exponent)}};
  field["fundamental_unit"] = r.unit ? json(r.unit_text) : json(nullptr);
  j["field"] = field;
  j["g"] = r.g;
  j["d"] = r.d;
  j["cg"] = int_to_json(r.cg);
  j["config"] = json{{"aux_bound", r.config.aux_bound},
                     {"ell_scan_bound", r.config.ell_scan_bound},
                     {"floor", r.config.floor},
                     {"assume_grh", r.config.assume_grh}};
  json sigs = json::array();
  for (const auto& s : r.signatures) sigs.push_back(signature_report_json(s));
  j["signatures"] = sigs;
  json disc = json::array();
  for (const auto& s : r.discarded) disc.push_back(signature_report_json(s));
  j["discarded"] = disc;
  json always = json::array();
  for (const auto& [l, why] : r.always_included) always.push_back(json{{"ell", int_to_json(l)}, {"reason", why}});
  j["always_included"] = always;
  j["type2_survivors"] = ints_to_json(r.type2_survivors);
  if (!r.type2_note.empty()) j["type2_note"] = r.type2_note;
  json cm{{"ctheta_order", int_to_json(r.cm.ctheta_order)},
          {"contains_hcf", r.cm.contains_hcf},
          {"unbounded", r.cm.unbounded}};
  if (r.cm.unbounded) cm["unbounded_primes"] = "primes split or ramified in K";
  j["cm"] = cm;
  j["merel_tag"] = r.merel_tag;
  json tags = json::array();
  for (const auto& [l, t] : r.survivor_tags) tags.push_back(json{{"ell", int_to_json(l)}, {"tag", t}});
  j["survivor_tags"] = tags;
  json per_class = json::array();
  for (auto n : r.aux_per_class) per_class.push_back(n);
  j["aux"] = json{{"count", r.aux_norms.size()},
                  {"max_norm", r.aux_norms.empty() ? json(0) : int_to_json(r.aux_norms.back())},
                  {"per_class", per_class}};
  j["notes"] = r.notes;
  if (!r.grh_note.empty()) j["grh_note"] = r.grh_note;
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
  j["certificates_digest"] = sha256_hex(certs.dump());
  j["certificates"] = certs;
  return j;
}

namespace {

std::string join(const std::vector<Int>& v, std::size_t limit = 40) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? " " : "") << v[i].get_str();
  if (v.size() > limit) os << " ... (" << v.size() << " total)";
  return os.str();
}

void signature_rows(std::ostringstream& os, const std::vector<SignatureReport>& list, bool discarded) {
  os << std::left << std::setw(16) << "S" << std::setw(4) << "e" << std::setw(16) << "tag";
  if (discarded) os << std::setw(15) << "reason";
  os << "survivors\n";
  for (const auto& s : list) {
    std::string S;
    for (std::size_t i = 0; i < s.S.S.size(); ++i) S += (i ? "," : "") + s.S.S[i].get_str();
    os << std::setw(16) << "(" + S + ")" << std::setw(4) << s.S.e.get_str() << std::setw(16) << to_string(s.tag);
    if (discarded) os << std::setw(15) << s.discard_reason;
    if (s.all_survive) {
      os << s.bound;
    } else {
      os << "[" << join(s.survivors) << "]";
      if (s.unfactored != 1) os << " unfactored " << s.unfactored.get_str();
    }
    os << "\n";
  }
}

}  // namespace

std::string emit_report(const PrimeReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "isogeny sieve " << r.version << "\n";
  os << "field      disc " << r.disc.get_str() << ", degree " << r.degree << ", class number "
     << r.class_number.get_str() << ", exponent " << r.class_exponent.get_str() << "\n";
  if (r.unit) os << "unit       " << r.unit_text << "\n";
  os << "g = " << r.g << ", d = " << r.d << ", c_g = " << r.cg.get_str() << "\n";
  os << "config     aux_bound " << r.config.aux_bound << ", ell_scan_bound " << r.config.ell_scan_bound << ", floor "
     << r.config.floor << "\n";
  os << "aux primes " << r.aux_norms.size() << "\n\n";
  os << "signatures\n";
  signature_rows(os, r.signatures, false);
  if (!r.discarded.empty()) {
    os << "\ndiscarded signatures\n";
    signature_rows(os, r.discarded, true);
  }
  os << "\nalways included\n";
  std::map<std::string, std::vector<Int>> by_reason;
  for (const auto& [l, why] : r.always_included) by_reason[why].push_back(l);
  for (const auto& [why, ls] : by_reason) os << "  " << std::left << std::setw(20) << why << join(ls) << "\n";
  os << "\ntype-2 survivors  [" << join(r.type2_survivors) << "]";
  if (!r.type2_note.empty()) os << " (" << r.type2_note << ")";
  os << "\n";
  os << "CM               image order " << r.cm.ctheta_order.get_str() << ", contains Hilbert class field "
     << (r.cm.contains_hcf ? "yes" : "no") << ", unbounded " << (r.cm.unbounded ? "yes" : "no") << "\n";
  if (!r.merel_tag.empty()) os << "merel bound      " << r.merel_tag << "\n";
  os << "\nsurvivors above the floor\n";
  for (const auto& [l, t] : r.survivor_tags) os << "  " << std::setw(10) << l.get_str() << t << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (!r.grh_note.empty()) os << "note: " << r.grh_note << "\n";
  os << "\ncertificates " << r.certificates.size() << ", digest " << certificates_digest(r.certificates) << "\n";
  return os.str();
}

}  // namespace isosieve
