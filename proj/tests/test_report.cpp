#include <doctest.h>

#include "isosieve/errors.hpp"
#include "isosieve/report.hpp"

using namespace isosieve;
using nlohmann::json;

TEST_CASE("integers in json") {
  CHECK(int_to_json(Int(12)) == json(12));
  const Int big("123456789012345678901234567890");
  CHECK(int_to_json(big) == json("123456789012345678901234567890"));
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_from_json(json(-7)) == -7);
  CHECK_THROWS_AS(int_from_json(json("12x")), DomainError);
  CHECK_THROWS_AS(int_from_json(json(1.5)), DomainError);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("report schema") {
  SieveConfig cfg;
  cfg.aux_bound = 200;
  cfg.ell_scan_bound = 2000;
  const PrimeReport q = run_sieve(make_field(1), 1, 1, cfg);
  const json jq = json::parse(emit_report(q, ReportFormat::Json));
  CHECK(jq.at("cg") == 12);
  CHECK(jq.at("field").at("disc") == 1);
  CHECK(jq.at("config").at("aux_bound") == 200);
  CHECK(jq.at("version") == kVersion);
  CHECK(jq.at("signatures").size() == 3);
  for (const auto& s : jq.at("signatures")) CHECK(s.at("survivors").contains("bound"));
  CHECK(jq.at("type2_survivors") == json({43, 67, 163}));
  CHECK(jq.at("certificates_digest") == certificates_digest(q.certificates));
  CHECK(jq.at("certificates_digest").get<std::string>().size() == 64);

  const PrimeReport gi = run_sieve(make_field(-4), 1, 1, cfg);
  const json ji = report_to_json(gi);
  CHECK(ji.at("cm").at("unbounded") == true);
  bool empty_list = false;
  for (const auto& s : ji.at("signatures"))
    if (s.at("survivors").contains("list") && s.at("survivors").at("list").empty()) {
      empty_list = true;
      CHECK(s.at("survivors").at("list").is_array());
      CHECK(s.at("survivors").dump() == "{\"list\":[]}");
    }
  CHECK(empty_list);

  const std::string text = emit_report(gi, ReportFormat::Text);
  CHECK(text.find("signatures") != std::string::npos);
  CHECK(text.find("CMCandidate") != std::string::npos);
  CHECK(text.find("unbounded yes") != std::string::npos);
}

TEST_CASE("certificates round-trip through json") {
  SieveConfig cfg;
  cfg.aux_bound = 300;
  cfg.ell_scan_bound = 3000;
  for (long disc : {-20L, 5L}) {
    const QuadField K = make_field(disc);
    const PrimeReport r = run_sieve(K, 1, 1, cfg);
    const json doc = json::parse(emit_report(r, ReportFormat::Json));
    const auto certs = certificates_from_document(doc);
    REQUIRE(certs.size() == r.certificates.size());
    CHECK(certificates_digest(certs) == doc.at("certificates_digest").get<std::string>());
    for (const auto& c : certs) {
      const auto v = verify_certificate(c, K);
      CHECK_MESSAGE(v.ok, v.diagnostics);
    }
    CHECK(certificates_from_document(doc.at("certificates")).size() == certs.size());
    CHECK(certificates_from_document(doc.at("certificates")[0]).size() == 1);
  }
  CHECK_THROWS_AS(certificate_from_json(json{{"kind", "Divisibility"}}), DomainError);
  CHECK_THROWS_AS(certificate_from_json(json{{"kind", "Other"}}), DomainError);
  CHECK_THROWS_AS(certificates_from_document(json(3)), DomainError);
}
