#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "isosieve/sieve.hpp"

namespace isosieve {

enum class ReportFormat { Text, Json };

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json int_to_json(const Int& n);
Int int_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const EliminationCertificate& c);
/// Throws DomainError on malformed input.
EliminationCertificate certificate_from_json(const nlohmann::json& j);

/// Accepts a full report, a single certificate or an array of certificates.
std::vector<EliminationCertificate> certificates_from_document(const nlohmann::json& j);

std::string sha256_hex(const std::string& data);
std::string certificates_digest(const std::vector<EliminationCertificate>& certs);

nlohmann::json report_to_json(const PrimeReport& r);
std::string emit_report(const PrimeReport& r, ReportFormat format);

}  // namespace isosieve
