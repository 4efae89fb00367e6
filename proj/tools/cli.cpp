#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "isosieve/errors.hpp"

namespace isosieve::cli {

CliInvocation parse_args(const std::vector<std::string>& args) {
  CliInvocation inv;
  CLI::App app{"Candidate isogeny primes and associated character data for Q and quadratic fields",
               "isogeny-sieve"};
  std::string disc, format = "text", out, verify;
  app.add_option("--disc", disc, "fundamental discriminant of K (1 for Q)");
  app.add_option("--g", inv.g, "dimension")->check(CLI::Range(1, 3));
  app.add_option("--d", inv.d, "degree of the character")->check(CLI::PositiveNumber);
  app.add_option("--aux-bound", inv.cfg.aux_bound, "largest auxiliary prime norm")->check(CLI::PositiveNumber);
  app.add_option("--ell-bound", inv.cfg.ell_scan_bound, "largest ell scanned individually")->check(CLI::PositiveNumber);
  app.add_option("--floor", inv.cfg.floor, "primes up to this bound are always included")->check(CLI::PositiveNumber);
  app.add_flag("--assume-grh", inv.cfg.assume_grh, "add GRH annotations to the report");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report to this file");
  app.add_option("--verify", verify, "verify the certificates in a report or certificate file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    inv.help = true;
    inv.help_text = app.help();
    return inv;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  inv.format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
  if (!out.empty()) inv.out = out;
  if (!verify.empty()) {
    inv.verify = verify;
    return inv;
  }
  if (disc.empty()) throw UsageError("--disc is required");
  if (inv.disc.set_str(disc, 10) != 0) throw UsageError("--disc must be an integer");
  if (auto why = fundamental_discriminant_error(inv.disc)) throw UsageError(*why);
  if (inv.d > 2 * inv.g)
    throw UsageError("--d " + std::to_string(inv.d) + " exceeds 2g = " + std::to_string(2 * inv.g));
  try {
    validate_config(inv.cfg, inv.g, inv.d);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return inv;
}

namespace {

int verify_file(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kUsage;
  }
  nlohmann::json doc;
  std::vector<EliminationCertificate> certs;
  try {
    doc = nlohmann::json::parse(in);
    certs = certificates_from_document(doc);
  } catch (const std::exception& e) {
    err << "malformed certificate file: " << e.what() << "\n";
    return kVerifyFailed;
  }
  if (doc.is_object() && doc.contains("certificates_digest") &&
      doc.at("certificates_digest") != certificates_digest(certs)) {
    err << "certificate digest mismatch\n";
    return kVerifyFailed;
  }
  std::map<Int, QuadField> fields;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& c = certs[i];
    auto it = fields.find(c.disc);
    if (it == fields.end()) it = fields.emplace(c.disc, make_field(c.disc)).first;
    const VerifyResult v = verify_certificate(c, it->second);
    if (!v.ok) {
      ++failed;
      err << "certificate " << i << " (" << to_string(c.kind) << "): " << v.diagnostics << "\n";
    }
  }
  out << certs.size() - failed << " of " << certs.size() << " certificates verified\n";
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  try {
    inv = parse_args(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  }
  if (inv.help) {
    out << inv.help_text;
    return kOk;
  }
  try {
    if (inv.verify) return verify_file(*inv.verify, out, err);
    const QuadField K = make_field(inv.disc);
    const std::string doc = emit_report(run_sieve(K, inv.g, inv.d, inv.cfg), inv.format);
    if (inv.out) {
      std::ofstream f(*inv.out, std::ios::binary);
      if (!(f << doc)) {
        err << "error: cannot write " << *inv.out << "\n";
        return kUsage;
      }
    } else {
      out << doc;
    }
    return kOk;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace isosieve::cli
