#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

using namespace isosieve;
using namespace isosieve::cli;

namespace {

int exit_code(const std::string& args) {
  const std::string cmd = std::string(SIEVE_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("isogeny_sieve_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("argument parsing") {
  const auto a = parse_args({"--disc", "-20", "--g", "1", "--format", "json"});
  CHECK(a.disc == -20);
  CHECK(a.g == 1);
  CHECK(a.d == 1);
  CHECK(a.format == ReportFormat::Json);
  CHECK(a.cfg.aux_bound == 1000);
  CHECK(a.cfg.ell_scan_bound == 10000);

  const auto b = parse_args({"--disc=5", "--aux-bound", "300", "--ell-bound", "500", "--floor", "30"});
  CHECK(b.disc == 5);
  CHECK(b.cfg.aux_bound == 300);
  CHECK(b.cfg.ell_scan_bound == 500);
  CHECK(b.cfg.floor == 30);
  CHECK(b.format == ReportFormat::Text);

  CHECK_THROWS_AS(parse_args({"--disc", "48"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--disc", "5", "--d", "3"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--disc", "5", "--g", "4"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--disc", "5", "--unknown"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--disc", "abc"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--disc", "5", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--disc", "5", "--floor", "20"}), UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK(parse_args({"--help"}).help);
  CHECK(parse_args({"--disc", "12"}).disc == 12);
  try {
    parse_args({"--disc", "48"});
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("conductor 2") != std::string::npos);
  }
}

TEST_CASE("exit codes of the binary") {
  CHECK(exit_code("--disc 1 --aux-bound 100 --ell-bound 100") == 0);
  CHECK(exit_code("--disc 48") == 2);
  CHECK(exit_code("--disc 5 --d 3") == 2);
  CHECK(exit_code("--bogus") == 2);
  CHECK(exit_code("--disc -100000007") == 3);
  CHECK(exit_code("--disc 1 --aux-bound 1000000") == 3);
  CHECK(exit_code("--disc 1 --aux-bound 4") == 2);
  CHECK(exit_code("--help") == 0);
}

TEST_CASE("json report round trip through --verify") {
  const auto path = temp_file("report.json");
  REQUIRE(exit_code("--disc -20 --aux-bound 200 --ell-bound 1000 --format json --out " + path.string()) == 0);
  const std::string doc = slurp(path);
  const auto j = nlohmann::json::parse(doc);
  CHECK(j.at("cg") == 12);
  CHECK(j.at("field").at("disc") == -20);
  CHECK(exit_code("--verify " + path.string()) == 0);

  // same bytes on a second run
  const auto again = temp_file("report2.json");
  REQUIRE(exit_code("--disc -20 --aux-bound 200 --ell-bound 1000 --format json --out " + again.string()) == 0);
  CHECK(slurp(again) == doc);

  // tamper with one divisibility entry
  auto bad = j;
  for (auto& c : bad.at("certificates")) {
    if (c.at("kind") == "Divisibility") {
      const Int ell = int_from_json(c.at("ells")[0]);
      c.at("entries")[0]["value"] = Int(ell * int_from_json(c.at("entries")[0].at("value"))).get_str();
      break;
    }
  }
  bad.erase("certificates_digest");
  const auto badpath = temp_file("bad.json");
  std::ofstream(badpath) << bad.dump();
  CHECK(exit_code("--verify " + badpath.string()) == 1);

  // digest must match the embedded certificates
  auto digest = j;
  digest["certificates_digest"] = std::string(64, '0');
  std::ofstream(badpath) << digest.dump();
  CHECK(exit_code("--verify " + badpath.string()) == 1);

  std::ofstream(badpath) << "{ not json";
  CHECK(exit_code("--verify " + badpath.string()) == 1);
  CHECK(exit_code("--verify /nonexistent/file.json") == 2);

  std::filesystem::remove(path);
  std::filesystem::remove(again);
  std::filesystem::remove(badpath);
}

TEST_CASE("text output") {
  std::ostringstream out, err;
  CHECK(run({"--disc", "-4", "--aux-bound", "100", "--ell-bound", "200"}, out, err) == kOk);
  CHECK(out.str().find("contains Hilbert class field yes") != std::string::npos);
  CHECK(err.str().empty());
}
