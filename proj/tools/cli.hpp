#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isosieve/report.hpp"
#include "isosieve/sieve.hpp"

namespace isosieve::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CliInvocation {
  Int disc = 1;
  int g = 1;
  int d = 1;
  SieveConfig cfg;
  ReportFormat format = ReportFormat::Text;
  std::optional<std::string> out;
  std::optional<std::string> verify;
  bool help = false;
  std::string help_text;
};

/// Arguments without the program name. Throws UsageError.
CliInvocation parse_args(const std::vector<std::string>& args);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isosieve::cli
