#pragma once

#include "maxclass/report_io.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace maxclass {

enum class Command { der, bider, commuting, local, two_local, jacobi, center, verify_paper };

struct RunConfig {
  Command command = Command::der;
  std::string algebra;  // built-in name; empty when `file` is set
  std::string file;
  int weight_min = 0;
  int weight_max = 0;
  std::optional<int> horizon;  // default 48, or the file's horizon
  int family_bound = 20;
  ReportFormat format = ReportFormat::text;
};

// Thrown for bad flags, unreadable files, or horizons too small; maps to exit 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit status: 0 all checks pass, 1 mathematical mismatch, 2 usage error.
int run(const RunConfig& config, std::ostream& out);

// Parses argv (subcommand plus flags), honours --out, and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "a..b" -> {a, b}
std::pair<int, int> parse_weight_range(const std::string& text);

}  // namespace maxclass
