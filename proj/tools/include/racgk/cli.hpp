#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "racgk/error.hpp"
#include "racgk/serialize.hpp"

namespace racgk::cli {

enum class Subcommand { kKtheory, kBgw, kBredon, kLimit, kKunneth, kCounterexample, kMvCheck, kAll };
enum class OutputFormat { kText, kJson };

std::optional<Subcommand> parse_subcommand(std::string_view name);
const char* to_string(Subcommand s);

struct RunConfig {
  Subcommand subcommand = Subcommand::kAll;
  std::optional<std::string> input_path;
  unsigned precision = 32;
  std::size_t kunneth_max = 4;
  OutputFormat output_format = OutputFormat::kText;
  std::uint64_t seed = 20240101;
  std::optional<std::string> partition_path;
  // Directory for sparse-triplet dumps of the Bredon differentials.
  std::optional<std::string> dump_dir;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

// Invalid configuration or unreadable input.
class UsageError : public Error {
 public:
  using Error::Error;
};

void validate(const RunConfig& config);

struct RunResult {
  Json report;
  std::vector<std::string> failed_checks;
};

// Builds the report for a validated configuration. Throws UsageError, ParseError,
// GraphError or DecompositionError on bad input.
RunResult run(const RunConfig& config);

// Runs, prints the report in the configured format to `out`, writes diagnostics
// to `err` and returns the process exit status.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string render_text(const Json& report);

}  // namespace racgk::cli
