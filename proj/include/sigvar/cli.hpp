#ifndef SIGVAR_CLI_HPP
#define SIGVAR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sigvar {

enum class OutputFormat { text, json };

struct CliConfig {
  /// Overridden by the SIGVAR_SEED environment variable, then by --seed.
  std::uint64_t seed = 1;
  OutputFormat output = OutputFormat::text;
  std::size_t rank_trials = 3;
  /// 0 means "auto": monomial count plus 10.
  std::size_t sample_count = 0;
};

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit status: 0 success, 1 domain error, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigvar

#endif
