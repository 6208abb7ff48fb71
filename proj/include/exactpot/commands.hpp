#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "exactpot/numerics.hpp"
#include "exactpot/potential_cases.hpp"

namespace exactpot {

enum class Command { potential, wavefunction, verify, spectrum, audit, pt_check, convert };
enum class OutputFormat { csv, json };

/// Which coefficients the tabulating commands use.
enum class CoefficientChoice { printed, corrected, oracle };

inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitValidation = 2;

inline constexpr const char* kOutputDirEnv = "EXACTPOT_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::potential;
  std::optional<CaseId> case_id;  // audit runs every case when unset
  CaseParams params{0.0, 0.0, 1.0, 1.0, 0.0};
  Grid grid{0.05, 10.0, 500};
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;  // "-" or unset: standard output
  CoefficientChoice coefficients = CoefficientChoice::corrected;

  int count = 6;                    // spectrum: eigenvalues to compute
  std::optional<double> tolerance;  // spectrum: relative tolerance on min |E_i - C|
  int draws = 100;                  // audit
  std::uint64_t seed = 20240611;    // audit
  std::string input_path;           // convert
};

/// "1.5", "-2", "i", "-i", "2i", "0.5-1.5i", "1e-3+2e-1i".
Complex parse_complex(std::string_view text);

/// Explicit path (relative paths resolved against $EXACTPOT_OUTPUT_DIR when
/// set), else $EXACTPOT_OUTPUT_DIR/<default_name>, else standard output.
std::optional<std::string> resolve_output_path(const std::optional<std::string>& flag, const std::string& default_name);

/// Runs one command; report goes to `out` (or the resolved file),
/// diagnostics to `err`. Returns 0, 1 (threshold breach) or 2 (validation).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace exactpot
