#ifndef PAULI_DS_CLI_COMMANDS_HPP
#define PAULI_DS_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "pauli_ds_cli/run_config.hpp"

namespace pauli_ds::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kUnsupported = 3,
};

/// Rows (j, n, 2ME, E) of the quantized de Sitter spectrum.
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Columns (r, t, Re f, Im f, Re g_small, Im g_small, |Psi|^2) of one mode on the grid.
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Residual audit of the configured mode set; exit 0 iff everything is under tolerance.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (without the program name): parse, dispatch, write
/// either to `out` or to --out PATH. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace pauli_ds::cli

#endif  // PAULI_DS_CLI_COMMANDS_HPP
