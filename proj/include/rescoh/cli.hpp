#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rescoh/lshape.hpp"
#include "rescoh/sl2.hpp"

namespace rescoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitUsage = 64;

enum class Subcommand { Validate, Package, Enumerate, Sl2Verify, LShape };
enum class OutputFormat { Json, Tsv };

/// Flag values exactly as given; parsing into mathematical objects happens
/// in the cmd_* functions, which report malformed values as usage errors.
struct RunConfig {
  Subcommand subcommand = Subcommand::Validate;
  std::optional<long> rank;
  std::optional<std::string> chamber;
  std::optional<std::string> alpha0;
  std::optional<std::string> lambda;
  std::optional<long> weight_bound;
  OutputFormat output_format = OutputFormat::Json;
  std::optional<std::string> output_path;

  std::string a_plus = "-1";
  std::string a_minus = "1";
  long germ_depth = kDefaultGermDepth;

  std::optional<std::string> parabolic;
  PoleHypotheses hypotheses;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string body;     // rendered document for stdout or --output
  std::string message;  // diagnostic for stderr, may be empty
};

CommandResult cmd_validate(const RunConfig& config);
CommandResult cmd_package(const RunConfig& config);
CommandResult cmd_enumerate(const RunConfig& config);
CommandResult cmd_sl2_verify(const RunConfig& config);
CommandResult cmd_lshape(const RunConfig& config);

CommandResult dispatch(const RunConfig& config);

/// Full front end: argument parsing, dispatch and output. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rescoh::cli
