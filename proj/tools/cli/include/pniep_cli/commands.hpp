#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pniep/matrix.hpp"
#include "pniep_cli/config.hpp"
#include "pniep_cli/documents.hpp"

namespace pniep::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 1,
  kNotRealizable = 2,
  kUndecided = 3,
  kNoConstruction = 4,
  kConstructionUnverified = 5,
  kVerifyFailed = 6,
};

using Json = nlohmann::ordered_json;

struct CommandOutput {
  int exit_code = kOk;
  Json json;
  std::string text;
};

CommandOutput cmd_check(const SpectrumDocument& doc, const RunConfig& cfg);

/// cfg.structure: auto, case1, case2, case3, A1..A5, toeplitz, companion.
CommandOutput cmd_realize(const SpectrumDocument& doc, const RunConfig& cfg);

struct PerturbOptions {
  std::string mode = "bounds";        ///< bounds | apply
  std::optional<std::string> scheme;  ///< FOUR_T, FIVE_ONE_PAIR_T, ...; picked from the shape if unset
  double t = 0.0;
  std::size_t pair = 1;
};

CommandOutput cmd_perturb(const SpectrumDocument& doc, const PerturbOptions& opts,
                          const RunConfig& cfg);

CommandOutput cmd_verify(const Matrix& m, const SpectrumDocument& doc, const RunConfig& cfg);

/// Full command line (without the program name). Writes rendered output to
/// `out`, diagnostics to `err`, and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = system_env);

}  // namespace pniep::cli
