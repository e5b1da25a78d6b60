#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pniep/tolerances.hpp"

namespace pniep::cli {

enum class Format { Json, Text };

struct RunConfig {
  Tolerances tol;
  Format format = Format::Json;
  std::string structure = "auto";
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> system_env(const std::string& name);

/// Keys: tol_conj, tol_cond, tol_im, tol_round, tol_root, tol_slope,
/// max_iter, format, structure. Throws ParseError on unknown keys or bad
/// values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// key = value lines; blank lines and '#' comments are skipped.
void apply_config_text(RunConfig& cfg, std::string_view text);

/// PNIEP_<KEY> for every key above, e.g. PNIEP_TOL_COND.
void apply_environment(RunConfig& cfg, const EnvLookup& env);

/// Tolerances > 0, iteration cap >= 1.
void validate(const RunConfig& cfg);

}  // namespace pniep::cli
