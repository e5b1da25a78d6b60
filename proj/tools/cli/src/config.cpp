#include "pniep_cli/config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "pniep/error.hpp"

namespace pniep::cli {

namespace {

constexpr std::array<std::string_view, 9> kKeys{"tol_conj",  "tol_cond", "tol_im",
                                                "tol_round", "tol_root", "tol_slope",
                                                "max_iter",  "format",   "structure"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::ParseError,
                "bad number for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::optional<std::string> system_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "tol_conj") {
    cfg.tol.conj = to_double(key, value);
  } else if (key == "tol_cond") {
    cfg.tol.cond = to_double(key, value);
  } else if (key == "tol_im") {
    cfg.tol.im = to_double(key, value);
  } else if (key == "tol_round") {
    cfg.tol.round = to_double(key, value);
  } else if (key == "tol_root") {
    cfg.tol.root = to_double(key, value);
  } else if (key == "tol_slope") {
    cfg.tol.slope = to_double(key, value);
  } else if (key == "max_iter") {
    int n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw Error(ErrorCode::ParseError, "bad integer for max_iter: '" + std::string(value) + "'");
    }
    cfg.tol.max_iterations = n;
  } else if (key == "format") {
    if (value == "json") {
      cfg.format = Format::Json;
    } else if (value == "text") {
      cfg.format = Format::Text;
    } else {
      throw Error(ErrorCode::ParseError, "format must be json or text");
    }
  } else if (key == "structure") {
    cfg.structure = std::string(value);
  } else {
    throw Error(ErrorCode::ParseError, "unknown setting '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void apply_environment(RunConfig& cfg, const EnvLookup& env) {
  for (std::string_view key : kKeys) {
    std::string name = "PNIEP_";
    for (char ch : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (auto value = env(name)) apply_setting(cfg, key, *value);
  }
}

void validate(const RunConfig& cfg) {
  const auto& t = cfg.tol;
  for (double v : {t.conj, t.cond, t.im, t.round, t.root, t.slope}) {
    if (!(v > 0.0)) throw Error(ErrorCode::ParseError, "tolerances must be positive");
  }
  if (t.max_iterations < 1) throw Error(ErrorCode::ParseError, "max_iter must be at least 1");
}

}  // namespace pniep::cli
