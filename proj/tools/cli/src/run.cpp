#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pniep/error.hpp"
#include "pniep_cli/commands.hpp"

namespace pniep::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  std::optional<std::string> format;
  std::optional<std::string> config;
  std::optional<std::string> structure;
  std::optional<double> tol_conj, tol_cond, tol_im, tol_round, tol_root, tol_slope;
  std::optional<int> max_iter;
  bool batch = false;
};

RunConfig resolve(const Flags& f, const EnvLookup& env) {
  RunConfig cfg;
  std::optional<std::string> config_path = f.config;
  if (!config_path) config_path = env("PNIEP_CONFIG");
  if (config_path) apply_config_text(cfg, read_input(*config_path));
  apply_environment(cfg, env);
  if (f.format) apply_setting(cfg, "format", *f.format);
  if (f.structure) cfg.structure = *f.structure;
  if (f.tol_conj) cfg.tol.conj = *f.tol_conj;
  if (f.tol_cond) cfg.tol.cond = *f.tol_cond;
  if (f.tol_im) cfg.tol.im = *f.tol_im;
  if (f.tol_round) cfg.tol.round = *f.tol_round;
  if (f.tol_root) cfg.tol.root = *f.tol_root;
  if (f.tol_slope) cfg.tol.slope = *f.tol_slope;
  if (f.max_iter) cfg.tol.max_iterations = *f.max_iter;
  validate(cfg);
  return cfg;
}

void emit(const CommandOutput& o, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Json) {
    out << o.json.dump(2) << "\n";
  } else {
    out << o.text;
  }
}

template <typename Fn>
int run_documents(const std::string& path, bool batch, const RunConfig& cfg, std::ostream& out,
                  Fn&& fn) {
  const std::string text = read_input(path);
  if (!batch) {
    const CommandOutput o = fn(parse_spectrum_document(text, cfg.format));
    emit(o, cfg, out);
    return o.exit_code;
  }
  int worst = kOk;
  Json all = Json::array();
  bool first = true;
  for (const auto& doc : parse_batch(text, cfg.format)) {
    const CommandOutput o = fn(doc);
    worst = std::max(worst, o.exit_code);
    if (cfg.format == Format::Json) {
      Json entry = o.json;
      entry["exit_code"] = o.exit_code;
      all.push_back(entry);
    } else {
      if (!first) out << "\n";
      out << o.text << "exit code: " << o.exit_code << "\n";
    }
    first = false;
  }
  if (cfg.format == Format::Json) out << all.dump(2) << "\n";
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env) {
  CLI::App app{"Persymmetric non-negative inverse eigenvalue toolkit", "pniep"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Flags f;
  app.add_option("--format", f.format, "Output format (text also reads plain lists)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--config", f.config, "key = value settings file");
  app.add_option("--tol-conj", f.tol_conj, "Conjugate pairing tolerance");
  app.add_option("--tol-cond", f.tol_cond, "Inequality tolerance");
  app.add_option("--tol-im", f.tol_im, "Imaginary residue tolerance");
  app.add_option("--tol-round", f.tol_round, "Newton round-trip tolerance");
  app.add_option("--tol-root", f.tol_root, "Root and char-poly residual tolerance");
  app.add_option("--tol-slope", f.tol_slope, "Minimum matching slope");
  app.add_option("--max-iter", f.max_iter, "Root-finder iteration cap");
  app.add_flag("--batch", f.batch, "FILE holds many documents");

  std::string file, matrix_file, spectrum_file;
  auto* check = app.add_subcommand("check", "Evaluate the realizability criteria");
  check->add_option("file", file, "Spectrum document ('-' for stdin)")->required();

  auto* realize = app.add_subcommand("realize", "Construct a realizing matrix");
  realize->add_option("file", file, "Spectrum document ('-' for stdin)")->required();
  realize->add_option("--structure", f.structure, "Structure to build")
      ->check(CLI::IsMember({"auto", "case1", "case2", "case3", "A1", "A2", "A3", "A4", "A5",
                             "toeplitz", "companion"}));

  PerturbOptions popts;
  std::optional<std::string> scheme;
  auto* perturb = app.add_subcommand("perturb", "Imaginary-part bounds and perturbations");
  perturb->add_option("file", file, "Spectrum document ('-' for stdin)")->required();
  perturb->add_option("--mode", popts.mode, "bounds or apply")
      ->check(CLI::IsMember({"bounds", "apply"}));
  perturb->add_option("--scheme", scheme, "FOUR_T, FIVE_ONE_PAIR_T, FIVE_TWO_PAIR_T, GENERAL_KTH_PAIR_T");
  perturb->add_option("--t", popts.t, "Perturbation size (>= 0)");
  perturb->add_option("--pair", popts.pair, "1-based index of the value or pair to move");

  auto* verify = app.add_subcommand("verify", "Check a matrix against a spectrum");
  verify->add_option("matrix", matrix_file, "Matrix document")->required();
  verify->add_option("spectrum", spectrum_file,
                     "Spectrum document (defaults to the matrix file's \"spectrum\")");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    const RunConfig cfg = resolve(f, env);
    if (*check) {
      return run_documents(file, f.batch, cfg, out,
                           [&](const SpectrumDocument& d) { return cmd_check(d, cfg); });
    }
    if (*realize) {
      return run_documents(file, f.batch, cfg, out,
                           [&](const SpectrumDocument& d) { return cmd_realize(d, cfg); });
    }
    if (*perturb) {
      popts.scheme = scheme;
      return run_documents(file, f.batch, cfg, out, [&](const SpectrumDocument& d) {
        return cmd_perturb(d, popts, cfg);
      });
    }
    const std::string mtext = read_input(matrix_file);
    const Matrix m = parse_matrix_document(mtext);
    std::optional<SpectrumDocument> doc;
    if (!spectrum_file.empty()) {
      doc = parse_spectrum_document(read_input(spectrum_file), cfg.format);
    } else {
      doc = embedded_spectrum(mtext);
      if (!doc) throw Error(ErrorCode::ParseError, "no spectrum given and none in the matrix file");
    }
    const CommandOutput o = cmd_verify(m, *doc, cfg);
    emit(o, cfg, out);
    return o.exit_code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.message() << "\n";
    return kParse;
  }
}

}  // namespace pniep::cli
