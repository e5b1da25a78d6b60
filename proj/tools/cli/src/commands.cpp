#include "pniep_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pniep/construction.hpp"
#include "pniep/error.hpp"
#include "pniep/perturbation.hpp"
#include "pniep/realizability.hpp"
#include "pniep/spectral_core.hpp"
#include "pniep/verification.hpp"

namespace pniep::cli {

namespace {

std::string num(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string complex_text(Complex z) {
  if (z.imag() == 0.0) return num(z.real());
  std::string s = z.real() == 0.0 ? "" : num(z.real());
  if (z.imag() < 0.0) {
    s += "-" + num(-z.imag());
  } else {
    s += (s.empty() ? "" : "+") + num(z.imag());
  }
  return s + "i";
}

double clean(double x) { return x == 0.0 ? 0.0 : x; }

Json complex_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Json values_json(const std::vector<Complex>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(complex_json(v));
  return arr;
}

std::string values_text(const std::vector<Complex>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + complex_text(values[i]);
  return s + "}";
}

Json condition_json(const ConditionResult& c) {
  return Json{{"name", c.name},
              {"lhs", clean(c.lhs)},
              {"rhs", clean(c.rhs)},
              {"margin", clean(c.margin)},
              {"satisfied", c.satisfied}};
}

Json verdict_json(const RealizabilityVerdict& v) {
  Json j{{"criterion", v.criterion},
         {"kind", v.sufficient_only ? "sufficient" : "iff"},
         {"applicable", v.applicable},
         {"realizable", v.realizable}};
  j["perron"] = v.perron ? Json(clean(*v.perron)) : Json(nullptr);
  Json conds = Json::array();
  for (const auto& c : v.conditions) conds.push_back(condition_json(c));
  j["conditions"] = conds;
  Json aux = Json::object();
  for (const auto& [k, x] : v.auxiliary) aux[k] = clean(x);
  j["auxiliary"] = aux;
  j["notes"] = v.notes;
  return j;
}

void verdict_text(std::ostream& os, const RealizabilityVerdict& v) {
  os << v.criterion << " (" << (v.sufficient_only ? "sufficient" : "iff") << "): ";
  if (!v.applicable) {
    os << "not applicable\n";
  } else if (v.realizable) {
    os << (v.sufficient_only ? "satisfied\n" : "realizable\n");
  } else {
    os << (v.sufficient_only ? "not satisfied\n" : "not realizable\n");
  }
  for (const auto& c : v.conditions) {
    os << "  [" << (c.satisfied ? "ok" : "FAIL") << "] " << c.name << "  lhs=" << num(c.lhs)
       << " rhs=" << num(c.rhs) << " margin=" << num(c.margin) << "\n";
  }
  for (const auto& [k, x] : v.auxiliary) os << "  " << k << " = " << num(x) << "\n";
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
}

Json report_json(const VerificationReport& r) {
  Json j{{"passed", r.passed()},
         {"persymmetric", {{"ok", r.persymmetric.ok}, {"deviation", clean(r.persymmetric.deviation)}}},
         {"nonnegative", {{"ok", r.nonnegative.ok}, {"min_entry", clean(r.nonnegative.deviation)}}},
         {"toeplitz", {{"ok", r.toeplitz.ok}, {"deviation", clean(r.toeplitz.deviation)}}},
         {"charpoly_residual", clean(r.charpoly_residual)},
         {"residual_tolerance", r.residual_tolerance}};
  j["root_match"] = r.root_match ? Json(clean(*r.root_match)) : Json(nullptr);
  return j;
}

void report_text(std::ostream& os, const VerificationReport& r) {
  os << "verification: " << (r.passed() ? "PASS" : "FAIL") << "\n"
     << "  persymmetric: " << (r.persymmetric.ok ? "yes" : "no")
     << " (deviation " << num(r.persymmetric.deviation) << ")\n"
     << "  non-negative: " << (r.nonnegative.ok ? "yes" : "no")
     << " (min entry " << num(r.nonnegative.deviation) << ")\n"
     << "  toeplitz: " << (r.toeplitz.ok ? "yes" : "no") << "\n"
     << "  char-poly residual: " << num(r.charpoly_residual) << " (tolerance "
     << num(r.residual_tolerance) << ")\n";
  if (r.root_match) os << "  root match: " << num(*r.root_match) << "\n";
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(clean(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"n", m.order()}, {"rows", rows}};
}

void matrix_text(std::ostream& os, const Matrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) {
      cells.push_back(num(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  for (std::size_t i = 0; i < m.order(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < m.order(); ++j) {
      const std::string& c = cells[i * m.order() + j];
      os << " " << std::string(width - c.size(), ' ') << c;
    }
    os << "\n";
  }
}

Json set_json(std::string_view op, const FeasibleSet& s) {
  Json iv = Json::array();
  for (const auto& i : s.intervals) iv.push_back(Json::array({clean(i.lower), clean(i.upper)}));
  Json cs = Json::array();
  for (const auto& c : s.constraints) {
    Json cj{{"name", c.name}, {"kind", c.kind}, {"value", clean(c.value)}};
    if (c.kind == "exclude") cj["value2"] = clean(c.value2);
    cj["units"] = c.units;
    cj["binding"] = c.binding;
    cs.push_back(cj);
  }
  return Json{{"operation", op}, {"quantity", to_string(s.quantity)}, {"intervals", iv},
              {"constraints", cs}};
}

void set_text(std::ostream& os, std::string_view op, const FeasibleSet& s) {
  os << op << ": " << to_string(s.quantity) << " in ";
  if (s.empty()) os << "(empty)";
  for (std::size_t k = 0; k < s.intervals.size(); ++k) {
    os << (k ? " U " : "") << "[" << num(s.intervals[k].lower) << ", "
       << num(s.intervals[k].upper) << "]";
  }
  os << "\n";
  for (const auto& c : s.constraints) {
    os << "  " << (c.binding ? "* " : "  ") << c.name << " (" << c.kind << " "
       << num(c.value);
    if (c.kind == "exclude") os << ".." << num(c.value2);
    if (!c.units.empty()) os << " in " << c.units;
    os << ")\n";
  }
}

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidSpectrum:
    case ErrorCode::NotConjugateClosed:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::WrongCardinality:
      return true;
    default:
      return false;
  }
}

int exit_for(ErrorCode c) {
  if (input_error(c)) return kParse;
  if (c == ErrorCode::NotRealizable) return kNotRealizable;
  return kUndecided;
}

CommandOutput error_output(const Error& e, int code) {
  CommandOutput out;
  out.exit_code = code;
  out.json = Json{{"error", to_string(e.code())}, {"message", e.message()}};
  out.text = "error: " + std::string(to_string(e.code())) + ": " + e.message() + "\n";
  return out;
}

void header(Json& j, std::ostringstream& os, const SpectrumDocument& doc) {
  if (!doc.name.empty()) {
    j["name"] = doc.name;
    os << "name: " << doc.name << "\n";
  }
  j["spectrum"] = values_json(doc.values);
  os << "spectrum: " << values_text(doc.values) << "\n";
}

}  // namespace

CommandOutput cmd_check(const SpectrumDocument& doc, const RunConfig& cfg) {
  try {
    const Spectrum spec = doc.spectrum(cfg.tol);
    const std::vector<RealizabilityVerdict> verdicts = check_all(spec, cfg.tol);

    bool iff_yes = false, iff_no = false, sufficient_yes = false;
    for (const auto& v : verdicts) {
      if (!v.applicable) continue;
      if (v.sufficient_only) {
        sufficient_yes = sufficient_yes || v.realizable;
      } else {
        (v.realizable ? iff_yes : iff_no) = true;
      }
    }
    CommandOutput out;
    std::string decision = "undecided";
    out.exit_code = kUndecided;
    if (iff_yes || (!iff_no && sufficient_yes)) {
      decision = "realizable";
      out.exit_code = kOk;
    } else if (iff_no) {
      decision = "not_realizable";
      out.exit_code = kNotRealizable;
    }

    std::ostringstream os;
    header(out.json, os, doc);
    const MomentVector m = moments(spec, spec.size(), cfg.tol);
    Json mj = Json::array();
    for (double s : m.values()) mj.push_back(clean(s));
    out.json["moments"] = mj;
    out.json["decision"] = decision;
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    out.json["verdicts"] = vs;

    os << "moments:";
    for (double s : m.values()) os << " " << num(s);
    os << "\ndecision: " << decision << "\n";
    for (const auto& v : verdicts) verdict_text(os, v);
    out.text = os.str();
    return out;
  } catch (const Error& e) {
    return error_output(e, exit_for(e.code()));
  }
}

CommandOutput cmd_realize(const SpectrumDocument& doc, const RunConfig& cfg) {
  std::optional<Spectrum> spec;
  try {
    spec.emplace(doc.spectrum(cfg.tol));
  } catch (const Error& e) {
    return error_output(e, kParse);
  }
  const std::string& s = cfg.structure;
  ConstructionResult r;
  try {
    if (s == "auto") {
      r = realize_auto(*spec, cfg.tol);
    } else if (s == "case1") {
      r = realize_trace_zero_case(*spec, TemplateId::Case1A, cfg.tol);
    } else if (s == "case2") {
      r = realize_trace_zero_case(*spec, TemplateId::Case2C, cfg.tol);
    } else if (s == "case3") {
      r = realize_trace_zero_case(*spec, TemplateId::Case3D, cfg.tol);
    } else if (s == "toeplitz") {
      r = realize_toeplitz_n5(*spec, cfg.tol);
    } else if (s == "companion") {
      r = realize_companion_persym(*spec, cfg.tol);
    } else if (auto id = template_from_string(s);
               id && *id >= TemplateId::A1 && *id <= TemplateId::A5) {
      r = realize_single_perron_n5(*spec, *id, cfg.tol);
    } else {
      return error_output(Error(ErrorCode::ParseError, "unknown structure '" + s + "'"), kParse);
    }
  } catch (const NoConstructionError& e) {
    CommandOutput out = error_output(e, kNoConstruction);
    Json attempts = Json::array();
    std::string lines;
    for (const auto& a : e.attempts()) {
      attempts.push_back(
          Json{{"method", a.method}, {"error", to_string(a.code)}, {"message", a.message}});
      lines += "  " + a.method + ": " + std::string(to_string(a.code)) + ": " + a.message + "\n";
    }
    out.json["attempts"] = attempts;
    out.text += lines;
    return out;
  } catch (const Error& e) {
    return error_output(e, input_error(e.code()) && e.code() != ErrorCode::WrongCardinality
                               ? kParse
                               : kNoConstruction);
  }

  CommandOutput out;
  out.exit_code = r.ok() ? kOk : kConstructionUnverified;
  std::ostringstream os;
  header(out.json, os, doc);
  out.json["template"] = to_string(r.template_id);
  out.json["method"] = r.method;
  Json params = Json::object();
  for (const auto& [k, v] : r.params.entries()) params[k] = clean(v);
  out.json["parameters"] = params;
  out.json["matrix"] = matrix_json(r.matrix);
  out.json["verification"] = report_json(r.verification);
  if (r.hypotheses_met) out.json["hypotheses_met"] = *r.hypotheses_met;
  if (r.companion_nonnegative) out.json["companion_nonnegative"] = *r.companion_nonnegative;
  out.json["notes"] = r.notes;

  os << "template: " << to_string(r.template_id) << " (" << r.method << ")\nparameters:";
  for (const auto& [k, v] : r.params.entries()) os << " " << k << "=" << num(v);
  os << "\nmatrix:\n";
  matrix_text(os, r.matrix);
  report_text(os, r.verification);
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  out.text = os.str();
  return out;
}

namespace {

struct Shape {
  std::vector<double> reals;             // descending
  std::vector<Complex> uppers;           // positive-imaginary members, input order
};

Shape shape_of(const Spectrum& spec, const Tolerances& tol) {
  Shape s;
  const double eps = spec.pairing_tolerance(tol);
  for (const auto& v : spec) {
    if (std::abs(v.imag()) <= eps) {
      s.reals.push_back(v.real());
    } else if (v.imag() > 0.0) {
      s.uppers.push_back(v);
    }
  }
  std::sort(s.reals.begin(), s.reals.end(), std::greater<>());
  return s;
}

SchemeKind scheme_from(const std::optional<std::string>& name, const Spectrum& spec,
                       const Shape& sh) {
  if (name) {
    for (auto k : {SchemeKind::FourT, SchemeKind::FiveOnePairT, SchemeKind::FiveTwoPairT,
                   SchemeKind::GeneralKthPairT}) {
      if (*name == to_string(k)) return k;
    }
    throw Error(ErrorCode::ParseError, "unknown scheme '" + *name + "'");
  }
  if (spec.size() == 4) return SchemeKind::FourT;
  if (spec.size() == 5 && sh.reals.size() == 3) return SchemeKind::FiveOnePairT;
  if (spec.size() == 5 && sh.reals.size() == 1) return SchemeKind::FiveTwoPairT;
  return SchemeKind::GeneralKthPairT;
}

}  // namespace

CommandOutput cmd_perturb(const SpectrumDocument& doc, const PerturbOptions& opts,
                          const RunConfig& cfg) {
  try {
    const Spectrum spec = doc.spectrum(cfg.tol);
    const Shape sh = shape_of(spec, cfg.tol);
    CommandOutput out;
    std::ostringstream os;
    header(out.json, os, doc);

    if (opts.mode == "bounds") {
      std::vector<std::pair<std::string, FeasibleSet>> sets;
      if (spec.size() == 4 && sh.reals.size() == 2 && sh.uppers.size() == 1) {
        const double a = sh.reals[0], b = sh.reals[1], c = sh.uppers[0].real();
        sets.emplace_back("four_imag_feasible", four_imag_feasible(a, b, c, cfg.tol));
        const double scale = 1.0 + std::abs(a);
        if (std::abs(c) <= cfg.tol.cond * scale && std::abs(a + b) <= cfg.tol.cond * scale) {
          sets.emplace_back("four_zero_real_bound", four_zero_real_bound(a, cfg.tol));
        }
      } else if (spec.size() == 5 && sh.reals.size() == 3 && sh.uppers.size() == 1) {
        sets.emplace_back("five_one_pair_bound",
                          five_one_pair_bound(sh.reals[0], sh.reals[1], sh.reals[2],
                                              sh.uppers[0].real(), cfg.tol));
      } else if (spec.size() == 5 && sh.reals.size() == 1 && sh.uppers.size() == 2) {
        const double d = sh.reals[0], a = sh.uppers[0].real(), c = sh.uppers[1].real();
        sets.emplace_back("five_two_pair_bound", five_two_pair_bound(d, a, c, cfg.tol));
        sets.emplace_back("imag_budget_given_reals", imag_budget_given_reals(d, a, c, cfg.tol));
      } else if (sh.reals.size() == 1 && !sh.uppers.empty()) {
        std::vector<double> a;
        for (const auto& u : sh.uppers) a.push_back(u.real());
        sets.emplace_back("general_pair_bound", general_pair_bound(sh.reals[0], a, cfg.tol));
      } else {
        throw Error(ErrorCode::ShapeMismatch, "no bound applies to this shape");
      }
      Json arr = Json::array();
      for (const auto& [op, set] : sets) {
        arr.push_back(set_json(op, set));
        set_text(os, op, set);
      }
      out.json["bounds"] = arr;
      out.text = os.str();
      return out;
    }
    if (opts.mode != "apply") {
      throw Error(ErrorCode::ParseError, "mode must be bounds or apply");
    }

    const PerturbationScheme scheme{scheme_from(opts.scheme, spec, sh), opts.t, opts.pair};
    const PerturbationResult r = five_perturb(spec, scheme, cfg.tol);
    const std::vector<Complex> perturbed(r.perturbed.begin(), r.perturbed.end());
    out.exit_code = r.verdict.realizable ? kOk : kNotRealizable;
    out.json["scheme"] = to_string(scheme.kind);
    out.json["t"] = scheme.t;
    out.json["index"] = scheme.index;
    out.json["perturbed"] = values_json(perturbed);
    out.json["guaranteed"] = r.guaranteed;
    out.json["s2_shift"] = clean(r.s2_shift);
    out.json["verdict"] = verdict_json(r.verdict);
    out.json["notes"] = r.notes;

    os << "scheme: " << to_string(scheme.kind) << " t=" << num(scheme.t)
       << " index=" << scheme.index << "\nperturbed: " << values_text(perturbed)
       << "\nguaranteed: " << (r.guaranteed ? "yes" : "no") << "\ns2 shift: " << num(r.s2_shift)
       << "\n";
    verdict_text(os, r.verdict);
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    out.text = os.str();
    return out;
  } catch (const Error& e) {
    return error_output(e, exit_for(e.code()));
  }
}

CommandOutput cmd_verify(const Matrix& m, const SpectrumDocument& doc, const RunConfig& cfg) {
  try {
    const Spectrum spec = doc.spectrum(cfg.tol);
    if (m.order() != spec.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix order " + std::to_string(m.order()) + " but " +
                      std::to_string(spec.size()) + " spectrum values");
    }
    const VerificationReport r = verify_realization(m, spec, cfg.tol);
    CommandOutput out;
    out.exit_code = r.passed() ? kOk : kVerifyFailed;
    std::ostringstream os;
    header(out.json, os, doc);
    out.json["verification"] = report_json(r);
    report_text(os, r);
    out.text = os.str();
    return out;
  } catch (const Error& e) {
    return error_output(e, exit_for(e.code()));
  }
}

}  // namespace pniep::cli
