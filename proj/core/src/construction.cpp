#include "pniep/construction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pniep/error.hpp"
#include "pniep/realizability.hpp"
#include "pniep/spectral_core.hpp"
#include "wide.hpp"

namespace pniep {

namespace {

double scale_of(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return 1.0 + m;
}

double checked_sqrt(double x, double scale, const Tolerances& tol, const char* what) {
  if (x >= 0.0) return std::sqrt(x);
  if (x >= -tol.cond * scale) return 0.0;
  throw Error(ErrorCode::RadicandNegative,
              std::string("negative radicand in ") + what + ": " + std::to_string(x));
}

double checked_div(double num, double den, double scale, const Tolerances& tol,
                   const char* what) {
  if (std::abs(den) <= tol.cond * scale) {
    throw Error(ErrorCode::DivisionDegenerate, std::string("zero denominator ") + what);
  }
  return num / den;
}

// Clamps tiny negatives to zero; anything below the tolerance is an error.
void clamp_params(ParameterAssignment& params, const Tolerances& tol,
                  std::vector<std::string>& notes) {
  double biggest = 0.0;
  for (const auto& [name, value] : params.entries()) biggest = std::max(biggest, std::abs(value));
  const double eps = tol.cond * (1.0 + biggest);
  std::vector<std::pair<std::string, double>> updates;
  for (const auto& [name, value] : params.entries()) {
    if (value == 0.0) {
      updates.emplace_back(name, 0.0);  // drops the sign of -0
      continue;
    }
    if (value > 0.0) continue;
    if (value < -eps) {
      throw Error(ErrorCode::NonNegativityViolated,
                  "parameter " + name + " = " + std::to_string(value) + " is negative");
    }
    updates.emplace_back(name, 0.0);
  }
  for (const auto& [name, value] : updates) {
    if (params.get(name) != 0.0) notes.push_back("clamped " + name + " to 0");
    params.set(name, value);
  }
}

ConstructionResult finish(TemplateId id, std::string method, ParameterAssignment params,
                          const Spectrum& spec, const Tolerances& tol,
                          std::vector<std::string> notes = {}, std::size_t n = 5) {
  clamp_params(params, tol, notes);
  ConstructionResult r;
  r.template_id = id;
  r.method = std::move(method);
  r.matrix = instantiate(make_template(id, n), params);
  r.params = std::move(params);
  r.verification = verify_realization(r.matrix, spec, tol);
  r.notes = std::move(notes);
  return r;
}

void require_size(const Spectrum& spec, std::size_t n, const char* op) {
  if (spec.size() != n) {
    throw Error(ErrorCode::WrongCardinality, std::string(op) + " needs exactly " +
                                                 std::to_string(n) + " values, got " +
                                                 std::to_string(spec.size()));
  }
}

ParameterAssignment case1(double s2, double s3, double s4, double s5, const Tolerances& tol) {
  const double rad = 30.0 * (6.0 * s5 - 5.0 * s2 * s3);
  const double b = checked_sqrt(rad, 30.0 * scale_of({6.0 * s5, 5.0 * s2 * s3}), tol, "Case 1 b");
  return {{"a", s2 / 4.0}, {"b", b / 30.0}, {"c", s3 / 6.0}, {"d", (4.0 * s4 - s2 * s2) / 16.0}};
}

ParameterAssignment case2i(double s2, double s3, double s4, const Tolerances& tol) {
  const double num = 2.0 * s4 - s2 * s2;
  const double ratio = checked_div(num, 4.0 * s2, scale_of({s2}), tol, "s2 in Case 2(i)");
  const double a = checked_sqrt(ratio, scale_of({ratio}), tol, "Case 2(i) a");
  const double b = checked_sqrt(s3 / 3.0, scale_of({s3}), tol, "Case 2(i) b");
  return {{"a", a}, {"b", b}, {"c", s2 / 2.0}};
}

ParameterAssignment case2ii(double s2, double s3, double s4, double s5, const Tolerances& tol) {
  const double g = 5.0 * s2 * s3 - 6.0 * s5;  // > 0 in Case 2
  const double gscale = scale_of({5.0 * s2 * s3, 6.0 * s5});
  const double a = checked_div(3.0 * s5, 5.0 * s3, scale_of({s3}), tol, "s3 in Case 2(ii)");
  const double num = 12.0 * s5 * g + 25.0 * s3 * s3 * (2.0 * s4 - s2 * s2);
  const double den = s5 * g;
  const double ratio = checked_div(num, den, scale_of({s5}) * gscale, tol, "s5(5s2s3-6s5)");
  const double b = std::sqrt(3.0) / 6.0 * checked_sqrt(ratio, scale_of({ratio}), tol, "Case 2(ii) b");
  const double c = std::sqrt(5.0) * s3 / (3.0 * checked_sqrt(s5, scale_of({s5}), tol, "s5"));
  const double d = g / (10.0 * s3);
  return {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
}

ParameterAssignment case3(double s2, double s3, double s4, double s5, const Tolerances& tol) {
  const double root = checked_sqrt(4.0 * s4 - s2 * s2, scale_of({4.0 * s4, s2 * s2}), tol,
                                   "4s4-s2^2");
  const double inner = 12.0 * s5 - 5.0 * s2 * s3 + 5.0 * s3 * root;
  const double b = checked_sqrt(inner / 60.0,
                                scale_of({12.0 * s5, 5.0 * s2 * s3, 5.0 * s3 * root}) / 60.0, tol,
                                "Case 3 b");
  return {{"a", s3 / 3.0}, {"b", b}, {"c", (s2 - root) / 8.0}, {"d", (s2 + root) / 4.0}};
}

// Back-substitution from z^5 + c4 z^4 + ... + c0 into each structure's
// characteristic polynomial.
ParameterAssignment solve_structure(TemplateId id, const MonicPolynomial& f) {
  const double c4 = f.coeff(4), c3 = f.coeff(3), c2 = f.coeff(2), c1 = f.coeff(1),
               c0 = f.coeff(0);
  const double t = -c4;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0;
  switch (id) {
    case TemplateId::A1:  // z^5 - tz^4 - 2pz^3 + (2pt-2q)z^2 + (p^2-2r)z - p^2t + 2pq - s
      p = -c3 / 2.0;
      q = (2.0 * p * t - c2) / 2.0;
      r = (p * p - c1) / 2.0;
      s = -p * p * t + 2.0 * p * q - c0;
      break;
    case TemplateId::A2:  // z^5 - tz^4 - 2pz^3 - 2qz^2 - 2rz - s
      p = -c3 / 2.0;
      q = -c2 / 2.0;
      r = -c1 / 2.0;
      s = -c0;
      break;
    case TemplateId::A3:  // as A1 with (2pt-3q) z^2
      p = -c3 / 2.0;
      q = (2.0 * p * t - c2) / 3.0;
      r = (p * p - c1) / 2.0;
      s = -p * p * t + 2.0 * p * q - c0;
      break;
    case TemplateId::A4:  // z^5 - tz^4 - 4pz^3 + (2pt-3q)z^2 + (3p^2-2r)z - p^2t + 2pq - s
      p = -c3 / 4.0;
      q = (2.0 * p * t - c2) / 3.0;
      r = (3.0 * p * p - c1) / 2.0;
      s = -p * p * t + 2.0 * p * q - c0;
      break;
    case TemplateId::A5:  // z^5 - tz^4 - 2pz^3 - qz^2 - 2rz - s
      p = -c3 / 2.0;
      q = -c2;
      r = -c1 / 2.0;
      s = -c0;
      break;
    default:
      throw Error(ErrorCode::PreconditionFailed,
                  "structure must be one of A1..A5, got " + std::string(to_string(id)));
  }
  return {{"p", p}, {"q", q}, {"r", r}, {"s", s}, {"t", t}};
}

struct PerronHypotheses {
  SinglePerronShape shape;
  ConditionResult trace;
  ConditionResult second;
};

PerronHypotheses perron_hypotheses(const Spectrum& spec, const Tolerances& tol) {
  auto shape = single_perron_shape(spec, tol, /*allow_zero_perron=*/true);
  if (!shape) {
    throw Error(ErrorCode::HypothesisFailed,
                "need exactly one real Perron value and the rest with non-positive real part");
  }
  const MomentVector m = moments(spec, std::min<std::size_t>(2, spec.size()), tol);
  const double s1 = m.at(1);
  const double s2 = spec.size() >= 2 ? m.at(2) : s1 * s1;
  return {*shape, evaluate_condition("s1>=0", s1, 0.0, tol),
          evaluate_condition("s2-s1^2>=0", s2, s1 * s1, tol)};
}

}  // namespace

ConstructionResult realize_trace_zero_n5(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 5, "realize_trace_zero_n5");
  if (!is_trace_zero(spec, tol)) throw Error(ErrorCode::NotTraceZero, "s1 must be zero");
  const RealizabilityVerdict verdict = check_n5_trace_zero(spec, tol);
  if (!verdict.realizable) {
    std::string failed;
    for (const auto& c : verdict.conditions)
      if (!c.satisfied) failed += (failed.empty() ? "" : ", ") + c.name;
    throw Error(ErrorCode::NotRealizable, "trace-zero criterion fails: " + failed);
  }
  const MomentVector m = moments(spec, 5, tol);
  const double s2 = m.at(2), s3 = m.at(3), s4 = m.at(4), s5 = m.at(5);

  const bool case1_ok = evaluate_condition("6s5>=5s2s3", 6.0 * s5, 5.0 * s2 * s3, tol).satisfied;
  const bool case2_ok = evaluate_condition("2s4>=s2^2", 2.0 * s4, s2 * s2, tol).satisfied;
  const bool s5_zero = std::abs(s5) <= tol.cond * scale_of({s5});

  std::vector<std::string> notes;
  if (case1_ok) return finish(TemplateId::Case1A, "case1", case1(s2, s3, s4, s5, tol), spec, tol);
  if (!case2_ok) return finish(TemplateId::Case3D, "case3", case3(s2, s3, s4, s5, tol), spec, tol);

  if (!s5_zero) {
    try {
      return finish(TemplateId::Case2C, "case2ii", case2ii(s2, s3, s4, s5, tol), spec, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionDegenerate) throw;
      notes.push_back("Case 2(ii) degenerate (" + e.message() + "), using Case 2(i)");
    }
  }
  try {
    return finish(TemplateId::Case2B, "case2i", case2i(s2, s3, s4, tol), spec, tol, notes);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DivisionDegenerate) throw;
    notes.push_back("Case 2(i) degenerate (" + e.message() + "), using Case 1");
  }
  return finish(TemplateId::Case1A, "case1", case1(s2, s3, s4, s5, tol), spec, tol, notes);
}

ConstructionResult realize_trace_zero_case(const Spectrum& spec, TemplateId which,
                                           const Tolerances& tol) {
  require_size(spec, 5, "realize_trace_zero_case");
  if (!is_trace_zero(spec, tol)) throw Error(ErrorCode::NotTraceZero, "s1 must be zero");
  const MomentVector m = moments(spec, 5, tol);
  const double s2 = m.at(2), s3 = m.at(3), s4 = m.at(4), s5 = m.at(5);
  switch (which) {
    case TemplateId::Case1A:
      return finish(which, "case1", case1(s2, s3, s4, s5, tol), spec, tol);
    case TemplateId::Case2B:
      return finish(which, "case2i", case2i(s2, s3, s4, tol), spec, tol);
    case TemplateId::Case2C:
      if (std::abs(s5) <= tol.cond * scale_of({s5})) {
        return finish(TemplateId::Case2B, "case2i", case2i(s2, s3, s4, tol), spec, tol,
                      {"s5 = 0: Case 2(i) used"});
      }
      return finish(which, "case2ii", case2ii(s2, s3, s4, s5, tol), spec, tol);
    case TemplateId::Case3D:
      return finish(which, "case3", case3(s2, s3, s4, s5, tol), spec, tol);
    default:
      throw Error(ErrorCode::PreconditionFailed,
                  "not a trace-zero case: " + std::string(to_string(which)));
  }
}

ConstructionResult realize_single_perron_n5(const Spectrum& spec, TemplateId structure,
                                            const Tolerances& tol) {
  require_size(spec, 5, "realize_single_perron_n5");
  const PerronHypotheses h = perron_hypotheses(spec, tol);
  if (!h.trace.satisfied || !h.second.satisfied) {
    const auto& bad = h.trace.satisfied ? h.second : h.trace;
    throw Error(ErrorCode::HypothesisFailed,
                bad.name + " fails (margin " + std::to_string(bad.margin) + ")");
  }
  const MonicPolynomial f = poly_from_roots(spec, tol);
  ParameterAssignment params = solve_structure(structure, f);
  std::vector<std::string> notes;
  if (structure != TemplateId::A4 && is_trace_zero(spec, tol)) {
    notes.emplace_back("s1 = 0: structure A4 would also give a Toeplitz realization");
  }
  return finish(structure, "single_perron", std::move(params), spec, tol, std::move(notes));
}

ParameterAssignment toeplitz5_parameters(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 5, "toeplitz5_parameters");
  const MomentVector m = moments(spec, 5, tol);
  const double s1 = m.at(1), s2 = m.at(2), s3 = m.at(3), s4 = m.at(4), s5 = m.at(5);
  const double s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1, s1_5 = s1_4 * s1;
  return {
      {"t", s1 / 5.0},
      {"p", (5.0 * s2 - s1_2) / 40.0},
      {"q", (2.0 * s1_3 - 15.0 * s1 * s2 + 25.0 * s3) / 225.0},
      {"r", (2000.0 * s4 + 730.0 * s1_2 * s2 - 73.0 * s1_4 - 1600.0 * s1 * s3 - 625.0 * s2 * s2) /
                16000.0},
      {"s", (394.0 * s1_5 - 4925.0 * s1_3 * s2 + 12125.0 * s1_2 * s3 + 9375.0 * s1 * s2 * s2 -
             22500.0 * s1 * s4 - 15625.0 * s2 * s3 + 22500.0 * s5) /
                112500.0},
  };
}

ConstructionResult realize_toeplitz_n5(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 5, "realize_toeplitz_n5");
  const RealizabilityVerdict verdict = check_persym_sufficient_n5(spec, tol);
  for (const auto& c : verdict.conditions) {
    if (!c.satisfied) {
      throw Error(ErrorCode::SufficientConditionFailed,
                  "condition " + c.name + " fails (margin " + std::to_string(c.margin) + ")");
    }
  }
  return finish(TemplateId::Toeplitz5, "toeplitz", toeplitz5_parameters(spec, tol), spec, tol);
}

ConstructionResult realize_companion_persym(const Spectrum& spec, const Tolerances& tol) {
  const std::size_t n = spec.size();
  const PerronHypotheses h = perron_hypotheses(spec, tol);
  if (!h.trace.satisfied) {
    throw Error(ErrorCode::HypothesisFailed, "s1>=0 fails (margin " +
                                                 std::to_string(h.trace.margin) + ")");
  }
  const MonicPolynomial f = poly_from_roots(spec, tol);

  // Companion row entries are -c_i; non-negative iff every c_i <= 0.
  const double ceps = tol.cond * (1.0 + f.max_abs_coeff());
  const bool companion_ok =
      std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](double c) { return c <= ceps; });
  const bool hypotheses = h.second.satisfied;
  if (hypotheses && !companion_ok) {
    throw Error(ErrorCode::CompanionNegative,
                "companion matrix has a negative entry although the hypotheses hold");
  }

  std::vector<std::string> notes;
  if (!hypotheses) {
    notes.push_back("s2-s1^2 < 0: the non-negativity guarantee does not apply");
  }

  const StructureTemplate tpl = make_template(TemplateId::SotoP, n);
  ParameterAssignment params;
  for (std::size_t k = 0; k < n; ++k) params.set("p" + std::to_string(k), 0.0);
  params.set("p0", h.trace.lhs / static_cast<double>(n));

  for (std::size_t k = 2; k <= n; ++k) {
    const std::string name = "p" + std::to_string(k - 1);
    const std::size_t idx = n - k;
    // Evaluated without rounding: the slope is small next to the coefficients.
    params.set(name, 0.0);
    const detail::Wide v0 = detail::wide_char_poly(instantiate(tpl, params))[idx];
    params.set(name, 1.0);
    const detail::Wide v1 = detail::wide_char_poly(instantiate(tpl, params))[idx];
    const double slope = static_cast<double>(v1 - v0);
    if (std::abs(slope) < tol.slope) {
      throw Error(ErrorCode::MatchingDegenerate,
                  "slope " + std::to_string(slope) + " for " + name + " is below tolerance");
    }
    params.set(name, static_cast<double>((detail::Wide(f.coeff(idx)) - v0) / (v1 - v0)));
  }

  ConstructionResult r =
      finish(TemplateId::SotoP, "companion", std::move(params), spec, tol, std::move(notes), n);
  r.hypotheses_met = hypotheses;
  r.companion_nonnegative = companion_ok;
  return r;
}

ConstructionResult realize_auto(const Spectrum& spec, const Tolerances& tol) {
  std::vector<Attempt> attempts;
  std::optional<ConstructionResult> unverified;

  auto attempt = [&](const char* method, auto&& route) -> std::optional<ConstructionResult> {
    try {
      ConstructionResult r = route();
      if (r.ok()) return r;
      attempts.push_back({method, ErrorCode::NonNegativityViolated,
                          "constructed matrix failed verification"});
      if (!unverified) unverified = std::move(r);
    } catch (const NoConstructionError&) {
      throw;
    } catch (const Error& e) {
      attempts.push_back({method, e.code(), e.message()});
    }
    return std::nullopt;
  };

  const bool five = spec.size() == 5;
  if (five && is_trace_zero(spec, tol)) {
    if (auto r = attempt("trace_zero_n5", [&] { return realize_trace_zero_n5(spec, tol); }))
      return *r;
  }
  if (five) {
    if (auto r = attempt("toeplitz_n5", [&] { return realize_toeplitz_n5(spec, tol); })) return *r;
    if (auto r = attempt("single_perron_n5",
                         [&] { return realize_single_perron_n5(spec, TemplateId::A1, tol); }))
      return *r;
  }
  if (auto r = attempt("companion_persym", [&] { return realize_companion_persym(spec, tol); }))
    return *r;
  if (unverified) {
    unverified->notes.push_back("no route produced a verified matrix");
    return *unverified;
  }
  throw NoConstructionError(std::move(attempts));
}

}  // namespace pniep
