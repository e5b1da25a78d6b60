#include "pniep/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pniep/error.hpp"
#include "pniep/spectral_core.hpp"

namespace pniep {

namespace {

void require_size(const Spectrum& spec, std::size_t n, std::string_view what) {
  if (spec.size() != n) {
    throw Error(ErrorCode::WrongCardinality, std::string(what) + " needs " + std::to_string(n) +
                                                 " values, got " + std::to_string(spec.size()));
  }
}

double absolute_sum(const Spectrum& spec) {
  double sum = 0.0;
  for (const auto& v : spec) sum += std::abs(v);
  return sum;
}

ConditionResult conjugate_closed_condition() {
  // Spectrum construction already enforces closure; reported for completeness.
  return {"conjugate_closed", 0.0, 0.0, 0.0, true};
}

void finalize(RealizabilityVerdict& v) {
  v.realizable = v.applicable && std::all_of(v.conditions.begin(), v.conditions.end(),
                                             [](const auto& c) { return c.satisfied; });
}

// Real non-negative value attaining the spectral radius, if any.
std::optional<double> dominant_real(const Spectrum& spec, const Tolerances& tol) {
  const double radius = spec.spectral_radius();
  const double pt = spec.pairing_tolerance(tol);
  for (const auto& v : spec) {
    if (std::abs(v.imag()) <= pt && v.real() >= -pt && v.real() >= radius - pt) {
      return std::max(v.real(), 0.0);
    }
  }
  return std::nullopt;
}

}  // namespace

ConditionResult evaluate_condition(std::string name, double lhs, double rhs,
                                   const Tolerances& tol) {
  const double margin = lhs - rhs;
  const double slack = tol.cond * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  return {std::move(name), lhs, rhs, margin, margin >= -slack};
}

const ConditionResult* RealizabilityVerdict::find(std::string_view name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

std::optional<double> RealizabilityVerdict::aux(std::string_view name) const {
  for (const auto& [key, value] : auxiliary)
    if (key == name) return value;
  return std::nullopt;
}

bool is_trace_zero(const Spectrum& spec, const Tolerances& tol) {
  double s1 = 0.0;
  for (const auto& v : spec) s1 += v.real();
  return std::abs(s1) <= tol.cond * (1.0 + absolute_sum(spec));
}

std::optional<SinglePerronShape> single_perron_shape(const Spectrum& spec, const Tolerances& tol,
                                                     bool allow_zero_perron) {
  const double eps = tol.cond * (1.0 + spec.spectral_radius());
  const double pt = spec.pairing_tolerance(tol);
  std::optional<std::size_t> candidate;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].real() > eps) {
      if (candidate) return std::nullopt;
      candidate = i;
    }
  }
  if (!candidate && allow_zero_perron) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < spec.size(); ++i)
      if (spec[i].real() > spec[best].real()) best = i;
    if (spec[best].real() >= -eps) candidate = best;
  }
  if (!candidate || std::abs(spec[*candidate].imag()) > pt) return std::nullopt;

  SinglePerronShape shape;
  shape.perron_index = *candidate;
  shape.perron = std::max(spec[*candidate].real(), 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (i != *candidate) shape.others.push_back(spec[i]);
  return shape;
}

RealizabilityVerdict check_n3(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 3, "check_n3");
  const MomentVector m = moments(spec, 3, tol);
  const double s1 = m.at(1), s2 = m.at(2);

  RealizabilityVerdict v;
  v.criterion = criterion::kLoewyLondon;
  v.perron = dominant_real(spec, tol);
  v.applicable = v.perron.has_value();
  if (!v.applicable) v.notes.emplace_back("spectral radius is not attained by a real non-negative value");
  v.conditions.push_back(conjugate_closed_condition());
  v.conditions.push_back(evaluate_condition("s1>=0", s1, 0.0, tol));
  v.conditions.push_back(evaluate_condition("3s2>=s1^2", 3.0 * s2, s1 * s1, tol));
  finalize(v);
  return v;
}

RealizabilityVerdict check_n4_trace_zero(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 4, "check_n4_trace_zero");
  const MomentVector m = moments(spec, 4, tol);
  const double s2 = m.at(2), s3 = m.at(3), s4 = m.at(4);

  RealizabilityVerdict v;
  v.criterion = criterion::kReams;
  v.perron = dominant_real(spec, tol);
  v.applicable = is_trace_zero(spec, tol);
  if (!v.applicable) v.notes.push_back("s1 = " + std::to_string(m.at(1)) + " is not zero");
  v.auxiliary.emplace_back("s1", m.at(1));
  v.conditions.push_back(evaluate_condition("s2>=0", s2, 0.0, tol));
  v.conditions.push_back(evaluate_condition("s3>=0", s3, 0.0, tol));
  v.conditions.push_back(evaluate_condition("4s4>=s2^2", 4.0 * s4, s2 * s2, tol));
  finalize(v);
  return v;
}

RealizabilityVerdict check_n5_trace_zero(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 5, "check_n5_trace_zero");
  const MomentVector m = moments(spec, 5, tol);
  const double s2 = m.at(2), s3 = m.at(3), s4 = m.at(4), s5 = m.at(5);

  RealizabilityVerdict v;
  v.criterion = criterion::kLaffeyMeehan;
  v.perron = dominant_real(spec, tol);
  v.applicable = is_trace_zero(spec, tol);
  if (!v.applicable) v.notes.push_back("s1 = " + std::to_string(m.at(1)) + " is not zero");
  v.auxiliary.emplace_back("s1", m.at(1));
  v.auxiliary.emplace_back("12s5-5s2s3", 12.0 * s5 - 5.0 * s2 * s3);
  v.auxiliary.emplace_back("6s5-5s2s3", 6.0 * s5 - 5.0 * s2 * s3);
  v.auxiliary.emplace_back("2s4-s2^2", 2.0 * s4 - s2 * s2);

  v.conditions.push_back(evaluate_condition("s2>=0", s2, 0.0, tol));
  v.conditions.push_back(evaluate_condition("s3>=0", s3, 0.0, tol));
  v.conditions.push_back(evaluate_condition("s4>=0", s4, 0.0, tol));
  v.conditions.push_back(evaluate_condition("s5>=0", s5, 0.0, tol));
  const ConditionResult radicand = evaluate_condition("4s4>=s2^2", 4.0 * s4, s2 * s2, tol);
  v.conditions.push_back(radicand);
  if (radicand.satisfied) {
    // Tiny negative radicands inside the boundary tolerance are clamped.
    const double root = std::sqrt(std::max(radicand.margin, 0.0));
    v.auxiliary.emplace_back("sqrt(4s4-s2^2)", root);
    v.conditions.push_back(
        evaluate_condition("12s5-5s2s3+5s3*sqrt(4s4-s2^2)>=0", 12.0 * s5 + 5.0 * s3 * root,
                           5.0 * s2 * s3, tol));
  } else {
    v.notes.emplace_back("third condition not evaluated: 4s4 - s2^2 < 0");
  }
  finalize(v);
  return v;
}

RealizabilityVerdict check_single_perron(const Spectrum& spec, const Tolerances& tol) {
  const auto shape = single_perron_shape(spec, tol);
  if (!shape) {
    throw Error(ErrorCode::WrongSignPattern,
                "needs exactly one real value with positive real part and all others with "
                "non-positive real part");
  }
  const MomentVector m = moments(spec, 2, tol);
  const double s1 = m.at(1), s2 = m.at(2);
  const double n = static_cast<double>(spec.size());

  RealizabilityVerdict v;
  v.criterion = criterion::kLaffeySmigoc;
  v.perron = shape->perron;
  v.applicable = true;
  v.conditions.push_back(conjugate_closed_condition());
  v.conditions.push_back(evaluate_condition("s1>=0", s1, 0.0, tol));
  v.conditions.push_back(evaluate_condition("s2>=0", s2, 0.0, tol));
  v.conditions.push_back(evaluate_condition("n*s2>=s1^2", n * s2, s1 * s1, tol));
  finalize(v);
  return v;
}

RealizabilityVerdict check_persym_sufficient_n5(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 5, "check_persym_sufficient_n5");
  const MomentVector m = moments(spec, 5, tol);
  const double s1 = m.at(1), s2 = m.at(2), s3 = m.at(3), s4 = m.at(4), s5 = m.at(5);
  const double s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1, s1_5 = s1_4 * s1;

  RealizabilityVerdict v;
  v.criterion = criterion::kToeplitzSufficient;
  v.sufficient_only = true;
  v.applicable = true;
  v.perron = dominant_real(spec, tol);
  v.conditions.push_back(evaluate_condition("(a) s1>=0", s1, 0.0, tol));
  v.conditions.push_back(evaluate_condition("(b) 5s2-s1^2>=0", 5.0 * s2, s1_2, tol));
  v.conditions.push_back(evaluate_condition("(c) 2s1^3-15s1s2+25s3>=0",
                                            2.0 * s1_3 + 25.0 * s3, 15.0 * s1 * s2, tol));
  v.conditions.push_back(evaluate_condition(
      "(d) 2000s4+730s1^2s2-73s1^4-1600s1s3-625s2^2>=0", 2000.0 * s4 + 730.0 * s1_2 * s2,
      73.0 * s1_4 + 1600.0 * s1 * s3 + 625.0 * s2 * s2, tol));
  v.conditions.push_back(evaluate_condition(
      "(e) 394s1^5-4925s1^3s2+12125s1^2s3+9375s1s2^2-22500s1s4-15625s2s3+22500s5>=0",
      394.0 * s1_5 + 12125.0 * s1_2 * s3 + 9375.0 * s1 * s2 * s2 + 22500.0 * s5,
      4925.0 * s1_3 * s2 + 22500.0 * s1 * s4 + 15625.0 * s2 * s3, tol));
  finalize(v);
  return v;
}

RealizabilityVerdict check_julio_soto_sufficient(const Spectrum& spec, const Tolerances& tol) {
  require_size(spec, 5, "check_julio_soto_sufficient");
  if (!is_trace_zero(spec, tol)) throw Error(ErrorCode::NotTraceZero, "s1 must be zero");
  const RealizabilityVerdict base = check_n5_trace_zero(spec, tol);
  const MomentVector m = moments(spec, 5, tol);

  RealizabilityVerdict v;
  v.criterion = criterion::kJulioSoto;
  v.sufficient_only = true;
  v.perron = base.perron;
  v.applicable = base.realizable;
  if (!v.applicable) v.notes.emplace_back("spectrum fails the trace-zero 5-element criterion");
  v.conditions.push_back(
      evaluate_condition("12s5-5s2s3>=0", 12.0 * m.at(5), 5.0 * m.at(2) * m.at(3), tol));
  finalize(v);
  return v;
}

bool lemma_coefficient_check(double t, const Spectrum& others, const Tolerances& tol) {
  if (t < 0.0) throw Error(ErrorCode::PreconditionFailed, "t must be non-negative");
  const double eps = tol.cond * (1.0 + others.spectral_radius());
  Complex sum = 0.0;
  for (const auto& v : others) {
    if (v.real() > eps) {
      throw Error(ErrorCode::WrongSignPattern, "lemma values must have non-positive real part");
    }
    sum += v;
  }
  const double rho = 2.0 * t - sum.real();

  std::vector<Complex> all{Complex(rho, 0.0)};
  all.insert(all.end(), others.begin(), others.end());
  const Spectrum full(all, tol);
  const MonicPolynomial f = poly_from_roots(full, tol);
  const std::size_t n = f.degree();

  // Magnitude of each coefficient's expansion, prod (x + |root|).
  std::vector<double> scale{1.0};
  for (const auto& r : full) {
    std::vector<double> next(scale.size() + 1, 0.0);
    for (std::size_t i = 0; i < scale.size(); ++i) {
      next[i + 1] += scale[i];
      next[i] += std::abs(r) * scale[i];
    }
    scale = std::move(next);
  }
  auto non_positive = [&](std::size_t j) {
    return f.coeff(n - j) <= tol.cond * (1.0 + scale[n - j]);
  };
  if (n < 2 || !non_positive(2)) return true;
  for (std::size_t j = 3; j <= n; ++j)
    if (!non_positive(j)) return false;
  return true;
}

std::vector<RealizabilityVerdict> check_all(const Spectrum& spec, const Tolerances& tol) {
  std::vector<RealizabilityVerdict> out;
  const std::size_t n = spec.size();
  if (n == 3) out.push_back(check_n3(spec, tol));
  if (n == 4 && is_trace_zero(spec, tol)) out.push_back(check_n4_trace_zero(spec, tol));
  if (n == 5 && is_trace_zero(spec, tol)) {
    out.push_back(check_n5_trace_zero(spec, tol));
    out.push_back(check_julio_soto_sufficient(spec, tol));
  }
  if (single_perron_shape(spec, tol)) out.push_back(check_single_perron(spec, tol));
  if (n == 5) out.push_back(check_persym_sufficient_n5(spec, tol));
  return out;
}

}  // namespace pniep
