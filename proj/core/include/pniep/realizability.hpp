#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pniep/spectrum.hpp"
#include "pniep/tolerances.hpp"

namespace pniep {

/// One displayed inequality `lhs >= rhs`, evaluated.
///
/// margin = lhs - rhs; satisfied iff margin >= -tol.cond * (1 + max(|lhs|, |rhs|)).
struct ConditionResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool satisfied = false;
};

ConditionResult evaluate_condition(std::string name, double lhs, double rhs,
                                   const Tolerances& tol = {});

struct RealizabilityVerdict {
  std::string criterion;
  std::vector<ConditionResult> conditions;
  bool applicable = false;
  bool realizable = false;
  /// Passing proves realizability; failing decides nothing.
  bool sufficient_only = false;
  std::optional<double> perron;
  /// Named derived quantities reported alongside the conditions.
  std::vector<std::pair<std::string, double>> auxiliary;
  std::vector<std::string> notes;

  const ConditionResult* find(std::string_view name) const;
  std::optional<double> aux(std::string_view name) const;
};

namespace criterion {
inline constexpr std::string_view kLoewyLondon = "loewy_london_n3";
inline constexpr std::string_view kReams = "reams_n4_trace_zero";
inline constexpr std::string_view kLaffeyMeehan = "laffey_meehan_n5_trace_zero";
inline constexpr std::string_view kLaffeySmigoc = "laffey_smigoc_single_perron";
inline constexpr std::string_view kToeplitzSufficient = "persymmetric_toeplitz_n5";
inline constexpr std::string_view kJulioSoto = "julio_soto_n5_trace_zero";
}  // namespace criterion

/// A spectrum with one designated Perron value and every other value in the
/// closed left half-plane.
struct SinglePerronShape {
  std::size_t perron_index = 0;
  double perron = 0.0;
  std::vector<Complex> others;  ///< remaining values, input order
};

/// Finds the single-Perron sign pattern: exactly one value with positive real
/// part, which must be real. With `allow_zero_perron`, a spectrum with no
/// positive real part may designate a real value >= 0 of largest real part
/// (e.g. the all-zero spectrum). Returns nullopt when the pattern fails.
std::optional<SinglePerronShape> single_perron_shape(const Spectrum& spec,
                                                     const Tolerances& tol = {},
                                                     bool allow_zero_perron = false);

/// True iff |s_1| is within tol.cond of zero, scaled by 1 + sum |d_i|.
bool is_trace_zero(const Spectrum& spec, const Tolerances& tol = {});

/// n = 3, iff: s_1 >= 0 and s_1^2 <= 3 s_2, with Perron dominance as the
/// applicability hypothesis.
RealizabilityVerdict check_n3(const Spectrum& spec, const Tolerances& tol = {});

/// n = 4 with s_1 = 0, iff: s_2 >= 0, s_3 >= 0, 4 s_4 >= s_2^2.
RealizabilityVerdict check_n4_trace_zero(const Spectrum& spec, const Tolerances& tol = {});

/// n = 5 with s_1 = 0, iff: s_k >= 0 (k = 2..5), 4 s_4 >= s_2^2 and
/// 12 s_5 - 5 s_2 s_3 + 5 s_3 sqrt(4 s_4 - s_2^2) >= 0.
///
/// Auxiliary values "12s5-5s2s3", "6s5-5s2s3" and "2s4-s2^2" drive the case
/// split of the trace-zero construction.
RealizabilityVerdict check_n5_trace_zero(const Spectrum& spec, const Tolerances& tol = {});

/// One Perron value, the rest with non-positive real part, iff:
/// s_1 >= 0, s_2 >= 0, s_1^2 <= n s_2. Throws WrongSignPattern otherwise.
RealizabilityVerdict check_single_perron(const Spectrum& spec, const Tolerances& tol = {});

/// Sufficient conditions (a)-(e) for a 5x5 persymmetric Toeplitz realization.
RealizabilityVerdict check_persym_sufficient_n5(const Spectrum& spec, const Tolerances& tol = {});

/// Sufficient condition 12 s_5 - 5 s_2 s_3 >= 0 for a realizable trace-zero
/// 5-list. Throws NotTraceZero when s_1 != 0.
RealizabilityVerdict check_julio_soto_sufficient(const Spectrum& spec, const Tolerances& tol = {});

/// Coefficient-sign lemma for f(x) = (x - rho) prod (x - d_j), rho = 2t - sum d_j.
///
/// Writing f = x^n - 2t x^{n-1} + b_2 x^{n-2} + ... + b_n, returns true iff
/// (b_2 <= 0 implies b_j <= 0 for all j >= 3), each comparison within a
/// tolerance scaled by the coefficient's magnitude. `others` must lie in the
/// closed left half-plane (WrongSignPattern) and t >= 0 (PreconditionFailed).
bool lemma_coefficient_check(double t, const Spectrum& others, const Tolerances& tol = {});

/// Every criterion whose cardinality and shape hypotheses fit `spec`.
std::vector<RealizabilityVerdict> check_all(const Spectrum& spec, const Tolerances& tol = {});

}  // namespace pniep
