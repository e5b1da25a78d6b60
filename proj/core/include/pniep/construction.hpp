#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pniep/matrix.hpp"
#include "pniep/spectrum.hpp"
#include "pniep/templates.hpp"
#include "pniep/tolerances.hpp"
#include "pniep/verification.hpp"

namespace pniep {

struct ConstructionResult {
  TemplateId template_id = TemplateId::Case1A;
  std::string method;
  ParameterAssignment params;
  Matrix matrix;
  VerificationReport verification;
  std::vector<std::string> notes;
  /// Companion route only: whether s1 >= 0 and s2 - s1^2 >= 0 held and whether
  /// the companion row was non-negative.
  std::optional<bool> hypotheses_met;
  std::optional<bool> companion_nonnegative;

  bool ok() const noexcept { return verification.passed(); }
};

/// Trace-zero n = 5. Case 1 when 6s5 - 5s2s3 >= 0, else Case 2 when
/// 2s4 - s2^2 >= 0 (B if s5 = 0, C otherwise), else Case 3.
///
/// Case 2(ii) divides by s3 and s5. Under Case 2's entry condition a
/// realizable list with s2 = 0 or s3 = 0 would need s5 < 0, so only s5 = 0
/// can occur and it is sent to Case 2(i). Case 2(i) with s2 = 0 falls back
/// to Case 1.
ConstructionResult realize_trace_zero_n5(const Spectrum& spec, const Tolerances& tol = {});

/// Forces one case: Case1A, Case2B, Case2C or Case3D (Case2C with s5 = 0
/// degrades to Case2B). Outside its region a case fails with
/// RadicandNegative or NonNegativityViolated.
ConstructionResult realize_trace_zero_case(const Spectrum& spec, TemplateId which,
                                           const Tolerances& tol = {});

/// One Perron value, the rest in the closed left half-plane, s1 >= 0 and
/// s2 - s1^2 >= 0. Parameters come from matching the structure's
/// characteristic polynomial against the spectrum's, by back-substitution.
ConstructionResult realize_single_perron_n5(const Spectrum& spec,
                                            TemplateId structure = TemplateId::A1,
                                            const Tolerances& tol = {});

/// (t, p, q, r, s) of the 5x5 Toeplitz persymmetric form; no sign checks.
ParameterAssignment toeplitz5_parameters(const Spectrum& spec, const Tolerances& tol = {});

/// Requires the sufficient conditions (a)-(e); throws
/// SufficientConditionFailed naming the first that fails.
ConstructionResult realize_toeplitz_n5(const Spectrum& spec, const Tolerances& tol = {});

/// Any order. Builds the P structure whose characteristic polynomial is the
/// spectrum's, solving p1..p{n-1} one at a time: the coefficient of
/// z^{n-k} is affine in p{k-1} once the earlier ones are fixed, so two
/// evaluations give slope and intercept.
///
/// Sign pattern and s1 >= 0 are required. With s2 - s1^2 < 0 the route still
/// runs and succeeds only if P comes out non-negative (hypotheses_met=false).
ConstructionResult realize_companion_persym(const Spectrum& spec, const Tolerances& tol = {});

/// Trace-zero cases, Toeplitz, A1, companion, in that order. Returns the
/// first verified result. If routes ran but none verified, returns the first
/// unverified one (check ok()). Throws NoConstructionError with every attempt
/// when no route produced a matrix.
ConstructionResult realize_auto(const Spectrum& spec, const Tolerances& tol = {});

}  // namespace pniep
