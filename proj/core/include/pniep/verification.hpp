#pragma once

#include <optional>

#include "pniep/matrix.hpp"
#include "pniep/spectrum.hpp"
#include "pniep/tolerances.hpp"

namespace pniep {

struct StructureCheck {
  bool ok = false;
  double deviation = 0.0;  ///< max deviation, or most negative entry for non-negativity
};

struct VerificationReport {
  StructureCheck persymmetric;
  StructureCheck nonnegative;
  StructureCheck toeplitz;
  double charpoly_residual = 0.0;
  std::optional<double> root_match;  ///< max pairing distance when the root oracle ran
  double residual_tolerance = 0.0;

  bool passed() const noexcept {
    return persymmetric.ok && nonnegative.ok && charpoly_residual <= residual_tolerance;
  }
};

/// Characteristic polynomial from tr(M^k), k = 1..n, fed through Newton's
/// identities.
MonicPolynomial char_poly(const Matrix& m);

/// tr(M), tr(M^2), ..., tr(M^n).
MomentVector power_traces(const Matrix& m);

/// max |m(i,j) - m(n-1-j, n-1-i)|, accepted when <= tol.
StructureCheck is_persymmetric(const Matrix& m, double tol);
/// Most negative entry (0 when none), accepted when >= -tol.
StructureCheck is_nonnegative(const Matrix& m, double tol);
/// max |m(i,j) - m(i+1,j+1)|, accepted when <= tol.
StructureCheck is_toeplitz(const Matrix& m, double tol);

/// Full independent check of a claimed realizing matrix.
///
/// Structural tolerances are `tol.cond * (1 + max|entry|)`. The char-poly
/// residual is max |char(M)_i - target_i| / (1 + max |target_i|) against
/// poly_from_roots(spec); it passes at `tol.root`. The root oracle pairs each
/// spectrum value with its nearest unused computed root.
VerificationReport verify_realization(const Matrix& m, const Spectrum& spec,
                                      const Tolerances& tol = {});

/// Same residual measure used by verify_realization.
double charpoly_residual(const MonicPolynomial& actual, const MonicPolynomial& target);

}  // namespace pniep
