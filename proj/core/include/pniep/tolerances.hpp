#pragma once

#include <cstddef>

namespace pniep {

/// Numerical tolerances and caps shared by every routine.
///
/// All comparisons are scaled: a tolerance `tol` applied to a quantity of
/// magnitude `m` accepts deviations up to `tol * (1 + m)` unless noted.
struct Tolerances {
  double conj = 1e-9;    ///< conjugate pairing, scaled by max(1, spectral radius)
  double cond = 1e-9;    ///< inequality boundary tolerance
  double im = 1e-9;      ///< imaginary residue of power sums / coefficients
  double round = 1e-9;   ///< Newton round-trip relative error
  double root = 1e-8;    ///< root residual and char-poly residual
  double slope = 1e-12;  ///< minimum |slope| in sequential affine matching
  int max_iterations = 200;   ///< root-finder iteration cap
  std::size_t max_order = 64; ///< largest accepted spectrum / matrix order
};

}  // namespace pniep
