#pragma once

#include <cstddef>

#include "pniep/spectrum.hpp"
#include "pniep/tolerances.hpp"

namespace pniep {

/// Real power sums s_1..s_{k_max} of `spec`.
///
/// The imaginary part of each complex sum must stay below
/// `tol.im * (1 + sum |d_i|^k)`; otherwise throws ImaginaryResidue.
MomentVector moments(const Spectrum& spec, std::size_t k_max, const Tolerances& tol = {});

/// Expands prod (z - d_i). Throws ImaginaryResidue if a coefficient keeps an
/// imaginary part beyond `tol.im` relative to the coefficient magnitude.
MonicPolynomial poly_from_roots(const Spectrum& spec, const Tolerances& tol = {});

/// Newton's identities, k c_{n-k} + s_1 c_{n-k+1} + ... + s_k c_n = 0 with
/// c_n = 1, solved for the coefficients.
MonicPolynomial coeffs_from_moments(const MomentVector& m);

/// Same recurrence solved for s_1..s_n.
MomentVector moments_from_coeffs(const MonicPolynomial& p);

/// All roots of `p` with multiplicity (Aberth-Ehrlich iteration).
///
/// Starts from `degree` equispaced points on the circle of radius
/// 1 + max|c_i|, rotated by a fixed irrational angle. Returned roots are
/// paired into exact conjugates. Throws NoConvergence when a root misses
/// |p(r)| <= tol.root * max(1, sum |c_i| |r|^i + |r|^n) after
/// `tol.max_iterations` sweeps.
Spectrum roots(const MonicPolynomial& p, const Tolerances& tol = {});

/// Backward-error scale of evaluating p at z: sum |c_i||z|^i + |z|^n.
double evaluation_scale(const MonicPolynomial& p, Complex z) noexcept;

}  // namespace pniep
