#pragma once

#include <vector>

#include "pniep/matrix.hpp"

namespace pniep::detail {

// Newton's identities cancel heavily for high degree; carry extra precision.
#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

/// tr(M^k) for k = 1..n.
std::vector<Wide> wide_power_traces(const Matrix& m);

/// Coefficients c_0..c_{n-1} of the monic polynomial with power sums s.
std::vector<Wide> wide_coeffs_from_moments(const std::vector<Wide>& s);

/// Characteristic polynomial coefficients without rounding to double.
inline std::vector<Wide> wide_char_poly(const Matrix& m) {
  return wide_coeffs_from_moments(wide_power_traces(m));
}

}  // namespace pniep::detail
