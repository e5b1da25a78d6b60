#include "pniep/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pniep/error.hpp"
#include "pniep/spectral_core.hpp"
#include "wide.hpp"

namespace pniep {

std::vector<detail::Wide> detail::wide_power_traces(const Matrix& m) {
  const std::size_t n = m.order();
  std::vector<Wide> base(n * n), power(n * n), next(n * n), s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = power[i * n + j] = m(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Wide acc = 0;
          for (std::size_t l = 0; l < n; ++l) acc += power[i * n + l] * base[l * n + j];
          next[i * n + j] = acc;
        }
      }
      power.swap(next);
    }
    for (std::size_t i = 0; i < n; ++i) s[k] += power[i * n + i];
  }
  return s;
}

MomentVector power_traces(const Matrix& m) {
  const std::vector<detail::Wide> s = detail::wide_power_traces(m);
  std::vector<double> hi(s.size()), lo(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    hi[k] = static_cast<double>(s[k]);
    lo[k] = static_cast<double>(s[k] - detail::Wide(hi[k]));
  }
  return MomentVector(std::move(hi), std::move(lo));
}

MonicPolynomial char_poly(const Matrix& m) {
  if (m.order() == 0) return MonicPolynomial{};
  const std::vector<detail::Wide> c = detail::wide_char_poly(m);
  return MonicPolynomial(std::vector<double>(c.begin(), c.end()));
}

StructureCheck is_persymmetric(const Matrix& m, double tol) {
  const std::size_t n = m.order();
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(m(i, j) - m(n - 1 - j, n - 1 - i)));
  return {dev <= tol, dev};
}

StructureCheck is_nonnegative(const Matrix& m, double tol) {
  const std::size_t n = m.order();
  double lowest = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lowest = std::min(lowest, m(i, j));
  return {lowest >= -tol, lowest};
}

StructureCheck is_toeplitz(const Matrix& m, double tol) {
  const std::size_t n = m.order();
  double dev = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      dev = std::max(dev, std::abs(m(i, j) - m(i + 1, j + 1)));
  return {dev <= tol, dev};
}

double charpoly_residual(const MonicPolynomial& actual, const MonicPolynomial& target) {
  if (actual.degree() != target.degree()) return std::numeric_limits<double>::infinity();
  double diff = 0.0;
  for (std::size_t i = 0; i < target.degree(); ++i) {
    diff = std::max(diff, std::abs(actual.coeff(i) - target.coeff(i)));
  }
  return diff / (1.0 + target.max_abs_coeff());
}

namespace {

double nearest_pairing_distance(const Spectrum& expected, const Spectrum& computed) {
  std::vector<bool> used(computed.size(), false);
  double worst = 0.0;
  for (const Complex& e : expected) {
    std::size_t best = computed.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < computed.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(computed[j] - e);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == computed.size()) return std::numeric_limits<double>::infinity();
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

}  // namespace

VerificationReport verify_realization(const Matrix& m, const Spectrum& spec,
                                      const Tolerances& tol) {
  if (m.order() != spec.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix order " + std::to_string(m.order()) + " does not match spectrum size " +
                    std::to_string(spec.size()));
  }
  const double structural_tol = tol.cond * (1.0 + m.max_abs());
  VerificationReport report;
  report.persymmetric = is_persymmetric(m, structural_tol);
  report.nonnegative = is_nonnegative(m, structural_tol);
  report.toeplitz = is_toeplitz(m, structural_tol);
  report.residual_tolerance = tol.root;

  const MonicPolynomial actual = char_poly(m);
  report.charpoly_residual = charpoly_residual(actual, poly_from_roots(spec, tol));
  try {
    report.root_match = nearest_pairing_distance(spec, roots(actual, tol));
  } catch (const Error&) {
    report.root_match.reset();
  }
  return report;
}

}  // namespace pniep
