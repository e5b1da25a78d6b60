#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "pniep/error.hpp"
#include "pniep/spectral_core.hpp"

namespace pniep {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Rotation of the starting circle; irrational so that no start point sits on
// a symmetry axis of a real polynomial.
constexpr double kStartAngle = 1.0 / std::numbers::sqrt2;

// Pairs each root with its nearest conjugate partner and replaces the pair by
// an exact conjugate pair; roots closer to their own mirror image become real.
std::vector<Complex> symmetrize(std::vector<Complex> z) {
  std::vector<Complex> out;
  out.reserve(z.size());
  std::vector<bool> done(z.size(), false);
  for (std::size_t step = 0; step < z.size(); ++step) {
    std::size_t i = z.size();
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (!done[k] && (i == z.size() || std::abs(z[k].imag()) > std::abs(z[i].imag()))) i = k;
    }
    if (i == z.size()) break;
    done[i] = true;
    const double self_distance = 2.0 * std::abs(z[i].imag());
    std::size_t partner = z.size();
    double best = self_distance;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (done[j]) continue;
      double dist = std::abs(z[j] - std::conj(z[i]));
      if (dist < best) {
        best = dist;
        partner = j;
      }
    }
    if (partner == z.size()) {
      out.emplace_back(z[i].real(), 0.0);
      continue;
    }
    done[partner] = true;
    Complex mid = 0.5 * (z[i] + std::conj(z[partner]));
    out.push_back(mid);
    out.push_back(std::conj(mid));
  }
  return out;
}

}  // namespace

double evaluation_scale(const MonicPolynomial& p, Complex z) noexcept {
  const double r = std::abs(z);
  double acc = 1.0;
  for (std::size_t i = p.degree(); i-- > 0;) acc = acc * r + std::abs(p.coeff(i));
  return acc;
}

Spectrum roots(const MonicPolynomial& p, const Tolerances& tol) {
  const std::size_t n = p.degree();
  if (n < 1) throw Error(ErrorCode::PreconditionFailed, "polynomial degree must be at least 1");
  if (n == 1) return Spectrum({Complex(-p.coeff(0), 0.0)}, tol);

  // Fujiwara bound: every root lies within it, and it tracks the largest
  // modulus instead of the largest coefficient.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double c = std::abs(p.coeff(n - k));
    if (k == n) c /= 2.0;
    radius = std::max(radius, std::pow(c, 1.0 / static_cast<double>(k)));
  }
  radius = radius > 0.0 ? 2.0 * radius : 1.0;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                      static_cast<double>(n) +
                                  kStartAngle);
  }

  for (int iter = 0; iter < tol.max_iterations; ++iter) {
    bool settled = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto [value, slope] = p.evaluate_with_derivative(z[k]);
      if (std::abs(value) <= 4.0 * kEps * evaluation_scale(p, z[k])) continue;
      if (slope == Complex(0.0)) slope = Complex(kEps, kEps);
      const Complex ratio = value / slope;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) > 1e-14 * std::max(1.0, std::abs(z[k]))) settled = false;
    }
    if (settled) break;
  }

  for (const Complex& r : z) {
    const double residual = std::abs(p.evaluate(r));
    const double allowed = tol.root * std::max(1.0, evaluation_scale(p, r));
    if (!(residual <= allowed)) {
      throw Error(ErrorCode::NoConvergence,
                  "root finder stopped with residual " + std::to_string(residual) +
                      " (allowed " + std::to_string(allowed) + ") after " +
                      std::to_string(tol.max_iterations) + " iterations");
    }
  }
  return Spectrum(symmetrize(std::move(z)), tol);
}

}  // namespace pniep
