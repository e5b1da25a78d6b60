#include "pniep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pniep/error.hpp"

namespace pniep {

bool is_conjugate_closed(std::span<const Complex> values, double abs_tol) {
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i] || std::abs(values[i].imag()) <= abs_tol) continue;
    // Match each upper value with the closest unused lower value.
    if (values[i].imag() < 0) continue;
    std::size_t best = values.size();
    double best_dist = abs_tol;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j == i || used[j] || values[j].imag() >= -abs_tol) continue;
      double dist = std::abs(values[j] - std::conj(values[i]));
      if (dist <= best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == values.size()) return false;
    used[i] = used[best] = true;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!used[i] && std::abs(values[i].imag()) > abs_tol) return false;
  }
  return true;
}

Spectrum::Spectrum(std::vector<Complex> values, const Tolerances& tol)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::InvalidSpectrum, "spectrum must contain at least one value");
  }
  if (values_.size() > tol.max_order) {
    throw Error(ErrorCode::InvalidSpectrum,
                "spectrum has " + std::to_string(values_.size()) + " values; cap is " +
                    std::to_string(tol.max_order));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw Error(ErrorCode::InvalidSpectrum,
                  "value at index " + std::to_string(i) + " is not finite");
    }
  }
  if (!is_conjugate_closed(values_, pairing_tolerance(tol))) {
    throw Error(ErrorCode::NotConjugateClosed, "spectrum is not closed under conjugation");
  }
}

Spectrum::Spectrum(std::initializer_list<Complex> values)
    : Spectrum(std::vector<Complex>(values)) {}

double Spectrum::spectral_radius() const noexcept {
  double r = 0.0;
  for (const auto& v : values_) r = std::max(r, std::abs(v));
  return r;
}

double Spectrum::pairing_tolerance(const Tolerances& tol) const noexcept {
  return tol.conj * std::max(1.0, spectral_radius());
}

double MonicPolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : c_) m = std::max(m, std::abs(c));
  return m;
}

Complex MonicPolynomial::evaluate(Complex z) const noexcept {
  Complex acc = 1.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

std::pair<Complex, Complex> MonicPolynomial::evaluate_with_derivative(Complex z) const noexcept {
  Complex p = 1.0;
  Complex dp = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c_[i];
  }
  return {p, dp};
}

}  // namespace pniep
