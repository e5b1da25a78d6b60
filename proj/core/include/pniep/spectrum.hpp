#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pniep/tolerances.hpp"

namespace pniep {

using Complex = std::complex<double>;

/// Conjugate-closed multiset of complex values, kept in input order.
///
/// Construction validates that every value is finite, that the list is
/// non-empty and no longer than `Tolerances::max_order`, and that every
/// non-real value has a conjugate partner within
/// `tol.conj * max(1, spectral radius)`. Values whose imaginary part is below
/// that pairing tolerance count as real.
class Spectrum {
 public:
  explicit Spectrum(std::vector<Complex> values, const Tolerances& tol = {});
  Spectrum(std::initializer_list<Complex> values);

  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Complex> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double spectral_radius() const noexcept;
  /// Pairing tolerance actually used for this spectrum.
  double pairing_tolerance(const Tolerances& tol = {}) const noexcept;

 private:
  std::vector<Complex> values_;
};

/// True if `values` is closed under conjugation within `abs_tol`.
bool is_conjugate_closed(std::span<const Complex> values, double abs_tol);

/// Power sums s_1..s_n; `at(k)` is 1-based to match the usual notation.
/// Sums produced from coefficients also keep a low-order part, so that
/// s_k = at(k) + low(k) survives the trip back to coefficients.
class MomentVector {
 public:
  MomentVector() = default;
  explicit MomentVector(std::vector<double> s) : s_(std::move(s)) {}
  MomentVector(std::vector<double> s, std::vector<double> low) : s_(std::move(s)), low_(std::move(low)) {}

  std::size_t size() const noexcept { return s_.size(); }
  double at(std::size_t k) const { return s_.at(k - 1); }
  double low(std::size_t k) const { return low_.empty() ? 0.0 : low_.at(k - 1); }
  std::span<const double> values() const noexcept { return s_; }

  friend bool operator==(const MomentVector& a, const MomentVector& b) { return a.s_ == b.s_; }

 private:
  std::vector<double> s_;
  std::vector<double> low_;
};

/// z^n + c_{n-1} z^{n-1} + ... + c_0, stored as c_0..c_{n-1}.
///
/// This additive convention is the only one used in the library. Formulas
/// written with subtracted coefficients (companion rows a_k, Lemma b_k) are
/// converted where they are used.
class MonicPolynomial {
 public:
  MonicPolynomial() = default;
  explicit MonicPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  std::size_t degree() const noexcept { return c_.size(); }
  /// Coefficient of z^i; `coeff(degree())` is the leading 1.
  double coeff(std::size_t i) const { return i == c_.size() ? 1.0 : c_.at(i); }
  std::span<const double> coeffs() const noexcept { return c_; }
  double max_abs_coeff() const noexcept;

  Complex evaluate(Complex z) const noexcept;
  /// Value and first derivative by Horner's rule.
  std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const noexcept;

  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

 private:
  std::vector<double> c_;
};

}  // namespace pniep
