#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pniep {

/// Dense square matrix of doubles, row-major, 0-based (i, j).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  /// Throws DimensionMismatch unless `rows` is square; InvalidSpectrum-style
  /// finiteness is checked by the caller.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t order() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double trace() const noexcept;
  double max_abs() const noexcept;
  Matrix transposed() const;
  /// J M J with J the exchange matrix.
  Matrix exchanged() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace pniep
