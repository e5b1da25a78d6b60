#include "pniep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pniep/error.hpp"

namespace pniep {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : Matrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix rows must be square");
    std::size_t j = 0;
    for (double v : row) (*this)(i, j++) = v;
    ++i;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                    std::to_string(rows[i].size()) +
                                                    " entries, expected " +
                                                    std::to_string(rows.size()));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.n_);
  }
  return m;
}

double Matrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::exchanged() const {
  Matrix e(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) e(i, j) = (*this)(n_ - 1 - i, n_ - 1 - j);
  return e;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
  const std::size_t n = a.n_;
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

}  // namespace pniep
