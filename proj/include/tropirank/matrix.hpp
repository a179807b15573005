#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropirank/semifield.hpp"

namespace tropirank {

/// Dense row-major matrix over one of the semifields. Column vectors are
/// n x 1 matrices.
class Matrix {
 public:
  /// rows x cols matrix filled with the zero element of the scale.
  Matrix(std::size_t rows, std::size_t cols, Scale scale);

  /// Validating constructor. Throws UsageError on ragged rows or on values
  /// outside the carrier set.
  Matrix(Scale scale, std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(Scale scale, const std::vector<std::vector<double>>& rows);
  static Matrix column(Scale scale, std::span<const double> values);
  static Matrix identity(std::size_t n, Scale scale);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scale scale() const noexcept { return scale_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  // Raw access; writes are not validated.
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  /// Bounds-checked element access. Throws UsageError.
  Scalar at(std::size_t i, std::size_t j) const;

  std::span<const double> values() const noexcept { return data_; }
  std::span<double> values() noexcept { return data_; }

  std::vector<double> column_values(std::size_t j) const;
  Matrix column_matrix(std::size_t j) const;
  std::vector<std::vector<double>> to_rows() const;

  /// No entry equals the zero element.
  bool is_regular() const noexcept;

  /// Entrywise logarithm (max-times -> max-plus); identity on max-plus input.
  Matrix to_additive() const;
  /// Entrywise exponential (max-plus -> max-times); identity on max-times input.
  Matrix to_multiplicative() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Scale scale_ = Scale::multiplicative;
  std::vector<double> data_;
};

/// Same shape and scale, every entry approx_equal.
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);

/// Matrix whose columns are the given column vectors, in order.
Matrix hstack(std::span<const Matrix> columns, std::size_t rows, Scale scale);

}  // namespace tropirank
