#include "tropirank/matrix.hpp"

#include <algorithm>
#include <string>

namespace tropirank {

Matrix::Matrix(std::size_t rows, std::size_t cols, Scale scale)
    : rows_(rows), cols_(cols), scale_(scale), data_(rows * cols, zero_value(scale)) {}

Matrix::Matrix(Scale scale, std::initializer_list<std::initializer_list<double>> rows)
    : Matrix(from_rows(scale, std::vector<std::vector<double>>(rows.begin(), rows.end()))) {}

Matrix Matrix::from_rows(Scale scale, const std::vector<std::vector<double>>& rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
  Matrix m(n_rows, n_cols, scale);
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (rows[i].size() != n_cols) {
      throw UsageError("ragged matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n_cols));
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (!is_valid_value(rows[i][j], scale)) {
        throw UsageError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                         std::to_string(rows[i][j]) + " is not valid on the " +
                         std::string(to_string(scale)) + " scale");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::column(Scale scale, std::span<const double> values) {
  Matrix m(values.size(), 1, scale);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!is_valid_value(values[i], scale)) {
      throw UsageError("vector entry " + std::to_string(i) + " is not valid on the " +
                       std::string(to_string(scale)) + " scale");
    }
    m(i, 0) = values[i];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n, Scale scale) {
  Matrix m(n, n, scale);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one_value(scale);
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw UsageError("index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
  }
  return {(*this)(i, j), scale_};
}

std::vector<double> Matrix::column_values(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::column_matrix(std::size_t j) const {
  Matrix out(rows_, 1, scale_);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
  return out;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

bool Matrix::is_regular() const noexcept {
  const double z = zero_value(scale_);
  return std::none_of(data_.begin(), data_.end(), [z](double v) { return v == z; });
}

Matrix Matrix::to_additive() const {
  if (scale_ == Scale::additive) return *this;
  Matrix out(rows_, cols_, Scale::additive);
  std::transform(data_.begin(), data_.end(), out.data_.begin(),
                 [](double v) { return std::log(v); });
  return out;
}

Matrix Matrix::to_multiplicative() const {
  if (scale_ == Scale::multiplicative) return *this;
  Matrix out(rows_, cols_, Scale::multiplicative);
  std::transform(data_.begin(), data_.end(), out.data_.begin(),
                 [](double v) { return std::exp(v); });
  return out;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.scale() != b.scale()) return false;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t k = 0; k < av.size(); ++k) {
    if (!approx_equal(av[k], bv[k], tol)) return false;
  }
  return true;
}

Matrix hstack(std::span<const Matrix> columns, std::size_t rows, Scale scale) {
  Matrix out(rows, columns.size(), scale);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Matrix& c = columns[j];
    if (c.rows() != rows || c.cols() != 1 || c.scale() != scale) {
      throw UsageError("hstack: column " + std::to_string(j) + " has the wrong shape or scale");
    }
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = c(i, 0);
  }
  return out;
}

}  // namespace tropirank
