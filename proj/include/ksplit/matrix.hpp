#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ksplit/rational.hpp"

namespace ksplit {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Rows and columns listed in `keep`, in that order.
  Matrix submatrix(std::span<const std::size_t> keep) const {
    Matrix out(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

namespace detail {
inline std::string cell(std::int64_t v) { return std::to_string(v); }
inline std::string cell(const Rational& v) { return to_string(v); }
}  // namespace detail

/// Plain text dump: a header row with `name` followed by the column labels,
/// then one row per state label. Cells are tab separated; entries are exact.
template <typename T>
std::string format_matrix(std::string_view name, std::span<const std::string> labels, const Matrix<T>& m) {
  if (labels.size() != m.rows() || m.rows() != m.cols()) throw std::invalid_argument("format_matrix: label count mismatch");
  std::ostringstream os;
  os << name;
  for (const auto& l : labels) os << '\t' << l;
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) os << '\t' << detail::cell(m(i, j));
    os << '\n';
  }
  return os.str();
}

/// y = A x, exactly.
template <typename T>
std::vector<Rational> multiply(const Matrix<T>& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Rational> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y[i] += Rational(a(i, j)) * x[j];
    }
  }
  return y;
}

/// y = A^T x, exactly.
template <typename T>
std::vector<Rational> multiply_transposed(const Matrix<T>& a, std::span<const Rational> x) {
  if (a.rows() != x.size()) throw std::invalid_argument("multiply_transposed: dimension mismatch");
  std::vector<Rational> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y[j] += Rational(a(i, j)) * x[i];
    }
  }
  return y;
}

/// x^T A y, exactly.
template <typename T>
Rational bilinear(std::span<const Rational> x, const Matrix<T>& a, std::span<const Rational> y) {
  auto ay = multiply(a, y);
  if (x.size() != ay.size()) throw std::invalid_argument("bilinear: dimension mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * ay[i];
  return out;
}

}  // namespace ksplit
