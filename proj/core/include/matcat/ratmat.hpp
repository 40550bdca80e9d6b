#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matcat/numeric.hpp"

namespace matcat {

/// Dense matrix of exact rationals. All comparisons are exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;

  /// Exact Gauss-Jordan inverse; nullopt when singular or non-square.
  std::optional<Matrix> inverse() const;

  std::string to_string() const;

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rat& s, const Matrix& a);

}  // namespace matcat
