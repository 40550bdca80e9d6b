#include "matcat/ratmat.hpp"

#include <sstream>

#include "matcat/errors.hpp"

namespace matcat {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) {
    return false;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) {
    return std::nullopt;
  }
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rat p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) {
        continue;
      }
      const Rat f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) {
      os << "; ";
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) {
        os << " ";
      }
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatchError("matrix addition shape mismatch");
  }
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = a.at(i, j) + b.at(i, j);
    }
  }
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatchError("matrix subtraction shape mismatch");
  }
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = a.at(i, j) - b.at(i, j);
    }
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatchError("matrix product shape mismatch");
  }
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) {
        continue;  // blocks here are mostly scaled permutations
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) {
          r.at(i, j) += aik * bkj;
        }
      }
    }
  }
  return r;
}

Matrix operator*(const Rat& s, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = s * a.at(i, j);
    }
  }
  return r;
}

}  // namespace matcat
