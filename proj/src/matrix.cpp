#include "wreath/matrix.hpp"

#include <stdexcept>

namespace wreath {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + " shape mismatch: " + a.shape() + " vs " + b.shape());
  }
}

void require_nonnegative(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require_nonnegative(rows, cols);
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::ones(int rows, int cols) {
  Matrix m(rows, cols);
  for (auto& x : m.data_) x = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix out = *this;
  out -= other;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix product shape mismatch: " + shape() + " * " + other.shape());
  }
  Matrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (sgn(b) == 0) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Rational& scalar) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= scalar;
  return out;
}

Matrix operator*(const Rational& scalar, const Matrix& m) {
  return m * scalar;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix " + shape());
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rational Matrix::row_sum(int r) const {
  if (r < 0 || r >= rows_) throw std::invalid_argument("row index out of range");
  Rational t = 0;
  for (int c = 0; c < cols_; ++c) t += at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r + 1; c < cols_; ++c) {
      if (at(r, c) != at(c, r)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero_one() const {
  for (const auto& x : data_) {
    if (x != 0 && x != 1) return false;
  }
  return true;
}

std::string Matrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& aij = a.at(i, j);
      if (sgn(aij) == 0) continue;
      for (int r = 0; r < b.rows(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
          const Rational& brc = b.at(r, c);
          if (sgn(brc) == 0) continue;
          out.at(i * b.rows() + r, j * b.cols() + c) = aij * brc;
        }
      }
    }
  }
  return out;
}

std::vector<Rational> vectorize(const Matrix& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  }
  return v;
}

Matrix matrix_from_vector(const std::vector<Rational>& v, int rows, int cols) {
  if (v.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("vector length does not match matrix shape");
  }
  Matrix m(rows, cols);
  std::size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = v[i++];
  }
  return m;
}

}  // namespace wreath
