#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

// Dense row-major matrix over the rationals. All arithmetic is exact; any
// shape mismatch throws std::invalid_argument naming both shapes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled

  static Matrix identity(int n);
  static Matrix ones(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator*(const Rational& scalar) const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  Matrix transpose() const;
  Rational trace() const;
  Rational row_sum(int r) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero_one() const;  // every entry 0 or 1

  bool operator==(const Matrix& other) const = default;

  std::string shape() const;  // "3x4", for diagnostics

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") outside " + shape());
    }
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Rational& scalar, const Matrix& m);

Matrix kronecker(const Matrix& a, const Matrix& b);

// Row-major flattening and its inverse, the bridge between matrices and the
// vector spaces SpanBasis works over.
std::vector<Rational> vectorize(const Matrix& m);
Matrix matrix_from_vector(const std::vector<Rational>& v, int rows, int cols);

}  // namespace wreath
