#pragma once

#include <vector>

#include "wreath/matrix.hpp"

namespace wreath {

// Canonical basis of a linear subspace of Q^n: reduced row echelon form with
// unit pivots and rows ordered by pivot column. The form is unique per
// subspace, so two SpanBasis values compare equal iff they span the same
// subspace.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Adds v to the span; returns true iff the dimension grew.
  bool insert(std::vector<Rational> v);

  bool contains(const std::vector<Rational>& v) const;

  // Residue of v after elimination by the basis; zero iff contained.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  bool operator==(const SpanBasis& other) const = default;

 private:
  int ambient_dim_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

// Span of the vectorized matrices. All matrices must share one shape.
SpanBasis span_of(const std::vector<Matrix>& mats);

bool contains(const SpanBasis& s, const Matrix& m);

// Rebuilds the basis rows as rows x cols matrices.
std::vector<Matrix> basis_matrices(const SpanBasis& s, int rows, int cols);

// Smallest subspace containing the generators and closed under the matrix
// product: fixpoint iteration inserting all pairwise products of the current
// basis until the dimension stabilizes. Generators must be square and share
// one shape.
SpanBasis close_under_multiplication(const std::vector<Matrix>& generators);

// Center of a multiplicatively closed span s of n x n matrices: the
// subspace of elements commuting with every basis element, found by solving
// the commutation constraints in basis coordinates.
SpanBasis algebra_center(const SpanBasis& s);

}  // namespace wreath
