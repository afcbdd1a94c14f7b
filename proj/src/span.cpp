#include "wreath/span.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wreath {

SpanBasis::SpanBasis(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
}

bool SpanBasis::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != ambient_dim_) {
    throw std::invalid_argument("vector length does not match ambient dimension");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    const auto& row = rows_[r];
    for (int k = p; k < ambient_dim_; ++k) {
      if (sgn(row[k]) != 0) v[k] -= factor * row[k];
    }
  }
  int pivot = -1;
  for (int k = 0; k < ambient_dim_; ++k) {
    if (sgn(v[k]) != 0) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) return false;

  const Rational lead = v[pivot];
  for (int k = pivot; k < ambient_dim_; ++k) {
    if (sgn(v[k]) != 0) v[k] /= lead;
  }
  for (auto& row : rows_) {
    if (sgn(row[pivot]) == 0) continue;
    const Rational factor = row[pivot];
    for (int k = pivot; k < ambient_dim_; ++k) {
      if (sgn(v[k]) != 0) row[k] -= factor * v[k];
    }
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

std::vector<Rational> SpanBasis::reduce(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) {
    throw std::invalid_argument("vector length does not match ambient dimension");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    const auto& row = rows_[r];
    for (int k = p; k < ambient_dim_; ++k) {
      if (sgn(row[k]) != 0) v[k] -= factor * row[k];
    }
  }
  return v;
}

bool SpanBasis::contains(const std::vector<Rational>& v) const {
  const auto residue = reduce(v);
  return std::all_of(residue.begin(), residue.end(), [](const Rational& x) { return sgn(x) == 0; });
}

SpanBasis span_of(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("span of empty matrix list");
  const int rows = mats[0].rows();
  const int cols = mats[0].cols();
  SpanBasis s(rows * cols);
  for (const auto& m : mats) {
    if (m.rows() != rows || m.cols() != cols) {
      throw std::invalid_argument("span generators disagree on shape: " + mats[0].shape() + " vs " + m.shape());
    }
    s.insert(vectorize(m));
  }
  return s;
}

bool contains(const SpanBasis& s, const Matrix& m) {
  return s.contains(vectorize(m));
}

std::vector<Matrix> basis_matrices(const SpanBasis& s, int rows, int cols) {
  if (s.ambient_dim() != rows * cols) {
    throw std::invalid_argument("ambient dimension does not match requested shape");
  }
  std::vector<Matrix> out;
  out.reserve(s.rows().size());
  for (const auto& row : s.rows()) out.push_back(matrix_from_vector(row, rows, cols));
  return out;
}

SpanBasis close_under_multiplication(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("closure of empty generator list");
  const int n = generators[0].rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) {
      throw std::invalid_argument("closure generators must be square matrices of one shape");
    }
  }
  SpanBasis basis(n * n);
  // Independent spanning list; entries are never mutated, so pair products
  // can be swept with a watermark instead of restarting each round.
  std::vector<Matrix> mats;
  for (const auto& g : generators) {
    if (basis.insert(vectorize(g))) mats.push_back(g);
  }
  std::size_t done = 0;
  while (done < mats.size()) {
    const std::size_t snapshot = mats.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < snapshot; ++j) {
        Matrix p = mats[i] * mats[j];
        if (basis.insert(vectorize(p))) mats.push_back(std::move(p));
      }
    }
    done = snapshot;
  }
  return basis;
}

SpanBasis algebra_center(const SpanBasis& s) {
  const int ambient = s.ambient_dim();
  int n = 0;
  while (n * n < ambient) ++n;
  if (n * n != ambient) throw std::invalid_argument("ambient dimension is not a square");
  const int m = s.dim();
  if (m == 0) return SpanBasis(ambient);

  const auto mats = basis_matrices(s, n, n);
  std::vector<std::vector<Matrix>> products(m, std::vector<Matrix>(m));
  for (int t = 0; t < m; ++t) {
    for (int r = 0; r < m; ++r) products[t][r] = mats[t] * mats[r];
  }

  // Constraint rows over the coordinates z_t of Z = sum z_t B_t: for each
  // basis index r and ambient position q, sum_t z_t (B_t B_r - B_r B_t)[q]
  // must vanish.
  SpanBasis constraints(m);
  for (int r = 0; r < m; ++r) {
    std::vector<Matrix> comm(m);
    for (int t = 0; t < m; ++t) comm[t] = products[t][r] - products[r][t];
    for (int q = 0; q < ambient; ++q) {
      std::vector<Rational> row(m);
      bool nonzero = false;
      for (int t = 0; t < m; ++t) {
        row[t] = comm[t].at(q / n, q % n);
        nonzero = nonzero || sgn(row[t]) != 0;
      }
      if (nonzero) constraints.insert(std::move(row));
    }
  }

  // Nullspace of the constraint row space, one basis vector per free column.
  std::vector<int> pivot_of(m, -1);
  for (std::size_t r = 0; r < constraints.rows().size(); ++r) pivot_of[constraints.pivots()[r]] = static_cast<int>(r);
  SpanBasis center(ambient);
  for (int f = 0; f < m; ++f) {
    if (pivot_of[f] >= 0) continue;
    Matrix z(n, n);
    for (int t = 0; t < m; ++t) {
      Rational coeff = 0;
      if (t == f) {
        coeff = 1;
      } else if (pivot_of[t] >= 0) {
        coeff = -constraints.rows()[pivot_of[t]][f];
      }
      if (sgn(coeff) != 0) z += mats[t] * coeff;
    }
    center.insert(vectorize(z));
  }
  return center;
}

}  // namespace wreath
