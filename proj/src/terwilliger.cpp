#include "wreath/terwilliger.hpp"

#include <stdexcept>

namespace wreath {

namespace {

void require_point(const Scheme& s, int x) {
  if (x < 0 || x >= s.order) {
    throw std::invalid_argument("base point " + std::to_string(x) + " out of range 0.." + std::to_string(s.order - 1));
  }
}

void require_class(const Scheme& s, int i, const char* what) {
  if (i < 0 || i > s.classes) {
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(i) + " out of range 0.." +
                                std::to_string(s.classes));
  }
}

}  // namespace

DualIdempotents dual_idempotents(const Scheme& s, int x) {
  require_point(s, x);
  DualIdempotents duals;
  duals.base_point = x;
  duals.mats.reserve(s.classes + 1);
  for (int i = 0; i <= s.classes; ++i) {
    Matrix e(s.order, s.order);
    for (int y = 0; y < s.order; ++y) {
      if (s.adjacency[i].at(x, y) == 1) e.at(y, y) = 1;
    }
    duals.mats.push_back(std::move(e));
  }
  return duals;
}

TerwilligerAlgebra terwilliger_algebra(const Scheme& s, int x) {
  TerwilligerAlgebra t;
  t.scheme = s;
  t.base_point = x;
  t.duals = dual_idempotents(s, x);
  std::vector<Matrix> generators = s.adjacency;
  generators.insert(generators.end(), t.duals.mats.begin(), t.duals.mats.end());
  t.basis = close_under_multiplication(generators);
  return t;
}

Matrix triple_product(const TerwilligerAlgebra& t, int i, int j, int h) {
  const Scheme& s = t.scheme;
  require_class(s, i, "left dual");
  require_class(s, j, "adjacency");
  require_class(s, h, "right dual");
  // E_i* A_j E_h* keeps exactly the A_j entries whose row is in relation i
  // and whose column is in relation h to the base point.
  const Matrix& ei = t.duals.mats[i];
  const Matrix& eh = t.duals.mats[h];
  Matrix out(s.order, s.order);
  for (int r = 0; r < s.order; ++r) {
    if (ei.at(r, r) != 1) continue;
    for (int c = 0; c < s.order; ++c) {
      if (eh.at(c, c) == 1) out.at(r, c) = s.adjacency[j].at(r, c);
    }
  }
  return out;
}

SpanBasis triple_product_span(const TerwilligerAlgebra& t) {
  const int d = t.scheme.classes;
  SpanBasis span(t.scheme.order * t.scheme.order);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int h = 0; h <= d; ++h) span.insert(vectorize(triple_product(t, i, j, h)));
    }
  }
  return span;
}

bool is_ideal(const TerwilligerAlgebra& t, const SpanBasis& u) {
  if (u.ambient_dim() != t.basis.ambient_dim()) {
    throw std::invalid_argument("subspace ambient dimension does not match the algebra");
  }
  for (const auto& row : u.rows()) {
    if (!t.basis.contains(row)) throw std::invalid_argument("subspace is not contained in the algebra");
  }
  const int n = t.scheme.order;
  const auto algebra = basis_matrices(t.basis, n, n);
  const auto subspace = basis_matrices(u, n, n);
  for (const auto& a : algebra) {
    for (const auto& m : subspace) {
      if (!contains(u, a * m)) return false;
      if (!contains(u, m * a)) return false;
    }
  }
  return true;
}

bool quotient_is_commutative(const TerwilligerAlgebra& t, const SpanBasis& u) {
  if (!is_ideal(t, u)) throw std::invalid_argument("quotient requires an ideal");
  const int n = t.scheme.order;
  const auto algebra = basis_matrices(t.basis, n, n);
  for (std::size_t i = 0; i < algebra.size(); ++i) {
    for (std::size_t j = i + 1; j < algebra.size(); ++j) {
      if (!contains(u, algebra[i] * algebra[j] - algebra[j] * algebra[i])) return false;
    }
  }
  return true;
}

SpanBasis center(const TerwilligerAlgebra& t) {
  return algebra_center(t.basis);
}

}  // namespace wreath
