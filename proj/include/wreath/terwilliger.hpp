#pragma once

#include "wreath/scheme.hpp"
#include "wreath/span.hpp"

namespace wreath {

// Dual idempotents at a base point: E_i* is the diagonal 0/1 projection onto
// the points in relation i to the base point. They sum to the identity.
struct DualIdempotents {
  int base_point = 0;
  std::vector<Matrix> mats;  // E_0*..E_d*
};

DualIdempotents dual_idempotents(const Scheme& s, int x);

// The subconstituent algebra at x: everything generated multiplicatively by
// the adjacency matrices together with the dual idempotents, held as its
// canonical span basis.
struct TerwilligerAlgebra {
  Scheme scheme;
  int base_point = 0;
  DualIdempotents duals;
  SpanBasis basis;
};

TerwilligerAlgebra terwilliger_algebra(const Scheme& s, int x);

// E_i* A_j E_h*: the (i, h) subconstituent block of A_j. Zero iff the
// intersection number p(i,j,h) vanishes.
Matrix triple_product(const TerwilligerAlgebra& t, int i, int j, int h);

// Span of all (d+1)^3 triple products. Coincides with the full algebra
// exactly when the scheme is triply regular at every base point.
SpanBasis triple_product_span(const TerwilligerAlgebra& t);

// True iff u (a subspace of the algebra) absorbs multiplication by the
// algebra on both sides. Throws std::invalid_argument when u is not
// contained in the algebra.
bool is_ideal(const TerwilligerAlgebra& t, const SpanBasis& u);

// True iff all commutators of algebra elements land in u. Requires u to be
// an ideal.
bool quotient_is_commutative(const TerwilligerAlgebra& t, const SpanBasis& u);

SpanBasis center(const TerwilligerAlgebra& t);

}  // namespace wreath
