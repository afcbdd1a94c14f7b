#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "wreath/matrix.hpp"
#include "wreath/scheme.hpp"
#include "wreath/span.hpp"
#include "wreath/terwilliger.hpp"

using wreath::Matrix;
using wreath::Scheme;
using wreath::SpanBasis;

namespace {

Scheme w23() {
  return wreath::wreath(wreath::complete_scheme(2), wreath::complete_scheme(3));
}

}  // namespace

TEST_CASE("dual idempotents project onto the subconstituents") {
  const Scheme s = w23();
  for (int x = 0; x < s.order; ++x) {
    const auto duals = wreath::dual_idempotents(s, x);
    REQUIRE(duals.mats.size() == 3);
    Matrix sum(s.order, s.order);
    for (int i = 0; i <= s.classes; ++i) {
      const Matrix& e = duals.mats[i];
      CHECK(e * e == e);
      CHECK(e.trace() == wreath::make_rational(wreath::valency(s, i)));
      for (int j = i + 1; j <= s.classes; ++j) CHECK((e * duals.mats[j]).is_zero());
      sum += e;
    }
    CHECK(sum == Matrix::identity(s.order));
  }
  CHECK_THROWS_AS(wreath::dual_idempotents(s, 6), std::invalid_argument);
  CHECK_THROWS_AS(wreath::dual_idempotents(s, -1), std::invalid_argument);
}

TEST_CASE("algebra closure dimensions for one-class schemes") {
  CHECK(wreath::terwilliger_algebra(wreath::complete_scheme(2), 0).basis.dim() == 4);
  CHECK(wreath::terwilliger_algebra(wreath::complete_scheme(3), 0).basis.dim() == 5);
  CHECK(wreath::terwilliger_algebra(wreath::complete_scheme(4), 1).basis.dim() == 5);
}

TEST_CASE("closure is multiplicatively closed and holds the generators") {
  const auto t = wreath::terwilliger_algebra(w23(), 2);
  for (const auto& a : t.scheme.adjacency) CHECK(wreath::contains(t.basis, a));
  for (const auto& e : t.duals.mats) CHECK(wreath::contains(t.basis, e));
  const auto mats = wreath::basis_matrices(t.basis, 6, 6);
  for (const auto& a : mats) {
    for (const auto& b : mats) CHECK(wreath::contains(t.basis, a * b));
  }
}

TEST_CASE("triple products agree with the literal three-factor product") {
  for (const Scheme& s : {w23(), testsupport::cycle_scheme(5)}) {
    const auto t = wreath::terwilliger_algebra(s, 0);
    for (int i = 0; i <= s.classes; ++i) {
      for (int j = 0; j <= s.classes; ++j) {
        for (int h = 0; h <= s.classes; ++h) {
          CHECK(wreath::triple_product(t, i, j, h) ==
                t.duals.mats[i] * s.adjacency[j] * t.duals.mats[h]);
        }
      }
    }
  }
  const auto t = wreath::terwilliger_algebra(w23(), 0);
  CHECK_THROWS_AS(wreath::triple_product(t, 3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(wreath::triple_product(t, 0, -1, 0), std::invalid_argument);
}

TEST_CASE("triple product span fills the algebra of a triply regular scheme") {
  for (int x : {0, 3, 5}) {
    const auto t = wreath::terwilliger_algebra(w23(), x);
    CHECK(wreath::triple_product_span(t) == t.basis);
  }
  const auto t = wreath::terwilliger_algebra(testsupport::cycle_scheme(6), 0);
  CHECK(wreath::triple_product_span(t) == t.basis);
}

TEST_CASE("triple product span of the petersen scheme is a proper subspace") {
  const auto t = wreath::terwilliger_algebra(testsupport::petersen_scheme(), 0);
  const SpanBasis tps = wreath::triple_product_span(t);
  CHECK(tps.dim() < t.basis.dim());
  for (const auto& row : tps.rows()) CHECK(t.basis.contains(row));
}

TEST_CASE("ideal and quotient tests") {
  const auto t = wreath::terwilliger_algebra(wreath::complete_scheme(3), 0);

  SUBCASE("the whole algebra is an ideal with trivial quotient") {
    CHECK(wreath::is_ideal(t, t.basis));
    CHECK(wreath::quotient_is_commutative(t, t.basis));
  }

  SUBCASE("scalars are not an ideal") {
    const SpanBasis scalars = wreath::span_of({Matrix::identity(3)});
    CHECK_FALSE(wreath::is_ideal(t, scalars));
    CHECK_THROWS_AS(wreath::quotient_is_commutative(t, scalars), std::invalid_argument);
  }

  SUBCASE("subspaces outside the algebra are rejected") {
    Matrix e01(3, 3);
    e01.at(0, 1) = 1;
    CHECK_THROWS_AS(wreath::is_ideal(t, wreath::span_of({e01})), std::invalid_argument);
    CHECK_THROWS_AS(wreath::is_ideal(t, SpanBasis(4)), std::invalid_argument);
  }
}

TEST_CASE("center of the one-class algebras") {
  SUBCASE("two points give a full matrix algebra with scalar center") {
    const auto t = wreath::terwilliger_algebra(wreath::complete_scheme(2), 0);
    const SpanBasis z = wreath::center(t);
    CHECK(z.dim() == 1);
    CHECK(wreath::contains(z, Matrix::identity(2)));
  }

  SUBCASE("three points add one central idempotent beyond the identity") {
    const auto t = wreath::terwilliger_algebra(wreath::complete_scheme(3), 0);
    const SpanBasis z = wreath::center(t);
    CHECK(z.dim() == 2);
    CHECK(wreath::contains(z, Matrix::identity(3)));
    Matrix f(3, 3);
    f.at(1, 1) = f.at(2, 2) = wreath::make_rational(1, 2);
    f.at(1, 2) = f.at(2, 1) = wreath::make_rational(-1, 2);
    CHECK(wreath::contains(z, f));
    CHECK(f * f == f);
  }
}
