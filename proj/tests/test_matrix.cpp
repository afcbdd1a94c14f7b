#include <stdexcept>
#include <string>

#include "doctest.h"
#include "wreath/matrix.hpp"
#include "wreath/rational.hpp"

using wreath::Matrix;
using wreath::Rational;

TEST_CASE("rational construction canonicalizes") {
  CHECK(wreath::to_string(wreath::make_rational(2, 4)) == "1/2");
  CHECK(wreath::to_string(wreath::make_rational(-2, 4)) == "-1/2");
  CHECK(wreath::to_string(wreath::make_rational(3, -6)) == "-1/2");
  CHECK(wreath::to_string(wreath::make_rational(0, 7)) == "0");
  CHECK(wreath::to_string(wreath::make_rational(5)) == "5");
  CHECK_THROWS_AS(wreath::make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing is strict") {
  CHECK(wreath::parse_rational("3/9") == wreath::make_rational(1, 3));
  CHECK(wreath::parse_rational("-12") == wreath::make_rational(-12));
  CHECK(wreath::parse_rational("0/5") == wreath::make_rational(0));
  CHECK_THROWS_AS(wreath::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("+3"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("2/"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(wreath::parse_rational("-"), std::invalid_argument);
}

TEST_CASE("integer recognition") {
  CHECK(wreath::is_nonnegative_integer(wreath::make_rational(4, 2)));
  CHECK(wreath::is_nonnegative_integer(wreath::make_rational(0)));
  CHECK_FALSE(wreath::is_nonnegative_integer(wreath::make_rational(1, 2)));
  CHECK_FALSE(wreath::is_nonnegative_integer(wreath::make_rational(-3)));
}

TEST_CASE("matrix arithmetic basics") {
  const Matrix i2 = Matrix::identity(2);
  const Matrix j2 = Matrix::ones(2, 2);
  CHECK(i2 * j2 == j2);
  CHECK(j2 * j2 == wreath::make_rational(2) * j2);
  CHECK((j2 - i2) + i2 == j2);
  CHECK(i2.trace() == wreath::make_rational(2));
  CHECK(j2.row_sum(0) == wreath::make_rational(2));
  CHECK(j2.is_symmetric());
  CHECK(j2.is_zero_one());
  CHECK_FALSE((wreath::make_rational(1, 2) * j2).is_zero_one());
  CHECK((j2 - j2).is_zero());
}

TEST_CASE("matrix multiplication rejects shape mismatch") {
  const Matrix a(2, 3);
  const Matrix b(2, 3);
  CHECK_THROWS_WITH_AS(a * b, "matrix product shape mismatch: 2x3 * 2x3", std::invalid_argument);
  CHECK_THROWS_AS(a + Matrix(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 3).trace(), std::invalid_argument);
}

TEST_CASE("transpose and indexing") {
  Matrix m(2, 3);
  m.at(0, 1) = wreath::make_rational(5);
  m.at(1, 2) = wreath::make_rational(-1, 3);
  const Matrix t = m.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t.at(1, 0) == wreath::make_rational(5));
  CHECK(t.at(2, 1) == wreath::make_rational(-1, 3));
  CHECK(m.shape() == "2x3");
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
}

TEST_CASE("kronecker product") {
  const Matrix i2 = Matrix::identity(2);
  const Matrix j3 = Matrix::ones(3, 3);
  const Matrix k = wreath::kronecker(i2, j3);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  CHECK(k.at(0, 2) == wreath::make_rational(1));
  CHECK(k.at(0, 3) == wreath::make_rational(0));
  CHECK(k.at(4, 5) == wreath::make_rational(1));

  SUBCASE("mixed product rule") {
    Matrix a(2, 2);
    a.at(0, 1) = wreath::make_rational(2);
    a.at(1, 0) = wreath::make_rational(3);
    Matrix b(2, 2);
    b.at(0, 0) = wreath::make_rational(1, 2);
    b.at(1, 1) = wreath::make_rational(5);
    CHECK(wreath::kronecker(a, b) * wreath::kronecker(a.transpose(), b) ==
          wreath::kronecker(a * a.transpose(), b * b));
  }

  SUBCASE("identity factors") {
    CHECK(wreath::kronecker(i2, Matrix::identity(3)) == Matrix::identity(6));
  }
}

TEST_CASE("vectorization round trip") {
  Matrix m(2, 3);
  int v = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = wreath::make_rational(++v);
  const std::vector<Rational> flat = wreath::vectorize(m);
  CHECK(flat.size() == 6);
  CHECK(wreath::matrix_from_vector(flat, 2, 3) == m);
  CHECK_THROWS_AS(wreath::matrix_from_vector(flat, 2, 2), std::invalid_argument);
}
