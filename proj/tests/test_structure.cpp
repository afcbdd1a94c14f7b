#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "wreath/matrix.hpp"
#include "wreath/scheme.hpp"
#include "wreath/structure.hpp"
#include "wreath/terwilliger.hpp"

using wreath::Matrix;
using wreath::Scheme;
using wreath::WreathParams;

namespace {

const wreath::CheckResult& find_check(const std::vector<wreath::CheckResult>& checks, const std::string& name) {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&name](const wreath::CheckResult& c) { return c.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

}  // namespace

TEST_CASE("factor list bookkeeping") {
  const WreathParams p{{2, 3, 2}};
  CHECK(p.classes() == 3);
  CHECK(p.order() == 12);
  CHECK(p.valencies() == std::vector<long long>{1, 1, 4, 6});
  CHECK(p.two_count() == 2);
  CHECK(WreathParams{{3, 3}}.two_count() == 0);
  CHECK_THROWS_AS((WreathParams{{2, 1 << 20, 1 << 20}}.order()), std::overflow_error);
}

TEST_CASE("build folds from the left") {
  const Scheme k2 = wreath::complete_scheme(2);
  const Scheme k3 = wreath::complete_scheme(3);
  CHECK(wreath::build(WreathParams{{2, 3}}) == wreath::wreath(k2, k3));
  CHECK(wreath::build(WreathParams{{2, 3, 2}}) == wreath::wreath(wreath::wreath(k2, k3), k2));
  CHECK(wreath::build(WreathParams{{4}}) == wreath::complete_scheme(4));
  CHECK_THROWS_AS(wreath::build(WreathParams{{}}), std::invalid_argument);
  CHECK_THROWS_AS(wreath::build(WreathParams{{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(wreath::build(WreathParams{{0}}), std::invalid_argument);
}

TEST_CASE("primary basis shape") {
  const auto t = wreath::terwilliger_algebra(wreath::build(WreathParams{{2, 3}}), 0);
  const auto pb = wreath::g_basis(t);
  CHECK(pb.classes == 2);
  CHECK(pb.g.size() == 9);
  CHECK(pb.span.dim() == 9);

  Matrix e00(6, 6);
  e00.at(0, 0) = 1;
  CHECK(pb.at(0, 0) == e00);
  for (int i = 0; i <= 2; ++i) CHECK(pb.at(i, i).trace() == wreath::make_rational(1));
  CHECK_THROWS_AS(pb.at(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(pb.at(0, -1), std::invalid_argument);
}

TEST_CASE("central idempotent support follows the factors") {
  SUBCASE("a factor of two degenerates its top idempotent") {
    const auto t = wreath::terwilliger_algebra(wreath::build(WreathParams{{2, 3}}), 0);
    const auto fs = wreath::f_idempotents(t);
    CHECK(fs.f.size() == 3);
    CHECK(fs.f.at({1, 0}).is_zero());
    CHECK_FALSE(fs.f.at({2, 0}).is_zero());
    CHECK_FALSE(fs.f.at({2, 1}).is_zero());
    CHECK(fs.nonzero_count == 2);
  }

  SUBCASE("explicit idempotent for two ternary factors") {
    const auto t = wreath::terwilliger_algebra(wreath::build(WreathParams{{3, 3}}), 0);
    const auto fs = wreath::f_idempotents(t);
    CHECK(fs.nonzero_count == 3);
    Matrix expected(9, 9);
    for (int a : {1, 2}) {
      for (int b : {1, 2}) {
        expected.at(a, b) = wreath::make_rational(a == b ? 1 : -1, 2);
      }
    }
    CHECK(fs.f.at({1, 0}) == expected);
  }
}

TEST_CASE("bose level verification") {
  SUBCASE("passes on its own factor list") {
    const WreathParams p{{2, 3, 2}};
    for (const auto& check : wreath::verify_bose(wreath::build(p), p)) {
      INFO(check.name, ": ", check.witness);
      CHECK(check.passed);
      CHECK(check.witness.empty());
    }
  }

  SUBCASE("fails against a foreign factor list of the same shape") {
    const auto checks = wreath::verify_bose(wreath::build(WreathParams{{2, 3}}), WreathParams{{3, 2}});
    const auto& valencies = find_check(checks, "valency-formula");
    CHECK_FALSE(valencies.passed);
    CHECK(valencies.witness.find("class 1") != std::string::npos);
    CHECK_FALSE(find_check(checks, "square-expansion").passed);
  }

  SUBCASE("rejects a factor list of the wrong shape") {
    CHECK_THROWS_AS(wreath::verify_bose(wreath::build(WreathParams{{2, 3}}), WreathParams{{2, 2}}),
                    std::invalid_argument);
  }
}

TEST_CASE("lemma suite and block form pass at every base point") {
  const Scheme s = wreath::build(WreathParams{{2, 3}});
  for (int x = 0; x < s.order; ++x) {
    const auto t = wreath::terwilliger_algebra(s, x);
    const auto pb = wreath::g_basis(t);
    for (const auto& check : wreath::verify_lemma_suite(t, pb)) {
      INFO("x=", x, " ", check.name, ": ", check.witness);
      CHECK(check.passed);
    }
    const auto bf = wreath::block_form(t, pb);
    CHECK(bf.block_sizes == std::vector<long long>{1, 1, 4});
    CHECK(bf.ordering[0] == x);
    for (const auto& check : bf.checks) {
      INFO("x=", x, " ", check.name, ": ", check.witness);
      CHECK(check.passed);
    }
  }
}

TEST_CASE("component verifiers reject mismatched inputs") {
  const auto t23 = wreath::terwilliger_algebra(wreath::build(WreathParams{{2, 3}}), 0);
  const auto t22 = wreath::terwilliger_algebra(wreath::build(WreathParams{{2, 2}}), 0);
  const auto pb23 = wreath::g_basis(t23);
  const auto pb22 = wreath::g_basis(t22);
  const auto fs22 = wreath::f_idempotents(t22);
  CHECK_THROWS_AS(wreath::verify_lemma_suite(t23, pb22), std::invalid_argument);
  CHECK_THROWS_AS(wreath::block_form(t23, pb22), std::invalid_argument);
  CHECK_THROWS_AS(wreath::verify_primary_ideal(t23, pb22), std::invalid_argument);
  CHECK_THROWS_AS(wreath::verify_f(t23, fs22, pb23), std::invalid_argument);
}

TEST_CASE("primary ideal and central idempotents verify on a wreath power") {
  const Scheme s = wreath::build(WreathParams{{3, 2}});
  for (int x : {0, 2, 5}) {
    const auto t = wreath::terwilliger_algebra(s, x);
    const auto pb = wreath::g_basis(t);
    const auto fs = wreath::f_idempotents(t);
    for (const auto& check : wreath::verify_primary_ideal(t, pb)) {
      INFO("x=", x, " ", check.name, ": ", check.witness);
      CHECK(check.passed);
    }
    for (const auto& check : wreath::verify_f(t, fs, pb)) {
      INFO("x=", x, " ", check.name, ": ", check.witness);
      CHECK(check.passed);
    }
  }
}

TEST_CASE("recognition") {
  SUBCASE("identifies wreath powers and their factors") {
    for (const auto& factors : {std::vector<long long>{2}, {5}, {2, 3}, {3, 2}, {2, 2, 2}}) {
      const auto res = wreath::recognize(wreath::build(WreathParams{factors}));
      CHECK(res.is_wreath);
      CHECK(res.factors == factors);
    }
  }

  SUBCASE("is stable under class relabeling") {
    const Scheme s = wreath::build(WreathParams{{3, 2}});
    const Scheme relabeled = wreath::validate({s.adjacency[0], s.adjacency[2], s.adjacency[1]});
    const auto res = wreath::recognize(relabeled);
    CHECK(res.is_wreath);
    CHECK(res.factors == std::vector<long long>{3, 2});
  }

  SUBCASE("is stable under vertex permutation") {
    const Scheme s = wreath::build(WreathParams{{2, 3}});
    const std::vector<int> sigma{4, 2, 0, 5, 1, 3};
    const auto res = wreath::recognize(wreath::permute_vertices(s, sigma));
    CHECK(res.is_wreath);
    CHECK(res.factors == std::vector<long long>{2, 3});
  }

  SUBCASE("rejects the five-cycle") {
    const auto res = wreath::recognize(testsupport::cycle_scheme(5));
    CHECK_FALSE(res.is_wreath);
    CHECK(res.factors.empty());
    CHECK(res.witness_i >= 1);
    CHECK(res.witness_j >= 1);
  }

  SUBCASE("rejects the six-cycle with a product collapse witness") {
    const Scheme c6 = testsupport::cycle_scheme(6);
    const auto res = wreath::recognize(c6);
    REQUIRE_FALSE(res.is_wreath);
    const long long ki = wreath::valency(c6, res.witness_i);
    CHECK(c6.adjacency[res.witness_i] * c6.adjacency[res.witness_j] !=
          c6.adjacency[res.witness_j] * wreath::make_rational(ki));
  }

  SUBCASE("accepts the one-point scheme with no factors") {
    const Scheme trivial = wreath::validate({Matrix::identity(1)});
    const auto res = wreath::recognize(trivial);
    CHECK(res.is_wreath);
    CHECK(res.factors.empty());
  }
}

TEST_CASE("structure report") {
  const auto rep = wreath::structure_report(WreathParams{{2, 3}}, 1);
  CHECK(rep.dim_t == 11);
  CHECK(rep.dim_u == 9);
  CHECK(rep.f_nonzero == 2);
  CHECK(rep.center_dim == 3);
  CHECK(rep.triple_regularity_run);
  CHECK(rep.checks.size() == 32);
  CHECK(rep.all_passed());
  for (const auto& check : rep.checks) {
    INFO(check.name, ": ", check.witness);
    CHECK(check.passed);
  }

  SUBCASE("is deterministic") {
    CHECK(rep == wreath::structure_report(WreathParams{{2, 3}}, 1));
  }

  SUBCASE("triple regularity can be skipped") {
    const auto fast = wreath::structure_report(WreathParams{{2, 3}}, 1, false);
    CHECK_FALSE(fast.triple_regularity_run);
    CHECK(fast.checks.size() == 31);
    CHECK(fast.all_passed());
  }

  SUBCASE("rejects bad inputs") {
    CHECK_THROWS_AS(wreath::structure_report(WreathParams{{}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(wreath::structure_report(WreathParams{{2, 2}}, 4), std::invalid_argument);
  }
}
