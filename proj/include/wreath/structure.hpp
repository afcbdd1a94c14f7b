#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreath/terwilliger.hpp"

namespace wreath {

// Factors (n_1, ..., n_d) of an iterated wreath power of one-class schemes,
// each n_i >= 2.
struct WreathParams {
  std::vector<long long> factors;

  int classes() const { return static_cast<int>(factors.size()); }
  long long order() const;
  // k_0 = 1, k_i = n_1 ... n_{i-1} (n_i - 1); strictly increasing.
  std::vector<long long> valencies() const;
  int two_count() const;  // b = #{i : n_i = 2}

  bool operator==(const WreathParams& other) const = default;
};

// Left-associative wreath power of the complete schemes on the factors.
Scheme build(const WreathParams& params);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed

  bool operator==(const CheckResult& other) const = default;
};

// Basis of the primary ideal: G(i,j) is supported on the (i,j)
// subconstituent block and scaled so that G(i,j) G(g,h) = delta(j,g) G(i,h).
struct PrimaryBasis {
  int classes = 0;
  std::vector<Matrix> g;  // (d+1)^2 matrices, row-major by (i, j)
  SpanBasis span;

  const Matrix& at(int i, int j) const;
};

PrimaryBasis g_basis(const TerwilligerAlgebra& t);

// Candidate central idempotents F(i,h), one per 1 <= i <= d and
// 0 <= h <= i-1, built from normalized partial sums of the diagonal blocks
// E_i* A_j E_i*. F(i,i-1) degenerates to zero exactly when n_i = 2.
struct CentralIdempotents {
  int classes = 0;
  std::map<std::pair<int, int>, Matrix> f;
  int nonzero_count = 0;
};

CentralIdempotents f_idempotents(const TerwilligerAlgebra& t);

// Bose-Mesner level checks of a wreath power against its factor list:
// valencies, product collapse A_i A_j = k_i A_j for i < j, square
// expansion, closed prefixes, prefix sum identities, and the relation
// matrix recursion over the last factor.
std::vector<CheckResult> verify_bose(const Scheme& s, const WreathParams& params);

// Identities tying adjacency matrices, dual idempotents and the primary
// basis together at one base point: triple product vanishing against the
// intersection numbers, the nonzero pattern of the subconstituent blocks,
// absorption and commutation identities, and the action of the adjacency
// matrices on the diagonal prefix sums.
std::vector<CheckResult> verify_lemma_suite(const TerwilligerAlgebra& t, const PrimaryBasis& pb);

// Reorders the points by their relation to the base point and checks the
// block shapes of the adjacency matrices and of the primary basis.
struct BlockForm {
  std::vector<int> ordering;           // position -> original point
  std::vector<long long> block_sizes;  // k_0..k_d
  std::vector<CheckResult> checks;
};

BlockForm block_form(const TerwilligerAlgebra& t, const PrimaryBasis& pb);

// The matrix unit relations, the two-sided action of the adjacency
// matrices on the primary basis, and the ideal/commutative-quotient
// structure of its span.
std::vector<CheckResult> verify_primary_ideal(const TerwilligerAlgebra& t, const PrimaryBasis& pb);

// Support pattern and count of the nonzero F(i,h), their idempotency and
// centrality, the action formula for A_g F(i,h), orthogonality among
// themselves and against the primary basis, and the direct sum
// decomposition of the full algebra.
std::vector<CheckResult> verify_f(const TerwilligerAlgebra& t, const CentralIdempotents& fs, const PrimaryBasis& pb);

struct RecognitionResult {
  bool is_wreath = false;
  std::vector<long long> factors;  // n_1..n_d when recognized
  // A pair violating the product collapse under the first candidate class
  // ordering, in original class labels.
  int witness_i = -1;
  int witness_j = -1;
};

// Decides whether the Bose-Mesner algebra of s is the one of a wreath
// power of one-class schemes: sorts the classes by valency and tries the
// product collapse under every reordering of equal-valency groups.
RecognitionResult recognize(const Scheme& s);

struct StructureReport {
  WreathParams params;
  int base_point = 0;
  long long dim_t = 0;
  long long dim_u = 0;
  int f_nonzero = 0;
  long long center_dim = 0;
  bool triple_regularity_run = false;
  std::vector<CheckResult> checks;

  bool all_passed() const;

  bool operator==(const StructureReport& other) const = default;
};

// Builds the wreath power, runs every verifier at the given base point, and
// adds the dimension, center, triple product span and (optionally, it is
// O(v^4)) triple regularity checks.
StructureReport structure_report(const WreathParams& params, int x, bool with_triple_regularity = true);

}  // namespace wreath
