#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/matrix.hpp"

namespace wreath {

// Symmetric association scheme on v points with d classes, held as its
// adjacency matrices A_0..A_d. Instances coming out of validate() or the
// constructors below satisfy:
//   (1) A_0 = I
//   (2) sum of all A_i = J
//   (3) every A_i is symmetric
//   (4) A_i A_j = sum_h p(i,j,h) A_h with nonnegative integer p(i,j,h)
struct Scheme {
  int order = 0;    // v
  int classes = 0;  // d
  std::vector<Matrix> adjacency;

  bool operator==(const Scheme& other) const = default;
};

struct AxiomViolation {
  int axiom = 0;  // 1..4 as numbered above
  std::string witness;
};

// Carries every axiom violation found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

// Checks the axioms over a candidate list of square 0/1 matrices of one
// shape (anything else is malformed input and throws std::invalid_argument).
// Throws ValidationError when an axiom fails.
Scheme validate(const std::vector<Matrix>& adjacency);

// One-class scheme on n >= 2 points: A_0 = I, A_1 = J - I.
Scheme complete_scheme(long long n);

// Wreath product on the point set Y x X with (x, y) at index y * |X| + x,
// so the new adjacency matrices are literal Kronecker products:
// C_i = I tensor A_i for the X classes, C_{d+j} = B_j tensor J for the Y
// classes.
Scheme wreath(const Scheme& x, const Scheme& y);

// All intersection numbers p(i,j,h), read off the products A_i A_j.
struct IntersectionTensor {
  int classes = 0;
  std::vector<long long> p;

  long long at(int i, int j, int h) const;
};

IntersectionTensor intersection_tensor(const Scheme& s);

long long valency(const Scheme& s, int i);  // p(i,i,0), the row sum of A_i

// R(X) = sum_i i * A_i.
Matrix relation_matrix(const Scheme& s);

// rel[x * v + y] = the class of the pair (x, y).
std::vector<int> relation_table(const Scheme& s);

// {h : p(i,j,h) != 0}.
std::set<int> complex_product(const Scheme& s, int i, int j);

// True iff all complex products of members of delta stay inside delta.
bool is_closed_subset(const Scheme& s, const std::set<int>& delta);

// Scheme induced on {y : rel(x, y) in delta} by the relations in delta,
// classes renumbered in increasing delta order. delta must be closed and
// contain 0.
Scheme subscheme(const Scheme& s, const std::set<int>& delta, int x);

// Two point triples of the same relation type whose triple intersection
// counts differ for relation triple (i, j, h).
struct TripleRegularityWitness {
  std::array<int, 3> type;    // pairwise relations of both triples
  std::array<int, 3> target;  // (i, j, h)
  std::array<int, 3> first;
  std::array<int, 3> second;
  long long first_count = 0;
  long long second_count = 0;
};

struct TripleRegularityReport {
  bool is_triply_regular = false;
  std::optional<TripleRegularityWitness> witness;
};

// Exhaustive check that |R_i(y) cap R_j(z) cap R_h(w)| depends only on the
// pairwise relations of (y, z, w). O(v^4).
TripleRegularityReport triple_regularity(const Scheme& s);

// Conjugation by the vertex bijection sigma: pair (sigma[a], sigma[b]) is in
// class i in the result iff (a, b) is in class i in s.
Scheme permute_vertices(const Scheme& s, const std::vector<int>& sigma);

}  // namespace wreath
