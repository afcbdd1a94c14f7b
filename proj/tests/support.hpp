#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "wreath/scheme.hpp"

namespace testsupport {

// Distance scheme of the n-cycle; the smallest schemes that are not wreath
// powers come from here.
inline wreath::Scheme cycle_scheme(int n) {
  const int d = n / 2;
  std::vector<wreath::Matrix> adjacency(d + 1, wreath::Matrix(n, n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int dist = std::min((a - b + n) % n, (b - a + n) % n);
      adjacency[dist].at(a, b) = 1;
    }
  }
  return wreath::validate(adjacency);
}

// Distance scheme of the Petersen graph (2-subsets of a 5-set, adjacent when
// disjoint). Not triply regular: for nonadjacent y, z their unique common
// neighbor w has one further neighbor u, and a third point in relation 2 to
// both y and z meets the common neighborhood once when it is u and never
// otherwise.
inline wreath::Scheme petersen_scheme() {
  std::vector<std::array<int, 2>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  }
  const int v = 10;
  std::vector<wreath::Matrix> adjacency(3, wreath::Matrix(v, v));
  for (int i = 0; i < v; ++i) adjacency[0].at(i, i) = 1;
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      if (i == j) continue;
      const bool disjoint = pairs[i][0] != pairs[j][0] && pairs[i][0] != pairs[j][1] &&
                            pairs[i][1] != pairs[j][0] && pairs[i][1] != pairs[j][1];
      adjacency[disjoint ? 1 : 2].at(i, j) = 1;
    }
  }
  return wreath::validate(adjacency);
}

// Intersection numbers by brute force triple counting, independent of the
// matrix product path used by the library.
inline wreath::IntersectionTensor intersection_tensor_by_counting(const wreath::Scheme& s) {
  const int d1 = s.classes + 1;
  const auto rel = wreath::relation_table(s);
  const auto at = [&rel, &s](int a, int b) { return rel[static_cast<std::size_t>(a) * s.order + b]; };
  wreath::IntersectionTensor t;
  t.classes = s.classes;
  t.p.assign(static_cast<std::size_t>(d1) * d1 * d1, 0);
  for (int h = 0; h < d1; ++h) {
    int x = -1;
    int y = -1;
    for (int a = 0; a < s.order && x < 0; ++a) {
      for (int b = 0; b < s.order; ++b) {
        if (at(a, b) == h) {
          x = a;
          y = b;
          break;
        }
      }
    }
    for (int z = 0; z < s.order; ++z) {
      ++t.p[(static_cast<std::size_t>(at(x, z)) * d1 + at(z, y)) * d1 + h];
    }
  }
  return t;
}

inline std::vector<std::vector<long long>> acceptance_zoo() {
  return {{2}, {3}, {5}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 2, 2}, {2, 3, 2}, {4, 4}, {2, 2, 2, 2}};
}

// Every base point for small orders, the two extremes otherwise.
inline std::vector<int> base_sweep(int order) {
  std::vector<int> xs;
  if (order <= 12) {
    for (int x = 0; x < order; ++x) xs.push_back(x);
  } else {
    xs = {0, order - 1};
  }
  return xs;
}

}  // namespace testsupport
