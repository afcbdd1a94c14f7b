#include "wreath/scheme.hpp"

#include <map>
#include <utility>

namespace wreath {

namespace {

std::string entry_witness(int r, int c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

// First 1-entry of each adjacency matrix, in row-major scan order. The
// supports tile the full index set once axiom 2 holds, so a product's
// expansion coefficients can be read off at these positions.
std::vector<std::pair<int, int>> representatives(const std::vector<Matrix>& adjacency) {
  std::vector<std::pair<int, int>> reps;
  reps.reserve(adjacency.size());
  for (const auto& m : adjacency) {
    std::pair<int, int> rep{-1, -1};
    for (int r = 0; rep.first < 0 && r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) == 1) {
          rep = {r, c};
          break;
        }
      }
    }
    reps.push_back(rep);
  }
  return reps;
}

long long integer_value(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("expected integer, got " + to_string(q));
  return q.get_num().get_si();
}

void require_class(const Scheme& s, int i) {
  if (i < 0 || i > s.classes) {
    throw std::invalid_argument("class index " + std::to_string(i) + " out of range 0.." + std::to_string(s.classes));
  }
}

void require_point(const Scheme& s, int x) {
  if (x < 0 || x >= s.order) {
    throw std::invalid_argument("point " + std::to_string(x) + " out of range 0.." + std::to_string(s.order - 1));
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<AxiomViolation> violations)
    : std::runtime_error("scheme axioms violated (" + std::to_string(violations.size()) + " finding" +
                         (violations.size() == 1 ? "" : "s") + ")"),
      violations_(std::move(violations)) {}

Scheme validate(const std::vector<Matrix>& adjacency) {
  if (adjacency.empty()) throw std::invalid_argument("empty adjacency list");
  const int v = adjacency[0].rows();
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    const auto& m = adjacency[i];
    if (!m.is_square() || m.rows() != v) {
      throw std::invalid_argument("adjacency " + std::to_string(i) + " has shape " + m.shape() + ", expected " +
                                  std::to_string(v) + "x" + std::to_string(v));
    }
    if (!m.is_zero_one()) {
      throw std::invalid_argument("adjacency " + std::to_string(i) + " has an entry other than 0 or 1");
    }
    if (m.is_zero()) {
      throw std::invalid_argument("adjacency " + std::to_string(i) + " is all zero (empty relation)");
    }
  }
  const int d = static_cast<int>(adjacency.size()) - 1;

  std::vector<AxiomViolation> violations;

  const Matrix id = Matrix::identity(v);
  if (adjacency[0] != id) {
    for (int r = 0; r < v; ++r) {
      for (int c = 0; c < v; ++c) {
        if (adjacency[0].at(r, c) != id.at(r, c)) {
          violations.push_back({1, "adjacency 0 differs from the identity at " + entry_witness(r, c)});
          r = v;
          break;
        }
      }
    }
  }

  Matrix sum(v, v);
  for (const auto& m : adjacency) sum += m;
  bool partition = true;
  for (int r = 0; partition && r < v; ++r) {
    for (int c = 0; c < v; ++c) {
      if (sum.at(r, c) != 1) {
        violations.push_back({2, "adjacency sum is " + to_string(sum.at(r, c)) + " at " + entry_witness(r, c)});
        partition = false;
        break;
      }
    }
  }

  for (int i = 0; i <= d; ++i) {
    if (adjacency[i].is_symmetric()) continue;
    for (int r = 0; r < v; ++r) {
      bool found = false;
      for (int c = r + 1; c < v; ++c) {
        if (adjacency[i].at(r, c) != adjacency[i].at(c, r)) {
          violations.push_back({3, "adjacency " + std::to_string(i) + " is asymmetric at " + entry_witness(r, c)});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  // Axiom 4 reads expansion coefficients at support representatives, which
  // is only meaningful once the supports tile the index set.
  if (partition) {
    const auto reps = representatives(adjacency);
    for (int i = 0; i <= d; ++i) {
      for (int j = i; j <= d; ++j) {
        const Matrix product = adjacency[i] * adjacency[j];
        Matrix expansion(v, v);
        bool coeffs_ok = true;
        for (int h = 0; h <= d; ++h) {
          const Rational& coeff = product.at(reps[h].first, reps[h].second);
          if (!is_nonnegative_integer(coeff)) {
            violations.push_back({4, "product " + std::to_string(i) + "*" + std::to_string(j) + " has coefficient " +
                                         to_string(coeff) + " at class " + std::to_string(h)});
            coeffs_ok = false;
            break;
          }
          if (sgn(coeff) != 0) expansion += adjacency[h] * coeff;
        }
        if (coeffs_ok && expansion != product) {
          violations.push_back({4, "product " + std::to_string(i) + "*" + std::to_string(j) +
                                       " is outside the span of the adjacency matrices"});
        }
      }
    }
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return Scheme{v, d, adjacency};
}

Scheme complete_scheme(long long n) {
  if (n < 2) throw std::invalid_argument("complete scheme needs at least 2 points");
  const int v = static_cast<int>(n);
  Scheme s;
  s.order = v;
  s.classes = 1;
  s.adjacency = {Matrix::identity(v), Matrix::ones(v, v) - Matrix::identity(v)};
  return s;
}

Scheme wreath(const Scheme& x, const Scheme& y) {
  Scheme out;
  out.order = x.order * y.order;
  out.classes = x.classes + y.classes;
  const Matrix iu = Matrix::identity(y.order);
  const Matrix jv = Matrix::ones(x.order, x.order);
  for (int i = 0; i <= x.classes; ++i) out.adjacency.push_back(kronecker(iu, x.adjacency[i]));
  for (int j = 1; j <= y.classes; ++j) out.adjacency.push_back(kronecker(y.adjacency[j], jv));
  return out;
}

long long IntersectionTensor::at(int i, int j, int h) const {
  const int d1 = classes + 1;
  if (i < 0 || j < 0 || h < 0 || i >= d1 || j >= d1 || h >= d1) {
    throw std::invalid_argument("intersection number index out of range");
  }
  return p[(static_cast<std::size_t>(i) * d1 + j) * d1 + h];
}

IntersectionTensor intersection_tensor(const Scheme& s) {
  const int d1 = s.classes + 1;
  IntersectionTensor t;
  t.classes = s.classes;
  t.p.assign(static_cast<std::size_t>(d1) * d1 * d1, 0);
  const auto reps = representatives(s.adjacency);
  for (int i = 0; i < d1; ++i) {
    for (int j = i; j < d1; ++j) {
      const Matrix product = s.adjacency[i] * s.adjacency[j];
      for (int h = 0; h < d1; ++h) {
        const long long value = integer_value(product.at(reps[h].first, reps[h].second));
        t.p[(static_cast<std::size_t>(i) * d1 + j) * d1 + h] = value;
        t.p[(static_cast<std::size_t>(j) * d1 + i) * d1 + h] = value;
      }
    }
  }
  return t;
}

long long valency(const Scheme& s, int i) {
  require_class(s, i);
  return integer_value(s.adjacency[i].row_sum(0));
}

Matrix relation_matrix(const Scheme& s) {
  Matrix r(s.order, s.order);
  for (int i = 1; i <= s.classes; ++i) r += s.adjacency[i] * Rational(i);
  return r;
}

std::vector<int> relation_table(const Scheme& s) {
  std::vector<int> rel(static_cast<std::size_t>(s.order) * s.order, -1);
  for (int h = 0; h <= s.classes; ++h) {
    for (int r = 0; r < s.order; ++r) {
      for (int c = 0; c < s.order; ++c) {
        if (s.adjacency[h].at(r, c) == 1) rel[static_cast<std::size_t>(r) * s.order + c] = h;
      }
    }
  }
  return rel;
}

std::set<int> complex_product(const Scheme& s, int i, int j) {
  require_class(s, i);
  require_class(s, j);
  const Matrix product = s.adjacency[i] * s.adjacency[j];
  const auto reps = representatives(s.adjacency);
  std::set<int> out;
  for (int h = 0; h <= s.classes; ++h) {
    if (sgn(product.at(reps[h].first, reps[h].second)) != 0) out.insert(h);
  }
  return out;
}

bool is_closed_subset(const Scheme& s, const std::set<int>& delta) {
  if (delta.empty()) throw std::invalid_argument("closed subset test on empty set");
  for (int i : delta) require_class(s, i);
  for (int i : delta) {
    for (int j : delta) {
      for (int h : complex_product(s, i, j)) {
        if (!delta.count(h)) return false;
      }
    }
  }
  return true;
}

Scheme subscheme(const Scheme& s, const std::set<int>& delta, int x) {
  if (!delta.count(0)) throw std::invalid_argument("subscheme subset must contain relation 0");
  require_point(s, x);
  if (!is_closed_subset(s, delta)) throw std::invalid_argument("subscheme subset is not closed");

  const auto rel = relation_table(s);
  std::vector<int> members;
  for (int y = 0; y < s.order; ++y) {
    if (delta.count(rel[static_cast<std::size_t>(x) * s.order + y])) members.push_back(y);
  }
  const int m = static_cast<int>(members.size());
  std::vector<Matrix> restricted;
  for (int i : delta) {
    Matrix block(m, m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) block.at(a, b) = s.adjacency[i].at(members[a], members[b]);
    }
    restricted.push_back(std::move(block));
  }
  return validate(restricted);
}

TripleRegularityReport triple_regularity(const Scheme& s) {
  const int v = s.order;
  const int d1 = s.classes + 1;
  const auto rel = relation_table(s);
  const auto at = [&rel, v](int a, int b) { return rel[static_cast<std::size_t>(a) * v + b]; };

  std::map<std::array<int, 3>, std::pair<std::array<int, 3>, std::vector<long long>>> reference;
  std::vector<long long> counts(static_cast<std::size_t>(d1) * d1 * d1);
  for (int y = 0; y < v; ++y) {
    for (int z = 0; z < v; ++z) {
      for (int w = 0; w < v; ++w) {
        const std::array<int, 3> type{at(y, z), at(y, w), at(z, w)};
        std::fill(counts.begin(), counts.end(), 0);
        for (int u = 0; u < v; ++u) {
          ++counts[(static_cast<std::size_t>(at(y, u)) * d1 + at(z, u)) * d1 + at(w, u)];
        }
        auto [it, inserted] = reference.try_emplace(type, std::array<int, 3>{y, z, w}, counts);
        if (inserted) continue;
        if (it->second.second == counts) continue;
        for (std::size_t q = 0; q < counts.size(); ++q) {
          if (counts[q] == it->second.second[q]) continue;
          const int i = static_cast<int>(q) / (d1 * d1);
          const int j = (static_cast<int>(q) / d1) % d1;
          const int h = static_cast<int>(q) % d1;
          TripleRegularityWitness witness;
          witness.type = type;
          witness.target = {i, j, h};
          witness.first = it->second.first;
          witness.second = {y, z, w};
          witness.first_count = it->second.second[q];
          witness.second_count = counts[q];
          return {false, witness};
        }
      }
    }
  }
  return {true, std::nullopt};
}

Scheme permute_vertices(const Scheme& s, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != s.order) {
    throw std::invalid_argument("permutation length does not match scheme order");
  }
  std::vector<bool> seen(s.order, false);
  for (int image : sigma) {
    if (image < 0 || image >= s.order || seen[image]) {
      throw std::invalid_argument("not a permutation of the point set");
    }
    seen[image] = true;
  }
  Scheme out;
  out.order = s.order;
  out.classes = s.classes;
  for (const auto& a : s.adjacency) {
    Matrix b(s.order, s.order);
    for (int r = 0; r < s.order; ++r) {
      for (int c = 0; c < s.order; ++c) {
        if (a.at(r, c) == 1) b.at(sigma[r], sigma[c]) = 1;
      }
    }
    out.adjacency.push_back(std::move(b));
  }
  return out;
}

}  // namespace wreath
