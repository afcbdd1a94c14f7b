#include "wreath/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wreath {

namespace {

constexpr long long kOrderCap = 1LL << 30;

Rational rat(long long x) { return Rational(static_cast<long>(x)); }

void require_params(const WreathParams& params) {
  if (params.factors.empty()) throw std::invalid_argument("factor list is empty");
  for (long long n : params.factors) {
    if (n < 2) throw std::invalid_argument("factor " + std::to_string(n) + " is below 2");
  }
}

std::vector<long long> scheme_valencies(const Scheme& s) {
  std::vector<long long> k(s.classes + 1);
  for (int i = 0; i <= s.classes; ++i) k[i] = valency(s, i);
  return k;
}

std::vector<long long> prefix_sums(const std::vector<long long>& k) {
  std::vector<long long> kappa(k.size());
  std::partial_sum(k.begin(), k.end(), kappa.begin());
  return kappa;
}

// One named check; keeps the first failing witness.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;

  void require(bool ok, const std::string& w) {
    if (!ok && passed) {
      passed = false;
      witness = w;
    }
  }

  CheckResult done() && { return {std::move(name), passed, std::move(witness)}; }
};

std::string pair_label(const char* tag, int i, int j) {
  return std::string(tag) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_matching_basis(const Scheme& s, const PrimaryBasis& pb) {
  if (pb.classes != s.classes || pb.at(0, 0).rows() != s.order) {
    throw std::invalid_argument("primary basis does not match the scheme");
  }
}

// All-ones on the (i, j) subconstituent block, zero elsewhere.
Matrix masked_ones(const TerwilligerAlgebra& t, int i, int j) {
  const int v = t.scheme.order;
  const Matrix& ei = t.duals.mats[i];
  const Matrix& ej = t.duals.mats[j];
  Matrix out(v, v);
  for (int r = 0; r < v; ++r) {
    if (ei.at(r, r) != 1) continue;
    for (int c = 0; c < v; ++c) {
      if (ej.at(c, c) == 1) out.at(r, c) = 1;
    }
  }
  return out;
}

}  // namespace

long long WreathParams::order() const {
  long long v = 1;
  for (long long n : factors) {
    if (n < 1 || v > kOrderCap / n) throw std::overflow_error("scheme order exceeds the supported range");
    v *= n;
  }
  return v;
}

std::vector<long long> WreathParams::valencies() const {
  std::vector<long long> k{1};
  long long prefix = 1;
  for (long long n : factors) {
    k.push_back(prefix * (n - 1));
    prefix *= n;
  }
  return k;
}

int WreathParams::two_count() const {
  return static_cast<int>(std::count(factors.begin(), factors.end(), 2));
}

Scheme build(const WreathParams& params) {
  require_params(params);
  (void)params.order();
  Scheme s = complete_scheme(params.factors[0]);
  for (std::size_t i = 1; i < params.factors.size(); ++i) s = wreath(s, complete_scheme(params.factors[i]));
  return s;
}

const Matrix& PrimaryBasis::at(int i, int j) const {
  if (i < 0 || j < 0 || i > classes || j > classes) throw std::invalid_argument("primary basis index out of range");
  return g[static_cast<std::size_t>(i) * (classes + 1) + j];
}

PrimaryBasis g_basis(const TerwilligerAlgebra& t) {
  const int d = t.scheme.classes;
  const auto k = scheme_valencies(t.scheme);
  PrimaryBasis pb;
  pb.classes = d;
  pb.g.reserve(static_cast<std::size_t>(d + 1) * (d + 1));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      Matrix g;
      if (i < j) {
        g = triple_product(t, i, j, j);
      } else if (i > j) {
        g = triple_product(t, i, i, j);
      } else {
        g = masked_ones(t, i, i);
      }
      pb.g.push_back(g * make_rational(1, k[j]));
    }
  }
  pb.span = span_of(pb.g);
  return pb;
}

CentralIdempotents f_idempotents(const TerwilligerAlgebra& t) {
  const int d = t.scheme.classes;
  const auto k = scheme_valencies(t.scheme);
  const auto kappa = prefix_sums(k);
  CentralIdempotents fs;
  fs.classes = d;
  for (int i = 1; i <= d; ++i) {
    Matrix sum = triple_product(t, i, 0, i);
    for (int h = 0; h <= i - 1; ++h) {
      Matrix f;
      if (h < i - 1) {
        Matrix next = sum + triple_product(t, i, h + 1, i);
        f = sum * make_rational(1, kappa[h]) - next * make_rational(1, kappa[h + 1]);
        sum = std::move(next);
      } else {
        f = sum * make_rational(1, kappa[i - 1]) - masked_ones(t, i, i) * make_rational(1, k[i]);
      }
      if (!f.is_zero()) ++fs.nonzero_count;
      fs.f.emplace(std::make_pair(i, h), std::move(f));
    }
  }
  return fs;
}

std::vector<CheckResult> verify_bose(const Scheme& s, const WreathParams& params) {
  require_params(params);
  if (s.classes != params.classes() || s.order != params.order()) {
    throw std::invalid_argument("scheme shape does not match the factor list");
  }
  const int d = s.classes;
  const int v = s.order;
  const auto& A = s.adjacency;
  const auto k = params.valencies();
  std::vector<CheckResult> out;

  Check valencies{"valency-formula"};
  for (int i = 0; i <= d; ++i) {
    valencies.require(valency(s, i) == k[i], "class " + std::to_string(i) + " has valency " +
                                                 std::to_string(valency(s, i)) + ", the formula gives " +
                                                 std::to_string(k[i]));
  }
  out.push_back(std::move(valencies).done());

  Check collapse{"product-collapse"};
  for (int i = 0; i <= d && collapse.passed; ++i) {
    for (int j = i + 1; j <= d && collapse.passed; ++j) {
      collapse.require(A[i] * A[j] == A[j] * rat(k[i]),
                       "A_" + std::to_string(i) + " A_" + std::to_string(j) + " != k_" + std::to_string(i) + " A_" +
                           std::to_string(j));
    }
  }
  out.push_back(std::move(collapse).done());

  Check square{"square-expansion"};
  for (int i = 1; i <= d && square.passed; ++i) {
    const long long n = params.factors[i - 1];
    Matrix expected(v, v);
    for (int r = 0; r < i; ++r) expected += A[r];
    expected = expected * rat(k[i]);
    expected += A[i] * (rat(k[i]) * rat(n - 2) / rat(n - 1));
    square.require(A[i] * A[i] == expected, "A_" + std::to_string(i) + " squared deviates from the expansion");
  }
  out.push_back(std::move(square).done());

  Check closed{"closed-prefixes"};
  std::set<int> prefix;
  for (int i = 0; i <= d; ++i) {
    prefix.insert(i);
    closed.require(is_closed_subset(s, prefix), "classes 0.." + std::to_string(i) + " are not closed");
  }
  out.push_back(std::move(closed).done());

  Check prefix_square{"prefix-sum-square"};
  {
    Matrix sum(v, v);
    long long kap = 0;
    for (int h = 0; h <= d; ++h) {
      sum += A[h];
      kap += k[h];
      prefix_square.require(sum * sum == sum * rat(kap),
                            "squared prefix sum 0.." + std::to_string(h) + " deviates");
    }
  }
  out.push_back(std::move(prefix_square).done());

  Check prefix_action{"prefix-sum-action"};
  {
    Matrix sum(v, v);
    for (int h = 0; h <= d && prefix_action.passed; ++h) {
      sum += A[h];
      for (int g = 0; g <= h && prefix_action.passed; ++g) {
        prefix_action.require(A[g] * sum == sum * rat(k[g]), "A_" + std::to_string(g) + " times prefix sum 0.." +
                                                                 std::to_string(h) + " deviates");
      }
    }
  }
  out.push_back(std::move(prefix_action).done());

  Check recursion{"relation-recursion"};
  if (d >= 2) {
    WreathParams head{std::vector<long long>(params.factors.begin(), params.factors.end() - 1)};
    const int n = static_cast<int>(params.factors.back());
    const Matrix inner = kronecker(Matrix::identity(n), relation_matrix(build(head)));
    const Matrix outer =
        kronecker((Matrix::ones(n, n) - Matrix::identity(n)) * rat(d), Matrix::ones(v / n, v / n));
    recursion.require(relation_matrix(s) == inner + outer, "relation matrix does not split over the last factor");
  } else {
    recursion.require(relation_matrix(s) == A[1], "relation matrix of a one-class scheme is not A_1");
  }
  out.push_back(std::move(recursion).done());

  return out;
}

std::vector<CheckResult> verify_lemma_suite(const TerwilligerAlgebra& t, const PrimaryBasis& pb) {
  const Scheme& s = t.scheme;
  const int d = s.classes;
  require_matching_basis(s, pb);
  const int v = s.order;
  const auto& A = s.adjacency;
  const auto& E = t.duals.mats;
  const auto k = scheme_valencies(s);
  const auto kappa = prefix_sums(k);
  const auto tp = [&t](int i, int j, int h) { return triple_product(t, i, j, h); };
  std::vector<CheckResult> out;

  Check vanishing{"triple-vanishing"};
  {
    const auto tensor = intersection_tensor(s);
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        for (int h = 0; h <= d; ++h) {
          vanishing.require(tp(i, j, h).is_zero() == (tensor.at(j, h, i) == 0),
                            "E_" + std::to_string(i) + " A_" + std::to_string(j) + " E_" + std::to_string(h) +
                                " disagrees with p(" + std::to_string(j) + "," + std::to_string(h) + "," +
                                std::to_string(i) + ")");
        }
      }
    }
  }
  out.push_back(std::move(vanishing).done());

  Check pattern{"nonzero-pattern"};
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int h = 0; h <= d; ++h) {
        const std::string label = "E_" + std::to_string(i) + " A_" + std::to_string(j) + " E_" + std::to_string(h);
        if (i != j) {
          pattern.require(!tp(i, j, h).is_zero() == (h == std::max(i, j)), label + " breaks the off-diagonal rule");
        }
        if (i < h) {
          pattern.require(!tp(i, j, h).is_zero() == (j == h), label + " breaks the upper block rule");
        }
        if (h > i) {
          pattern.require(tp(i, i, h).is_zero(),
                          "E_" + std::to_string(i) + " A_" + std::to_string(i) + " E_" + std::to_string(h) +
                              " should vanish");
        }
        if (j < h) {
          pattern.require(!tp(i, j, h).is_zero() == (i == h), label + " breaks the lower adjacency rule");
        }
      }
    }
  }
  out.push_back(std::move(pattern).done());

  Check dual{"dual-identities"};
  for (int i = 0; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      dual.require(tp(i, j, j) == E[i] * A[j], pair_label("left cut of E", i, j) + " A fails");
      dual.require(tp(j, j, i) == A[j] * E[i], pair_label("right cut of A E", j, i) + " fails");
      dual.require(tp(j, i, j) == A[i] * E[j], pair_label("diagonal cut of A E", i, j) + " fails");
      dual.require(tp(i, j, j) == masked_ones(t, i, j), pair_label("ones block identity at", i, j) + " fails");
    }
    Matrix below(v, v);
    Matrix dual_prefix(v, v);
    for (int r = 0; r <= i; ++r) {
      below += tp(i, r, i);
      dual_prefix += E[r];
    }
    dual.require(masked_ones(t, i, i) == below,
                 "diagonal ones block " + std::to_string(i) + " is not the sum of the lower relations");
    dual.require(A[i] * E[i] == dual_prefix * (A[i] * E[i]),
                 "A_" + std::to_string(i) + " E_" + std::to_string(i) + " has support above block " + std::to_string(i));
    dual.require(E[i] * A[i] == (E[i] * A[i]) * dual_prefix,
                 "E_" + std::to_string(i) + " A_" + std::to_string(i) + " has support above block " + std::to_string(i));
  }
  out.push_back(std::move(dual).done());

  Check absorb{"unit-absorption"};
  for (int i = 0; i <= d && absorb.passed; ++i) {
    for (int j = 0; j <= d && absorb.passed; ++j) {
      for (int h = 0; h < i; ++h) {
        absorb.require(A[h] * pb.at(i, j) == tp(i, h, i) * pb.at(i, j),
                       "A_" + std::to_string(h) + " " + pair_label("G", i, j) + " is not absorbed on the left");
      }
      for (int h = 0; h < j; ++h) {
        absorb.require(pb.at(i, j) * A[h] == pb.at(i, j) * tp(j, h, j),
                       pair_label("G", i, j) + " A_" + std::to_string(h) + " is not absorbed on the right");
      }
    }
  }
  out.push_back(std::move(absorb).done());

  Check commute{"diagonal-commute"};
  for (int i = 0; i <= d && commute.passed; ++i) {
    for (int g = 0; g <= i && commute.passed; ++g) {
      for (int h = 0; h <= i && commute.passed; ++h) {
        if (g == i && h == i) continue;
        commute.require(tp(i, g, i) * tp(i, h, i) == E[i] * (A[g] * A[h]) * E[i],
                        "diagonal blocks of A_" + std::to_string(g) + ", A_" + std::to_string(h) +
                            " do not multiply through at block " + std::to_string(i));
      }
    }
  }
  out.push_back(std::move(commute).done());

  Check idempotent{"prefix-idempotent"};
  for (int i = 1; i <= d && idempotent.passed; ++i) {
    Matrix sum(v, v);
    for (int h = 0; h <= i - 1 && idempotent.passed; ++h) {
      sum += tp(i, h, i);
      idempotent.require(sum * sum == sum * rat(kappa[h]),
                         "diagonal prefix sum (" + std::to_string(i) + ",0.." + std::to_string(h) +
                             ") is not a scaled idempotent");
    }
  }
  out.push_back(std::move(idempotent).done());

  Check action{"prefix-action"};
  for (int i = 1; i <= d && action.passed; ++i) {
    Matrix sum(v, v);
    for (int h = 0; h <= i - 1 && action.passed; ++h) {
      sum += tp(i, h, i);
      for (int g = 0; g <= d && action.passed; ++g) {
        Matrix left_expected;
        Matrix right_expected;
        if (g <= h) {
          left_expected = sum * rat(k[g]);
          right_expected = left_expected;
        } else if (g < i) {
          left_expected = tp(i, g, i) * rat(kappa[h]);
          right_expected = left_expected;
        } else if (g == i) {
          left_expected = (A[i] * E[i]) * rat(kappa[h]);
          right_expected = (E[i] * A[i]) * rat(kappa[h]);
        } else {
          left_expected = tp(g, g, i) * rat(kappa[h]);
          right_expected = tp(i, g, g) * rat(kappa[h]);
        }
        const std::string where =
            " prefix (" + std::to_string(i) + ",0.." + std::to_string(h) + "), g=" + std::to_string(g);
        action.require(A[g] * sum == left_expected, "left action deviates at" + where);
        action.require(sum * A[g] == right_expected, "right action deviates at" + where);
      }
    }
  }
  out.push_back(std::move(action).done());

  return out;
}

BlockForm block_form(const TerwilligerAlgebra& t, const PrimaryBasis& pb) {
  const Scheme& s = t.scheme;
  const int d = s.classes;
  require_matching_basis(s, pb);
  const int v = s.order;
  const int x = t.base_point;
  const auto rel = relation_table(s);
  const auto rel_to_base = [&rel, &s, x](int y) { return rel[static_cast<std::size_t>(x) * s.order + y]; };

  BlockForm bf;
  bf.ordering.resize(v);
  std::iota(bf.ordering.begin(), bf.ordering.end(), 0);
  std::stable_sort(bf.ordering.begin(), bf.ordering.end(),
                   [&rel_to_base](int a, int b) { return rel_to_base(a) < rel_to_base(b); });

  std::vector<long long> sizes(d + 1, 0);
  for (int y = 0; y < v; ++y) ++sizes[rel_to_base(y)];
  bf.block_sizes = sizes;
  std::vector<int> offset(d + 2, 0);
  for (int h = 0; h <= d; ++h) offset[h + 1] = offset[h] + static_cast<int>(sizes[h]);

  const auto k = scheme_valencies(s);
  const auto kappa = prefix_sums(k);
  const auto entry = [&](const Matrix& m, int br, int bc, int a, int b) -> const Rational& {
    return m.at(bf.ordering[offset[br] + a], bf.ordering[offset[bc] + b]);
  };

  Check pattern{"block-pattern"};
  for (int j = 0; j <= d && pattern.passed; ++j) {
    for (int br = 0; br <= d && pattern.passed; ++br) {
      for (int bc = 0; bc <= d && pattern.passed; ++bc) {
        int expected = 0;  // 0: zero block, 1: ones block, -1: unconstrained
        if (br < j) {
          expected = bc == j ? 1 : 0;
        } else if (br == j) {
          expected = bc < j ? 1 : (bc == j ? -1 : 0);
        } else {
          expected = bc == br ? -1 : 0;
        }
        if (expected < 0) continue;
        for (int a = 0; a < sizes[br] && pattern.passed; ++a) {
          for (int b = 0; b < sizes[bc]; ++b) {
            if (entry(s.adjacency[j], br, bc, a, b) == expected) continue;
            pattern.require(false, "A_" + std::to_string(j) + " block (" + std::to_string(br) + "," +
                                       std::to_string(bc) + ") is not " + (expected ? "all ones" : "zero"));
            break;
          }
        }
      }
    }
  }
  bf.checks.push_back(std::move(pattern).done());

  Check row_sums{"block-row-sums"};
  for (int j = 0; j <= d && row_sums.passed; ++j) {
    for (int br = j; br <= d && row_sums.passed; ++br) {
      const long long expected = br == j ? k[j] - (j == 0 ? 0 : kappa[j - 1]) : k[j];
      for (int a = 0; a < sizes[br] && row_sums.passed; ++a) {
        Rational sum = 0;
        for (int b = 0; b < sizes[br]; ++b) sum += entry(s.adjacency[j], br, br, a, b);
        row_sums.require(sum == rat(expected), "diagonal block (" + std::to_string(br) + "," + std::to_string(br) +
                                                   ") of A_" + std::to_string(j) + " has a row sum other than " +
                                                   std::to_string(expected));
      }
    }
  }
  bf.checks.push_back(std::move(row_sums).done());

  Check unit{"unit-block-pattern"};
  for (int i = 0; i <= d && unit.passed; ++i) {
    for (int j = 0; j <= d && unit.passed; ++j) {
      const Rational scale = make_rational(1, k[j]);
      const Matrix& g = pb.at(i, j);
      for (int br = 0; br <= d && unit.passed; ++br) {
        for (int bc = 0; bc <= d && unit.passed; ++bc) {
          const Rational expected = (br == i && bc == j) ? scale : Rational(0);
          for (int a = 0; a < sizes[br] && unit.passed; ++a) {
            for (int b = 0; b < sizes[bc]; ++b) {
              if (entry(g, br, bc, a, b) == expected) continue;
              unit.require(false, pair_label("G", i, j) + " deviates in block (" + std::to_string(br) + "," +
                                      std::to_string(bc) + ")");
              break;
            }
          }
        }
      }
    }
  }
  bf.checks.push_back(std::move(unit).done());

  return bf;
}

std::vector<CheckResult> verify_primary_ideal(const TerwilligerAlgebra& t, const PrimaryBasis& pb) {
  const Scheme& s = t.scheme;
  const int d = s.classes;
  require_matching_basis(s, pb);
  const int v = s.order;
  const auto& A = s.adjacency;
  const auto& E = t.duals.mats;
  const auto k = scheme_valencies(s);
  const auto kappa = prefix_sums(k);
  const Matrix zero(v, v);
  std::vector<CheckResult> out;

  Check units{"matrix-units"};
  for (int i = 0; i <= d && units.passed; ++i) {
    for (int j = 0; j <= d && units.passed; ++j) {
      for (int g = 0; g <= d && units.passed; ++g) {
        for (int h = 0; h <= d && units.passed; ++h) {
          const Matrix& expected = j == g ? pb.at(i, h) : zero;
          units.require(pb.at(i, j) * pb.at(g, h) == expected,
                        pair_label("G", i, j) + " " + pair_label("G", g, h) + " breaks the matrix unit relations");
        }
      }
    }
  }
  out.push_back(std::move(units).done());

  Check dimension{"primary-dimension"};
  dimension.require(pb.span.dim() == (d + 1) * (d + 1),
                    "primary span has dimension " + std::to_string(pb.span.dim()) + ", expected " +
                        std::to_string((d + 1) * (d + 1)));
  out.push_back(std::move(dimension).done());

  Check unit_element{"primary-unit"};
  {
    Matrix e(v, v);
    for (int i = 0; i <= d; ++i) e += pb.at(i, i);
    for (int i = 0; i <= d && unit_element.passed; ++i) {
      for (int j = 0; j <= d && unit_element.passed; ++j) {
        unit_element.require(e * pb.at(i, j) == pb.at(i, j) && pb.at(i, j) * e == pb.at(i, j),
                             "diagonal sum is not a two-sided unit on " + pair_label("G", i, j));
        for (int h = 0; h <= d && unit_element.passed; ++h) {
          const Matrix& le = h == i ? pb.at(i, j) : zero;
          const Matrix& re = h == j ? pb.at(i, j) : zero;
          unit_element.require(E[h] * pb.at(i, j) == le && pb.at(i, j) * E[h] == re,
                               "E_" + std::to_string(h) + " does not project " + pair_label("G", i, j) +
                                   " by its block indices");
        }
      }
    }
  }
  out.push_back(std::move(unit_element).done());

  Check action{"unit-action"};
  for (int h = 0; h <= d && action.passed; ++h) {
    for (int i = 0; i <= d && action.passed; ++i) {
      for (int j = 0; j <= d && action.passed; ++j) {
        Matrix left_expected(v, v);
        if (h < i) {
          left_expected = pb.at(i, j) * rat(k[h]);
        } else if (h == i) {
          for (int r = 0; r < i; ++r) left_expected += pb.at(r, j);
          left_expected = left_expected * rat(k[i]);
          left_expected += pb.at(i, j) * rat(k[i] - (i == 0 ? 0 : kappa[i - 1]));
        } else {
          left_expected = pb.at(h, j) * rat(k[i]);
        }
        Matrix right_expected(v, v);
        if (h < j) {
          right_expected = pb.at(i, j) * rat(k[h]);
        } else if (h == j) {
          for (int r = 0; r < j; ++r) right_expected += pb.at(i, r) * rat(k[r]);
          right_expected += pb.at(i, j) * rat(k[j] - (j == 0 ? 0 : kappa[j - 1]));
        } else {
          right_expected = pb.at(i, h) * rat(k[h]);
        }
        action.require(A[h] * pb.at(i, j) == left_expected,
                       "A_" + std::to_string(h) + " " + pair_label("G", i, j) + " deviates");
        action.require(pb.at(i, j) * A[h] == right_expected,
                       pair_label("G", i, j) + " A_" + std::to_string(h) + " deviates");
      }
    }
  }
  out.push_back(std::move(action).done());

  Check ideal{"ideal"};
  ideal.require(is_ideal(t, pb.span), "primary span is not a two-sided ideal");
  out.push_back(std::move(ideal).done());

  Check quotient{"quotient-commutative"};
  quotient.require(quotient_is_commutative(t, pb.span), "a commutator falls outside the primary span");
  out.push_back(std::move(quotient).done());

  return out;
}

std::vector<CheckResult> verify_f(const TerwilligerAlgebra& t, const CentralIdempotents& fs, const PrimaryBasis& pb) {
  const Scheme& s = t.scheme;
  const int d = s.classes;
  require_matching_basis(s, pb);
  if (fs.classes != d || (!fs.f.empty() && fs.f.begin()->second.rows() != s.order)) {
    throw std::invalid_argument("central idempotents do not match the scheme");
  }
  const int v = s.order;
  const auto& A = s.adjacency;
  const auto& E = t.duals.mats;
  const auto k = scheme_valencies(s);
  const auto kappa = prefix_sums(k);
  const Matrix zero(v, v);
  std::vector<CheckResult> out;

  // n_i recovered from the valencies; for a wreath power the division is
  // exact.
  std::vector<long long> n(d + 1, 0);
  bool factors_ok = true;
  for (int i = 1; i <= d; ++i) {
    if (kappa[i - 1] == 0 || k[i] % kappa[i - 1] != 0) {
      factors_ok = false;
      break;
    }
    n[i] = k[i] / kappa[i - 1] + 1;
  }

  Check support{"idempotent-support"};
  support.require(factors_ok, "valencies do not factor as a wreath power");
  if (factors_ok) {
    int expected_nonzero = 0;
    for (int i = 1; i <= d; ++i) {
      for (int h = 0; h <= i - 1; ++h) {
        const bool expect_zero = (h == i - 1) && (n[i] == 2);
        if (!expect_zero) ++expected_nonzero;
        support.require(fs.f.at({i, h}).is_zero() == expect_zero,
                        pair_label("F", i, h) + (expect_zero ? " should vanish" : " should not vanish"));
      }
    }
    support.require(fs.nonzero_count == expected_nonzero,
                    "nonzero count is " + std::to_string(fs.nonzero_count) + ", expected " +
                        std::to_string(expected_nonzero));
  }
  out.push_back(std::move(support).done());

  Check idempotents{"idempotents"};
  for (const auto& [key, f] : fs.f) {
    if (f.is_zero() || !idempotents.passed) continue;
    const auto label = pair_label("F", key.first, key.second);
    idempotents.require(f * f == f, label + " is not idempotent");
    for (int g = 0; g <= d && idempotents.passed; ++g) {
      idempotents.require(A[g] * f == f * A[g], label + " does not commute with A_" + std::to_string(g));
      const Matrix& expected = g == key.first ? f : zero;
      idempotents.require(E[g] * f == expected && f * E[g] == expected,
                          label + " is not confined to block " + std::to_string(key.first));
    }
  }
  out.push_back(std::move(idempotents).done());

  Check action{"idempotent-action"};
  for (const auto& [key, f] : fs.f) {
    if (!action.passed) break;
    const int h = key.second;
    for (int g = 0; g <= d && action.passed; ++g) {
      Matrix expected;
      if (g <= h) {
        expected = f * rat(k[g]);
      } else if (g == h + 1) {
        expected = f * rat(-kappa[h]);
      } else {
        expected = zero;
      }
      const std::string where = "A_" + std::to_string(g) + " on " + pair_label("F", key.first, key.second);
      action.require(A[g] * f == expected && f * A[g] == expected, where + " deviates");
    }
  }
  out.push_back(std::move(action).done());

  Check orthogonality{"orthogonality"};
  for (const auto& [key1, f1] : fs.f) {
    if (f1.is_zero() || !orthogonality.passed) continue;
    for (const auto& [key2, f2] : fs.f) {
      if (key1 == key2 || f2.is_zero()) continue;
      orthogonality.require((f1 * f2).is_zero(), pair_label("F", key1.first, key1.second) + " " +
                                                     pair_label("F", key2.first, key2.second) + " is not zero");
    }
    for (int i = 0; i <= d && orthogonality.passed; ++i) {
      for (int j = 0; j <= d && orthogonality.passed; ++j) {
        orthogonality.require((f1 * pb.at(i, j)).is_zero() && (pb.at(i, j) * f1).is_zero(),
                              pair_label("F", key1.first, key1.second) + " does not annihilate " +
                                  pair_label("G", i, j));
      }
    }
  }
  out.push_back(std::move(orthogonality).done());

  Check decomposition{"decomposition"};
  {
    SpanBasis combined = pb.span;
    Matrix unit_sum(v, v);
    for (int i = 0; i <= d; ++i) unit_sum += pb.at(i, i);
    for (const auto& [key, f] : fs.f) {
      if (f.is_zero()) continue;
      decomposition.require(combined.insert(vectorize(f)),
                            pair_label("F", key.first, key.second) + " is dependent on earlier components");
      unit_sum += f;
    }
    decomposition.require(combined == t.basis, "primary span plus central idempotents does not match the algebra");
    decomposition.require(unit_sum == Matrix::identity(v), "component units do not sum to the identity");
  }
  out.push_back(std::move(decomposition).done());

  return out;
}

RecognitionResult recognize(const Scheme& s) {
  const int d = s.classes;
  RecognitionResult res;
  if (d == 0) {
    res.is_wreath = true;
    return res;
  }
  const auto k = scheme_valencies(s);

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&k](int a, int b) { return k[a] < k[b]; });

  // Equal-valency classes are interchangeable candidates for a slot, so the
  // search runs over all reorderings within each tie group.
  std::vector<std::vector<int>> groups;
  for (int idx = 0; idx < d;) {
    int end = idx;
    while (end < d && k[order[end]] == k[order[idx]]) ++end;
    groups.emplace_back(order.begin() + idx, order.begin() + end);
    idx = end;
  }

  bool first_candidate = true;
  while (true) {
    std::vector<int> sigma{0};
    for (const auto& group : groups) sigma.insert(sigma.end(), group.begin(), group.end());

    bool valid = true;
    for (int a = 0; a <= d && valid; ++a) {
      for (int b = a + 1; b <= d && valid; ++b) {
        const int la = sigma[a];
        const int lb = sigma[b];
        if (s.adjacency[la] * s.adjacency[lb] == s.adjacency[lb] * rat(k[la])) continue;
        valid = false;
        if (first_candidate) {
          res.witness_i = la;
          res.witness_j = lb;
        }
      }
    }
    first_candidate = false;

    if (valid) {
      std::vector<long long> factors;
      long long kap = 1;
      for (int a = 1; a <= d && valid; ++a) {
        const long long ka = k[sigma[a]];
        if (ka % kap != 0) {
          valid = false;
          break;
        }
        factors.push_back(ka / kap + 1);
        kap += ka;
      }
      if (valid) {
        res.is_wreath = true;
        res.factors = std::move(factors);
        res.witness_i = -1;
        res.witness_j = -1;
        return res;
      }
    }

    int gi = static_cast<int>(groups.size()) - 1;
    while (gi >= 0 && !std::next_permutation(groups[gi].begin(), groups[gi].end())) --gi;
    if (gi < 0) break;
  }
  return res;
}

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

StructureReport structure_report(const WreathParams& params, int x, bool with_triple_regularity) {
  require_params(params);
  StructureReport rep;
  rep.params = params;
  rep.base_point = x;

  const Scheme s = build(params);
  rep.checks = verify_bose(s, params);

  const TerwilligerAlgebra t = terwilliger_algebra(s, x);
  const PrimaryBasis pb = g_basis(t);
  const CentralIdempotents fs = f_idempotents(t);

  auto add = [&rep](std::vector<CheckResult> more) {
    rep.checks.insert(rep.checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  add(verify_lemma_suite(t, pb));
  add(block_form(t, pb).checks);
  add(verify_primary_ideal(t, pb));
  add(verify_f(t, fs, pb));

  rep.dim_t = t.basis.dim();
  rep.dim_u = pb.span.dim();
  rep.f_nonzero = fs.nonzero_count;

  const int d = params.classes();
  const long long b = params.two_count();
  Check dimension{"dimension-formula"};
  const long long expected_dim = static_cast<long long>(d + 1) * (d + 1) + static_cast<long long>(d) * (d + 1) / 2 - b;
  dimension.require(rep.dim_t == expected_dim, "algebra dimension is " + std::to_string(rep.dim_t) + ", expected " +
                                                   std::to_string(expected_dim));
  rep.checks.push_back(std::move(dimension).done());

  const SpanBasis z = center(t);
  rep.center_dim = z.dim();
  Check center_check{"center-dimension"};
  const long long expected_center = 1 + static_cast<long long>(d) * (d + 1) / 2 - b;
  center_check.require(rep.center_dim == expected_center,
                       "center dimension is " + std::to_string(rep.center_dim) + ", expected " +
                           std::to_string(expected_center));
  {
    Matrix unit(s.order, s.order);
    for (int i = 0; i <= d; ++i) unit += pb.at(i, i);
    std::vector<Matrix> gens{unit};
    for (const auto& [key, f] : fs.f) {
      if (!f.is_zero()) gens.push_back(f);
    }
    center_check.require(z == span_of(gens),
                         "center is not spanned by the primary unit and the central idempotents");
  }
  rep.checks.push_back(std::move(center_check).done());

  Check tspan{"triple-span"};
  tspan.require(triple_product_span(t) == t.basis, "triple products do not span the algebra");
  rep.checks.push_back(std::move(tspan).done());

  if (with_triple_regularity) {
    rep.triple_regularity_run = true;
    Check regular{"triple-regularity"};
    const auto report = triple_regularity(s);
    std::string witness;
    if (report.witness) {
      const auto& w = *report.witness;
      witness = "triples (" + std::to_string(w.first[0]) + "," + std::to_string(w.first[1]) + "," +
                std::to_string(w.first[2]) + ") and (" + std::to_string(w.second[0]) + "," +
                std::to_string(w.second[1]) + "," + std::to_string(w.second[2]) + ") of one type have counts " +
                std::to_string(w.first_count) + " and " + std::to_string(w.second_count);
    }
    regular.require(report.is_triply_regular, witness);
    rep.checks.push_back(std::move(regular).done());
  }

  return rep;
}

}  // namespace wreath
