#include "hecke/closure.hpp"
#include "hecke/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace hecke;

namespace {

SparseVector vec(std::initializer_list<long long> dense) {
  std::vector<Rational> d;
  for (auto x : dense) d.emplace_back(x);
  return SparseVector::from_dense(d);
}

// Dense Gaussian elimination, kept deliberately naive as a rank oracle.
std::size_t naive_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(SparseVector, ArithmeticDropsZeros) {
  SparseVector a = vec({1, 0, 2});
  SparseVector b = vec({1, 1, 2});
  SparseVector d = b - a;
  EXPECT_EQ(d, vec({0, 1, 0}));
  EXPECT_EQ(d.nnz(), 1u);
  EXPECT_EQ(a.dot(b), Rational(5));
}

TEST(Subspace, SpanInsertExamples) {
  Subspace s(3);
  EXPECT_FALSE(s.insert(SparseVector{}));
  EXPECT_TRUE(s.insert(vec({1, 1, 0})));
  EXPECT_TRUE(s.insert(vec({1, 0, 0})));
  EXPECT_FALSE(s.insert(vec({0, 1, 0})));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_THROW(s.insert(SparseVector::unit(5)), std::invalid_argument);
}

TEST(Subspace, RowsAreFullyReduced) {
  Subspace s(4);
  s.insert(vec({2, 4, 0, 6}));
  s.insert(vec({0, 1, 1, 0}));
  s.insert(vec({1, 0, 0, 1}));
  auto piv = s.sorted_pivots();
  EXPECT_TRUE(std::is_sorted(piv.begin(), piv.end()));
  for (Index k = 0; k < s.dim(); ++k) {
    const auto& row = s.rows()[k];
    EXPECT_EQ(row.leading_index(), s.pivots()[k]);
    EXPECT_EQ(row.at(s.pivots()[k]), Rational(1));
    for (Index j = 0; j < s.dim(); ++j) {
      if (j != k) {
        EXPECT_TRUE(row.at(s.pivots()[j]).is_zero());
      }
    }
  }
}

TEST(Subspace, RankMatchesNaiveEliminationOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 3) % 8;
    std::vector<std::vector<Rational>> d(rows, std::vector<Rational>(cols));
    for (auto& r : d) {
      for (auto& x : r) x = Rational(coef(rng) * (coef(rng) == 0 ? 0 : 1));
    }
    EXPECT_EQ(rank(Matrix::from_dense(d)), naive_rank(d));
  }
}

TEST(Subspace, CanonicalFormIndependentOfInsertionOrder) {
  std::vector<SparseVector> vs = {vec({1, 2, 3, 0}), vec({0, 1, 1, 1}), vec({1, 3, 4, 1}), vec({2, 0, 1, 5})};
  Subspace a = span(4, vs);
  std::reverse(vs.begin(), vs.end());
  Subspace b = span(4, vs);
  EXPECT_EQ(a.sorted_rows(), b.sorted_rows());
}

TEST(Linalg, KernelAndInverse) {
  Matrix m = Matrix::from_dense({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  auto ker = kernel(m);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(m.transpose().apply(ker[0]).empty());
  EXPECT_FALSE(inverse(m).has_value());

  Matrix u = Matrix::from_dense({{Rational(1), Rational(3)}, {Rational(0), Rational(2)}});
  auto inv = inverse(u);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(u * *inv, Matrix::identity(2));
}

TEST(Linalg, SolveLeft) {
  Matrix m = Matrix::from_dense({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  auto x = solve_left(m, vec({2, 5}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), vec({2, 5}));
  Matrix z = Matrix::from_dense({{Rational(1), Rational(1)}});
  EXPECT_FALSE(solve_left(z, vec({1, 0})).has_value());
}

TEST(Linalg, QuotientProjection) {
  Subspace n(3);
  n.insert(vec({1, 1, 0}));
  QuotientSpace q(n);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE(q.project(vec({1, 1, 0})).empty());
  EXPECT_EQ(q.project(vec({1, 0, 0})), Rational(-1) * q.project(vec({0, 1, 0})));
  EXPECT_FALSE(q.project(vec({0, 0, 1})).empty());
}

TEST(Linalg, MatrixProductIsThenComposition) {
  // f: 0->1, g: 1->2 ; "f then g" sends 0 to 2
  std::vector<int> f = {1, 1, 2}, g = {0, 2, 2};
  Matrix fg = Matrix::from_function(f, 3) * Matrix::from_function(g, 3);
  EXPECT_EQ(fg.at(0, 2), Rational(1));
  EXPECT_EQ(Matrix::unflatten(fg.flatten(), 3, 3), fg);
}

TEST(Closure, EmptyGeneratorsGiveScalars) {
  auto c = algebra_closure({}, 3);
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_TRUE(is_closed_under_products(c));
}

TEST(Closure, CyclicShiftGeneratesCirculants) {
  std::vector<int> shift = {1, 2, 3, 0};
  auto c = algebra_closure({Matrix::from_function(shift, 4)}, 4);
  EXPECT_EQ(c.dim(), 4u);
  EXPECT_EQ(c.word(3), (Word{0, 0, 0}));
  auto m = monoid_closure({{1, 2, 3, 0}}, 4);
  EXPECT_EQ(m.size(), 4u);
}
