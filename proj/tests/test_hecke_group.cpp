#include "hecke/hecke_group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace hecke;

namespace {

// Pairs without common right descents, by brute force over W x W.
std::uint64_t brute_pair_count(const CoxeterGroup& W) {
  std::uint64_t h = 0;
  for (Elem a = 0; a < W.size(); ++a) {
    for (Elem b = 0; b < W.size(); ++b) h += W.descents(a).disjoint(W.descents(b));
  }
  return h;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Standard fillings of a ribbon = permutations whose descent set is Des(K),
// counted on plain one-line vectors.
std::size_t ribbon_tableaux(const Composition& k) {
  int n = weight(k);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  DescentSet want = set_from_comp(k);
  std::size_t c = 0;
  do {
    DescentSet d;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) d.insert(i + 1);
    }
    c += d == want;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

}  // namespace

TEST(HeckeGroup, GeneratorRelations) {
  for (const char* name : {"A1", "A2", "A3", "B2", "I2(5)"}) {
    auto W = CoxeterGroup::parse(name);
    auto g = make_generators(W);
    for (const auto& r : verify_relations(W, g)) EXPECT_TRUE(r.holds) << name << ": " << r.name;
  }
}

TEST(HeckeGroup, RelationPackTypeA) {
  for (int n = 2; n <= 5; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    auto rel = verify_relations(W, g);
    for (const auto& r : rel) EXPECT_TRUE(r.holds) << n << ": " << r.name;
    // ten per generator, two braids per pair, three straightening relations per neighbouring pair
    std::size_t r = n - 1;
    EXPECT_EQ(rel.size(), 10 * r + r * (r - 1) + 3 * (r > 0 ? r - 1 : 0));
  }
}

TEST(HeckeGroup, PairCountSequence) {
  std::vector<std::uint64_t> want = {1, 1, 3, 19, 211, 3651, 90921};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(pair_count(CoxeterGroup::symmetric(n)), want[n]);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(brute_pair_count(CoxeterGroup::symmetric(n)), want[n]);
  auto I4 = CoxeterGroup::parse("I2(4)");
  EXPECT_EQ(pair_count(I4), 33u);
  EXPECT_EQ(brute_pair_count(I4), 33u);
}

TEST(HeckeGroup, ThreeDimensionsAgree) {
  std::vector<std::string> groups = {"A1", "A2", "A3", "B2"};
  for (int m = 3; m <= 6; ++m) groups.push_back("I2(" + std::to_string(m) + ")");
  for (const auto& name : groups) {
    auto W = CoxeterGroup::parse(name);
    auto g = make_generators(W);
    auto c = hs_closure(g);
    auto sw = sandwich_solve(W);
    auto b = basis_B(W);
    EXPECT_EQ(c.dim(), pair_count(W)) << name;
    EXPECT_EQ(sw.dim(), pair_count(W)) << name;
    EXPECT_EQ(b.size(), pair_count(W)) << name;
    // the closure lies in the sandwich space, so equal dimensions mean equality
    for (const auto& op : c.elements) ASSERT_TRUE(sw.solutions.contains(op.flatten())) << name;
    Subspace bs(W.size() * W.size());
    for (const auto& e : b) bs.insert(e.op.flatten());
    EXPECT_EQ(bs.dim(), b.size()) << name;
    EXPECT_TRUE(c.span.contains_subspace(bs)) << name;
  }
}

TEST(HeckeGroup, HS2MultiplicationTable) {
  auto t = hs2_table();
  std::vector<std::vector<std::string>> want = {
      {"1", "s1", "pi1"},
      {"s1", "1", "pi1"},
      {"pi1", "1 + s1 - pi1", "pi1"},
  };
  EXPECT_EQ(t, want);
  // the displayed matrices are transposes of ours
  auto W = CoxeterGroup::symmetric(2);
  auto g = make_generators(W);
  EXPECT_EQ(g.pi[0].transpose().to_dense(),
            (std::vector<std::vector<Rational>>{{0, 0}, {1, 1}}));
  EXPECT_EQ(g.pibar[0].transpose().to_dense(),
            (std::vector<std::vector<Rational>>{{1, 1}, {0, 0}}));
}

TEST(HeckeGroup, SandwichEquationForHS2) {
  // single equation f_{21,21} - f_{21,12} + f_{12,21} - f_{12,12} = 0 (transposed indices)
  auto W = CoxeterGroup::symmetric(2);
  auto sw = sandwich_solve(W);
  EXPECT_EQ(sw.equations.dim(), 1u);
  EXPECT_EQ(sw.dim(), 3u);
  Matrix f(2, 2);
  f.set(0, 0, Rational(1));
  f.set(1, 1, Rational(1));
  f.set(0, 1, Rational(5));
  f.set(1, 0, Rational(5));
  EXPECT_TRUE(sw.solutions.contains(f.flatten()));
  Matrix bad(2, 2);
  bad.set(0, 0, Rational(1));
  EXPECT_FALSE(sw.solutions.contains(bad.flatten()));
}

TEST(HeckeGroup, RelationFormsAreIndependent) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    for (auto choice : {CommonDescent::Smallest, CommonDescent::Largest}) {
      auto [pairs, r] = relation_forms_rank(W, choice);
      EXPECT_EQ(pairs, W.size() * W.size() - pair_count(W));
      EXPECT_EQ(r, pairs);
    }
  }
}

TEST(HeckeGroup, BasisBTriangularity) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto b = basis_B(W);
    EXPECT_EQ(b.size(), pair_count(W));
    for (const auto& e : b) ASSERT_TRUE(check_triangularity(W, e)) << W.label(e.sigma) << "," << W.label(e.tau);
  }
  auto S3 = CoxeterGroup::symmetric(3);
  auto b = basis_B(S3);
  EXPECT_EQ(b[0].sigma, S3.identity());
  EXPECT_EQ(b[0].tau, S3.identity());
  EXPECT_EQ(b[0].op, Matrix::identity(6));
}

TEST(HeckeGroup, GenericQQuadraticRelation) {
  for (int n = 2; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    Operator one = Matrix::identity(W.size());
    for (Rational q : {Rational(2), Rational(-1), Rational(1, 3)}) {
      std::vector<Operator> t;
      for (int s = 1; s <= W.rank(); ++s) {
        t.push_back(hecke_q_generator(g, s, q));
        EXPECT_EQ(t.back() * t.back(), (q - Rational(1)) * t.back() + q * one);
      }
      for (int s = 1; s + 1 <= W.rank(); ++s) {
        EXPECT_EQ(t[s - 1] * t[s] * t[s - 1], t[s] * t[s - 1] * t[s]);
      }
    }
    EXPECT_EQ(hecke_q_generator(g, 1, Rational(1)), g.s[0]);
    EXPECT_EQ(hecke_q_generator(g, 1, Rational(0)), g.pi[0] - one);
  }
}

TEST(HeckeGroup, MonoidVariants) {
  std::vector<std::size_t> spi = {1, 4, 66, 6264}, pipibar = {1, 3, 23, 477};
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    EXPECT_EQ(monoid_size(W, true), spi[n - 1]) << n;
    EXPECT_EQ(monoid_size(W, false), pipibar[n - 1]) << n;
  }
}

TEST(HeckeGroup, VSigmaBasisOfS3) {
  auto W = CoxeterGroup::symmetric(3);
  auto check = [&](const char* sigma, const char* text) {
    EXPECT_EQ(v_sigma(W, W.find(sigma)), parse_vector(W, text)) << sigma;
  };
  check("123", "123 - 213 - 132 + 231 + 312 - 321");
  check("213", "213 - 312");
  check("132", "132 - 231");
  check("231", "231 - 321");
  check("312", "312 - 321");
  check("321", "321");
  EXPECT_EQ(v_I(W, DescentSet{1}), parse_vector(W, "123 - 213"));
  EXPECT_EQ(format_vector(W, v_sigma(W, W.find("123"))), "123 - 132 - 213 + 231 + 312 - 321");
  EXPECT_EQ(parse_vector(W, "-2*132 + 321"), Rational(-2) * SparseVector::unit(W.find("132")) + SparseVector::unit(5));
}

TEST(HeckeGroup, VSigmaIsUnitriangular) {
  for (const char* name : {"A3", "B2", "I2(5)"}) {
    auto W = CoxeterGroup::parse(name);
    Matrix v = vsigma_matrix(W);
    for (Elem s = 0; s < W.size(); ++s) {
      EXPECT_EQ(v.row(s).leading_index(), s) << name;
      EXPECT_EQ(v.at(s, s), Rational(1));
      for (const auto& [w, x] : v.row(s)) EXPECT_GE(W.length(w), W.length(s));
    }
  }
}

TEST(HeckeGroup, ProjectiveModules) {
  for (int n = 1; n <= 5; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    std::size_t total_simple = 0;
    for (auto I : all_subsets(W.rank())) {
      auto p = projective_P(W, g, I);
      long long expect = factorial(n);
      for (int part : comp_from_set(complement_in(W, I), n)) expect /= factorial(part);
      EXPECT_EQ(static_cast<long long>(p.sub.module.dim), expect) << n << " " << I.str();
      EXPECT_EQ(span(W.size(), p.coset_basis), p.sub.basis);
      EXPECT_EQ(span(W.size(), p.vsigma_basis), p.sub.basis);
      EXPECT_EQ(p.vsigma_basis.size(), p.sub.basis.dim());
      if (n <= 4) {
        auto s = simple_S(W, g, I);
        EXPECT_TRUE(s.vsigma_basis);
        total_simple += s.module.dim;
      }
    }
    if (n <= 4) {
      EXPECT_EQ(total_simple, W.size());
    }
  }
  auto S3 = CoxeterGroup::symmetric(3);
  auto g = make_generators(S3);
  EXPECT_EQ(projective_P(S3, g, DescentSet{1}).sub.module.dim, 3u);
  EXPECT_EQ(projective_P(S3, g, DescentSet{}).sub.module.dim, 6u);
  auto top = projective_P(S3, g, DescentSet{1, 2});
  EXPECT_EQ(top.sub.module.dim, 1u);
  EXPECT_TRUE(top.sub.basis.contains(v_I(S3, DescentSet{1, 2})));
  EXPECT_EQ(simple_S(S3, g, DescentSet{1}).module.dim, 2u);
  EXPECT_EQ(simple_S(S3, g, DescentSet{}).module.dim, 1u);
}

TEST(HeckeGroup, ProjectiveRadicalQuotientDimensions) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    auto sizes = W.descent_class_sizes();
    for (auto I : all_subsets(W.rank())) {
      EXPECT_EQ(simple_S(W, g, I).module.dim, sizes[complement_in(W, I)]);
    }
  }
}

TEST(HeckeGroup, CartanIsBooleanIncidence) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    EXPECT_EQ(cartan_matrix(W, g), boolean_incidence(W.rank())) << n;
  }
  auto S2 = CoxeterGroup::symmetric(2);
  auto g = make_generators(S2);
  EXPECT_EQ(cartan_matrix(S2, g).to_dense(), (std::vector<std::vector<Rational>>{{1, 0}, {1, 1}}));
  auto B2 = CoxeterGroup::parse("B2");
  EXPECT_EQ(cartan_matrix(B2, make_generators(B2)), boolean_incidence(2));
}

TEST(HeckeGroup, MatrixUnits) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto mu = matrix_units(W);
    EXPECT_EQ(mu.units.size(), pair_count(W));
    auto sw = sandwich_solve(W);
    Operator sum(W.size(), W.size());
    for (const auto& u : mu.units) {
      ASSERT_TRUE(sw.solutions.contains(u.op.flatten()));
      EXPECT_EQ(u.op.apply(mu.v.row(u.sigma)), mu.v.row(u.tau));
      if (u.sigma == u.tau) {
        EXPECT_EQ(u.op * u.op, u.op);
        sum += u.op;
      }
    }
    EXPECT_EQ(sum, Matrix::identity(W.size()));
    if (n <= 3) {
      for (const auto& a : mu.units) {
        for (const auto& b : mu.units) {
          Operator p = a.op * b.op;
          if (a.tau == b.sigma) {
            EXPECT_EQ(p, matrix_unit(mu, a.sigma, b.tau));
          } else {
            EXPECT_TRUE(p.is_zero());
          }
        }
      }
    }
  }
}

TEST(HeckeGroup, MoritaDimension) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    std::size_t pairs = 1;
    for (int i = 0; i < W.rank(); ++i) pairs *= 3;  // I contained in J
    EXPECT_EQ(morita_dim(W, hs_closure(g)), pairs);
  }
}

TEST(HeckeGroup, SpanningAndAntisymmetries) {
  for (int n = 2; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    EXPECT_TRUE(products_in_span_of_B(W, g));
    EXPECT_TRUE(preserves_left_antisymmetries(W, g));
  }
}

TEST(HeckeGroup, AdjointProjectives) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    for (auto I : all_subsets(W.rank())) {
      auto pstar = adjoint_projective(W, g, I);
      EXPECT_EQ(pstar.module.dim, projective_P(W, g, I).sub.module.dim);
      EXPECT_EQ(pstar.basis, left_symmetric_space(W, g, I));
    }
  }
  auto S3 = CoxeterGroup::symmetric(3);
  auto g = make_generators(S3);
  auto full = adjoint_projective(S3, g, DescentSet{1, 2});
  EXPECT_EQ(full.module.dim, 1u);
  EXPECT_EQ(adjoint_projective(S3, g, DescentSet{}).module.dim, 6u);
}

TEST(HeckeGroup, PreorderGraph) {
  auto S3 = CoxeterGroup::symmetric(3);
  auto r = preorder_graph(S3);
  auto sizes = r.component_sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2}));
  EXPECT_EQ(r.component_sizes[0], 1u);  // the identity alone
  EXPECT_TRUE(r.components_are_idescent_classes);
  EXPECT_TRUE(r.reachability_is_containment);
  for (const char* name : {"A3", "B2", "I2(5)"}) {
    auto W = CoxeterGroup::parse(name);
    auto q = preorder_graph(W);
    EXPECT_TRUE(q.components_are_idescent_classes) << name;
    EXPECT_TRUE(q.reachability_is_containment) << name;
  }
}

TEST(HeckeGroup, RestrictionCharacters) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    auto det = h0_detector(W);
    int r = W.rank();
    std::vector<int> s_idx(r), pi_idx(r);
    std::iota(s_idx.begin(), s_idx.end(), 0);
    std::iota(pi_idx.begin(), pi_idx.end(), r);
    for (auto I : all_subsets(r)) {
      Composition k_proj = comp_from_set(complement_in(W, I), n);
      Composition k_simple = comp_from_set(I, n);
      auto p = projective_P(W, g, I).sub.module;
      // P_I over S_n: e_K with K from the complement of I
      EXPECT_EQ(frobenius_of_module(W, p, s_idx), sym_e(k_proj)) << n << I.str();
      // P_I over H_n(0): composition factors of Lambda^K
      EXPECT_EQ(change_basis(h0_character(W, det, p, pi_idx), Basis::M),
                commutative_image(BasisExpansion(Basis::Lambda, k_proj)));
      auto s = simple_S(W, g, I).module;
      EXPECT_EQ(frobenius_of_module(W, s, s_idx), sym_ribbon(k_simple)) << n << I.str();
      EXPECT_EQ(change_basis(h0_character(W, det, s, pi_idx), Basis::M),
                commutative_image(BasisExpansion(Basis::R, k_simple)));
      EXPECT_EQ(s.dim, ribbon_tableaux(k_simple));
    }
  }
}
