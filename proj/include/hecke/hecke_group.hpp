#pragma once

// The Hecke group algebra HW: the operators on kW generated by right
// multiplication by W and by the 0-Hecke sorting operators.
//
// Operators follow the library convention: row = input, column = image, and
// A * B means "A then B". A displayed matrix f with f_{mu,nu} = coefficient
// of mu in f(nu) is therefore the transpose of ours.

#include "hecke/closure.hpp"
#include "hecke/coxeter.hpp"
#include "hecke/module.hpp"
#include "hecke/qsym.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hecke {

using Elem = std::size_t;

/// Per generator s: right multiplication, pi_s, pibar_s and left
/// multiplication, all on the group basis. Holds a reference to the group.
struct HeckeGroupGenerators {
  const CoxeterGroup* group = nullptr;
  std::vector<Operator> s, pi, pibar, lambda;

  int rank() const { return static_cast<int>(s.size()); }

  /// Generators of HW in module order: s_1..s_r, then pi_1..pi_r.
  std::vector<Operator> hs() const {
    std::vector<Operator> g = s;
    g.insert(g.end(), pi.begin(), pi.end());
    return g;
  }
  std::vector<std::string> hs_names() const {
    std::vector<std::string> n;
    for (int i = 1; i <= rank(); ++i) n.push_back("s" + std::to_string(i));
    for (int i = 1; i <= rank(); ++i) n.push_back("pi" + std::to_string(i));
    return n;
  }
};

inline HeckeGroupGenerators make_generators(const CoxeterGroup& W) {
  HeckeGroupGenerators g;
  g.group = &W;
  std::size_t d = W.size();
  for (int s = 1; s <= W.rank(); ++s) {
    std::vector<Elem> r(d), p(d), pb(d), l(d);
    for (Elem w = 0; w < d; ++w) {
      r[w] = W.right(w, s);
      p[w] = W.act_pi(w, s);
      pb[w] = W.act_pibar(w, s);
      l[w] = W.left(s, w);
    }
    g.s.push_back(Matrix::from_function(r, d));
    g.pi.push_back(Matrix::from_function(p, d));
    g.pibar.push_back(Matrix::from_function(pb, d));
    g.lambda.push_back(Matrix::from_function(l, d));
  }
  return g;
}

/// T_s(q) = (q-1)(1 - pi_s) + q s; generator index s is 1-based.
inline Operator hecke_q_generator(const HeckeGroupGenerators& g, int s, const Rational& q) {
  Index d = g.group->size();
  Operator one = Matrix::identity(d);
  return (q - Rational(1)) * (one - g.pi.at(s - 1)) + q * g.s.at(s - 1);
}

/// Number of pairs of elements without common descents.
inline std::uint64_t pair_count(const CoxeterGroup& W) {
  auto c = W.descent_class_sizes();
  std::uint64_t h = 0;
  for (const auto& [i, ci] : c) {
    for (const auto& [j, cj] : c) {
      if (i.disjoint(j)) h += static_cast<std::uint64_t>(ci) * cj;
    }
  }
  return h;
}

inline ModulePresentation regular_hs_module(const HeckeGroupGenerators& g) {
  return {g.group->size(), g.hs(), g.hs_names()};
}

inline AlgebraClosure hs_closure(const HeckeGroupGenerators& g) { return algebra_closure(g.hs(), g.group->size()); }

// ------------------------------------------------------------ sandwich ----

/// Equation (a, b) of (1 - lambda_s) F (1 + lambda_s) = 0 on the flattened F:
/// F[a][b] + F[a][sb] - F[sa][b] - F[sa][sb].
inline SparseVector sandwich_form(const CoxeterGroup& W, int s, Elem a, Elem b) {
  Index d = W.size();
  Elem sa = W.left(s, a), sb = W.left(s, b);
  return SparseVector({{a * d + b, Rational(1)},
                       {a * d + sb, Rational(1)},
                       {sa * d + b, Rational(-1)},
                       {sa * d + sb, Rational(-1)}});
}

struct SandwichSolution {
  Subspace equations;
  Subspace solutions;  // flattened operators
  Index dim() const { return solutions.dim(); }
};

inline SandwichSolution sandwich_solve(const CoxeterGroup& W) {
  Index d = W.size();
  SandwichSolution out{Subspace(d * d), Subspace(d * d)};
  for (int s = 1; s <= W.rank(); ++s) {
    for (Elem a = 0; a < d; ++a) {
      for (Elem b = 0; b < d; ++b) out.equations.insert(sandwich_form(W, s, a, b));
    }
  }
  for (auto& v : out.equations.orthogonal_complement()) out.solutions.insert(v);
  return out;
}

enum class CommonDescent { Smallest, Largest };

/// Rank of the forms R_{mu,nu} for the pairs with a common left descent,
/// each taken at one chosen common descent. Independence means the rank
/// equals the number of such pairs, which is |W|^2 - h.
inline std::pair<Index, Index> relation_forms_rank(const CoxeterGroup& W,
                                                   CommonDescent choice = CommonDescent::Smallest) {
  Index d = W.size();
  Subspace s(d * d);
  Index pairs = 0;
  for (Elem mu = 0; mu < d; ++mu) {
    for (Elem nu = 0; nu < d; ++nu) {
      auto common = (W.recoils(mu) & W.recoils(nu)).elements();
      if (common.empty()) continue;
      ++pairs;
      int t = choice == CommonDescent::Smallest ? common.front() : common.back();
      s.insert(sandwich_form(W, t, nu, mu));
    }
  }
  return {pairs, s.dim()};
}

// ------------------------------------------------------------- basis B ----

struct BElement {
  Elem sigma, tau;
  Operator op;  // w -> (w sigma) . pi_tau
};

inline Operator sigma_pi_tau(const CoxeterGroup& W, Elem sigma, Elem tau) {
  std::vector<Elem> f(W.size());
  for (Elem w = 0; w < W.size(); ++w) f[w] = W.act_pi_word(W.multiply(w, sigma), tau);
  return Matrix::from_function(f, W.size());
}

inline std::vector<BElement> basis_B(const CoxeterGroup& W) {
  std::vector<BElement> out;
  for (Elem sigma = 0; sigma < W.size(); ++sigma) {
    for (Elem tau = 0; tau < W.size(); ++tau) {
      if (W.descents(sigma).disjoint(W.recoils(tau))) out.push_back({sigma, tau, sigma_pi_tau(W, sigma, tau)});
    }
  }
  return out;
}

/// init(f) = tau: the first image column in canonical order is tau, and the
/// inputs sent there are exactly W_{iDes(tau)} sigma^-1, each with value 1.
inline bool check_triangularity(const CoxeterGroup& W, const BElement& b) {
  Matrix t = b.op.transpose();
  Elem first = W.size();
  for (Elem c = 0; c < W.size(); ++c) {
    if (!t.row(c).empty()) {
      first = c;
      break;
    }
  }
  if (first != b.tau) return false;
  std::vector<Elem> expect;
  Elem inv = W.inverse(b.sigma);
  for (Elem u : W.parabolic(W.recoils(b.tau))) expect.push_back(W.multiply(u, inv));
  std::sort(expect.begin(), expect.end());
  std::vector<Elem> got;
  for (const auto& [row, x] : t.row(first)) {
    if (!x.is_one()) return false;
    got.push_back(row);
  }
  return got == expect;
}

// ------------------------------------------------------------ v basis ----

/// v_I = sum over W_I of (-1)^l(nu) nu.
inline SparseVector v_I(const CoxeterGroup& W, DescentSet I) {
  std::vector<SparseVector::Entry> e;
  for (Elem nu : W.parabolic(I)) e.emplace_back(nu, Rational(W.length(nu) % 2 ? -1 : 1));
  return SparseVector(std::move(e));
}

inline SparseVector right_multiply(const CoxeterGroup& W, const SparseVector& v, Elem sigma) {
  std::vector<SparseVector::Entry> e;
  for (const auto& [w, x] : v) e.emplace_back(W.multiply(w, sigma), x);
  return SparseVector(std::move(e));
}

inline DescentSet complement_in(const CoxeterGroup& W, DescentSet I) { return I.complement(W.rank()); }

/// v_sigma = v_{S \ iDes(sigma)} . sigma
inline SparseVector v_sigma(const CoxeterGroup& W, Elem sigma) {
  return right_multiply(W, v_I(W, complement_in(W, W.recoils(sigma))), sigma);
}

/// Rows are the v_sigma in canonical order.
inline Matrix vsigma_matrix(const CoxeterGroup& W) {
  std::vector<SparseVector> rows;
  for (Elem s = 0; s < W.size(); ++s) rows.push_back(v_sigma(W, s));
  return Matrix::from_rows(std::move(rows), W.size());
}

/// "123 - 213 + 2*231" in canonical order.
inline std::string format_vector(const CoxeterGroup& W, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [w, x] : v) {
    Rational a = x;
    if (s.empty()) {
      if (a.sign() < 0) s += "-";
    } else {
      s += a.sign() < 0 ? " - " : " + ";
    }
    if (a.sign() < 0) a = -a;
    if (!a.is_one()) s += a.str() + "*";
    s += W.label(w);
  }
  return s;
}

/// Parses the format above back into a vector.
inline SparseVector parse_vector(const CoxeterGroup& W, const std::string& text) {
  std::vector<SparseVector::Entry> e;
  std::size_t i = 0;
  int sign = 1;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c == '+' && (i + 1 == text.size() || text[i + 1] == ' ')) {
      sign = 1;
      ++i;
    } else if (c == '-' && (i + 1 == text.size() || text[i + 1] == ' ')) {
      sign = -1;
      ++i;
    } else {
      std::size_t j = text.find(' ', i);
      if (j == std::string::npos) j = text.size();
      std::string tok = text.substr(i, j - i);
      Rational coeff(sign);
      if (auto star = tok.find('*'); star != std::string::npos) {
        coeff *= Rational::parse(tok.substr(0, star));
        tok = tok.substr(star + 1);
      }
      e.emplace_back(W.find(tok), coeff);
      sign = 1;
      i = j;
    }
  }
  return SparseVector(std::move(e));
}

// -------------------------------------------------------------- modules ----

struct ProjectiveModule {
  Submodule sub;                           // inside the regular module kW
  std::vector<SparseVector> coset_basis;   // v_I . sigma, sigma in ^I W
  std::vector<SparseVector> vsigma_basis;  // v_sigma, sigma in ^I W
};

inline ProjectiveModule projective_P(const CoxeterGroup& W, const HeckeGroupGenerators& g, DescentSet I) {
  ProjectiveModule p;
  p.sub = generate_submodule(regular_hs_module(g), {v_I(W, I)});
  SparseVector vi = v_I(W, I);
  for (Elem sigma : W.recoil_class(I)) {
    p.coset_basis.push_back(right_multiply(W, vi, sigma));
    p.vsigma_basis.push_back(v_sigma(W, sigma));
  }
  return p;
}

/// Sum of P_J over J strictly containing I, as a subspace of kW.
inline Subspace projective_radical(const CoxeterGroup& W, const HeckeGroupGenerators& g, DescentSet I) {
  Subspace r(W.size());
  for (int s = 1; s <= W.rank(); ++s) {
    if (I.contains(s)) continue;
    DescentSet J = I;
    J.insert(s);
    ProjectiveModule p = projective_P(W, g, J);
    for (const auto& row : p.sub.basis.rows()) r.insert(row);
  }
  return r;
}

struct SimpleModule {
  ModulePresentation module;
  bool vsigma_basis = false;  // images of v_sigma with iDes(sigma) = S \ I form a basis
};

/// S_I = P_I / sum_{J > I} P_J.
inline SimpleModule simple_S(const CoxeterGroup& W, const HeckeGroupGenerators& g, DescentSet I) {
  ProjectiveModule p = projective_P(W, g, I);
  Subspace rad(p.sub.basis.dim());
  Subspace above = projective_radical(W, g, I);
  for (const auto& row : above.rows()) rad.insert(p.sub.basis.coordinates(row));
  SimpleModule out;
  out.module = quotient_module(p.sub.module, rad);
  QuotientSpace q(rad);
  Subspace images(q.dim());
  Index count = 0;
  DescentSet target = complement_in(W, I);
  for (Elem sigma = 0; sigma < W.size(); ++sigma) {
    if (W.recoils(sigma) != target) continue;
    ++count;
    images.insert(q.project(p.sub.basis.coordinates(v_sigma(W, sigma))));
  }
  out.vsigma_basis = count == q.dim() && images.dim() == q.dim();
  return out;
}

/// Rows and columns indexed by all_subsets(rank): entry (I, J) = dim Hom(P_I, P_J).
inline Matrix cartan_matrix(const CoxeterGroup& W, const HeckeGroupGenerators& g) {
  auto subsets = all_subsets(W.rank());
  std::vector<ModulePresentation> ps;
  for (auto I : subsets) ps.push_back(projective_P(W, g, I).sub.module);
  Matrix c(subsets.size(), subsets.size());
  for (Index i = 0; i < subsets.size(); ++i) {
    for (Index j = 0; j < subsets.size(); ++j) {
      c.set(i, j, Rational(static_cast<long long>(hom_space_dim(ps[i], ps[j]))));
    }
  }
  return c;
}

inline Matrix boolean_incidence(int rank) {
  auto subsets = all_subsets(rank);
  Matrix c(subsets.size(), subsets.size());
  for (Index i = 0; i < subsets.size(); ++i) {
    for (Index j = 0; j < subsets.size(); ++j) {
      if (subsets[j].subset_of(subsets[i])) c.set(i, j, Rational(1));
    }
  }
  return c;
}

// --------------------------------------------------------- matrix units ----

struct MatrixUnit {
  Elem sigma, tau;
  Operator op;  // v_sigma -> v_tau, other v's -> 0
};

struct MatrixUnits {
  Matrix v, v_inverse;
  std::vector<MatrixUnit> units;
};

inline Operator matrix_unit(const MatrixUnits& mu, Elem sigma, Elem tau) {
  // column sigma of V^-1 times row tau of V
  Index d = mu.v.rows();
  Matrix col = mu.v_inverse.transpose();
  Matrix out(d, d);
  for (const auto& [i, x] : col.row(sigma)) {
    SparseVector r = x * mu.v.row(tau);
    out.row(i) = r;
  }
  return out;
}

inline MatrixUnits matrix_units(const CoxeterGroup& W) {
  MatrixUnits mu;
  mu.v = vsigma_matrix(W);
  auto inv = inverse(mu.v);
  if (!inv) throw std::logic_error("v_sigma family is not a basis");
  mu.v_inverse = std::move(*inv);
  for (Elem s = 0; s < W.size(); ++s) {
    for (Elem t = 0; t < W.size(); ++t) {
      if (W.recoils(t).subset_of(W.recoils(s))) mu.units.push_back({s, t, matrix_unit(mu, s, t)});
    }
  }
  return mu;
}

/// The first element in canonical order with iDes = S \ I.
inline Elem alpha(const CoxeterGroup& W, DescentSet I) {
  DescentSet target = complement_in(W, I);
  for (Elem w = 0; w < W.size(); ++w) {
    if (W.recoils(w) == target) return w;
  }
  throw std::logic_error("empty inverse descent class");
}

/// dim e.HW.e for e = sum_I e_{alpha(I), alpha(I)}, spanned through a
/// closure basis of HW.
inline Index morita_dim(const CoxeterGroup& W, const AlgebraClosure& hw) {
  MatrixUnits mu;
  mu.v = vsigma_matrix(W);
  mu.v_inverse = *inverse(mu.v);
  Matrix e(W.size(), W.size());
  for (auto I : all_subsets(W.rank())) {
    Elem a = alpha(W, I);
    e += matrix_unit(mu, a, a);
  }
  Subspace s(W.size() * W.size());
  for (const auto& b : hw.elements) s.insert((e * b * e).flatten());
  return s.dim();
}

// ------------------------------------------------------------ relations ----

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// Generator relations, the per-generator relation pack, and in type A the
/// three straightening relations for neighbouring generators.
inline std::vector<RelationCheck> verify_relations(const CoxeterGroup& W, const HeckeGroupGenerators& g) {
  std::vector<RelationCheck> out;
  Index d = W.size();
  Operator one = Matrix::identity(d);
  auto add = [&](std::string name, const Operator& a, const Operator& b) { out.push_back({std::move(name), a == b}); };
  for (int i = 1; i <= W.rank(); ++i) {
    std::string k = std::to_string(i);
    const Operator &s = g.s[i - 1], &p = g.pi[i - 1], &pb = g.pibar[i - 1];
    add("s" + k + "^2 = 1", s * s, one);
    add("pi" + k + "^2 = pi" + k, p * p, p);
    add("pibar" + k + "^2 = pibar" + k, pb * pb, pb);
    add("s" + k + " pi" + k + " = pi" + k, s * p, p);
    add("s" + k + " pibar" + k + " = pibar" + k, s * pb, pb);
    add("pibar" + k + " pi" + k + " = pi" + k, pb * p, p);
    add("pi" + k + " pibar" + k + " = pibar" + k, p * pb, pb);
    add("pi" + k + " s" + k + " = pibar" + k, p * s, pb);
    add("pibar" + k + " s" + k + " = pi" + k, pb * s, p);
    add("pi" + k + " + pibar" + k + " = 1 + s" + k, p + pb, one + s);
  }
  for (int i = 1; i <= W.rank(); ++i) {
    for (int j = i + 1; j <= W.rank(); ++j) {
      int m = W.coxeter_exponent(i, j);
      for (const auto* fam : {&g.s, &g.pi}) {
        Operator a = one, b = one;
        for (int t = 0; t < m; ++t) {
          a = a * (*fam)[(t % 2 ? j : i) - 1];
          b = b * (*fam)[(t % 2 ? i : j) - 1];
        }
        std::string n = fam == &g.s ? "s" : "pi";
        add("braid " + n + std::to_string(i) + "," + n + std::to_string(j), a, b);
      }
    }
  }
  if (W.family() == Family::A) {
    for (int i = 1; i + 1 <= W.rank(); ++i) {
      std::string a = std::to_string(i), b = std::to_string(i + 1);
      const Operator &si = g.s[i - 1], &sj = g.s[i], &pi = g.pi[i - 1], &pj = g.pi[i];
      add("pi" + b + " s" + a + " = pi" + b + " pi" + a + " + s" + a + " s" + b + " pi" + a + " pi" + b + " - pi" + a +
              " pi" + b + " pi" + a,
          pj * si, pj * pi + si * sj * pi * pj - pi * pj * pi);
      add("pi" + a + " s" + b + " = pi" + a + " pi" + b + " + s" + b + " s" + a + " pi" + b + " pi" + a + " - pi" + a +
              " pi" + b + " pi" + a,
          pi * sj, pi * pj + sj * si * pj * pi - pi * pj * pi);
      add("s" + a + " pi" + b + " s" + a + " = s" + b + " pi" + a + " s" + b, si * pj * si, sj * pi * sj);
    }
  }
  return out;
}

/// Products of generators stay in the span of basis B.
inline bool products_in_span_of_B(const CoxeterGroup& W, const HeckeGroupGenerators& g) {
  Subspace b(W.size() * W.size());
  for (const auto& e : basis_B(W)) b.insert(e.op.flatten());
  auto gens = g.hs();
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      if (!b.contains((x * y).flatten())) return false;
    }
  }
  return true;
}

/// Every generator preserves each left-antisymmetric subspace ker(1 + lambda_s).
inline bool preserves_left_antisymmetries(const CoxeterGroup& W, const HeckeGroupGenerators& g) {
  Operator one = Matrix::identity(W.size());
  for (const auto& lam : g.lambda) {
    auto ker = kernel((one + lam).transpose());
    for (const auto& op : g.hs()) {
      for (const auto& v : ker) {
        SparseVector w = op.apply(v);
        if (lam.apply(w) != Rational(-1) * w) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------- adjoint ----

/// P*_I generated by the symmetrizer of W_I under the transposed generators.
inline Submodule adjoint_projective(const CoxeterGroup& W, const HeckeGroupGenerators& g, DescentSet I) {
  ModulePresentation m;
  m.dim = W.size();
  for (const auto& op : g.hs()) m.actions.push_back(op.transpose());
  std::vector<SparseVector::Entry> e;
  for (Elem nu : W.parabolic(I)) e.emplace_back(nu, Rational(1));
  return generate_submodule(m, {SparseVector(std::move(e))});
}

/// Intersection of ker(1 - lambda_s) over s in I.
inline Subspace left_symmetric_space(const CoxeterGroup& W, const HeckeGroupGenerators& g, DescentSet I) {
  Operator one = Matrix::identity(W.size());
  Subspace eq(W.size());
  for (int s : I.elements()) {
    Matrix t = (one - g.lambda[s - 1]).transpose();
    for (Index r = 0; r < t.rows(); ++r) eq.insert(t.row(r));
  }
  return span(W.size(), eq.orthogonal_complement());
}

// ------------------------------------------------------------- preorder ----

struct PreorderReport {
  std::vector<std::size_t> component_sizes;  // in order of first element
  bool components_are_idescent_classes = false;
  bool reachability_is_containment = false;
  std::size_t edges = 0;
};

/// Graph with edges sigma -> sigma s when iDes(sigma) is contained in
/// iDes(sigma s).
inline PreorderReport preorder_graph(const CoxeterGroup& W) {
  std::size_t d = W.size();
  std::vector<std::vector<Elem>> adj(d);
  PreorderReport r;
  for (Elem w = 0; w < d; ++w) {
    for (int s = 1; s <= W.rank(); ++s) {
      Elem v = W.right(w, s);
      if (W.recoils(w).subset_of(W.recoils(v))) {
        adj[w].push_back(v);
        ++r.edges;
      }
    }
  }
  std::vector<std::vector<char>> reach(d, std::vector<char>(d, 0));
  for (Elem w = 0; w < d; ++w) {
    std::vector<Elem> stack{w};
    reach[w][w] = 1;
    while (!stack.empty()) {
      Elem x = stack.back();
      stack.pop_back();
      for (Elem y : adj[x]) {
        if (!reach[w][y]) {
          reach[w][y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<long> comp(d, -1);
  r.components_are_idescent_classes = true;
  for (Elem w = 0; w < d; ++w) {
    if (comp[w] >= 0) continue;
    long id = static_cast<long>(r.component_sizes.size());
    std::size_t size = 0;
    for (Elem v = 0; v < d; ++v) {
      if (reach[w][v] && reach[v][w]) {
        comp[v] = id;
        ++size;
        if (W.recoils(v) != W.recoils(w)) r.components_are_idescent_classes = false;
      }
    }
    r.component_sizes.push_back(size);
  }
  r.reachability_is_containment = true;
  for (Elem u = 0; u < d; ++u) {
    for (Elem v = 0; v < d; ++v) {
      if (static_cast<bool>(reach[u][v]) != W.recoils(u).subset_of(W.recoils(v))) r.reachability_is_containment = false;
    }
  }
  if (r.component_sizes.size() != (std::size_t{1} << W.rank())) r.components_are_idescent_classes = false;
  return r;
}

// -------------------------------------------------------------- monoids ----

inline std::size_t monoid_size(const CoxeterGroup& W, bool with_s) {
  std::size_t d = W.size();
  std::vector<FunctionTable> gens;
  for (int s = 1; s <= W.rank(); ++s) {
    FunctionTable a(d), b(d);
    for (Elem w = 0; w < d; ++w) {
      a[w] = static_cast<std::uint32_t>(with_s ? W.right(w, s) : W.act_pi(w, s));
      b[w] = static_cast<std::uint32_t>(with_s ? W.act_pi(w, s) : W.act_pibar(w, s));
    }
    gens.push_back(a);
    gens.push_back(b);
  }
  return monoid_closure(gens, d).size();
}

// ----------------------------------------------------- multiplication table ----

/// Expresses an operator in a named basis of operators; nullopt if outside the span.
inline std::optional<std::string> express_in_basis(const Operator& op, const std::vector<Operator>& basis,
                                                   const std::vector<std::string>& names) {
  Index d = op.rows();
  Matrix m(basis.size(), d * d);
  for (Index i = 0; i < basis.size(); ++i) m.row(i) = basis[i].flatten();
  auto x = solve_left(m, op.flatten());
  if (!x) return std::nullopt;
  std::string s;
  for (const auto& [i, c] : *x) {
    Rational a = c;
    if (s.empty()) {
      if (a.sign() < 0) s += "-";
    } else {
      s += a.sign() < 0 ? " - " : " + ";
    }
    if (a.sign() < 0) a = -a;
    if (names[i] == "1") {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += names[i];
    }
  }
  return s.empty() ? "0" : s;
}

/// Multiplication table of HS_2 in the basis {1, s1, pi1}; entry (r, c) is r * c.
inline std::vector<std::vector<std::string>> hs2_table() {
  static const CoxeterGroup W = CoxeterGroup::symmetric(2);
  auto g = make_generators(W);
  std::vector<Operator> basis = {Matrix::identity(2), g.s[0], g.pi[0]};
  std::vector<std::string> names = {"1", "s1", "pi1"};
  std::vector<std::vector<std::string>> t(3, std::vector<std::string>(3));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) t[r][c] = *express_in_basis(basis[r] * basis[c], basis, names);
  }
  return t;
}

// ----------------------------------------------------------- characters ----

/// Cycle type of a one-line permutation, as a partition.
inline Partition cycle_type(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  Partition out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return sort_partition(out);
}

/// Frobenius characteristic of a module restricted to W, given the indices
/// of the module generators acting as s_1..s_r. Type A only.
inline BasisExpansion frobenius_of_module(const CoxeterGroup& W, const ModulePresentation& m,
                                          const std::vector<int>& s_generators) {
  if (W.family() != Family::A) throw std::invalid_argument("characters are computed in type A only");
  std::map<Partition, Rational> chi;
  for (Elem w = 0; w < W.size(); ++w) {
    Partition la = cycle_type(W.realization(w));
    if (chi.count(la)) continue;
    Word word;
    for (int s : W.reduced_word(w)) word.push_back(s_generators.at(s - 1));
    chi[la] = m.word_trace(word);
  }
  return frobenius_characteristic(chi);
}

/// H_n(0) one-dimensional simple: pi_i acts by 0 for i in J, by 1 otherwise.
inline ModulePresentation h0_simple(int rank, DescentSet J) {
  ModulePresentation m;
  m.dim = 1;
  for (int s = 1; s <= rank; ++s) {
    Matrix a(1, 1);
    if (!J.contains(s)) a.set(0, 0, Rational(1));
    m.actions.push_back(a);
    m.names.push_back("pi" + std::to_string(s));
  }
  return m;
}

/// Detector for the simple H_n(0)-modules, labelled by J in all_subsets order.
inline FactorDetector h0_detector(const CoxeterGroup& W) {
  auto g = make_generators(W);
  auto alg = algebra_closure(g.pi, W.size());
  std::vector<ModulePresentation> simples;
  std::vector<std::string> labels;
  for (auto J : all_subsets(W.rank())) {
    simples.push_back(h0_simple(W.rank(), J));
    labels.push_back(J.str());
  }
  return make_detector(alg, simples, labels);
}

/// Composition-factor character in QSym (F basis) of a module on which the
/// given generator indices act as pi_1..pi_r: S^0_J contributes F_{C(J)}.
inline BasisExpansion h0_character(const CoxeterGroup& W, const FactorDetector& det, const ModulePresentation& m,
                                   const std::vector<int>& pi_generators) {
  std::vector<Word> images;
  for (int g : pi_generators) images.push_back({g});
  auto f = det.factors(module_restrict(m, images));
  auto subsets = all_subsets(W.rank());
  int n = W.rank() + 1;
  BasisExpansion out(Basis::F);
  for (Index k = 0; k < subsets.size(); ++k) out.add(comp_from_set(subsets[k], n), f[k]);
  return out;
}

}  // namespace hecke
