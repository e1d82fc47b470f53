#pragma once

// Right modules given by generator action matrices, and the constructions
// used on them: submodules, quotients, tensor products, restriction,
// induction by tensor-quotient, intertwiner spaces, composition factors.

#include "hecke/closure.hpp"
#include "hecke/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct ModulePresentation {
  Index dim = 0;
  std::vector<Matrix> actions;        // one per algebra generator, v . g = v * actions[g]
  std::vector<std::string> names;     // generator names

  const Matrix& action(Index g) const { return actions.at(g); }

  /// Action of a product of generators (identity for the empty word).
  Matrix word_action(const Word& w) const {
    Matrix m = Matrix::identity(dim);
    for (int g : w) m = m * actions.at(g);
    return m;
  }

  Rational word_trace(const Word& w) const { return word_action(w).trace(); }
};

/// A submodule together with its embedding: `basis` spans the submodule
/// inside the ambient module, and `module` is the action in that basis.
struct Submodule {
  Subspace basis;
  ModulePresentation module;
};

/// Presentation of a module on a subspace already known to be stable.
inline ModulePresentation restrict_to_subspace(const ModulePresentation& m, const Subspace& sub) {
  ModulePresentation out;
  out.dim = sub.dim();
  out.names = m.names;
  for (const auto& a : m.actions) {
    std::vector<SparseVector> rows;
    rows.reserve(sub.dim());
    for (const auto& b : sub.rows()) {
      SparseVector img = a.apply(b);
      if (!sub.contains(img)) throw std::logic_error("subspace is not stable under the action");
      rows.push_back(sub.coordinates(img));
    }
    out.actions.push_back(Matrix::from_rows(std::move(rows), sub.dim()));
  }
  return out;
}

/// Smallest submodule containing the given vectors.
inline Submodule generate_submodule(const ModulePresentation& m, const std::vector<SparseVector>& gens) {
  Subspace s(m.dim);
  std::vector<SparseVector> queue;
  for (const auto& v : gens) {
    if (s.insert(v)) queue.push_back(v);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& a : m.actions) {
      SparseVector img = a.apply(queue[k]);
      if (s.insert(img)) queue.push_back(std::move(img));
    }
  }
  ModulePresentation sub = restrict_to_subspace(m, s);
  return {std::move(s), std::move(sub)};
}

/// Quotient of m by a stable subspace.
inline ModulePresentation quotient_module(const ModulePresentation& m, const Subspace& sub) {
  QuotientSpace q(sub);
  ModulePresentation out;
  out.dim = q.dim();
  out.names = m.names;
  for (const auto& a : m.actions) {
    std::vector<SparseVector> rows;
    rows.reserve(q.dim());
    for (Index rep : q.representatives()) rows.push_back(q.project(a.row(rep)));
    out.actions.push_back(Matrix::from_rows(std::move(rows), q.dim()));
  }
  return out;
}

/// M (x) N over A (x) B: generators of A first, then those of B.
inline ModulePresentation tensor_modules(const ModulePresentation& m, const ModulePresentation& n) {
  ModulePresentation out;
  out.dim = m.dim * n.dim;
  Matrix im = Matrix::identity(m.dim);
  Matrix in = Matrix::identity(n.dim);
  for (Index g = 0; g < m.actions.size(); ++g) {
    out.actions.push_back(kronecker(m.actions[g], in));
    out.names.push_back(m.names.empty() ? "" : m.names[g]);
  }
  for (Index g = 0; g < n.actions.size(); ++g) {
    out.actions.push_back(kronecker(im, n.actions[g]));
    out.names.push_back(n.names.empty() ? "" : n.names[g]);
  }
  return out;
}

/// Pulls a module back along generator images given as words in the
/// module's own generators.
inline ModulePresentation module_restrict(const ModulePresentation& m, const std::vector<Word>& images,
                                          const std::vector<std::string>& names = {}) {
  ModulePresentation out;
  out.dim = m.dim;
  out.names = names;
  for (const auto& w : images) out.actions.push_back(m.word_action(w));
  return out;
}

/// Dimension of {X : actM(g) X = X actN(g) for all g}.
inline Index hom_space_dim(const ModulePresentation& m, const ModulePresentation& n) {
  if (m.actions.size() != n.actions.size()) throw std::invalid_argument("modules over different generator sets");
  Index dm = m.dim, dn = n.dim;
  Subspace eqs(dm * dn);
  for (Index g = 0; g < m.actions.size(); ++g) {
    const Matrix& am = m.actions[g];
    Matrix ant = n.actions[g].transpose();
    for (Index i = 0; i < dm; ++i) {
      for (Index j = 0; j < dn; ++j) {
        // (A_M X)_{ij} - (X A_N)_{ij}
        std::vector<SparseVector::Entry> e;
        for (const auto& [k, c] : am.row(i)) e.emplace_back(k * dn + j, c);
        for (const auto& [k, c] : ant.row(j)) e.emplace_back(i * dn + k, -c);
        SparseVector v(std::move(e));
        if (!v.empty()) eqs.insert(v);
      }
    }
  }
  return dm * dn - eqs.dim();
}

/// tr(AB) without forming the product.
inline Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational t;
  for (Index i = 0; i < a.rows(); ++i) {
    for (const auto& [k, x] : a.row(i)) {
      Rational y = b.row(k).at(i);
      if (!y.is_zero()) t += x * y;
    }
  }
  return t;
}

/// Dimension of the Jacobson radical of a closed operator algebra: the kernel
/// of the trace form (a, b) -> tr(ab). Valid in characteristic zero.
inline Index radical_dim(const AlgebraClosure& alg, bool verify_closed = true) {
  if (verify_closed && !is_closed_under_products(alg)) throw std::invalid_argument("span is not closed under products");
  Index d = alg.dim();
  Matrix gram(d, d);
  for (Index a = 0; a < d; ++a) {
    std::vector<SparseVector::Entry> row;
    for (Index b = 0; b < d; ++b) {
      Rational t = trace_of_product(alg.elements[a], alg.elements[b]);
      if (!t.is_zero()) row.emplace_back(b, std::move(t));
    }
    gram.row(a) = SparseVector(std::move(row));
  }
  return d - rank(gram);
}

/// Right regular structure of a closed algebra in its echelon basis: left
/// multiplication by chosen operators and right multiplication by others.
struct RegularStructure {
  Index dim = 0;
  std::vector<Matrix> basis;  // echelon rows as operators
  std::vector<Matrix> left;   // left[g] row k: coordinates of L_g * c_k
  std::vector<Matrix> right;  // right[h] row k: coordinates of c_k * R_h
};

inline RegularStructure regular_structure(const AlgebraClosure& c, const std::vector<Operator>& left_ops,
                                          const std::vector<Operator>& right_ops) {
  RegularStructure r;
  r.dim = c.dim();
  for (const auto& row : c.span.rows()) r.basis.push_back(Matrix::unflatten(row, c.degree, c.degree));
  auto table = [&](const Operator& op, bool on_left) {
    std::vector<SparseVector> rows;
    for (const auto& b : r.basis) {
      SparseVector p = (on_left ? op * b : b * op).flatten();
      if (!c.span.contains(p)) throw std::invalid_argument("embedding image leaves the target algebra");
      rows.push_back(c.span.coordinates(p));
    }
    return Matrix::from_rows(std::move(rows), r.dim);
  };
  for (const auto& op : left_ops) r.left.push_back(table(op, true));
  for (const auto& op : right_ops) r.right.push_back(table(op, false));
  return r;
}

/// M (x)_B C realized as (M (x) C) / span{(m.g) (x) c - m (x) (g c)}, for g
/// running over the generators of B (embedded through reg.left) and the
/// result acted on by the generators of C (reg.right).
inline ModulePresentation module_induce(const ModulePresentation& m, const RegularStructure& reg,
                                        const std::vector<std::string>& names = {}) {
  if (m.actions.size() != reg.left.size()) throw std::invalid_argument("induction: generator count mismatch");
  Index dc = reg.dim;
  Subspace rel(m.dim * dc);
  for (Index g = 0; g < m.actions.size(); ++g) {
    const Matrix& mg = m.actions[g];
    const Matrix& lg = reg.left[g];
    for (Index i = 0; i < m.dim; ++i) {
      for (Index k = 0; k < dc; ++k) {
        std::vector<SparseVector::Entry> e;
        for (const auto& [j, x] : mg.row(i)) e.emplace_back(j * dc + k, x);
        for (const auto& [l, x] : lg.row(k)) e.emplace_back(i * dc + l, -x);
        SparseVector v(std::move(e));
        if (!v.empty()) rel.insert(v);
      }
    }
  }
  QuotientSpace q(std::move(rel));
  ModulePresentation out;
  out.dim = q.dim();
  out.names = names;
  for (const auto& rh : reg.right) {
    std::vector<SparseVector> rows;
    rows.reserve(q.dim());
    for (Index rep : q.representatives()) {
      Index i = rep / dc, k = rep % dc;
      std::vector<SparseVector::Entry> e;
      for (const auto& [l, x] : rh.row(k)) e.emplace_back(i * dc + l, x);
      rows.push_back(q.project(SparseVector(std::move(e))));
    }
    out.actions.push_back(Matrix::from_rows(std::move(rows), q.dim()));
  }
  return out;
}

/// Separates the simple modules of an algebra by their traces on a few
/// words in the generators. Composition multiplicities of any module are then
/// read off by solving a small linear system, since traces are additive along
/// composition series.
struct FactorDetector {
  std::vector<std::string> labels;  // one per simple
  std::vector<Index> dims;          // simple dimensions
  std::vector<Word> tests;          // one test word per simple
  Matrix table;                     // table[t][k] = trace of tests[t] on simple k
  Matrix inverse_table;

  /// Multiplicity of each simple in a module.
  std::vector<Rational> factors(const ModulePresentation& m) const {
    std::vector<Rational> tr;
    tr.reserve(tests.size());
    for (const auto& w : tests) tr.push_back(m.word_trace(w));
    std::vector<Rational> mult(labels.size());
    for (Index t = 0; t < tests.size(); ++t) {
      for (const auto& [k, x] : inverse_table.row(t)) mult[k] += tr[t] * x;
    }
    return mult;
  }
};

/// Builds a detector from the simple modules, drawing test words from a
/// closure of the algebra (whose words span it).
inline FactorDetector make_detector(const AlgebraClosure& alg, const std::vector<ModulePresentation>& simples,
                                    std::vector<std::string> labels) {
  FactorDetector d;
  d.labels = std::move(labels);
  for (const auto& s : simples) d.dims.push_back(s.dim);
  Index ns = simples.size();
  std::vector<std::vector<Matrix>> evals;
  for (const auto& s : simples) evals.push_back(alg.evaluate(s.actions, s.dim));
  Subspace chosen(ns);
  std::vector<SparseVector> rows;
  for (Index k = 0; k < alg.dim() && chosen.dim() < ns; ++k) {
    std::vector<Rational> r(ns);
    for (Index j = 0; j < ns; ++j) r[j] = evals[j][k].trace();
    SparseVector v = SparseVector::from_dense(r);
    if (chosen.insert(v)) {
      d.tests.push_back(alg.word(k));
      rows.push_back(v);
    }
  }
  if (chosen.dim() != ns) throw std::logic_error("simple characters are not linearly independent");
  d.table = Matrix::from_rows(std::move(rows), ns);
  // traces = table * mult, so mult_k = sum_t (table^-1)[k][t] traces_t;
  // factors() reads the transpose of table^-1 row by row
  auto inv = inverse(d.table.transpose());
  if (!inv) throw std::logic_error("singular character table");
  d.inverse_table = std::move(*inv);
  return d;
}

/// Detector of A (x) B from detectors of A and B, given the number of A
/// generators (B's generator indices are shifted past them).
inline FactorDetector tensor_detector(const FactorDetector& a, const FactorDetector& b, int a_generators) {
  FactorDetector d;
  for (Index i = 0; i < a.labels.size(); ++i) {
    for (Index j = 0; j < b.labels.size(); ++j) {
      d.labels.push_back(a.labels[i] + "|" + b.labels[j]);
      d.dims.push_back(a.dims[i] * b.dims[j]);
    }
  }
  for (const auto& wa : a.tests) {
    for (const auto& wb : b.tests) {
      Word w = wa;
      for (int g : wb) w.push_back(g + a_generators);
      d.tests.push_back(std::move(w));
    }
  }
  d.table = kronecker(a.table, b.table);
  d.inverse_table = kronecker(a.inverse_table, b.inverse_table);
  return d;
}

/// Solves factors = sum_P c_P cartan[P] for the projective multiplicities.
inline std::optional<std::vector<Rational>> projective_multiplicities(const Matrix& cartan,
                                                                      const std::vector<Rational>& factors) {
  auto x = solve_left(cartan, SparseVector::from_dense(factors));
  if (!x) return std::nullopt;
  return x->to_dense(cartan.rows());
}

}  // namespace hecke
