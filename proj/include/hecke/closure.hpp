#pragma once

// Algebra and monoid closures of operator families.

#include "hecke/linalg.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hecke {

using Word = std::vector<int>;

/// A linear basis of the algebra generated by some operators. Every basis
/// element is a product of generators; the word tree records which one, so
/// the same element can be evaluated in any other representation.
struct AlgebraClosure {
  Index degree = 0;                  // the operators act on k^degree
  Subspace span;                     // flattened operators, echelonized
  std::vector<Operator> elements;    // basis of products, tree order
  std::vector<long> parent;          // -1 for roots
  std::vector<int> generator;        // last letter; -1 for the identity root

  Index dim() const { return elements.size(); }

  Word word(Index k) const {
    Word w;
    for (long i = static_cast<long>(k); i >= 0; i = parent[i]) {
      if (generator[i] >= 0) w.push_back(generator[i]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  /// Coordinates (in span.rows()) of an operator known to lie in the algebra.
  SparseVector coordinates(const Operator& op) const { return span.coordinates(op.flatten()); }
  bool contains(const Operator& op) const { return span.contains(op.flatten()); }

  /// Evaluates each basis word in another representation, given the images
  /// of the generators there. `unit` is the identity of that representation.
  std::vector<Matrix> evaluate(const std::vector<Matrix>& images, Index target_dim) const {
    std::vector<Matrix> out;
    out.reserve(elements.size());
    for (Index k = 0; k < elements.size(); ++k) {
      if (parent[k] < 0) {
        out.push_back(generator[k] < 0 ? Matrix::identity(target_dim) : images.at(generator[k]));
      } else {
        out.push_back(out[parent[k]] * images.at(generator[k]));
      }
    }
    return out;
  }
};

inline AlgebraClosure algebra_closure(const std::vector<Operator>& gens, Index degree, bool include_identity = true) {
  for (const auto& g : gens) {
    if (g.rows() != degree || g.cols() != degree) throw std::invalid_argument("generator shape mismatch");
  }
  AlgebraClosure c;
  c.degree = degree;
  c.span = Subspace(degree * degree);
  std::deque<Index> queue;
  auto push = [&](Operator op, long parent, int gen) {
    if (!c.span.insert(op.flatten())) return;
    c.elements.push_back(std::move(op));
    c.parent.push_back(parent);
    c.generator.push_back(gen);
    queue.push_back(c.elements.size() - 1);
  };
  if (include_identity) push(Matrix::identity(degree), -1, -1);
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) push(gens[g], -1, g);
  while (!queue.empty()) {
    Index k = queue.front();
    queue.pop_front();
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      push(c.elements[k] * gens[g], static_cast<long>(k), g);
    }
  }
  return c;
}

/// True when every product of two basis elements stays in the span.
inline bool is_closed_under_products(const AlgebraClosure& c) {
  for (const auto& a : c.elements) {
    for (const auto& b : c.elements) {
      if (!c.contains(a * b)) return false;
    }
  }
  return true;
}

/// Self-maps of {0..d-1} stored as value tables.
using FunctionTable = std::vector<std::uint32_t>;

struct FunctionTableHash {
  std::size_t operator()(const FunctionTable& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : f) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// "f then g".
inline FunctionTable compose(const FunctionTable& f, const FunctionTable& g) {
  FunctionTable h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

/// All distinct products of the generators, identity included, in
/// breadth-first discovery order.
inline std::vector<FunctionTable> monoid_closure(const std::vector<FunctionTable>& gens, std::size_t degree) {
  FunctionTable id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<FunctionTable> elements{id};
  std::unordered_map<FunctionTable, std::size_t, FunctionTableHash> seen{{id, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : gens) {
      FunctionTable p = compose(elements[k], g);
      if (seen.emplace(p, elements.size()).second) elements.push_back(std::move(p));
    }
  }
  return elements;
}

}  // namespace hecke
