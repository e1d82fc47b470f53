#pragma once

// Compositions, quasi-symmetric functions (QSym) and noncommutative
// symmetric functions (NCSF) in the bases needed for Grothendieck rings,
// plus a thin layer of symmetric functions realized inside QSym.
//
// Conventions: F_I = sum of M_J over compositions J finer than I; the
// pairing makes (R_I) and (F_I) dual bases, and (S^I) and (M_I) dual bases.

#include "hecke/coxeter.hpp"
#include "hecke/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

using Composition = std::vector<int>;
using Partition = std::vector<int>;

inline int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

/// (s1, s2 - s1, ..., n - sp) for S = {s1 < ... < sp}.
inline Composition comp_from_set(DescentSet s, int n) {
  if (n == 0) return {};
  Composition c;
  int prev = 0;
  for (int x : s.elements()) {
    if (x >= n) throw std::invalid_argument("descent " + std::to_string(x) + " outside 1.." + std::to_string(n - 1));
    c.push_back(x - prev);
    prev = x;
  }
  c.push_back(n - prev);
  return c;
}

inline DescentSet set_from_comp(const Composition& c) {
  DescentSet s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    s.insert(acc);
  }
  return s;
}

/// The composition whose descent set is the complement.
inline Composition comp_complement(const Composition& c) {
  int n = weight(c);
  if (n == 0) return {};
  return comp_from_set(set_from_comp(c).complement(n - 1), n);
}

/// Compositions of n, indexed by descent sets in all_subsets order.
inline std::vector<Composition> compositions(int n) {
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (auto s : all_subsets(n - 1)) out.push_back(comp_from_set(s, n));
  return out;
}

inline std::string comp_str(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

/// Grassmann order on subsets of equal size: sorted entries compare componentwise.
inline bool grassmann_leq(DescentSet a, DescentSet b) {
  auto x = a.elements(), y = b.elements();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

enum class Basis { M, F, X, R, S, Lambda, G };

inline bool is_qsym(Basis b) { return b == Basis::M || b == Basis::F || b == Basis::X; }

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "M";
    case Basis::F: return "F";
    case Basis::X: return "X";
    case Basis::R: return "R";
    case Basis::S: return "S";
    case Basis::Lambda: return "Lambda";
    case Basis::G: return "G";
  }
  return "?";
}

inline Basis parse_basis(const std::string& s) {
  for (Basis b : {Basis::M, Basis::F, Basis::X, Basis::R, Basis::S, Basis::Lambda, Basis::G}) {
    if (basis_name(b) == s) return b;
  }
  throw std::invalid_argument("unknown basis " + s);
}

/// Formal combination of basis elements labelled by compositions.
struct BasisExpansion {
  Basis basis = Basis::M;
  std::map<Composition, Rational> terms;

  BasisExpansion() = default;
  explicit BasisExpansion(Basis b) : basis(b) {}
  BasisExpansion(Basis b, const Composition& c, Rational coeff = Rational(1)) : basis(b) { add(c, coeff); }

  void add(const Composition& c, const Rational& x) {
    if (x.is_zero()) return;
    auto& slot = terms[c];
    slot += x;
    if (slot.is_zero()) terms.erase(c);
  }
  void add(const BasisExpansion& o, const Rational& x = Rational(1)) {
    if (o.basis != basis && !o.terms.empty()) throw std::invalid_argument("adding expansions in different bases");
    for (const auto& [c, y] : o.terms) add(c, x * y);
  }
  Rational coeff(const Composition& c) const {
    auto it = terms.find(c);
    return it == terms.end() ? Rational(0) : it->second;
  }
  bool empty() const { return terms.empty(); }

  /// Common degree of the labels; -1 for the zero element.
  int degree() const {
    if (terms.empty()) return -1;
    int d = weight(terms.begin()->first);
    for (const auto& [c, x] : terms) {
      if (weight(c) != d) throw std::logic_error("inhomogeneous expansion");
    }
    return d;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [c, x] : terms) {
      if (!s.empty()) s += " + ";
      if (!x.is_one()) s += x.str() + "*";
      s += basis_name(basis) + comp_str(c);
    }
    return s;
  }

  friend bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
    return a.terms == b.terms && (a.basis == b.basis || a.terms.empty());
  }
};

/// Element of a tensor square, labelled by pairs of compositions.
struct TensorExpansion {
  Basis basis = Basis::M;
  std::map<std::pair<Composition, Composition>, Rational> terms;

  void add(const Composition& a, const Composition& b, const Rational& x) {
    if (x.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto& slot = terms[key];
    slot += x;
    if (slot.is_zero()) terms.erase(key);
  }
  Rational coeff(const Composition& a, const Composition& b) const {
    auto it = terms.find({a, b});
    return it == terms.end() ? Rational(0) : it->second;
  }
  friend bool operator==(const TensorExpansion& a, const TensorExpansion& b) { return a.terms == b.terms; }
};

namespace detail {

inline Composition concat(const Composition& a, const Composition& b) {
  Composition c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

/// I |> J: last part of I merged with the first part of J.
inline Composition near_concat(const Composition& a, const Composition& b) {
  Composition c = concat(a, b);
  if (!a.empty() && !b.empty()) {
    c[a.size() - 1] += c[a.size()];
    c.erase(c.begin() + static_cast<long>(a.size()));
  }
  return c;
}

inline void quasi_shuffle(const Composition& a, std::size_t i, const Composition& b, std::size_t j, Composition& cur,
                          std::map<Composition, Rational>& out) {
  if (i == a.size() && j == b.size()) {
    out[cur] += Rational(1);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    cur.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Sum over J with Des(J) containing Des(I) (J finer than I).
inline std::vector<Composition> finer(const Composition& c) {
  int n = weight(c);
  std::vector<Composition> out;
  DescentSet d = set_from_comp(c);
  for (const auto& j : compositions(n)) {
    if (d.subset_of(set_from_comp(j))) out.push_back(j);
  }
  return out;
}

inline std::vector<Composition> coarser(const Composition& c) {
  int n = weight(c);
  std::vector<Composition> out;
  DescentSet d = set_from_comp(c);
  for (const auto& j : compositions(n)) {
    if (set_from_comp(j).subset_of(d)) out.push_back(j);
  }
  return out;
}

/// Product in QSym (M basis: quasi-shuffle) or NCSF (R basis: concatenation
/// plus near-concatenation); other bases convert through these.
inline BasisExpansion change_basis(const BasisExpansion& x, Basis target);

inline BasisExpansion product(const BasisExpansion& x, const BasisExpansion& y) {
  if (is_qsym(x.basis) != is_qsym(y.basis)) throw std::invalid_argument("product of QSym and NCSF elements");
  Basis canon = is_qsym(x.basis) ? Basis::M : Basis::R;
  BasisExpansion a = change_basis(x, canon), b = change_basis(y, canon);
  BasisExpansion out(canon);
  for (const auto& [i, xi] : a.terms) {
    for (const auto& [j, yj] : b.terms) {
      Rational c = xi * yj;
      if (canon == Basis::M) {
        std::map<Composition, Rational> sh;
        Composition cur;
        detail::quasi_shuffle(i, 0, j, 0, cur, sh);
        for (const auto& [k, m] : sh) out.add(k, c * m);
      } else {
        out.add(detail::concat(i, j), c);
        if (!i.empty() && !j.empty()) out.add(detail::near_concat(i, j), c);
      }
    }
  }
  return change_basis(out, x.basis);
}

/// Coproduct. QSym: F splits as I = J.K or I = J|>K (M deconcatenates).
/// NCSF: multiplicative with Delta S^n = sum_j S^j (x) S^{n-j}.
inline TensorExpansion coproduct(const BasisExpansion& x) {
  Basis canon = is_qsym(x.basis) ? Basis::F : Basis::S;
  BasisExpansion a = change_basis(x, canon);
  TensorExpansion out;
  out.basis = canon;
  for (const auto& [c, xc] : a.terms) {
    if (canon == Basis::S) {
      // choose j_k in [0, i_k] for every part; zero parts drop out
      Composition left, right;
      std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == c.size()) {
          out.add(left, right, xc);
          return;
        }
        for (int j = 0; j <= c[p]; ++j) {
          if (j > 0) left.push_back(j);
          if (j < c[p]) right.push_back(c[p] - j);
          rec(p + 1);
          if (j > 0) left.pop_back();
          if (j < c[p]) right.pop_back();
        }
      };
      rec(0);
      continue;
    }
    // cut after k cells of the ribbon; a cut inside a part gives J|>K
    int n = weight(c);
    for (int k = 0; k <= n; ++k) {
      Composition left, right;
      int acc = 0;
      for (int part : c) {
        if (acc + part <= k) {
          left.push_back(part);
        } else if (acc >= k) {
          right.push_back(part);
        } else {
          left.push_back(k - acc);
          right.push_back(acc + part - k);
        }
        acc += part;
      }
      out.add(left, right, xc);
    }
  }
  if (canon == x.basis) return out;
  TensorExpansion conv;
  conv.basis = x.basis;
  for (const auto& [key, v] : out.terms) {
    BasisExpansion l = change_basis(BasisExpansion(canon, key.first), x.basis);
    BasisExpansion r = change_basis(BasisExpansion(canon, key.second), x.basis);
    for (const auto& [p, xp] : l.terms) {
      for (const auto& [q, xq] : r.terms) conv.add(p, q, v * xp * xq);
    }
  }
  return conv;
}

/// Duality pairing between NCSF and QSym with <R_I, F_J> = delta.
inline Rational pairing(const BasisExpansion& ncsf, const BasisExpansion& qsym) {
  if (is_qsym(ncsf.basis) || !is_qsym(qsym.basis)) throw std::invalid_argument("pairing expects (NCSF, QSym)");
  if (ncsf.degree() >= 0 && qsym.degree() >= 0 && ncsf.degree() != qsym.degree()) {
    throw std::invalid_argument("pairing of elements of different degrees");
  }
  BasisExpansion r = change_basis(ncsf, Basis::R), f = change_basis(qsym, Basis::F);
  Rational s;
  for (const auto& [c, x] : r.terms) s += x * f.coeff(c);
  return s;
}

namespace detail {

inline std::map<std::pair<int, int>, Matrix>& transition_cache() {
  static std::map<std::pair<int, int>, Matrix> cache;
  return cache;
}

inline Matrix lambda_in_r(int n) {
  auto comps = compositions(n);
  Matrix m(comps.size(), comps.size());
  for (std::size_t a = 0; a < comps.size(); ++a) {
    DescentSet need = set_from_comp(comps[a]).complement(n - 1);
    for (std::size_t b = 0; b < comps.size(); ++b) {
      if (need.subset_of(set_from_comp(comps[b]))) m.set(a, b, Rational(1));
    }
  }
  return m;
}

/// Row I: coefficients of basis element I in the canonical basis (M for
/// QSym, R for NCSF), for a fixed degree.
inline Matrix transition_to_canonical(Basis basis, int n) {
  auto key = std::make_pair(static_cast<int>(basis), n);
  auto& cache = transition_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto comps = compositions(n);
  std::size_t d = comps.size();
  Matrix m(d, d);
  auto des = [&](std::size_t i) { return n == 0 ? DescentSet{} : set_from_comp(comps[i]); };
  switch (basis) {
    case Basis::M:
    case Basis::R: m = Matrix::identity(d); break;
    case Basis::F:
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          if (des(a).subset_of(des(b))) m.set(a, b, Rational(1));
        }
      }
      break;
    case Basis::S:
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          if (des(b).subset_of(des(a))) m.set(a, b, Rational(1));
        }
      }
      break;
    case Basis::Lambda: m = n == 0 ? Matrix::identity(1) : lambda_in_r(n); break;
    case Basis::G: {
      // R_I = sum over Des(J) <=_G Des(I) of G_J, so G = (that matrix)^-1 in R
      Matrix r_in_g(d, d);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          if (grassmann_leq(des(b), des(a))) r_in_g.set(a, b, Rational(1));
        }
      }
      m = *inverse(r_in_g);
      break;
    }
    case Basis::X: {
      // dual to Lambda: X = (A^-1)^T in the F basis, A = Lambda in R
      Matrix a = n == 0 ? Matrix::identity(1) : lambda_in_r(n);
      Matrix x_in_f = inverse(a)->transpose();
      m = x_in_f * transition_to_canonical(Basis::F, n);
      break;
    }
  }
  cache.emplace(key, m);
  return m;
}

inline Matrix transition_from_canonical(Basis basis, int n) {
  auto key = std::make_pair(100 + static_cast<int>(basis), n);
  auto& cache = transition_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Matrix inv = *inverse(transition_to_canonical(basis, n));
  cache.emplace(key, inv);
  return inv;
}

inline std::size_t comp_index(const Composition& c) {
  int n = weight(c);
  auto comps = compositions(n);
  auto it = std::find(comps.begin(), comps.end(), c);
  if (it == comps.end()) throw std::invalid_argument("not a composition: " + comp_str(c));
  return static_cast<std::size_t>(it - comps.begin());
}

}  // namespace detail

inline BasisExpansion change_basis(const BasisExpansion& x, Basis target) {
  if (x.basis == target) return x;
  if (is_qsym(x.basis) != is_qsym(target)) {
    throw std::invalid_argument("no conversion between " + basis_name(x.basis) + " and " + basis_name(target));
  }
  Basis canon = is_qsym(target) ? Basis::M : Basis::R;
  BasisExpansion mid(canon);
  for (const auto& [c, v] : x.terms) {
    int n = weight(c);
    auto comps = compositions(n);
    Matrix t = detail::transition_to_canonical(x.basis, n);
    for (const auto& [j, y] : t.row(detail::comp_index(c))) mid.add(comps[j], v * y);
  }
  if (target == canon) return mid;
  BasisExpansion out(target);
  for (const auto& [c, v] : mid.terms) {
    int n = weight(c);
    auto comps = compositions(n);
    Matrix t = detail::transition_from_canonical(target, n);
    for (const auto& [j, y] : t.row(detail::comp_index(c))) out.add(comps[j], v * y);
  }
  return out;
}

/// F_I F_J by shuffling a permutation with descent composition I against a
/// shifted one with descent composition J; independent of the M route.
inline BasisExpansion f_product_by_shuffles(const Composition& a, const Composition& b) {
  auto word_with_descents = [](const Composition& c, int shift) {
    // decreasing runs across descents, increasing inside parts: 1..c1 placed last
    std::vector<int> w;
    int n = weight(c), top = n;
    std::vector<std::vector<int>> blocks;
    for (int part : c) {
      std::vector<int> blk;
      for (int k = top - part + 1; k <= top; ++k) blk.push_back(k + shift);
      top -= part;
      blocks.push_back(blk);
    }
    for (auto& blk : blocks) w.insert(w.end(), blk.begin(), blk.end());
    return w;
  };
  auto u = word_with_descents(a, 0), v = word_with_descents(b, weight(a));
  int n = static_cast<int>(u.size() + v.size());
  BasisExpansion out(Basis::F);
  std::vector<int> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == u.size() && j == v.size()) {
      DescentSet d;
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        if (cur[k] > cur[k + 1]) d.insert(static_cast<int>(k + 1));
      }
      out.add(comp_from_set(d, n), Rational(1));
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------- Sym ----

inline std::vector<Partition> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  for (int k = std::min(n, max_part); k >= 1; --k) {
    for (auto& rest : partitions(n - k, k)) {
      Partition p{k};
      p.insert(p.end(), rest.begin(), rest.end());
      out.push_back(p);
    }
  }
  return out;
}

inline Partition sort_partition(Composition c) {
  std::sort(c.rbegin(), c.rend());
  return c;
}

/// Monomial symmetric function m_lambda = sum of M over distinct rearrangements.
inline BasisExpansion sym_m(const Partition& la) {
  Composition c = la;
  std::sort(c.begin(), c.end());
  BasisExpansion out(Basis::M);
  do {
    out.add(c, Rational(1));
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

inline BasisExpansion sym_h(int n) { return change_basis(BasisExpansion(Basis::F, Composition{n}), Basis::M); }
inline BasisExpansion sym_e(int n) { return BasisExpansion(Basis::M, Composition(n, 1)); }
inline BasisExpansion sym_p(int k) { return BasisExpansion(Basis::M, Composition{k}); }

inline BasisExpansion sym_one() { return BasisExpansion(Basis::M, Composition{}); }

/// Product of one-part generators over the parts of a composition.
template <class Gen>
BasisExpansion sym_multiplicative(const Composition& c, Gen gen) {
  BasisExpansion out = sym_one();
  for (int part : c) out = product(out, gen(part));
  return out;
}

inline BasisExpansion sym_h(const Composition& c) { return sym_multiplicative(c, [](int k) { return sym_h(k); }); }
inline BasisExpansion sym_e(const Composition& c) { return sym_multiplicative(c, [](int k) { return sym_e(k); }); }
inline BasisExpansion sym_p(const Composition& c) { return sym_multiplicative(c, [](int k) { return sym_p(k); }); }

/// Ribbon Schur function: the commutative image of R_K, expanded through the
/// complete functions of coarser compositions.
inline BasisExpansion sym_ribbon(const Composition& k) {
  BasisExpansion out(Basis::M);
  for (const auto& j : coarser(k)) {
    int sign = (static_cast<int>(k.size() - j.size()) % 2) ? -1 : 1;
    out.add(sym_h(j), Rational(sign));
  }
  return out;
}

/// Commutative image of an NCSF element (S^I -> h_I), in M.
inline BasisExpansion commutative_image(const BasisExpansion& x) {
  BasisExpansion s = change_basis(x, Basis::S);
  BasisExpansion out(Basis::M);
  for (const auto& [c, v] : s.terms) out.add(sym_h(c), v);
  return out;
}

/// z_lambda = prod_i i^{m_i} m_i!
inline Rational z_lambda(const Partition& la) {
  std::map<int, int> mult;
  for (int p : la) ++mult[p];
  Rational z(1);
  for (auto [p, m] : mult) {
    for (int k = 1; k <= m; ++k) z *= Rational(static_cast<long long>(p) * k);
  }
  return z;
}

/// Frobenius characteristic sum chi(lambda) p_lambda / z_lambda.
inline BasisExpansion frobenius_characteristic(const std::map<Partition, Rational>& chi) {
  BasisExpansion out(Basis::M);
  for (const auto& [la, v] : chi) out.add(sym_p(la), v / z_lambda(la));
  return out;
}

/// Coefficients of a symmetric function in the m basis.
inline std::map<Partition, Rational> m_coefficients(const BasisExpansion& x) {
  BasisExpansion m = change_basis(x, Basis::M);
  std::map<Partition, Rational> out;
  for (const auto& [c, v] : m.terms) {
    if (std::is_sorted(c.rbegin(), c.rend())) out[c] = v;
  }
  return out;
}

inline bool is_symmetric(const BasisExpansion& x) {
  BasisExpansion m = change_basis(x, Basis::M);
  for (const auto& [c, v] : m.terms) {
    Composition r = c;
    std::sort(r.begin(), r.end());
    do {
      if (m.coeff(r) != v) return false;
    } while (std::next_permutation(r.begin(), r.end()));
  }
  return true;
}

}  // namespace hecke
