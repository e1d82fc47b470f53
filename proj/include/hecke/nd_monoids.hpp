#pragma once

// Monoids of nondecreasing functions (NDF_n) and nondecreasing parking
// functions (NDPF_n), their algebras, exterior-power representations and
// module theory.
//
// Functions are value tables on {0..n-1}; they act on the right, so the
// product f g means "f then g" (compose(f, g) = g o f).

#include "hecke/closure.hpp"
#include "hecke/coxeter.hpp"
#include "hecke/hecke_group.hpp"
#include "hecke/module.hpp"
#include "hecke/qsym.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using NdFunction = FunctionTable;

inline std::string nd_str(const NdFunction& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i] + 1);
  return s + ")";
}

inline NdFunction nd_parse(const std::string& text) {
  NdFunction f;
  std::string num;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else if (!num.empty()) {
      f.push_back(static_cast<std::uint32_t>(std::stoi(num) - 1));
      num.clear();
    }
  }
  if (!num.empty()) f.push_back(static_cast<std::uint32_t>(std::stoi(num) - 1));
  return f;
}

inline bool is_nondecreasing(const NdFunction& f) { return std::is_sorted(f.begin(), f.end()); }

inline bool is_parking(const NdFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > i) return false;
  }
  return is_nondecreasing(f);
}

/// All nondecreasing self-maps of {1..n} in lexicographic order.
inline std::vector<NdFunction> ndf_enumerate(int n, bool parking = false) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<NdFunction> out;
  NdFunction cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t lo) {
    if (cur.size() == static_cast<std::size_t>(n)) {
      out.push_back(cur);
      return;
    }
    std::uint32_t hi = parking ? static_cast<std::uint32_t>(cur.size()) : static_cast<std::uint32_t>(n - 1);
    for (std::uint32_t v = lo; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<NdFunction> ndpf_enumerate(int n) { return ndf_enumerate(n, true); }

inline NdFunction nd_identity(int n) {
  NdFunction f(n);
  for (int i = 0; i < n; ++i) f[i] = static_cast<std::uint32_t>(i);
  return f;
}

/// pi_i sends i+1 to i; pibar_i sends i to i+1 (1-based i).
inline NdFunction nd_pi(int n, int i) {
  NdFunction f = nd_identity(n);
  f[i] = static_cast<std::uint32_t>(i - 1);
  return f;
}

inline NdFunction nd_pibar(int n, int i) {
  NdFunction f = nd_identity(n);
  f[i - 1] = static_cast<std::uint32_t>(i);
  return f;
}

// ------------------------------------------------------ exterior powers ----

/// k-subsets of {0..n-1} as bitmasks, in lexicographic order of sorted entries.
inline std::vector<std::uint32_t> k_subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      std::uint32_t m = 0;
      for (int x : c) m |= 1u << x;
      out.push_back(m);
      return;
    }
    for (int v = start; v < n; ++v) {
      c[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline std::string subset_str(std::uint32_t m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (m >> i & 1u) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

/// e_S . f = e_{f(S)} when |f(S)| = |S|, else 0; no signs.
inline Operator exterior_action(const NdFunction& f, int k) {
  int n = static_cast<int>(f.size());
  auto subs = k_subsets(n, k);
  std::map<std::uint32_t, Index> index;
  for (Index i = 0; i < subs.size(); ++i) index[subs[i]] = i;
  Matrix m(subs.size(), subs.size());
  for (Index r = 0; r < subs.size(); ++r) {
    std::uint32_t img = 0;
    for (int i = 0; i < n; ++i) {
      if (subs[r] >> i & 1u) img |= 1u << f[i];
    }
    if (std::popcount(img) == k) m.set(r, index.at(img), Rational(1));
  }
  return m;
}

/// Block sum over k = 1..n (Lambda^0 excluded).
inline Operator exterior_full(const NdFunction& f) {
  int n = static_cast<int>(f.size());
  Index total = (Index{1} << n) - 1;
  Matrix m(total, total);
  Index off = 0;
  for (int k = 1; k <= n; ++k) {
    Matrix b = exterior_action(f, k);
    for (Index r = 0; r < b.rows(); ++r) {
      for (const auto& [c, x] : b.row(r)) m.set(off + r, off + c, x);
    }
    off += b.rows();
  }
  return m;
}

/// Rank of the span of the exterior representation over NDF_n.
inline Index exterior_rep_rank(int n) {
  Index total = (Index{1} << n) - 1;
  Subspace s(total * total);
  for (const auto& f : ndf_enumerate(n)) s.insert(exterior_full(f).flatten());
  return s.dim();
}

struct ExteriorGenerators {
  std::vector<Operator> s, pi, pibar;  // on the sum of Lambda^k, k >= 1
};

/// s_i realized as pi_i + pibar_i - 1, which is the usual signed action.
inline ExteriorGenerators exterior_generators(int n) {
  ExteriorGenerators g;
  Index total = (Index{1} << n) - 1;
  Operator one = Matrix::identity(total);
  for (int i = 1; i < n; ++i) {
    g.pi.push_back(exterior_full(nd_pi(n, i)));
    g.pibar.push_back(exterior_full(nd_pibar(n, i)));
    g.s.push_back(g.pi.back() + g.pibar.back() - one);
  }
  return g;
}

/// Dimension of the closure of {s_i, pi_i} on the exterior representation.
inline Index heckesg_exterior_image_dim(int n) {
  auto g = exterior_generators(n);
  std::vector<Operator> gens = g.s;
  gens.insert(gens.end(), g.pi.begin(), g.pi.end());
  return algebra_closure(gens, (Index{1} << n) - 1).dim();
}

inline Index ndpf_exterior_image_dim(int n) {
  return algebra_closure(exterior_generators(n).pi, (Index{1} << n) - 1).dim();
}

/// Checks the model of Lambda^k inside kS_n: in P_I, I = {n-k+1..n-1},
/// modulo the sum of P_{I+s} (s < n-k), the vectors e_S form a basis on
/// which pi_i and pibar_i act exactly as the functions act on k-subsets.
/// e_S sums the permutations placing n-k+1..n on the positions of S and the
/// other values increasingly elsewhere, signed by the inversions inside S.
inline bool check_exterior_identification(int n, int k) {
  CoxeterGroup W = CoxeterGroup::symmetric(n);
  auto g = make_generators(W);
  DescentSet I;
  for (int i = n - k + 1; i < n; ++i) I.insert(i);
  ProjectiveModule p = projective_P(W, g, I);
  Subspace rel(W.size());
  for (int s = 1; s < n - k; ++s) {
    DescentSet J = I;
    J.insert(s);
    ProjectiveModule q = projective_P(W, g, J);
    for (const auto& row : q.sub.basis.rows()) rel.insert(row);
  }
  auto subs = k_subsets(n, k);
  if (!p.sub.basis.contains_subspace(rel) || p.sub.basis.dim() - rel.dim() != subs.size()) return false;
  QuotientSpace quo(rel);
  std::vector<SparseVector> es;
  for (auto m : subs) {
    std::vector<SparseVector::Entry> e;
    for (Elem w = 0; w < W.size(); ++w) {
      const auto& r = W.realization(w);
      bool ok = true;
      int last = 0, inversions = 0;
      for (int i = 0; i < n && ok; ++i) {
        bool in = m >> i & 1u;
        if (in != (r[i] > n - k)) ok = false;
        if (in) {
          for (int j = 0; j < i; ++j) inversions += (m >> j & 1u) && r[j] > r[i];
        } else {
          if (r[i] < last) ok = false;
          last = r[i];
        }
      }
      if (ok) e.emplace_back(w, Rational(inversions % 2 ? -1 : 1));
    }
    es.emplace_back(std::move(e));
    if (!p.sub.basis.contains(es.back())) return false;
  }
  std::vector<SparseVector> images;
  for (const auto& e : es) images.push_back(quo.project(e));
  if (rank(Matrix::from_rows(images, quo.dim())) != subs.size()) return false;
  for (int i = 1; i < n; ++i) {
    for (auto [op, f] : {std::pair{&g.pi[i - 1], nd_pi(n, i)}, std::pair{&g.pibar[i - 1], nd_pibar(n, i)}}) {
      Matrix ext = exterior_action(f, k);
      for (Index a = 0; a < subs.size(); ++a) {
        SparseVector diff = op->apply(es[a]);
        for (const auto& [c, x] : ext.row(a)) diff = diff - x * es[c];
        if (!quo.project(diff).empty()) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------- Temperley-Lieb ----

struct TemperleyLiebReport {
  bool vacuous = false;
  bool nilpotent = true;     // e_i^2 = 0
  bool braid_like = true;    // e_i e_{i+-1} e_i = -e_i
  bool commuting = true;     // e_i e_j = e_j e_i for |i - j| >= 2
  Index closure_dim = 0;
};

inline TemperleyLiebReport temperley_lieb_check(int n) {
  TemperleyLiebReport r;
  Index total = (Index{1} << n) - 1;
  if (n < 2) {
    r.vacuous = true;
    r.closure_dim = algebra_closure({}, total).dim();
    return r;
  }
  auto g = exterior_generators(n);
  std::vector<Operator> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back(g.pi[i] - g.pibar[i]);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!(e[i] * e[i]).is_zero()) r.nilpotent = false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      std::size_t dist = i > j ? i - j : j - i;
      if (dist == 1 && !(e[i] * e[j] * e[i] == Rational(-1) * e[i])) r.braid_like = false;
      if (dist >= 2 && !(e[i] * e[j] == e[j] * e[i])) r.commuting = false;
    }
  }
  r.closure_dim = algebra_closure(e, total).dim();
  return r;
}

// ------------------------------------------------------- monoid algebra ----

/// Element of the monoid algebra: function table -> coefficient.
using MonoidElement = std::map<NdFunction, Rational>;

inline MonoidElement monoid_unit(int n) { return {{nd_identity(n), Rational(1)}}; }

inline MonoidElement monoid_basis(const NdFunction& f) { return {{f, Rational(1)}}; }

inline MonoidElement monoid_mul(const MonoidElement& a, const MonoidElement& b) {
  MonoidElement out;
  for (const auto& [f, x] : a) {
    for (const auto& [g, y] : b) {
      auto& slot = out[compose(f, g)];
      slot += x * y;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline MonoidElement monoid_add(MonoidElement a, const MonoidElement& b, const Rational& c = Rational(1)) {
  for (const auto& [f, y] : b) a[f] += c * y;
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  return a;
}

/// pi_{n-1} ... pi_k (1 - pi_{k-1}) ... (1 - pi_1), the product taken literally.
/// Idempotent only for k <= 2; kept to document that.
inline MonoidElement idempotent_e_coxeter_word(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  MonoidElement e = monoid_unit(n);
  for (int i = n - 1; i >= k; --i) e = monoid_mul(e, monoid_basis(nd_pi(n, i)));
  for (int i = k - 1; i >= 1; --i) e = monoid_mul(e, monoid_add(monoid_unit(n), monoid_basis(nd_pi(n, i)), Rational(-1)));
  return e;
}

/// e_n^k: image of the hook idempotent of H_n(0). The pi part collapses
/// {k..n} onto k; the (1 - pi_j) factors run over a reduced word of the
/// longest element of S_{1..k-1}.
inline MonoidElement idempotent_e(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  MonoidElement e = monoid_unit(n);
  for (int i = n - 1; i >= k; --i) e = monoid_mul(e, monoid_basis(nd_pi(n, i)));
  for (int top = k - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) {
      e = monoid_mul(e, monoid_add(monoid_unit(n), monoid_basis(nd_pi(n, i)), Rational(-1)));
    }
  }
  return e;
}

/// Dimension of e . NDFA_n, spanned by e f over f in NDF_n.
inline Index principal_dim(int n, const MonoidElement& e) {
  auto all = ndf_enumerate(n);
  std::map<NdFunction, Index> index;
  for (Index i = 0; i < all.size(); ++i) index[all[i]] = i;
  Subspace s(all.size());
  for (const auto& f : all) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [g, x] : monoid_mul(e, monoid_basis(f))) entries.emplace_back(index.at(g), x);
    s.insert(SparseVector(std::move(entries)));
  }
  return s.dim();
}

/// The right module e . NDFA_n with generators pi_1..pi_{n-1}, pibar_1..pibar_{n-1}.
inline ModulePresentation principal_module(int n, const MonoidElement& e) {
  auto all = ndf_enumerate(n);
  std::map<NdFunction, Index> index;
  for (Index i = 0; i < all.size(); ++i) index[all[i]] = i;
  auto to_vec = [&](const MonoidElement& x) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [g, c] : x) entries.emplace_back(index.at(g), c);
    return SparseVector(std::move(entries));
  };
  ModulePresentation regular;
  regular.dim = all.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 1; i < n; ++i) {
      NdFunction gen = pass == 0 ? nd_pi(n, i) : nd_pibar(n, i);
      std::vector<Index> f(all.size());
      for (Index j = 0; j < all.size(); ++j) f[j] = index.at(compose(all[j], gen));
      regular.actions.push_back(Matrix::from_function(f, all.size()));
    }
  }
  return generate_submodule(regular, {to_vec(e)}).module;
}

// ------------------------------------------------------------- modules ----

/// Lambda^k as a module over the given generator functions.
inline ModulePresentation exterior_module(int n, const std::vector<NdFunction>& gens, int k) {
  ModulePresentation m;
  m.dim = k_subsets(n, k).size();
  for (const auto& f : gens) m.actions.push_back(exterior_action(f, k));
  return m;
}

/// NDFA_n generators: pi_1..pi_{n-1}, then pibar_1..pibar_{n-1}.
inline std::vector<NdFunction> ndfa_generators(int n) {
  std::vector<NdFunction> g;
  for (int i = 1; i < n; ++i) g.push_back(nd_pi(n, i));
  for (int i = 1; i < n; ++i) g.push_back(nd_pibar(n, i));
  return g;
}

inline std::vector<NdFunction> ndpfa_generators(int n) {
  std::vector<NdFunction> g;
  for (int i = 1; i < n; ++i) g.push_back(nd_pi(n, i));
  return g;
}

/// delta: Lambda^k -> Lambda^{k-1}, S -> sum_i (-1)^{k-i} S \ {s_i}; Lambda^0 has dim 1.
inline Matrix border_delta(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  auto src = k_subsets(n, k);
  auto dst = k_subsets(n, k - 1);
  std::map<std::uint32_t, Index> index;
  for (Index i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  Matrix d(src.size(), dst.size());
  for (Index r = 0; r < src.size(); ++r) {
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      if (!(src[r] >> i & 1u)) continue;
      ++pos;
      int sign = (k - pos) % 2 ? -1 : 1;
      d.set(r, index.at(src[r] & ~(1u << i)), Rational(sign));
    }
  }
  return d;
}

/// S_n^k = Lambda^k / ker delta.
inline ModulePresentation ndfa_simple(int n, int k) {
  auto m = exterior_module(n, ndfa_generators(n), k);
  return quotient_module(m, span(m.dim, kernel(border_delta(n, k).transpose())));
}

inline ModulePresentation ndfa_projective(int n, int k) { return exterior_module(n, ndfa_generators(n), k); }

/// Entry (k, l), k, l = 1..n: dim Hom(P^k, P^l).
inline Matrix ndfa_cartan(int n) {
  Matrix c(n, n);
  std::vector<ModulePresentation> ps;
  for (int k = 1; k <= n; ++k) ps.push_back(ndfa_projective(n, k));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) c.set(k, l, Rational(static_cast<long long>(hom_space_dim(ps[k], ps[l]))));
  }
  return c;
}

// ---------------------------------------------------------------- NDPFA ----

/// Sum over k of the number of comparable pairs in the Grassmann order on
/// k-subsets of {1..n-1}.
inline std::size_t grassmann_incidence_dim(int n) {
  std::size_t total = 0;
  auto subs = all_subsets(n - 1);
  for (auto a : subs) {
    for (auto b : subs) total += grassmann_leq(a, b);
  }
  return total;
}

/// One-dimensional simple: pi_i acts by 0 for i in I, by 1 otherwise.
inline ModulePresentation ndpfa_simple(int n, DescentSet I) { return h0_simple(n - 1, I); }

/// Cyclic submodule of Lambda^{|I|+1} generated by e_{{1} u (I+1)}.
inline Submodule projective_P_ndpf(int n, DescentSet I) {
  int k = I.size() + 1;
  auto m = exterior_module(n, ndpfa_generators(n), k);
  std::uint32_t mask = 1u;
  for (int s : I.elements()) mask |= 1u << s;
  auto subs = k_subsets(n, k);
  Index idx = static_cast<Index>(std::find(subs.begin(), subs.end(), mask) - subs.begin());
  return generate_submodule(m, {SparseVector::unit(idx)});
}

/// Closure of the NDPFA generators on the exterior representation.
inline AlgebraClosure ndpfa_closure(int n) { return algebra_closure(exterior_generators(n).pi, (Index{1} << n) - 1); }

inline AlgebraClosure ndfa_closure(int n) {
  auto g = exterior_generators(n);
  std::vector<Operator> gens = g.pi;
  gens.insert(gens.end(), g.pibar.begin(), g.pibar.end());
  return algebra_closure(gens, (Index{1} << n) - 1);
}

inline FactorDetector ndpfa_detector(int n) {
  std::vector<ModulePresentation> simples;
  std::vector<std::string> labels;
  for (auto I : all_subsets(n - 1)) {
    simples.push_back(ndpfa_simple(n, I));
    labels.push_back(I.str());
  }
  return make_detector(ndpfa_closure(n), simples, labels);
}

inline FactorDetector ndfa_detector(int n) {
  std::vector<ModulePresentation> simples;
  std::vector<std::string> labels;
  for (int k = 1; k <= n; ++k) {
    simples.push_back(ndfa_simple(n, k));
    labels.push_back("S^" + std::to_string(k));
  }
  return make_detector(ndfa_closure(n), simples, labels);
}

/// Cartan matrix from composition series: entry (I, J) = [P_I : S_J],
/// subsets in all_subsets order.
inline Matrix ndpfa_cartan(int n) {
  auto det = ndpfa_detector(n);
  auto subs = all_subsets(n - 1);
  Matrix c(subs.size(), subs.size());
  for (Index i = 0; i < subs.size(); ++i) {
    auto f = det.factors(projective_P_ndpf(n, subs[i]).module);
    for (Index j = 0; j < subs.size(); ++j) c.set(i, j, f[j]);
  }
  return c;
}

inline Matrix grassmann_cartan(int n) {
  auto subs = all_subsets(n - 1);
  Matrix c(subs.size(), subs.size());
  for (Index i = 0; i < subs.size(); ++i) {
    for (Index j = 0; j < subs.size(); ++j) {
      if (grassmann_leq(subs[j], subs[i])) c.set(i, j, Rational(1));
    }
  }
  return c;
}

struct KernelReport {
  Index h0_dim = 0, ndpfa_dim = 0, kernel_dim = 0, radical_dim = 0;
  bool kernel_in_radical = false;
};

/// phi: H_n(0) -> NDPFA_n, pi_i -> pi_i. H_n(0) is realized on kS_n and
/// NDPFA_n on the exterior representation; the kernel is computed in the
/// coordinates of the H_n(0) closure basis.
inline KernelReport ndpfa_kernel_report(int n) {
  CoxeterGroup W = CoxeterGroup::symmetric(n);
  auto g = make_generators(W);
  auto h0 = algebra_closure(g.pi, W.size());
  auto images = h0.evaluate(exterior_generators(n).pi, (Index{1} << n) - 1);
  KernelReport r;
  r.h0_dim = h0.dim();
  Index big = (Index{1} << n) - 1;
  Matrix phi(h0.dim(), big * big);
  for (Index k = 0; k < h0.dim(); ++k) phi.row(k) = images[k].flatten();
  auto ker = left_kernel(phi);
  r.kernel_dim = ker.size();
  r.ndpfa_dim = h0.dim() - r.kernel_dim;
  Index d = h0.dim();
  Matrix gram(d, d);
  for (Index a = 0; a < d; ++a) {
    std::vector<SparseVector::Entry> row;
    for (Index b = 0; b < d; ++b) {
      Rational t = trace_of_product(h0.elements[a], h0.elements[b]);
      if (!t.is_zero()) row.emplace_back(b, std::move(t));
    }
    gram.row(a) = SparseVector(std::move(row));
  }
  Subspace rad = span(d, left_kernel(gram));
  r.radical_dim = rad.dim();
  r.kernel_in_radical = std::all_of(ker.begin(), ker.end(), [&](const SparseVector& v) { return rad.contains(v); });
  return r;
}

// ----------------------------------------------------------- commutants ----

/// Dimension of the commutant of a set of function operators inside the
/// block-diagonal algebra of a partition of the basis into classes.
inline Index block_commutant_dim(const std::vector<FunctionTable>& funcs, const std::vector<int>& cls) {
  Index d = cls.size();
  std::map<std::pair<Index, Index>, Index> var;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      if (cls[i] == cls[j]) var.emplace(std::make_pair(i, j), var.size());
    }
  }
  Subspace eqs(var.size());
  auto x = [&](Index i, Index j) -> std::optional<Index> {
    auto it = var.find({i, j});
    if (it == var.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& f : funcs) {
    std::vector<std::vector<Index>> pre(d);
    for (Index j = 0; j < d; ++j) pre[f[j]].push_back(j);
    for (Index r = 0; r < d; ++r) {
      for (Index c = 0; c < d; ++c) {
        // (F X)[r][c] = X[f(r)][c], (X F)[r][c] = sum_{f(j) = c} X[r][j]
        std::vector<SparseVector::Entry> e;
        if (auto v = x(f[r], c)) e.emplace_back(*v, Rational(1));
        for (Index j : pre[c]) {
          if (auto v = x(r, j)) e.emplace_back(*v, Rational(-1));
        }
        SparseVector eq(std::move(e));
        if (!eq.empty()) eqs.insert(eq);
      }
    }
  }
  return var.size() - eqs.dim();
}

/// Words of length n over an alphabet of the given size, encoded base a.
inline std::vector<std::vector<int>> all_words(int n, int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && ++w[i] == a) w[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

inline int evaluation_class(const std::vector<int>& w, std::map<std::vector<int>, int>& classes, int a) {
  std::vector<int> content(a, 0);
  for (int x : w) ++content[x];
  return classes.emplace(content, static_cast<int>(classes.size())).first->second;
}

/// Commutant of the functions acting on values, inside End_e of the span of
/// the given words.
inline Index word_commutant_dim(const std::vector<std::vector<int>>& words, const std::vector<FunctionTable>& funcs,
                                int a) {
  std::map<std::vector<int>, Index> index;
  for (Index i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::map<std::vector<int>, int> classes;
  std::vector<int> cls;
  for (const auto& w : words) cls.push_back(evaluation_class(w, classes, a));
  std::vector<FunctionTable> ops;
  for (const auto& f : funcs) {
    FunctionTable t(words.size());
    for (Index i = 0; i < words.size(); ++i) {
      std::vector<int> img = words[i];
      for (int& x : img) x = static_cast<int>(f[x]);
      auto it = index.find(img);
      if (it == index.end()) throw std::logic_error("word set is not stable under the monoid");
      t[i] = static_cast<std::uint32_t>(it->second);
    }
    ops.push_back(std::move(t));
  }
  return block_commutant_dim(ops, cls);
}

/// NDF_A acting on values of A^n: commutant in End_e.
inline Index evaluation_commutant(int n, int alphabet) {
  if (alphabet < n) throw std::invalid_argument("alphabet must have at least n letters");
  return word_commutant_dim(all_words(n, alphabet), ndfa_generators(alphabet), alphabet);
}

/// NDPF_n acting on the left (on values) of parking functions of size n.
inline Index parking_commutant(int n) {
  std::vector<std::vector<int>> words;
  for (auto& w : all_words(n, n)) {
    auto s = w;
    std::sort(s.begin(), s.end());
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && s[i] <= i;
    if (ok) words.push_back(w);
  }
  return word_commutant_dim(words, ndpfa_generators(n), n);
}

/// Nondecreasing initial functions acting on initial functions (image {1..k}).
inline Index initial_commutant(int n) {
  std::vector<std::vector<int>> words;
  for (auto& w : all_words(n, n)) {
    int mx = *std::max_element(w.begin(), w.end());
    std::vector<char> seen(n, 0);
    for (int x : w) seen[x] = 1;
    bool ok = true;
    for (int v = 0; v <= mx; ++v) ok = ok && seen[v];
    if (ok) words.push_back(w);
  }
  std::vector<FunctionTable> funcs;
  for (const auto& f : ndf_enumerate(n)) {
    bool initial = f[0] == 0;
    for (std::size_t i = 1; i < f.size(); ++i) initial = initial && f[i] - f[i - 1] <= 1;
    if (initial) funcs.push_back(f);
  }
  return word_commutant_dim(words, funcs, n);
}

}  // namespace hecke
