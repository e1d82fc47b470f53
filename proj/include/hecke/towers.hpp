#pragma once

// Towers of algebras (HS_n, HS*_n, H_n(0), NDFA_n, NDPFA_n): simple and
// projective modules per level, induction and restriction along
// A_m (x) A_n -> A_{m+n}, and certificates comparing composition factors with
// the predicted product/coproduct rules in QSym, NCSF and Sym.

#include "hecke/hecke_group.hpp"
#include "hecke/module.hpp"
#include "hecke/nd_monoids.hpp"
#include "hecke/qsym.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

enum class Tower { HS, HSAdjoint, H0, NDFA, NDPFA };

inline std::string tower_name(Tower t) {
  switch (t) {
    case Tower::HS: return "HS";
    case Tower::HSAdjoint: return "HS*";
    case Tower::H0: return "H0";
    case Tower::NDFA: return "NDFA";
    case Tower::NDPFA: return "NDPFA";
  }
  return "?";
}

inline Tower parse_tower(const std::string& s) {
  if (s == "HS") return Tower::HS;
  if (s == "HS*" || s == "HS-adjoint" || s == "HSA") return Tower::HSAdjoint;
  if (s == "H0") return Tower::H0;
  if (s == "NDFA") return Tower::NDFA;
  if (s == "NDPFA") return Tower::NDPFA;
  throw std::invalid_argument("unknown tower: " + s);
}

/// One level A_n of a tower, with modules presented over its generators.
struct TowerLevel {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<DescentSet> subsets;  // label sets; empty for NDFA (labels k = 1..n)
  std::vector<ModulePresentation> simples, projectives;
  std::vector<Operator> gens;  // on a faithful space
  Index degree = 0;
  AlgebraClosure closure;
  FactorDetector detector;
  Matrix cartan;  // cartan(i, j) = [P_i : S_j]
};

namespace detail {

inline Operator word_product(const std::vector<Operator>& gens, const Word& w, Index degree) {
  Operator op = Matrix::identity(degree);
  for (int g : w) op = op * gens[g];
  return op;
}

/// v . pi_{w0(J^c)} . (1 - pi)_{w0(J)} in the regular H_n(0) module, whose
/// cyclic module is the indecomposable projective with top pi_i = 0 on J.
inline SparseVector h0_projective_generator(const CoxeterGroup& W, const HeckeGroupGenerators& g, DescentSet J) {
  Operator one = Matrix::identity(W.size());
  SparseVector v = SparseVector::unit(W.identity());
  for (int s : W.reduced_word(W.parabolic_longest(J.complement(W.rank())))) v = g.pi[s - 1].apply(v);
  for (int s : W.reduced_word(W.parabolic_longest(J))) v = (one - g.pi[s - 1]).apply(v);
  return v;
}

inline void finish_level(TowerLevel& L) {
  L.closure = algebra_closure(L.gens, L.degree);
  L.detector = make_detector(L.closure, L.simples, L.labels);
  L.cartan = Matrix(L.projectives.size(), L.simples.size());
  for (Index i = 0; i < L.projectives.size(); ++i) {
    auto f = L.detector.factors(L.projectives[i]);
    for (Index j = 0; j < f.size(); ++j) L.cartan.set(i, j, f[j]);
  }
}

inline TowerLevel build_level(Tower t, int n) {
  TowerLevel L;
  L.n = n;
  if (t == Tower::NDFA) {
    for (int k = 1; k <= n; ++k) {
      L.labels.push_back(std::to_string(k));
      L.simples.push_back(ndfa_simple(n, k));
      L.projectives.push_back(ndfa_projective(n, k));
    }
    auto g = exterior_generators(n);
    L.gens = g.pi;
    L.gens.insert(L.gens.end(), g.pibar.begin(), g.pibar.end());
    L.degree = (Index{1} << n) - 1;
    finish_level(L);
    return L;
  }
  L.subsets = all_subsets(n - 1);
  for (auto I : L.subsets) L.labels.push_back(I.str());
  if (t == Tower::NDPFA) {
    for (auto I : L.subsets) {
      L.simples.push_back(ndpfa_simple(n, I));
      L.projectives.push_back(projective_P_ndpf(n, I).module);
    }
    L.gens = exterior_generators(n).pi;
    L.degree = (Index{1} << n) - 1;
    finish_level(L);
    return L;
  }
  CoxeterGroup W = CoxeterGroup::symmetric(n);
  auto g = make_generators(W);
  L.degree = W.size();
  if (t == Tower::HS) {
    L.gens = g.hs();
    for (auto I : L.subsets) {
      L.simples.push_back(simple_S(W, g, I).module);
      L.projectives.push_back(projective_P(W, g, I).sub.module);
    }
  } else if (t == Tower::HSAdjoint) {
    for (const auto& op : g.hs()) L.gens.push_back(op.transpose());
    std::vector<Submodule> ps;
    for (auto I : L.subsets) ps.push_back(adjoint_projective(W, g, I));
    for (Index i = 0; i < L.subsets.size(); ++i) {
      // S*_I = P*_I / sum of P*_J over J strictly containing I
      Subspace above(ps[i].basis.dim());
      for (Index j = 0; j < L.subsets.size(); ++j) {
        if (j == i || !L.subsets[i].subset_of(L.subsets[j])) continue;
        for (const auto& row : ps[j].basis.rows()) {
          if (!ps[i].basis.contains(row)) throw std::logic_error("adjoint projectives are not nested");
          above.insert(ps[i].basis.coordinates(row));
        }
      }
      L.simples.push_back(quotient_module(ps[i].module, above));
      L.projectives.push_back(ps[i].module);
    }
  } else {
    L.gens = g.pi;
    ModulePresentation reg{W.size(), g.pi, {}};
    for (auto J : L.subsets) {
      L.simples.push_back(h0_simple(W.rank(), J));
      L.projectives.push_back(generate_submodule(reg, {h0_projective_generator(W, g, J)}).module);
    }
  }
  finish_level(L);
  return L;
}

}  // namespace detail

/// Levels are built once per process.
inline const TowerLevel& tower_level(Tower t, int n) {
  if (n < 1) throw std::invalid_argument("tower level must be at least 1");
  static std::map<std::pair<Tower, int>, std::unique_ptr<TowerLevel>> cache;
  auto& slot = cache[{t, n}];
  if (!slot) slot = std::make_unique<TowerLevel>(detail::build_level(t, n));
  return *slot;
}

inline int tower_generator_count(Tower t, int n) {
  switch (t) {
    case Tower::HS:
    case Tower::HSAdjoint:
    case Tower::NDFA: return 2 * (n - 1);
    default: return n - 1;
  }
}

/// Generators of A_m (x) A_n as words in the generators of A_{m+n}.
inline std::vector<Word> tower_embedding(Tower t, int m, int n) {
  int N = m + n;
  std::vector<Word> out;
  bool paired = tower_generator_count(t, 2) == 2;
  auto push_block = [&](int shift, int size) {
    for (int i = 1; i < size; ++i) out.push_back({shift + i - 1});
    if (paired) {
      for (int i = 1; i < size; ++i) out.push_back({N - 1 + shift + i - 1});
    }
  };
  push_block(0, m);
  push_block(m, n);
  return out;
}

// ------------------------------------------------------------ predictions ----

/// A character map chi(module_I) -> B_{C(I)} (or B_{C(I^c)} when complemented).
struct CharRule {
  Basis basis;
  bool complement = false;
};

struct TowerRules {
  CharRule proj_product, simple_product, simple_coproduct;
  std::optional<CharRule> proj_coproduct;
};

inline std::optional<TowerRules> tower_rules(Tower t) {
  switch (t) {
    case Tower::HS: return TowerRules{{Basis::F}, {Basis::M}, {Basis::R}, CharRule{Basis::Lambda, true}};
    case Tower::HSAdjoint: return TowerRules{{Basis::F, true}, {Basis::X}, {Basis::R, true}, CharRule{Basis::S, true}};
    case Tower::H0: return TowerRules{{Basis::R}, {Basis::F}, {Basis::F}, CharRule{Basis::R}};
    case Tower::NDPFA: return TowerRules{{Basis::R}, {Basis::G}, {Basis::F}, std::nullopt};
    case Tower::NDFA: return std::nullopt;
  }
  return std::nullopt;
}

inline Composition rule_label(const CharRule& r, DescentSet I, int n) {
  return comp_from_set(r.complement ? I.complement(n - 1) : I, n);
}

/// The asserted characteristic of a module of the given kind.
inline BasisExpansion tower_characteristic(Tower t, const std::string& kind, int n, DescentSet I) {
  auto rules = tower_rules(t);
  if (!rules) throw std::invalid_argument("tower " + tower_name(t) + " has no composition-indexed characteristics");
  const CharRule* r = nullptr;
  if (kind == "proj-product") r = &rules->proj_product;
  if (kind == "simple-product") r = &rules->simple_product;
  if (kind == "simple-coproduct") r = &rules->simple_coproduct;
  if (kind == "proj-coproduct" && rules->proj_coproduct) r = &*rules->proj_coproduct;
  if (!r) throw std::invalid_argument("no characteristic '" + kind + "' for tower " + tower_name(t));
  return BasisExpansion(r->basis, rule_label(*r, I, n));
}

/// NDFA characteristics through Sym/NCSF: chi(P_n^k) <- R_I with l(I) = k;
/// chi(S_n^k) <- h_lambda with l(lambda) = k; chi(P_n^k) -> sum of m_lambda.
inline Composition ndfa_representative(int n, int k) {
  Composition c(k, 1);
  c[0] = n - k + 1;
  return c;
}

struct CertificateEntry {
  std::string kind;   // ind-proj, ind-simple, res-simple, res-proj, ...
  std::string input;  // module labels
  Index dim = 0;
  std::vector<Rational> computed;
  std::optional<std::vector<Rational>> predicted;
  bool binding = true;  // counts toward the certificate verdict
  std::string note;
  bool ok() const { return predicted && *predicted == computed; }
};

struct TowerCertificate {
  Tower tower;
  int m = 0, n = 0;
  std::vector<std::string> product_labels, tensor_labels;
  std::vector<CertificateEntry> entries;

  bool all_ok() const {
    for (const auto& e : entries) {
      if (e.binding && !e.ok()) return false;
    }
    return true;
  }
  std::size_t checked() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.binding;
    return c;
  }
};

namespace detail {

inline std::vector<Rational> row_dense(const Matrix& m, Index r) { return m.row(r).to_dense(m.cols()); }

inline void add_scaled(std::vector<Rational>& acc, const std::vector<Rational>& v, const Rational& c) {
  for (Index i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

inline std::vector<Rational> kron(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

}  // namespace detail

/// Induction and restriction certificates for A_m (x) A_n -> A_{m+n}.
inline TowerCertificate tower_certificate(Tower t, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("tower certificate needs m, n >= 1");
  const TowerLevel& A = tower_level(t, m);
  const TowerLevel& B = tower_level(t, n);
  const TowerLevel& C = tower_level(t, m + n);
  TowerCertificate cert{t, m, n, C.labels, {}, {}};
  auto words = tower_embedding(t, m, n);
  std::vector<Operator> left;
  for (const auto& w : words) left.push_back(detail::word_product(C.gens, w, C.degree));
  RegularStructure reg = regular_structure(C.closure, left, C.gens);
  FactorDetector td = tensor_detector(A.detector, B.detector, tower_generator_count(t, m));
  cert.tensor_labels = td.labels;
  auto rules = tower_rules(t);
  Index nb = B.labels.size(), nc = C.labels.size();

  // ---- induction
  for (Index i = 0; i < A.labels.size(); ++i) {
    for (Index j = 0; j < nb; ++j) {
      std::string input = A.labels[i] + " x " + B.labels[j];
      for (bool proj : {true, false}) {
        const auto& x = proj ? A.projectives[i] : A.simples[i];
        const auto& y = proj ? B.projectives[j] : B.simples[j];
        ModulePresentation ind = module_induce(tensor_modules(x, y), reg);
        CertificateEntry e;
        e.kind = proj ? "ind-proj" : "ind-simple";
        e.input = input;
        e.dim = ind.dim;
        e.computed = C.detector.factors(ind);
        std::vector<Rational> pred(nc);
        if (rules) {
          const CharRule& r = proj ? rules->proj_product : rules->simple_product;
          BasisExpansion prod = product(BasisExpansion(r.basis, rule_label(r, A.subsets[i], m)),
                                        BasisExpansion(r.basis, rule_label(r, B.subsets[j], n)));
          for (Index k = 0; k < nc; ++k) {
            Rational c = prod.coeff(rule_label(r, C.subsets[k], m + n));
            if (c.is_zero()) continue;
            if (proj) {
              detail::add_scaled(pred, detail::row_dense(C.cartan, k), c);
            } else {
              pred[k] += c;
            }
          }
          e.note = basis_name(r.basis) + " product";
        } else {
          // NDFA: R_I R_J -> P^{l}, h_lambda h_mu -> S^{l}
          int k1 = static_cast<int>(i) + 1, k2 = static_cast<int>(j) + 1;
          if (proj) {
            BasisExpansion prod =
                product(BasisExpansion(Basis::R, ndfa_representative(m, k1)), BasisExpansion(Basis::R, ndfa_representative(n, k2)));
            for (const auto& [c, x] : prod.terms) {
              detail::add_scaled(pred, detail::row_dense(C.cartan, c.size() - 1), x);
            }
            e.note = "R product (P^{k1+k2} + P^{k1+k2-1})";
          } else {
            Composition la = ndfa_representative(m, k1), mu = ndfa_representative(n, k2);
            Composition lm = la;
            lm.insert(lm.end(), mu.begin(), mu.end());
            pred[sort_partition(lm).size() - 1] += Rational(1);  // h_la h_mu = h_{la u mu}
            e.note = "h product (S^{k1+k2})";
          }
        }
        e.predicted = pred;
        cert.entries.push_back(std::move(e));
      }
    }
  }

  // ---- restriction
  Index nt = td.labels.size();
  for (Index k = 0; k < nc; ++k) {
    for (bool proj : {false, true}) {
      ModulePresentation res = module_restrict(proj ? C.projectives[k] : C.simples[k], words);
      CertificateEntry e;
      e.kind = proj ? "res-proj" : "res-simple";
      e.input = C.labels[k];
      e.dim = res.dim;
      e.computed = td.factors(res);
      std::vector<Rational> pred(nt);
      if (rules) {
        const CharRule* r = proj ? (rules->proj_coproduct ? &*rules->proj_coproduct : nullptr) : &rules->simple_coproduct;
        if (!r) {
          e.binding = false;
          e.note = "no named characteristic; multiplicities reported";
          auto proj_mult = projective_multiplicities(kronecker(A.cartan, B.cartan), e.computed);
          if (proj_mult) {
            std::string s;
            for (Index q = 0; q < proj_mult->size(); ++q) {
              if ((*proj_mult)[q].is_zero()) continue;
              s += (s.empty() ? "" : " + ") + (*proj_mult)[q].str() + "*P" + td.labels[q];
            }
            e.note += "; as projectives: " + (s.empty() ? "0" : s);
          }
          cert.entries.push_back(std::move(e));
          continue;
        }
        TensorExpansion cop = coproduct(BasisExpansion(r->basis, rule_label(*r, C.subsets[k], m + n)));
        for (Index i = 0; i < A.labels.size(); ++i) {
          for (Index j = 0; j < nb; ++j) {
            Rational c = cop.coeff(rule_label(*r, A.subsets[i], m), rule_label(*r, B.subsets[j], n));
            if (c.is_zero()) continue;
            if (proj) {
              detail::add_scaled(pred, detail::kron(detail::row_dense(A.cartan, i), detail::row_dense(B.cartan, j)), c);
            } else {
              pred[i * nb + j] += c;
            }
          }
        }
        e.note = basis_name(r->basis) + " coproduct";
        e.predicted = pred;
      } else {
        int kk = static_cast<int>(k) + 1;
        if (!proj) {
          for (int k1 = 1; k1 <= m; ++k1) {
            for (int k2 = 1; k2 <= n; ++k2) {
              if (k1 + k2 == kk || k1 + k2 == kk + 1) pred[(k1 - 1) * nb + (k2 - 1)] += Rational(1);
            }
          }
          e.note = "S^{k1} x S^{k2}, k1 + k2 in {k, k+1}";
          e.predicted = pred;
        } else {
          // literal rule: k1 + k2 = k with 1 <= k_i <= n_i (the m_lambda coproduct)
          for (int k1 = 1; k1 <= m; ++k1) {
            int k2 = kk - k1;
            if (k2 < 1 || k2 > n) continue;
            detail::add_scaled(pred, detail::kron(detail::row_dense(A.cartan, k1 - 1), detail::row_dense(B.cartan, k2 - 1)),
                               Rational(1));
          }
          e.predicted = pred;
          e.binding = false;
          e.note = "literal rule k1 + k2 = k, 1 <= k_i <= n_i (m_lambda coproduct)";
          cert.entries.push_back(e);
          // exterior-algebra reading: k_i = 0 allowed, Lambda^0 has the single factor S^1
          std::vector<Rational> ext(nt);
          auto factors_of = [](const TowerLevel& L, int k) {
            if (k > 0) return detail::row_dense(L.cartan, k - 1);
            std::vector<Rational> v(L.labels.size());
            v[0] = Rational(1);
            return v;
          };
          for (int k1 = 0; k1 <= m; ++k1) {
            int k2 = kk - k1;
            if (k2 < 0 || k2 > n) continue;
            detail::add_scaled(ext, detail::kron(factors_of(A, k1), factors_of(B, k2)), Rational(1));
          }
          e.kind = "res-proj-exterior";
          e.binding = true;
          e.predicted = ext;
          e.note = "Lambda^k = sum Lambda^{k1} x Lambda^{k2}, k_i >= 0, Lambda^0 ~ S^1";
        }
      }
      cert.entries.push_back(std::move(e));
    }
  }
  return cert;
}

/// The R -> G transition matrix against the NDPFA Cartan matrix.
inline bool g_transition_matches_cartan(int n) {
  auto comps = compositions(n);
  Matrix rg(comps.size(), comps.size());
  for (Index i = 0; i < comps.size(); ++i) {
    BasisExpansion g = change_basis(BasisExpansion(Basis::R, comps[i]), Basis::G);
    for (Index j = 0; j < comps.size(); ++j) rg.set(i, j, g.coeff(comps[j]));
  }
  return rg == tower_level(Tower::NDPFA, n).cartan;
}

}  // namespace hecke
