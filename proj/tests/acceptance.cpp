// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownUnattainable, whose failure is a documented property of the claimed
// rule and not of the implementation.

#include "hecke/hecke_group.hpp"
#include "hecke/nd_monoids.hpp"
#include "hecke/towers.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace hecke;

namespace {

struct Outcome {
  bool pass = true;
  bool outside_documented = false;  // a failure other than the documented one
  std::ostringstream detail;

  // record a failed sub-check; keep going so the detail lists all of them
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t catalan(int n) { return binom(2 * n, n) / (n + 1); }

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string str(std::uint64_t x) { return std::to_string(x); }

// pairs (u, v) of permutations without a common descent, by direct check on one-line words
std::uint64_t brute_pairs(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<unsigned> des;
  for (const auto& q : perms) {
    unsigned d = 0;
    for (int i = 0; i + 1 < n; ++i) d |= (q[i] > q[i + 1]) << i;
    des.push_back(d);
  }
  std::uint64_t h = 0;
  for (unsigned a : des) {
    for (unsigned b : des) h += (a & b) == 0;
  }
  return h;
}

// ---------------------------------------------------------------- 1..7 ----

void dimension_sequence(Outcome& o) {
  const std::vector<std::uint64_t> want = {1, 3, 19, 211, 3651, 90921};
  for (int n = 1; n <= 6; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    std::uint64_t h = pair_count(W);
    o.require(h == want[n - 1], "pair count n=" + str(n));
    if (n <= 5) o.require(brute_pairs(n) == h, "brute pair count n=" + str(n));
    if (n <= 4) {
      auto t0 = std::chrono::steady_clock::now();
      auto c = hs_closure(make_generators(W));
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      o.require(c.dim() == h, "closure n=" + str(n));
      o.require(sandwich_solve(W).dim() == h, "sandwich n=" + str(n));
      if (n == 4) {
        o.require(dt.count() <= 60.0, "closure n=4 within 60 s");
        o.detail << "closure(n=4) " << dt.count() << " s; ";
      }
    }
  }
  o.detail << "h = 1, 3, 19, 211 three ways; 3651, 90921 by pair count";
}

void hs2_table_check(Outcome& o) {
  std::vector<std::vector<std::string>> want = {
      {"1", "s1", "pi1"},
      {"s1", "1", "pi1"},
      {"pi1", "1 + s1 - pi1", "pi1"},
  };
  o.require(hs2_table() == want, "HS2 table");
  auto g = make_generators(CoxeterGroup::symmetric(2));
  o.require(g.pi[0] * g.s[0] == Matrix::identity(2) + g.s[0] - g.pi[0], "pi1 s1 = 1 + s1 - pi1 as operators");
  o.detail << "3x3 table over {1, s1, pi1} matches, pi1 s1 = 1 + s1 - pi1";
}

void triangularity(Outcome& o) {
  std::size_t total = 0;
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto b = basis_B(W);
    o.require(b.size() == pair_count(W), "|B| n=" + str(n));
    for (const auto& e : b) o.require(check_triangularity(W, e), W.label(e.sigma) + "," + W.label(e.tau));
    total += b.size();
  }
  o.detail << total << " basis elements checked for n <= 4";
}

void cartan_boolean(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    Matrix c = cartan_matrix(W, g);
    // independent oracle: entry (I, J) = 1 iff J is a subset of I
    auto subs = all_subsets(W.rank());
    bool ok = true;
    for (Index i = 0; i < subs.size(); ++i) {
      for (Index j = 0; j < subs.size(); ++j) ok &= c.at(i, j) == Rational(subs[j].subset_of(subs[i]) ? 1 : 0);
    }
    o.require(ok, "cartan n=" + str(n));
    std::uint64_t pairs = 0;
    for (auto I : subs) {
      for (auto J : subs) pairs += I.subset_of(J);
    }
    o.require(morita_dim(W, hs_closure(g)) == pairs, "Morita dimension n=" + str(n));
  }
  o.detail << "boolean incidence and dim eHWe = #{I subset J} for n <= 4";
}

void module_dimensions(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    std::uint64_t simple_total = 0;
    for (auto I : all_subsets(W.rank())) {
      // blocks of W_I: runs of consecutive generators in I
      std::uint64_t expect = factorial(n);
      int run = 1;
      for (int i = 1; i <= n; ++i) {
        if (i < n && I.contains(i)) {
          ++run;
        } else {
          expect /= factorial(run);
          run = 1;
        }
      }
      o.require(projective_P(W, g, I).sub.module.dim == expect, "dim P_" + I.str() + " n=" + str(n));
      simple_total += simple_S(W, g, I).module.dim;
    }
    o.require(simple_total == factorial(n), "sum dim S_I n=" + str(n));
  }
  auto S3 = CoxeterGroup::symmetric(3);
  const std::vector<std::pair<const char*, const char*>> reference = {
      {"123", "123 - 213 - 132 + 231 + 312 - 321"}, {"213", "213 - 312"}, {"132", "132 - 231"},
      {"231", "231 - 321"}, {"312", "312 - 321"}, {"321", "321"}};
  for (const auto& [s, v] : reference) o.require(v_sigma(S3, S3.find(s)) == parse_vector(S3, v), std::string("v_") + s);
  o.detail << "dim P_I and sum dim S_I = n! for n <= 5; S_3 v-basis matches the reference vectors";
}

void relation_pack(Outcome& o) {
  std::size_t checked = 0;
  for (int n = 2; n <= 5; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    auto g = make_generators(W);
    for (const auto& r : verify_relations(W, g)) {
      o.require(r.holds, r.name + " n=" + str(n));
      ++checked;
    }
    if (n > 4) continue;
    Operator one = Matrix::identity(W.size());
    for (Rational q : {Rational(2), Rational(-1), Rational(1, 3)}) {
      for (int s = 1; s <= W.rank(); ++s) {
        Operator t = hecke_q_generator(g, s, q);
        o.require(t * t == (q - Rational(1)) * t + q * one, "quadratic q=" + q.str() + " n=" + str(n));
      }
    }
  }
  o.detail << checked << " operator identities for n <= 5; T^2 = (q-1)T + q at q = 2, -1, 1/3 for n <= 4";
}

void monoid_variants(Outcome& o) {
  const std::vector<std::size_t> spi = {1, 4, 66, 6264}, pp = {1, 3, 23, 477};
  for (int n = 1; n <= 4; ++n) {
    auto W = CoxeterGroup::symmetric(n);
    o.require(monoid_size(W, true) == spi[n - 1], "<s,pi> n=" + str(n));
    o.require(monoid_size(W, false) == pp[n - 1], "<pi,pibar> n=" + str(n));
  }
  o.detail << "1, 4, 66, 6264 and 1, 3, 23, 477";
}

// --------------------------------------------------------------- 8..13 ----

void nd_counts(Outcome& o) {
  for (int n = 1; n <= 8; ++n) o.require(ndf_enumerate(n).size() == binom(2 * n - 1, n - 1), "NDF n=" + str(n));
  for (int n = 1; n <= 10; ++n) o.require(ndpf_enumerate(n).size() == catalan(n), "NDPF n=" + str(n));
  for (int n = 1; n <= 5; ++n) o.require(exterior_rep_rank(n) == binom(2 * n - 1, n - 1), "rank n=" + str(n));
  o.detail << "NDF n <= 8, NDPF n <= 10, exterior rank n <= 5";
}

void quotient_chain(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    o.require(heckesg_exterior_image_dim(n) == binom(2 * n - 1, n - 1), "{s, pi} image n=" + str(n));
    o.require(ndpf_exterior_image_dim(n) == catalan(n), "{pi} image n=" + str(n));
    auto tl = temperley_lieb_check(n);
    o.require(tl.closure_dim == catalan(n), "{pi - pibar} image n=" + str(n));
    o.require(tl.nilpotent && tl.braid_like && tl.commuting, "TL relations n=" + str(n));
  }
  o.detail << "images of dims C(2n-1, n-1), C_n, C_n with TL relations at q = -1 for n <= 5";
}

void idempotents(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::string tag = " n=" + str(n) + " k=" + str(k);
      auto e = idempotent_e(n, k);
      o.require(monoid_mul(e, e) == e, "e^2 = e" + tag);
      for (int i = 1; i < n; ++i) {
        auto ep = monoid_mul(e, monoid_basis(nd_pi(n, i)));
        o.require(i >= k ? ep == e : ep.empty(), "e pi_" + str(i) + tag);
      }
      o.require(principal_dim(n, e) == binom(n, k), "dim e NDFA" + tag);
    }
  }
  o.detail << "hook-form e_n^k for 1 <= k <= n <= 6";
}

void ndfa_structure(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    auto c = ndfa_cartan(n);
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        o.require(c.at(k, l) == Rational(k == l || k == l + 1 ? 1 : 0), "cartan n=" + str(n));
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      o.require(ndfa_simple(n, k).dim == binom(n - 1, k - 1), "dim S n=" + str(n) + " k=" + str(k));
      if (k >= 2) o.require((border_delta(n, k) * border_delta(n, k - 1)).is_zero(), "delta^2 n=" + str(n));
    }
  }
  o.detail << "bidiagonal Cartan n <= 5; dim S_n^k = C(n-1, k-1), delta^2 = 0 for n <= 6";
}

void ndpfa_structure(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    auto alg = ndpfa_closure(n);
    // basic algebra with one-dimensional simples: #simples = dim A - dim rad A
    o.require(alg.dim() - radical_dim(alg) == (Index{1} << (n - 1)), "number of simples n=" + str(n));
  }
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t pairs = 0;
    for (int k = 0; k <= n - 1; ++k) {
      // k-subsets of {1..n-1}, componentwise comparison of sorted entries
      std::vector<std::vector<int>> subs;
      for (unsigned m = 0; m < (1u << (n - 1)); ++m) {
        if (std::popcount(m) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < n - 1; ++i) {
          if (m >> i & 1) s.push_back(i);
        }
        subs.push_back(s);
      }
      for (const auto& a : subs) {
        for (const auto& b : subs) {
          bool le = true;
          for (int i = 0; i < k; ++i) le &= a[i] <= b[i];
          pairs += le;
        }
      }
    }
    o.require(pairs == catalan(n), "Grassmann pairs n=" + str(n));
    o.require(grassmann_incidence_dim(n) == catalan(n), "incidence dim n=" + str(n));
  }
  for (int n = 2; n <= 4; ++n) {
    auto r = ndpfa_kernel_report(n);
    o.require(r.kernel_in_radical, "kernel in radical n=" + str(n));
    o.require(r.ndpfa_dim == catalan(n), "NDPFA dim n=" + str(n));
  }
  for (int n = 1; n <= 4; ++n) o.require(ndpfa_cartan(n) == grassmann_cartan(n), "cartan n=" + str(n));
  o.detail << "2^(n-1) simples n <= 5; Grassmann incidence = C_n n <= 7; kernel in radical and Cartan n <= 4";
}

void commutants(Outcome& o) {
  o.require(evaluation_commutant(2, 2) == pair_count(CoxeterGroup::symmetric(2)), "(2,2)");
  o.require(evaluation_commutant(2, 3) == pair_count(CoxeterGroup::symmetric(2)), "(2,3)");
  o.require(evaluation_commutant(3, 3) == pair_count(CoxeterGroup::symmetric(3)), "(3,3)");
  o.require(parking_commutant(2) == 3, "parking n=2");
  o.require(parking_commutant(3) == 19, "parking n=3");
  o.detail << "commutants 3, 3, 19; parking variant 3, 19";
}

// ------------------------------------------------------------------- 14 ----

void grothendieck(Outcome& o) {
  std::vector<std::string> failing;
  std::size_t binding = 0;
  for (Tower t : {Tower::HS, Tower::HSAdjoint, Tower::H0, Tower::NDFA, Tower::NDPFA}) {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; m + n <= 4; ++n) {
        auto cert = tower_certificate(t, m, n);
        for (const auto& e : cert.entries) {
          if (!e.binding) continue;
          ++binding;
          if (e.ok()) continue;
          failing.push_back(tower_name(t) + " " + str(m) + "+" + str(n) + " " + e.kind + " " + e.input);
          if (t != Tower::NDFA || e.kind != "ind-simple") o.outside_documented = true;
        }
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    bool ok = g_transition_matches_cartan(n);
    o.require(ok, "G transition n=" + str(n));
    if (!ok) o.outside_documented = true;
  }
  o.require(failing.empty(), str(failing.size()) + " of " + str(binding) + " binding entries disagree");
  if (!failing.empty()) {
    o.detail << "all in NDFA ind-simple: " << (o.outside_documented ? "no" : "yes") << "; first: " << failing.front()
             << ". The NDFA simple-induction rule predicts S^(k1+k2), but inducing "
             << "S^k1 (x) S^k2 yields a module with extra S^(k1+k2-1) factors (NDFA_1 (x) NDFA_1 induces to the "
             << "3-dim regular NDFA_2). All other tower rules match; ";
  }
  o.detail << "G-basis transition = NDPFA Cartan for n <= 4";
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(Outcome&)> run;
};

// Criteria whose stated rule is contradicted by direct computation.
const std::set<int> kKnownUnattainable = {14};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "dimension sequence", dimension_sequence},
      {2, "HS2 multiplication table", hs2_table_check},
      {3, "basis B triangularity", triangularity},
      {4, "Cartan = boolean incidence, Morita dimension", cartan_boolean},
      {5, "projective and simple module dimensions", module_dimensions},
      {6, "relation pack and generic-q quadratic", relation_pack},
      {7, "monoid variants", monoid_variants},
      {8, "NDF/NDPF counts and exterior rank", nd_counts},
      {9, "quotient chain on exterior powers", quotient_chain},
      {10, "idempotents e_n^k", idempotents},
      {11, "NDFA Cartan, simples and border map", ndfa_structure},
      {12, "NDPFA simples, incidence, kernel, Cartan", ndpfa_structure},
      {13, "commutant theorems", commutants},
      {14, "Grothendieck certificates", grothendieck},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.outside_documented = true;
      o.detail << "exception: " << e.what();
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    bool known = kKnownUnattainable.count(c.id) > 0 && !o.outside_documented;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str();
    if (!o.pass && known) std::cout << " [documented unattainable]";
    std::cout << " (" << static_cast<int>(dt.count() * 1000) << " ms)" << std::endl;
    if (!o.pass && !known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
