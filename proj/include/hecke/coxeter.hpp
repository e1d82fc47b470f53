#pragma once

// Finite Coxeter groups of types A, B and I2(m), realized by tables.
//
// Elements are numbered 0..|W|-1 in canonical order: by length, ties broken
// lexicographically on the realization (one-line notation in type A, signed
// one-line notation in type B, lex-minimal reduced word in type I2). Index 0
// is always the identity. Generators are numbered 1..rank; in type B_n the
// generator n is the sign change of the first position.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Subset of {1..31} as a bitmask (bit i-1 holds i).
class DescentSet {
 public:
  constexpr DescentSet() = default;
  constexpr explicit DescentSet(std::uint32_t bits) : bits_(bits) {}
  DescentSet(std::initializer_list<int> elems) {
    for (int i : elems) insert(i);
  }

  static constexpr DescentSet full(int rank) { return DescentSet(rank >= 32 ? ~0u : (1u << rank) - 1u); }
  static DescentSet from_vector(const std::vector<int>& elems) {
    DescentSet d;
    for (int i : elems) d.insert(i);
    return d;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  constexpr void insert(int i) { bits_ |= 1u << (i - 1); }
  constexpr void erase(int i) { bits_ &= ~(1u << (i - 1)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr DescentSet complement(int rank) const { return DescentSet(full(rank).bits_ & ~bits_); }
  constexpr bool subset_of(DescentSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(DescentSet o) const { return (bits_ & o.bits_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i) {
      if (i <= 31 && contains(i)) out.push_back(i);
    }
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr DescentSet operator|(DescentSet a, DescentSet b) { return DescentSet(a.bits_ | b.bits_); }
  friend constexpr DescentSet operator&(DescentSet a, DescentSet b) { return DescentSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(DescentSet, DescentSet) = default;
  friend constexpr auto operator<=>(DescentSet a, DescentSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of {1..rank}, ordered by size then bitmask value.
inline std::vector<DescentSet> all_subsets(int rank) {
  std::vector<DescentSet> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
  std::stable_sort(out.begin(), out.end(), [](DescentSet x, DescentSet y) { return x.size() < y.size(); });
  return out;
}

enum class Family { A, B, I2 };

class CoxeterGroup;

/// Handle to an element; the group must outlive it.
struct GroupElement {
  const CoxeterGroup* group = nullptr;
  std::size_t index = 0;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group == b.group && a.index == b.index;
  }
};

class CoxeterGroup {
 public:
  using Elem = std::size_t;

  /// Parses "A3", "B2" or "I2(5)".
  static CoxeterGroup parse(std::string_view descriptor) {
    static const std::regex a_or_b(R"(([AB])(\d+))");
    static const std::regex dihedral(R"(I2\((\d+)\))");
    std::string s(descriptor);
    std::smatch m;
    if (std::regex_match(s, m, dihedral)) return CoxeterGroup(Family::I2, std::stoi(m[1]));
    if (std::regex_match(s, m, a_or_b)) {
      int r = std::stoi(m[2]);
      return m[1] == "A" ? CoxeterGroup(Family::A, r) : CoxeterGroup(Family::B, r);
    }
    throw std::invalid_argument("unsupported Coxeter group descriptor: " + s +
                                " (expected A<rank>, B<rank> or I2(<m>))");
  }

  /// Symmetric group S_n = A_{n-1}.
  static CoxeterGroup symmetric(int n) { return CoxeterGroup(Family::A, n - 1); }

  CoxeterGroup(Family family, int param) : family_(family), param_(param) {
    switch (family) {
      case Family::A:
        if (param < 0 || param > 8) throw std::invalid_argument("type A rank must lie in 0..8");
        rank_ = param;
        break;
      case Family::B:
        if (param < 1 || param > 6) throw std::invalid_argument("type B rank must lie in 1..6");
        rank_ = param;
        break;
      case Family::I2:
        if (param < 2 || param > 64) throw std::invalid_argument("I2(m) needs 2 <= m <= 64");
        rank_ = 2;
        break;
    }
    build();
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// n for A_{n-1} (one-line length) and B_n; m for I2(m).
  int degree() const { return family_ == Family::A ? rank_ + 1 : param_; }
  std::string name() const {
    switch (family_) {
      case Family::A: return "A" + std::to_string(rank_);
      case Family::B: return "B" + std::to_string(rank_);
      case Family::I2: return "I2(" + std::to_string(param_) + ")";
    }
    return {};
  }

  std::size_t size() const { return real_.size(); }
  Elem identity() const { return 0; }
  Elem longest() const { return size() - 1; }
  GroupElement element(Elem w) const { return {this, w}; }

  int length(Elem w) const { return length_[w]; }
  DescentSet descents(Elem w) const { return des_[w]; }
  DescentSet recoils(Elem w) const { return des_[inverse_[w]]; }
  Elem inverse(Elem w) const { return inverse_[w]; }

  /// w s
  Elem right(Elem w, int s) const { return right_[w * rank_ + (s - 1)]; }
  /// s w
  Elem left(int s, Elem w) const { return left_[w * rank_ + (s - 1)]; }

  Elem multiply(Elem u, Elem v) const {
    for (int s : reduced_word(v)) u = right(u, s);
    return u;
  }

  /// Elementary decreasing sort: keeps w when s is a descent.
  Elem act_pi(Elem w, int s) const { return des_[w].contains(s) ? w : right(w, s); }
  /// Elementary increasing sort, computed without reference to act_pi.
  Elem act_pibar(Elem w, int s) const {
    Elem ws = right(w, s);
    return length_[ws] > length_[w] ? w : ws;
  }
  /// Applies act_pi along the letters of a reduced word of tau.
  Elem act_pi_word(Elem w, Elem tau) const {
    for (int s : reduced_word(tau)) w = act_pi(w, s);
    return w;
  }
  Elem act_pi_word(Elem w, const std::vector<int>& word) const {
    for (int s : word) w = act_pi(w, s);
    return w;
  }

  /// Lexicographically minimal reduced word.
  const std::vector<int>& reduced_word(Elem w) const { return words_[w]; }

  bool weak_right_leq(Elem u, Elem v) const { return length_[u] + length_[multiply(inverse_[u], v)] == length_[v]; }

  /// Parabolic subgroup W_I in canonical order.
  std::vector<Elem> parabolic(DescentSet I) const {
    std::vector<Elem> out;
    for (Elem w = 0; w < size(); ++w) {
      if (DescentSet::from_vector(words_[w]).subset_of(I)) out.push_back(w);
    }
    return out;
  }

  /// Longest element of W_I.
  Elem parabolic_longest(DescentSet I) const { return parabolic(I).back(); }

  /// {w : iDes(w) and I are disjoint}, the minimal coset representatives of W_I \ W.
  std::vector<Elem> recoil_class(DescentSet I) const {
    std::vector<Elem> out;
    for (Elem w = 0; w < size(); ++w) {
      if (recoils(w).disjoint(I)) out.push_back(w);
    }
    return out;
  }

  /// c_I = #{w : Des(w) = I}, keyed by bitmask.
  std::map<DescentSet, std::size_t> descent_class_sizes() const {
    std::map<DescentSet, std::size_t> c;
    for (Elem w = 0; w < size(); ++w) ++c[des_[w]];
    return c;
  }

  const std::vector<int>& realization(Elem w) const { return real_[w]; }
  const std::string& label(Elem w) const { return labels_[w]; }

  Elem find(std::string_view label) const {
    for (Elem w = 0; w < size(); ++w) {
      if (labels_[w] == label) return w;
    }
    throw std::invalid_argument("no element labelled " + std::string(label) + " in " + name());
  }

  Elem find_realization(const std::vector<int>& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) throw std::invalid_argument("realization not in group");
    return it->second;
  }

  /// Checks s^2 = 1 and the braid relations on every element.
  bool check_coxeter_relations() const {
    for (Elem w = 0; w < size(); ++w) {
      for (int s = 1; s <= rank_; ++s) {
        if (right(right(w, s), s) != w) return false;
        for (int t = s + 1; t <= rank_; ++t) {
          int m = coxeter_exponent(s, t);
          Elem a = w, b = w;
          for (int k = 0; k < m; ++k) {
            a = right(a, k % 2 == 0 ? s : t);
            b = right(b, k % 2 == 0 ? t : s);
          }
          if (a != b) return false;
        }
      }
    }
    return true;
  }

  /// Order of st.
  int coxeter_exponent(int s, int t) const {
    if (s == t) return 1;
    if (s > t) std::swap(s, t);
    switch (family_) {
      case Family::A: return t == s + 1 ? 3 : 2;
      case Family::B:
        if (t == rank_ && s == 1) return rank_ == 1 ? 2 : 4;
        if (t == rank_) return 2;
        return t == s + 1 ? 3 : 2;
      case Family::I2: return param_;
    }
    return 2;
  }

 private:
  using Real = std::vector<int>;

  Real gen_right(const Real& r, int s) const {
    Real x = r;
    switch (family_) {
      case Family::A: std::swap(x[s - 1], x[s]); break;
      case Family::B:
        if (s == rank_) {
          x[0] = -x[0];
        } else {
          std::swap(x[s - 1], x[s]);
        }
        break;
      case Family::I2: {
        // (k, f) * s with s_1 = (0, 1), s_2 = (1, 1)
        int k2 = s == 1 ? 0 : 1;
        int k = x[0] + (x[1] ? -k2 : k2);
        x[0] = ((k % param_) + param_) % param_;
        x[1] ^= 1;
        break;
      }
    }
    return x;
  }

  Real gen_left(int s, const Real& r) const {
    Real x = r;
    switch (family_) {
      case Family::A:
        for (int& v : x) {
          if (v == s) {
            v = s + 1;
          } else if (v == s + 1) {
            v = s;
          }
        }
        break;
      case Family::B:
        for (int& v : x) {
          int a = v < 0 ? -v : v;
          int sign = v < 0 ? -1 : 1;
          if (s == rank_) {
            if (a == 1) v = -v;
          } else if (a == s) {
            v = sign * (s + 1);
          } else if (a == s + 1) {
            v = sign * s;
          }
        }
        break;
      case Family::I2: {
        // s * (k, f) with s = (k1, 1): (k1 - k, 1 ^ f)
        int k1 = s == 1 ? 0 : 1;
        x[0] = (((k1 - x[0]) % param_) + param_) % param_;
        x[1] ^= 1;
        break;
      }
    }
    return x;
  }

  Real identity_real() const {
    switch (family_) {
      case Family::A: {
        Real r(rank_ + 1);
        for (int i = 0; i <= rank_; ++i) r[i] = i + 1;
        return r;
      }
      case Family::B: {
        Real r(rank_);
        for (int i = 0; i < rank_; ++i) r[i] = i + 1;
        return r;
      }
      case Family::I2: return {0, 0};
    }
    return {};
  }

  void build() {
    // Breadth-first search on the right Cayley graph gives lengths.
    std::map<Real, int> dist;
    std::deque<Real> queue;
    Real id = identity_real();
    dist[id] = 0;
    queue.push_back(id);
    while (!queue.empty()) {
      Real r = queue.front();
      queue.pop_front();
      for (int s = 1; s <= rank_; ++s) {
        Real x = gen_right(r, s);
        if (dist.emplace(x, dist[r] + 1).second) queue.push_back(x);
      }
    }
    std::vector<std::pair<int, Real>> order;
    for (auto& [r, d] : dist) order.emplace_back(d, r);

    if (family_ == Family::I2) {
      // tie-break on the reduced word; words of length l alternate from either generator
      auto key = [&](const std::pair<int, Real>& e) {
        Real w1 = identity_real();
        for (int k = 0; k < e.first; ++k) w1 = gen_right(w1, k % 2 == 0 ? 1 : 2);
        return w1 == e.second ? 1 : 2;
      };
      std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return key(x) < key(y);
      });
    } else {
      std::sort(order.begin(), order.end());
    }

    std::size_t n = order.size();
    real_.resize(n);
    length_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      real_[i] = order[i].second;
      length_[i] = order[i].first;
      index_[real_[i]] = i;
    }
    right_.resize(n * rank_);
    left_.resize(n * rank_);
    des_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int s = 1; s <= rank_; ++s) {
        right_[i * rank_ + (s - 1)] = index_.at(gen_right(real_[i], s));
        left_[i * rank_ + (s - 1)] = index_.at(gen_left(s, real_[i]));
        if (length_[right_[i * rank_ + (s - 1)]] < length_[i]) des_[i].insert(s);
      }
    }
    // Lex-minimal reduced word: first letter is the smallest left descent.
    words_.resize(n);
    for (std::size_t i = 1; i < n; ++i) {
      for (int s = 1; s <= rank_; ++s) {
        Elem sw = left_[i * rank_ + (s - 1)];
        if (length_[sw] < length_[i]) {
          words_[i] = {s};
          words_[i].insert(words_[i].end(), words_[sw].begin(), words_[sw].end());
          break;
        }
      }
    }
    inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Elem v = 0;
      const auto& w = words_[i];
      for (auto it = w.rbegin(); it != w.rend(); ++it) v = right(v, *it);
      inverse_[i] = v;
    }
    labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels_[i] = make_label(i);
  }

  std::string make_label(Elem w) const {
    std::string s;
    switch (family_) {
      case Family::A:
        for (int v : real_[w]) {
          if (rank_ >= 9 && !s.empty()) s += ",";
          s += std::to_string(v);
        }
        return s;
      case Family::B:
        for (int v : real_[w]) s += (v < 0 ? "-" : "+") + std::to_string(v < 0 ? -v : v);
        return s;
      case Family::I2:
        if (words_[w].empty()) return "e";
        for (int v : words_[w]) s += std::to_string(v);
        return s;
    }
    return s;
  }

  Family family_;
  int param_;
  int rank_ = 0;
  std::vector<Real> real_;
  std::vector<int> length_;
  std::map<Real, Elem> index_;
  std::vector<Elem> right_;
  std::vector<Elem> left_;
  std::vector<DescentSet> des_;
  std::vector<std::vector<int>> words_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
};

}  // namespace hecke
