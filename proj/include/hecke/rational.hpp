#pragma once

// Exact rational numbers with a 64-bit fast path.
//
// Nearly every coefficient produced by the operator algebras in this library
// is a small integer, so values are kept as a reduced int64 fraction and only
// promoted to a GMP rational when an intermediate result does not fit.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design of a numeric type
  Rational(long long num, long long den) { assign_fraction(num, den); }
  explicit Rational(const mpq_class& q) { assign_big(q); }

  Rational(const Rational& other)
      : num_(other.num_), den_(other.den_),
        big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) {
      throw std::invalid_argument("not a rational number: " + std::string(text));
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
  }

  /// Integer value; throws when the number is not an integer or exceeds int64.
  long long to_int() const {
    if (big_ || den_ != 1) throw std::domain_error("rational is not a small integer: " + str());
    return num_;
  }

  std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<long long>{}(num_) * 1000003u ^ std::hash<long long>{}(den_);
  }

  Rational operator-() const {
    Rational r(*this);
    r.negate();
    return r;
  }

  void negate() {
    if (big_) {
      mpq_neg(big_->get_mpq_t(), big_->get_mpq_t());
    } else if (num_ == INT64_MIN) {
      assign_big(-to_mpq());
    } else {
      num_ = -num_;
    }
  }

  Rational& operator+=(const Rational& o) { return add(o, false); }
  Rational& operator-=(const Rational& o) { return add(o, true); }

  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_ && num_ != INT64_MIN && o.num_ != INT64_MIN) {
      if (num_ == 0 || o.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      // cross-reduce first so the products are already in lowest terms
      long long g1 = std::gcd(num_, o.den_);
      long long g2 = std::gcd(o.num_, den_);
      __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
      __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
      if (fits(n) && fits(d)) {
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
        return *this;
      }
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return *this *= o.inverse();
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) {
      mpq_class q;
      mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
      return Rational(q);
    }
    if (num_ == INT64_MIN) return Rational(mpq_class(1) / to_mpq());
    return num_ > 0 ? Rational(den_, num_, Normalized{}) : Rational(-den_, -num_, Normalized{});
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // a normalized big value never fits in the small form
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = static_cast<__int128>(a.num_) * b.den_;
      __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct Normalized {};
  Rational(long long num, long long den, Normalized) : num_(num), den_(den) {}

  static bool fits(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

  static unsigned long long abs128_mod(__int128 v, long long m) {
    __int128 r = v % m;
    if (r < 0) r = -r;
    return static_cast<unsigned long long>(r);
  }

  void assign_fraction(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (num == INT64_MIN || den == INT64_MIN) {
      assign_big(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    big_.reset();
  }

  void assign_big(mpq_class q) {
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
    } else {
      big_ = std::make_unique<mpq_class>(std::move(q));
    }
  }

  Rational& add(const Rational& o, bool subtract) {
    if (!big_ && !o.big_) {
      long long on = o.num_;
      if (subtract) {
        if (on == INT64_MIN) {
          assign_big(to_mpq() - o.to_mpq());
          return *this;
        }
        on = -on;
      }
      if (den_ == 1 && o.den_ == 1) {
        long long s;
        if (!__builtin_add_overflow(num_, on, &s)) {
          num_ = s;
          return *this;
        }
      } else {
        // Knuth's reduced addition: only gcd(numerator, g) can remain.
        long long g = std::gcd(den_, o.den_);
        __int128 n = static_cast<__int128>(num_) * (o.den_ / g) + static_cast<__int128>(on) * (den_ / g);
        __int128 d = static_cast<__int128>(den_) * (o.den_ / g);
        if (n == 0) {
          num_ = 0;
          den_ = 1;
          return *this;
        }
        long long g2 = static_cast<long long>(std::gcd(abs128_mod(n, g), static_cast<unsigned long long>(g)));
        if (g2 > 1) {
          n /= g2;
          d /= g2;
        }
        if (fits(n) && fits(d)) {
          num_ = static_cast<long long>(n);
          den_ = static_cast<long long>(d);
          return *this;
        }
      }
    }
    assign_big(subtract ? mpq_class(to_mpq() - o.to_mpq()) : mpq_class(to_mpq() + o.to_mpq()));
    return *this;
  }

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hecke

template <>
struct std::hash<hecke::Rational> {
  std::size_t operator()(const hecke::Rational& r) const noexcept { return r.hash(); }
};
