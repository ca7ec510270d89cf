#pragma once

// Exact rationals in canonical form, backed by GMP.
//
// A Rat is always stored as num/den with gcd(|num|, den) = 1 and den >= 1;
// zero is 0/1. Every arithmetic result is canonical.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dq {

using Int = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class Rat {
 public:
  Rat() = default;

  template <std::integral T>
    requires(sizeof(T) <= sizeof(long))
  Rat(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>)
      v_ = static_cast<long>(v);
    else
      v_ = static_cast<unsigned long>(v);
  }
  Rat(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  /// Parses "n", "-n", "p/q" (sign allowed on either part, q != 0).
  /// Accepts non-canonical input. Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& gmp() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// max(|num|, den)
  Int height() const;

  Rat abs() const;
  Rat inverse() const;
  Rat pow(unsigned e) const;
  std::optional<Rat> checked_div(const Rat& rhs) const;

  std::string str() const { return v_.get_str(); }

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Orders by (height, value); used wherever output must be deterministic
/// and "small numbers first".
bool height_less(const Rat& a, const Rat& b);

/// floor(sqrt(n)) and whether n is a perfect square. Throws on n < 0.
std::pair<Int, bool> int_sqrt(const Int& n);

/// Nonnegative exact square root when r is a rational square.
std::optional<Rat> square_root(const Rat& r);

inline bool is_square(const Rat& r) { return square_root(r).has_value(); }

}  // namespace dq
