#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dq/rat.hpp"

namespace dq {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> ascending);
  Poly(std::initializer_list<Rat> ascending) : Poly(std::vector<Rat>(ascending)) {}

  static Poly from_descending(std::vector<Rat> descending);
  static Poly constant(const Rat& c) { return Poly({c}); }
  /// a*x + b
  static Poly linear(const Rat& a, const Rat& b) { return Poly({b, a}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(); }
  const Rat& leading() const { return c_.back(); }

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  /// p(x + s)
  Poly shifted(const Rat& s) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Quotient and remainder; throws DivisionByZero on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd (zero only if both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Distinct rational roots in ascending order. Throws std::invalid_argument
/// on the zero polynomial.
///
/// Factorization-free: the squarefree part is made primitive over Z, its
/// real roots are isolated with a Sturm sequence and bisected until each
/// isolating interval contains at most one number of the form k/L, where L
/// is the leading coefficient (every rational root has that form). That
/// single candidate is then tested exactly.
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace dq
