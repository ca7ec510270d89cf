#pragma once

// Quartic models y^2 = a x^4 + b x^3 + c x^2 + d x + e, their Jacobians,
// and the explicit birational maps to those Jacobians.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "dq/poly.hpp"
#include "dq/rat.hpp"
#include "dq/weierstrass.hpp"

namespace dq {

/// A map evaluated at a point outside its closed table of handled cases.
class ExceptionalPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction whose hypotheses fail (e.g. phi1 on a non-square constant term).
class Inapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f(x) = a x + b with a != 0.
struct LinearFactor {
  Rat a, b;
  Rat operator()(const Rat& x) const { return a * x + b; }
  Rat root() const { return -b / a; }
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

using Factors = std::array<LinearFactor, 4>;

class QPoint {
 public:
  enum class Kind { Affine, InfPlus, InfMinus };

  QPoint(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {}
  static QPoint inf_plus() { return QPoint(Kind::InfPlus); }
  static QPoint inf_minus() { return QPoint(Kind::InfMinus); }

  Kind kind() const { return kind_; }
  bool is_affine() const { return kind_ == Kind::Affine; }
  const Rat& u() const;
  const Rat& v() const;

  /// "u,v", "inf+" or "inf-"
  std::string str() const;
  static QPoint parse(std::string_view text);

  friend bool operator==(const QPoint& a, const QPoint& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Affine || (a.u_ == b.u_ && a.v_ == b.v_);
  }
  friend bool operator<(const QPoint& a, const QPoint& b);

 private:
  explicit QPoint(Kind k) : kind_(k) {}
  Rat u_, v_;
  Kind kind_ = Kind::Affine;
};

struct QuarticInvariants {
  Rat I, J, c4, c6, disc;
};

QuarticInvariants quartic_invariants(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e);

class QuarticCurve {
 public:
  /// Expanded form. Throws SingularCurve when disc = 0.
  QuarticCurve(Rat a, Rat b, Rat c, Rat d, Rat e);
  /// Product of four linear factors with distinct roots.
  explicit QuarticCurve(const Factors& factors);

  /// "a,b,c,d,e" or "(a1,b1)(a2,b2)(a3,b3)(a4,b4)"
  static QuarticCurve parse(std::string_view text);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }
  const Rat& e() const { return e_; }
  Poly poly() const { return Poly({e_, d_, c_, b_, a_}); }

  bool is_factored() const { return factors_.has_value(); }
  /// Throws std::logic_error when not factored.
  const Factors& factors() const;
  /// This curve with a factorization attached, if the quartic splits over Q.
  std::optional<QuarticCurve> split() const;

  Rat operator()(const Rat& x) const { return (((a_ * x + b_) * x + c_) * x + d_) * x + e_; }
  bool contains(const QPoint& p) const;
  QuarticInvariants invariants() const { return quartic_invariants(a_, b_, c_, d_, e_); }

  std::string str() const;

  friend bool operator==(const QuarticCurve& x, const QuarticCurve& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_ && x.e_ == y.e_;
  }

 private:
  Rat a_, b_, c_, d_, e_;
  std::optional<Factors> factors_;
};

/// y^2 = x^3 - 27 c4 x - 54 c6
WeierstrassCurve jacobian_short(const QuarticCurve& c);

/// Jacobian attached to the constant-term map phi1: with e = q^2, q > 0,
/// a1 = d/q, a2 = c - d^2/4q^2, a3 = 2qb, a4 = -4q^2 a, a6 = a2 a4.
/// Throws Inapplicable unless e is a nonzero rational square.
WeierstrassCurve jacobian_long(const QuarticCurve& c);

/// Substitutes x -> x + s. Factors, when present, are carried along.
QuarticCurve shift_quartic(const QuarticCurve& c, const Rat& s);
/// Transports a point of c to shift_quartic(c, s): u -> u - s.
QPoint shift_point(const QPoint& p, const Rat& s);

// Birational map for y^2 = a x^4 + b x^3 + c x^2 + d x + q^2:
//   x = (2q(v+q) + du)/u^2,  y = (4q^2(v+q) + 2q(du + cu^2) - d^2u^2/2q)/u^3
//   u = (2q(x+c) - d^2/2q)/y, v = -q + u(ux - d)/2q
// Exceptional cases (closed table):
//   (0, q) <-> O,   (0, -q) <-> (-a2, a1 a2 - a3),
//   (-a2, 0) <-> (u0, v0), the one affine point where the inverse is 0/0,
//   other points with y = 0 correspond to the points at infinity and raise.
class Phi1Map {
 public:
  explicit Phi1Map(QuarticCurve c);

  const QuarticCurve& curve() const { return curve_; }
  const WeierstrassCurve& jacobian() const { return jac_; }
  const Rat& q() const { return q_; }

  EPoint forward(const QPoint& p) const;
  QPoint inverse(const EPoint& p) const;

 private:
  QuarticCurve curve_;
  Rat q_;
  WeierstrassCurve jac_;
};

// Birational map for the depressed monic model y^2 = x^4 - 6a x^2 - 8b x + c
// onto w^2 = v^3 + A v + B, c = -4A - 3a^2, B = b^2 - a^3 - A a:
//   C -> E: v = (x^2 + y - a)/2, w = (x^3 + xy - 3ax - 2b)/2
//   E -> C: x = (w + b)/(v - a), y = 2v + a - x^2
// inf+ <-> O, inf- <-> (a, b), and (a, -b) <-> the affine point with
// x = (c - 9a^2)/8b, y = 3a - x^2.
class Phi2Map {
 public:
  /// Throws Inapplicable unless the model is monic with no cubic term.
  explicit Phi2Map(QuarticCurve c);

  const QuarticCurve& curve() const { return curve_; }
  const WeierstrassCurve& jacobian() const { return jac_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  EPoint forward(const QPoint& p) const;
  QPoint inverse(const EPoint& p) const;

 private:
  QuarticCurve curve_;
  Rat a_, b_;
  WeierstrassCurve jac_;
};

// Group law on a quartic model with a chosen rational base point as
// identity, transported from the Jacobian. An affine base (x0, y0), y0 != 0,
// is moved to (0, |y0|) by a shift and a sign change of y and goes through
// phi1; a base at infinity requires a square leading coefficient, the model
// is scaled to monic and depressed, and goes through phi2.
class QuarticGroup {
 public:
  QuarticGroup(QuarticCurve c, QPoint base);

  const QuarticCurve& curve() const { return curve_; }
  const QPoint& base() const { return base_; }
  const WeierstrassCurve& jacobian() const;

  EPoint to_jacobian(const QPoint& p) const;
  QPoint from_jacobian(const EPoint& p) const;

  QPoint add(const QPoint& p, const QPoint& q) const;
  QPoint dbl(const QPoint& p) const { return add(p, p); }
  QPoint neg(const QPoint& p) const;
  QPoint mul(long n, const QPoint& p) const;

 private:
  struct Setup {
    Rat shift, yscale;
    std::variant<Phi1Map, Phi2Map> map;
  };
  static Setup normalize(const QuarticCurve& c, const QPoint& base);
  QuarticGroup(QuarticCurve c, QPoint base, Setup s);

  QPoint to_model(const QPoint& p) const;
  QPoint from_model(const QPoint& p) const;

  QuarticCurve curve_;
  QPoint base_;
  Rat shift_;   // model u = u - shift_
  Rat yscale_;  // model v = v * yscale_
  std::variant<Phi1Map, Phi2Map> map_;
};

QPoint add_on_quartic(const QuarticCurve& c, const QPoint& base, const QPoint& p, const QPoint& q);
QPoint double_on_quartic(const QuarticCurve& c, const QPoint& base, const QPoint& p);

}  // namespace dq
