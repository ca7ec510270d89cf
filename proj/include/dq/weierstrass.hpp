#pragma once

// Long Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
//
//   b2 = a1^2 + 4a2          b4 = 2a4 + a1a3          b6 = a3^2 + 4a6
//   b8 = a1^2 a6 + 4a2a6 - a1a3a4 + a2a3^2 - a4^2
//   c4 = b2^2 - 24b4         c6 = -b2^3 + 36b2b4 - 216b6
//   disc = -b2^2 b8 - 8b4^3 - 27b6^2 + 9b2b4b6,   j = c4^3 / disc

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dq/poly.hpp"
#include "dq/rat.hpp"

namespace dq {

class SingularCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotOnCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of E(Q): the identity or an affine pair.
class EPoint {
 public:
  EPoint() = default;  // identity
  EPoint(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)), affine_(true) {}
  static EPoint identity() { return {}; }

  bool is_identity() const { return !affine_; }
  const Rat& x() const;
  const Rat& y() const;

  /// "O" or "x,y"
  std::string str() const;
  static EPoint parse(std::string_view text);

  friend bool operator==(const EPoint& a, const EPoint& b) {
    if (a.affine_ != b.affine_) return false;
    return !a.affine_ || (a.x_ == b.x_ && a.y_ == b.y_);
  }
  /// Identity first, then lexicographic on (x, y).
  friend bool operator<(const EPoint& a, const EPoint& b);

 private:
  Rat x_, y_;
  bool affine_ = false;
};

class WeierstrassCurve {
 public:
  /// Throws SingularCurve when disc = 0.
  WeierstrassCurve(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);
  /// y^2 = x^3 + A x + B
  static WeierstrassCurve short_form(const Rat& A, const Rat& B) { return {0, 0, 0, A, B}; }
  /// Diagnostics only: group operations refuse a singular result.
  static WeierstrassCurve possibly_singular(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);
  /// "a1,a2,a3,a4,a6"
  static WeierstrassCurve parse(std::string_view text);

  const Rat& a1() const { return a1_; }
  const Rat& a2() const { return a2_; }
  const Rat& a3() const { return a3_; }
  const Rat& a4() const { return a4_; }
  const Rat& a6() const { return a6_; }
  const Rat& b2() const { return b2_; }
  const Rat& b4() const { return b4_; }
  const Rat& b6() const { return b6_; }
  const Rat& b8() const { return b8_; }
  Rat c4() const;
  Rat c6() const;
  const Rat& discriminant() const { return disc_; }
  bool is_singular() const { return disc_.is_zero(); }
  Rat j_invariant() const;

  bool contains(const EPoint& p) const;

  EPoint neg(const EPoint& p) const;
  EPoint add(const EPoint& p, const EPoint& q) const;
  EPoint dbl(const EPoint& p) const { return add(p, p); }
  EPoint mul(long n, const EPoint& p) const;

  /// All rational T != O with 2T = O, sorted by x.
  std::vector<EPoint> two_torsion() const;

  /// All rational R with 2R = p (for p = O this is O plus the 2-torsion).
  /// Independent of any quartic model: x(R) is a root of the duplication
  /// numerator minus x(p) times its denominator; y(R) comes from the curve
  /// quadratic, and every candidate is re-doubled and compared exactly.
  std::vector<EPoint> halves(const EPoint& p) const;

  /// x(2R) = dup_num(x) / dup_den(x)
  Poly duplication_numerator() const;   // x^4 - b4 x^2 - 2 b6 x - b8
  Poly duplication_denominator() const; // 4x^3 + b2 x^2 + 2 b4 x + b6

  /// "a1,a2,a3,a4,a6"
  std::string str() const;

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  struct Unchecked {};
  WeierstrassCurve(Unchecked, Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);
  void require_smooth() const;
  void require_on_curve(const EPoint& p) const;
  EPoint add_unchecked(const EPoint& p, const EPoint& q) const;
  EPoint mul_unchecked(long n, const EPoint& p) const;

  Rat a1_, a2_, a3_, a4_, a6_;
  Rat b2_, b4_, b6_, b8_, disc_;
};

}  // namespace dq
