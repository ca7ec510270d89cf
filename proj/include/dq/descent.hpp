#pragma once

// Divisibility by 2 on split quartic models y^2 = f1(x) f2(x) f3(x) f4(x),
// fi = ai x + bi.
//
// With base (x0, y0) as identity, a rational point Q is twice a rational
// point exactly when every
//
//   g_ij(Q) = fi(x0) fj(x0) fi(x(Q)) fj(x(Q))
//
// is a rational square. With base inf+ the base factors become ai aj.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dq/quartic.hpp"

namespace dq {

struct PairValue {
  int i = 0, j = 0;  // 1-based, i < j
  Rat value;
  std::optional<Rat> witness;  // nonnegative root when value is a square
  bool is_square() const { return witness.has_value(); }
};

struct SquareClassCert {
  enum class Method { Criterion, Oracle };

  Method method = Method::Criterion;
  std::vector<PairValue> pairs;  // the six pairs in order (1,2),(1,3),...,(3,4)
  Rat delta;                     // f1(x(Q)), a representative of the square class
  /// When f_i(x(Q)) = delta * z_i^2 for all i (delta itself a square or not).
  std::optional<std::array<Rat, 4>> z;
  /// Oracle fallback only: the halves found on the Jacobian.
  std::vector<EPoint> halves;

  /// Key/value text block, one "key=value" per line.
  std::string str() const;
};

struct DoubleVerdict {
  bool is_double = false;
  SquareClassCert cert;
};

/// fi(x0) fj(x0) fi(xQ) fj(xQ), 1-based indices.
Rat gij(const QuarticCurve& c, const Rat& x0, const Rat& xq, int i, int j);

/// Criterion for Q in 2C(Q) with the affine point `base` as identity.
/// Falls back to halving on the Jacobian when x(Q) is a root of some fi
/// or x(Q) = x0, where the g_ij degenerate.
DoubleVerdict is_double(const QuarticCurve& c, const QPoint& base, const QPoint& q);

/// Criterion with inf+ as identity (g_ij = ai aj fi fj). Requires
/// a1 a2 a3 a4 to be a rational square; throws Inapplicable otherwise.
DoubleVerdict is_double_inf_base(const QuarticCurve& c, const QPoint& q);

struct DeltaCertificate {
  bool delta_is_square = false;
  Rat delta;             // f1(x(Q))
  Rat fifth_candidate;   // x(Q)
};

/// Requires all fi(x0) fj(x0) to be squares and Q to be a double; then the
/// common square class of the fi(x(Q)) is that of f1(x(Q)), and it is trivial
/// exactly when f1(x(Q)) is a square. Throws std::invalid_argument otherwise.
DeltaCertificate delta_certificate(const QuarticCurve& c, const QPoint& base, const QPoint& q);

// ---- rational 4-torsion on v^2 = (k1 u + 1)(k2 u + 1)(k3 u + 1)(k4 u + 1)

using KTuple = std::array<Rat, 4>;

/// The curve for a k-tuple; rejects zero or repeated k.
QuarticCurve k_quartic(const KTuple& k);

struct Torsion4Verdict {
  bool has_4_torsion = false;
  int condition = 0;  // first satisfied pairing 1, 2, 3 for (i), (ii), (iii); 0 when none
};

Torsion4Verdict has_rational_4_torsion(const KTuple& k);

struct TwoTorsionPreimage {
  EPoint point;                 // on jacobian_long(k_quartic(k))
  std::optional<QPoint> preimage;
  std::string failure;          // why the preimage is missing
};

/// The three nontrivial 2-torsion points of the Jacobian and their
/// preimages on the quartic, from closed forms in the k_i.
std::array<TwoTorsionPreimage, 3> two_torsion_preimages(const KTuple& k);

}  // namespace dq
