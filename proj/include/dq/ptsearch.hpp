#pragma once

// Height-bounded rational point search on r^2 = rhs(t) and point
// generation from seeds by the group law.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dq/poly.hpp"
#include "dq/quartic.hpp"
#include "dq/weierstrass.hpp"

namespace dq {

struct SearchConfig {
  std::int64_t height = 50;  // bound on |m| and n for t = m/n
  long budget = 3;           // |m|, |n| bound in m P1 + n P2
  unsigned threads = 0;      // 0: DQ_THREADS, else hardware concurrency
};

/// Worker count for searches: cfg.threads, else $DQ_THREADS, else the
/// hardware concurrency.
unsigned search_threads(const SearchConfig& cfg);

struct RhsPoint {
  Rat t, r;  // r >= 0, r^2 = rhs(t)
  friend bool operator==(const RhsPoint&, const RhsPoint&) = default;
};

/// All t = m/n in lowest terms with |m|, n <= height and rhs(t) a square,
/// ascending by (n, m). Throws std::invalid_argument on a zero rhs or a
/// height below 1.
std::vector<RhsPoint> search_rhs(const Poly& rhs, const SearchConfig& cfg);

/// r^2 = c3 t^3 + c2 t^2 + c1 t + c0  ->  Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2
/// via (X, Y) = (c3 t, c3 r).
class CubicModel {
 public:
  /// Throws std::invalid_argument unless rhs has degree 3; SingularCurve
  /// when the target is singular.
  explicit CubicModel(Poly rhs);

  const Poly& rhs() const { return rhs_; }
  const WeierstrassCurve& curve() const { return curve_; }

  EPoint to_curve(const Rat& t, const Rat& r) const;
  /// Throws std::invalid_argument on the identity.
  RhsPoint from_curve(const EPoint& p) const;

 private:
  Poly rhs_;
  WeierstrassCurve curve_;
};

inline CubicModel cubic_to_weierstrass(const Poly& rhs) { return CubicModel(rhs); }

/// m P1 + n P2 for |m|, |n| <= cfg.budget over the first two seeds (one
/// seed: m P1), without duplicates or the identity, in loop order
/// (m outer, n inner, each from -budget to budget). Throws NotOnCurve on an
/// off-curve seed.
std::vector<EPoint> generate(const WeierstrassCurve& e, const std::vector<EPoint>& seeds, const SearchConfig& cfg);

/// Same on a quartic model through its transferred group law. Points whose
/// image is not representable on the model (points at infinity) are dropped.
std::vector<QPoint> generate(const QuarticGroup& group, const std::vector<QPoint>& seeds, const SearchConfig& cfg);

}  // namespace dq
