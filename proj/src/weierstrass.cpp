#include "dq/weierstrass.hpp"

#include <algorithm>
#include <sstream>

#include "text.hpp"

namespace dq {

const Rat& EPoint::x() const {
  if (!affine_) throw std::logic_error("x() of the identity point");
  return x_;
}

const Rat& EPoint::y() const {
  if (!affine_) throw std::logic_error("y() of the identity point");
  return y_;
}

std::string EPoint::str() const { return affine_ ? x_.str() + "," + y_.str() : "O"; }

EPoint EPoint::parse(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "O" || t == "o" || t == "0") return {};
  auto parts = detail::split_rats(t, 2, "point");
  return {parts[0], parts[1]};
}

bool operator<(const EPoint& a, const EPoint& b) {
  if (a.is_identity() || b.is_identity()) return a.is_identity() && !b.is_identity();
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.y_ < b.y_;
}

WeierstrassCurve::WeierstrassCurve(Unchecked, Rat a1, Rat a2, Rat a3, Rat a4, Rat a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  b2_ = a1_ * a1_ + 4 * a2_;
  b4_ = 2 * a4_ + a1_ * a3_;
  b6_ = a3_ * a3_ + 4 * a6_;
  b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  if (4 * b8_ != b2_ * b6_ - b4_ * b4_) throw std::logic_error("b-invariant identity violated");
  disc_ = -b2_ * b2_ * b8_ - 8 * b4_.pow(3) - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
}

WeierstrassCurve::WeierstrassCurve(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6)
    : WeierstrassCurve(Unchecked{}, std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)) {
  require_smooth();
}

WeierstrassCurve WeierstrassCurve::possibly_singular(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6) {
  return {Unchecked{}, std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
}

WeierstrassCurve WeierstrassCurve::parse(std::string_view text) {
  auto a = detail::split_rats(text, 5, "curve");
  return {a[0], a[1], a[2], a[3], a[4]};
}

Rat WeierstrassCurve::c4() const { return b2_ * b2_ - 24 * b4_; }
Rat WeierstrassCurve::c6() const { return -b2_.pow(3) + 36 * b2_ * b4_ - 216 * b6_; }

Rat WeierstrassCurve::j_invariant() const {
  require_smooth();
  return c4().pow(3) / disc_;
}

void WeierstrassCurve::require_smooth() const {
  if (is_singular()) throw SingularCurve("singular Weierstrass curve [" + str() + "]");
}

bool WeierstrassCurve::contains(const EPoint& p) const {
  if (p.is_identity()) return true;
  const Rat &x = p.x(), &y = p.y();
  return y * y + a1_ * x * y + a3_ * y == ((x + a2_) * x + a4_) * x + a6_;
}

void WeierstrassCurve::require_on_curve(const EPoint& p) const {
  if (!contains(p)) throw NotOnCurve("point (" + p.str() + ") is not on [" + str() + "]");
}

EPoint WeierstrassCurve::neg(const EPoint& p) const {
  require_on_curve(p);
  if (p.is_identity()) return p;
  return {p.x(), -p.y() - a1_ * p.x() - a3_};
}

EPoint WeierstrassCurve::add_unchecked(const EPoint& p, const EPoint& q) const {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  Rat lambda, nu;
  if (x1 == x2) {
    // q = -p (including 2-torsion doubled)
    if (y1 + y2 + a1_ * x2 + a3_ == 0) return EPoint::identity();
    Rat den = 2 * y1 + a1_ * x1 + a3_;
    lambda = (3 * x1 * x1 + 2 * a2_ * x1 + a4_ - a1_ * y1) / den;
    nu = (-x1 * x1 * x1 + a4_ * x1 + 2 * a6_ - a3_ * y1) / den;
  } else {
    lambda = (y2 - y1) / (x2 - x1);
    nu = (y1 * x2 - y2 * x1) / (x2 - x1);
  }
  Rat x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
  Rat y3 = -(lambda + a1_) * x3 - nu - a3_;
  return {std::move(x3), std::move(y3)};
}

EPoint WeierstrassCurve::add(const EPoint& p, const EPoint& q) const {
  require_smooth();
  require_on_curve(p);
  require_on_curve(q);
  return add_unchecked(p, q);
}

EPoint WeierstrassCurve::mul_unchecked(long n, const EPoint& p) const {
  EPoint base = p;
  if (n < 0) {
    base = base.is_identity() ? base : EPoint(base.x(), -base.y() - a1_ * base.x() - a3_);
    n = -n;
  }
  EPoint acc;
  while (n > 0) {
    if (n & 1) acc = add_unchecked(acc, base);
    n >>= 1;
    if (n > 0) base = add_unchecked(base, base);
  }
  return acc;
}

EPoint WeierstrassCurve::mul(long n, const EPoint& p) const {
  require_smooth();
  require_on_curve(p);
  return mul_unchecked(n, p);
}

Poly WeierstrassCurve::duplication_numerator() const { return Poly({-b8_, -2 * b6_, -b4_, 0, 1}); }

Poly WeierstrassCurve::duplication_denominator() const { return Poly({b6_, 2 * b4_, b2_, 4}); }

std::vector<EPoint> WeierstrassCurve::two_torsion() const {
  require_smooth();
  std::vector<EPoint> out;
  for (const auto& x : rational_roots(duplication_denominator())) out.emplace_back(x, -(a1_ * x + a3_) / 2);
  return out;
}

std::vector<EPoint> WeierstrassCurve::halves(const EPoint& p) const {
  require_smooth();
  require_on_curve(p);
  std::vector<EPoint> out;
  if (p.is_identity()) {
    out.push_back(EPoint::identity());
    for (auto& t : two_torsion()) out.push_back(std::move(t));
    return out;
  }
  Poly psi = duplication_numerator() - p.x() * duplication_denominator();
  for (const auto& x : rational_roots(psi)) {
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0; its discriminant
    // is exactly the duplication denominator at x.
    Rat disc = duplication_denominator()(x);
    auto root = square_root(disc);
    if (!root) continue;
    Rat lin = a1_ * x + a3_;
    for (const Rat& s : {*root, -*root}) {
      EPoint cand(x, (-lin + s) / 2);
      if (add_unchecked(cand, cand) == p && std::find(out.begin(), out.end(), cand) == out.end())
        out.push_back(std::move(cand));
      if (root->is_zero()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string WeierstrassCurve::str() const {
  std::ostringstream os;
  os << a1_ << "," << a2_ << "," << a3_ << "," << a4_ << "," << a6_;
  return os.str();
}

}  // namespace dq
