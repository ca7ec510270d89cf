#include "dq/quartic.hpp"

#include <algorithm>
#include <sstream>

#include "text.hpp"

namespace dq {

// ---- QPoint ---------------------------------------------------------------

const Rat& QPoint::u() const {
  if (!is_affine()) throw std::logic_error("u() of a point at infinity");
  return u_;
}

const Rat& QPoint::v() const {
  if (!is_affine()) throw std::logic_error("v() of a point at infinity");
  return v_;
}

std::string QPoint::str() const {
  switch (kind_) {
    case Kind::InfPlus:
      return "inf+";
    case Kind::InfMinus:
      return "inf-";
    default:
      return u_.str() + "," + v_.str();
  }
}

QPoint QPoint::parse(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "inf+") return inf_plus();
  if (t == "inf-") return inf_minus();
  auto p = detail::split_rats(t, 2, "quartic point");
  return {p[0], p[1]};
}

bool operator<(const QPoint& a, const QPoint& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  if (!a.is_affine()) return false;
  if (a.u_ != b.u_) return a.u_ < b.u_;
  return a.v_ < b.v_;
}

// ---- QuarticCurve -----------------------------------------------------------

QuarticInvariants quartic_invariants(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e) {
  QuarticInvariants inv;
  inv.I = 12 * a * e - 3 * b * d + c * c;
  inv.J = 72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c.pow(3);
  inv.c4 = 16 * inv.I;
  inv.c6 = 32 * inv.J;
  inv.disc = (inv.c4.pow(3) - inv.c6 * inv.c6) / 1728;
  return inv;
}

QuarticCurve::QuarticCurve(Rat a, Rat b, Rat c, Rat d, Rat e)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), e_(std::move(e)) {
  if (invariants().disc.is_zero()) throw SingularCurve("quartic [" + str() + "] has a repeated root");
}

namespace {

Poly product(const Factors& f) {
  Poly p = Poly::constant(1);
  for (const auto& l : f) p = p * Poly::linear(l.a, l.b);
  return p;
}

Factors checked_factors(const Factors& f) {
  for (const auto& l : f)
    if (l.a.is_zero()) throw std::invalid_argument("linear factor with zero x-coefficient");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (f[i].root() == f[j].root())
        throw SingularCurve("factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share the root " +
                            f[i].root().str());
  return f;
}

}  // namespace

QuarticCurve::QuarticCurve(const Factors& factors) {
  factors_ = checked_factors(factors);
  Poly p = product(*factors_);
  a_ = p[4], b_ = p[3], c_ = p[2], d_ = p[1], e_ = p[0];
  if (invariants().disc.is_zero()) throw std::logic_error("distinct roots but zero discriminant");
}

QuarticCurve QuarticCurve::parse(std::string_view text) {
  auto t = detail::trim(text);
  if (!t.empty() && t.front() == '(') {
    Factors f;
    std::size_t idx = 0;
    std::size_t pos = 0;
    while (pos < t.size()) {
      if (t[pos] == ' ' || t[pos] == '*') {
        ++pos;
        continue;
      }
      if (t[pos] != '(') throw std::invalid_argument("malformed factored quartic '" + std::string(text) + "'");
      auto close = t.find(')', pos);
      if (close == std::string_view::npos) throw std::invalid_argument("unbalanced parenthesis in '" + std::string(text) + "'");
      if (idx == 4) throw std::invalid_argument("factored quartic needs exactly four factors");
      auto ab = detail::split_rats(t.substr(pos + 1, close - pos - 1), 2, "linear factor");
      f[idx++] = {ab[0], ab[1]};
      pos = close + 1;
    }
    if (idx != 4) throw std::invalid_argument("factored quartic needs exactly four factors");
    return QuarticCurve(f);
  }
  auto c = detail::split_rats(t, 5, "quartic");
  return {c[0], c[1], c[2], c[3], c[4]};
}

const Factors& QuarticCurve::factors() const {
  if (!factors_) throw std::logic_error("quartic [" + str() + "] carries no factorization");
  return *factors_;
}

std::optional<QuarticCurve> QuarticCurve::split() const {
  if (factors_) return *this;
  if (a_.is_zero()) return std::nullopt;
  auto roots = rational_roots(poly());
  if (roots.size() != 4) return std::nullopt;
  Factors f;
  for (std::size_t i = 0; i < 4; ++i) f[i] = {1, -roots[i]};
  f[0] = {a_, -a_ * roots[0]};
  return QuarticCurve(f);
}

bool QuarticCurve::contains(const QPoint& p) const {
  if (p.is_affine()) return p.v() * p.v() == (*this)(p.u());
  return !a_.is_zero() && is_square(a_);
}

std::string QuarticCurve::str() const {
  std::ostringstream os;
  if (factors_) {
    for (const auto& l : *factors_) os << "(" << l.a << "," << l.b << ")";
  } else {
    os << a_ << "," << b_ << "," << c_ << "," << d_ << "," << e_;
  }
  return os.str();
}

WeierstrassCurve jacobian_short(const QuarticCurve& c) {
  auto inv = c.invariants();
  return WeierstrassCurve::short_form(-27 * inv.c4, -54 * inv.c6);
}

namespace {

Rat positive_root_of_constant(const QuarticCurve& c) {
  auto q = square_root(c.e());
  if (!q || q->is_zero()) throw Inapplicable("phi1 inapplicable: constant term " + c.e().str() + " is not a nonzero square");
  return *q;
}

WeierstrassCurve long_model(const QuarticCurve& c, const Rat& q) {
  Rat a1 = c.d() / q;
  Rat a2 = c.c() - c.d() * c.d() / (4 * q * q);
  Rat a3 = 2 * q * c.b();
  Rat a4 = -4 * q * q * c.a();
  Rat a6 = a2 * a4;
  return {a1, a2, a3, a4, a6};
}

}  // namespace

WeierstrassCurve jacobian_long(const QuarticCurve& c) { return long_model(c, positive_root_of_constant(c)); }

QuarticCurve shift_quartic(const QuarticCurve& c, const Rat& s) {
  if (c.is_factored()) {
    Factors f = c.factors();
    for (auto& l : f) l.b += l.a * s;
    return QuarticCurve(f);
  }
  Poly p = c.poly().shifted(s);
  return {p[4], p[3], p[2], p[1], p[0]};
}

QPoint shift_point(const QPoint& p, const Rat& s) {
  if (!p.is_affine()) return p;
  return {p.u() - s, p.v()};
}

// ---- phi1 --------------------------------------------------------------------

Phi1Map::Phi1Map(QuarticCurve c)
    : curve_(std::move(c)), q_(positive_root_of_constant(curve_)), jac_(long_model(curve_, q_)) {}

EPoint Phi1Map::forward(const QPoint& p) const {
  if (!p.is_affine()) throw ExceptionalPoint("phi1 is not defined at " + p.str());
  if (!curve_.contains(p)) throw NotOnCurve("point (" + p.str() + ") is not on [" + curve_.str() + "]");
  const Rat &u = p.u(), &v = p.v();
  const Rat &c = curve_.c(), &d = curve_.d();
  if (u.is_zero()) {
    if (v == q_) return EPoint::identity();
    return {-jac_.a2(), jac_.a1() * jac_.a2() - jac_.a3()};
  }
  Rat u2 = u * u;
  Rat x = (2 * q_ * (v + q_) + d * u) / u2;
  Rat y = (4 * q_ * q_ * (v + q_) + 2 * q_ * (d * u + c * u2) - d * d * u2 / (2 * q_)) / (u2 * u);
  return {std::move(x), std::move(y)};
}

QPoint Phi1Map::inverse(const EPoint& p) const {
  if (!jac_.contains(p)) throw NotOnCurve("point (" + p.str() + ") is not on [" + jac_.str() + "]");
  if (p.is_identity()) return {0, q_};
  const Rat &x = p.x(), &y = p.y();
  const Rat &a = curve_.a(), &b = curve_.b(), &c = curve_.c(), &d = curve_.d();
  if (y.is_zero()) {
    if (x != -jac_.a2()) throw ExceptionalPoint("phi1^-1 at (" + p.str() + ") lands on a point at infinity");
    if (jac_.a1() * jac_.a2() == jac_.a3()) return {0, -q_};
    // The curve meets v = -q - (a2 u^2 + d u)/2q in u = 0 and in one more point.
    const Rat& a2 = jac_.a2();
    Rat den = a2 * a2 / (4 * q_ * q_) - a;
    if (den.is_zero()) throw ExceptionalPoint("phi1^-1 at (" + p.str() + ") lands on a point at infinity");
    Rat u0 = (b - d * a2 / (2 * q_ * q_)) / den;
    Rat v0 = -q_ - (a2 * u0 * u0 + d * u0) / (2 * q_);
    return {std::move(u0), std::move(v0)};
  }
  Rat u = (2 * q_ * (x + c) - d * d / (2 * q_)) / y;
  Rat v = -q_ + u * (u * x - d) / (2 * q_);
  return {std::move(u), std::move(v)};
}

// ---- phi2 --------------------------------------------------------------------

namespace {

QuarticCurve require_depressed_monic(QuarticCurve c) {
  if (c.a() != 1 || !c.b().is_zero())
    throw Inapplicable("phi2 inapplicable: model [" + c.str() + "] is not monic with zero cubic term");
  return c;
}

}  // namespace

Phi2Map::Phi2Map(QuarticCurve c)
    : curve_(require_depressed_monic(std::move(c))),
      a_(-curve_.c() / 6),
      b_(-curve_.d() / 8),
      jac_(WeierstrassCurve::short_form(-(curve_.e() + 3 * a_ * a_) / 4,
                                        b_ * b_ - a_.pow(3) + (curve_.e() + 3 * a_ * a_) / 4 * a_)) {}

EPoint Phi2Map::forward(const QPoint& p) const {
  if (!curve_.contains(p)) throw NotOnCurve("point (" + p.str() + ") is not on [" + curve_.str() + "]");
  switch (p.kind()) {
    case QPoint::Kind::InfPlus:
      return EPoint::identity();
    case QPoint::Kind::InfMinus:
      return {a_, b_};
    default:
      break;
  }
  const Rat &x = p.u(), &y = p.v();
  return {(x * x + y - a_) / 2, (x * x * x + x * y - 3 * a_ * x - 2 * b_) / 2};
}

QPoint Phi2Map::inverse(const EPoint& p) const {
  if (!jac_.contains(p)) throw NotOnCurve("point (" + p.str() + ") is not on [" + jac_.str() + "]");
  if (p.is_identity()) return QPoint::inf_plus();
  const Rat &v = p.x(), &w = p.y();
  if (v == a_) {
    if (w == b_) return QPoint::inf_minus();
    // w = -b with b != 0
    Rat x = (curve_.e() - 9 * a_ * a_) / (8 * b_);
    return {x, 3 * a_ - x * x};
  }
  Rat x = (w + b_) / (v - a_);
  return {x, 2 * v + a_ - x * x};
}

// ---- transferred group law ---------------------------------------------------

namespace {

QuarticCurve scale_y(const QuarticCurve& c, const Rat& k) {
  // v' = k v  gives  v'^2 = k^2 f(u)
  Rat k2 = k * k;
  if (c.is_factored()) {
    Factors f = c.factors();
    f[0].a *= k2;
    f[0].b *= k2;
    return QuarticCurve(f);
  }
  return {k2 * c.a(), k2 * c.b(), k2 * c.c(), k2 * c.d(), k2 * c.e()};
}

}  // namespace

QuarticGroup::Setup QuarticGroup::normalize(const QuarticCurve& c, const QPoint& base) {
  if (!c.contains(base)) throw NotOnCurve("base point (" + base.str() + ") is not on [" + c.str() + "]");
  if (base.is_affine()) {
    if (base.v().is_zero()) throw Inapplicable("base point (" + base.str() + ") has y = 0");
    Rat yscale = base.v().sign() > 0 ? 1 : -1;
    return {base.u(), yscale, Phi1Map(shift_quartic(c, base.u()))};
  }
  auto alpha = square_root(c.a());
  Rat yscale = alpha->inverse();
  if (base.kind() == QPoint::Kind::InfMinus) yscale = -yscale;
  Rat shift = -c.b() / (4 * c.a());
  return {shift, yscale, Phi2Map(shift_quartic(scale_y(c, yscale), shift))};
}

QuarticGroup::QuarticGroup(QuarticCurve c, QPoint base) : QuarticGroup(c, base, normalize(c, base)) {}

QuarticGroup::QuarticGroup(QuarticCurve c, QPoint base, Setup s)
    : curve_(std::move(c)), base_(std::move(base)), shift_(std::move(s.shift)), yscale_(std::move(s.yscale)),
      map_(std::move(s.map)) {}

const WeierstrassCurve& QuarticGroup::jacobian() const {
  return std::visit([](const auto& m) -> const WeierstrassCurve& { return m.jacobian(); }, map_);
}

QPoint QuarticGroup::to_model(const QPoint& p) const {
  if (p.is_affine()) return {p.u() - shift_, p.v() * yscale_};
  bool plus = p.kind() == QPoint::Kind::InfPlus;
  if (yscale_.sign() < 0) plus = !plus;
  return plus ? QPoint::inf_plus() : QPoint::inf_minus();
}

QPoint QuarticGroup::from_model(const QPoint& p) const {
  if (p.is_affine()) return {p.u() + shift_, p.v() / yscale_};
  bool plus = p.kind() == QPoint::Kind::InfPlus;
  if (yscale_.sign() < 0) plus = !plus;
  return plus ? QPoint::inf_plus() : QPoint::inf_minus();
}

EPoint QuarticGroup::to_jacobian(const QPoint& p) const {
  if (!curve_.contains(p)) throw NotOnCurve("point (" + p.str() + ") is not on [" + curve_.str() + "]");
  QPoint m = to_model(p);
  return std::visit([&](const auto& map) { return map.forward(m); }, map_);
}

QPoint QuarticGroup::from_jacobian(const EPoint& p) const {
  return from_model(std::visit([&](const auto& map) { return map.inverse(p); }, map_));
}

QPoint QuarticGroup::add(const QPoint& p, const QPoint& q) const {
  return from_jacobian(jacobian().add(to_jacobian(p), to_jacobian(q)));
}

QPoint QuarticGroup::neg(const QPoint& p) const { return from_jacobian(jacobian().neg(to_jacobian(p))); }

QPoint QuarticGroup::mul(long n, const QPoint& p) const { return from_jacobian(jacobian().mul(n, to_jacobian(p))); }

QPoint add_on_quartic(const QuarticCurve& c, const QPoint& base, const QPoint& p, const QPoint& q) {
  return QuarticGroup(c, base).add(p, q);
}

QPoint double_on_quartic(const QuarticCurve& c, const QPoint& base, const QPoint& p) {
  return QuarticGroup(c, base).dbl(p);
}

}  // namespace dq
