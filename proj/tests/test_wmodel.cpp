#include <doctest.h>

#include "dq/weierstrass.hpp"
#include "support.hpp"

using namespace dq;
using dqtest::Rng;

namespace {

const WeierstrassCurve E1(24, 25, 852, -1120, -28000);
const WeierstrassCurve E2(Rat(Int(71), Int(3)), Rat(Int(1511), Int(36)), 1104, -2304, -96704);

Rat r(long n, long d = 1) { return Rat(Int(n), Int(d)); }

// Textbook chord and tangent on the long form, written out separately.
EPoint naive_add(const WeierstrassCurve& e, const EPoint& p, const EPoint& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  Rat lambda, nu;
  if (p.x() == q.x()) {
    if (p.y() + q.y() + e.a1() * q.x() + e.a3() == 0) return {};
    Rat den = 2 * p.y() + e.a1() * p.x() + e.a3();
    lambda = (3 * p.x() * p.x() + 2 * e.a2() * p.x() + e.a4() - e.a1() * p.y()) / den;
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  nu = p.y() - lambda * p.x();
  Rat x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x() - q.x();
  Rat y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return {x3, y3};
}

// Small curves with a visible point: pick a1..a4 and (x0, y0), solve for a6.
std::pair<WeierstrassCurve, EPoint> rand_curve_with_point(Rng& rng) {
  for (;;) {
    Rat a1 = dqtest::rand_rat(rng, 4), a2 = dqtest::rand_rat(rng, 4), a3 = dqtest::rand_rat(rng, 4),
        a4 = dqtest::rand_rat(rng, 6);
    Rat x = dqtest::rand_rat(rng, 5), y = dqtest::rand_rat(rng, 5);
    Rat a6 = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x;
    auto e = WeierstrassCurve::possibly_singular(a1, a2, a3, a4, a6);
    if (e.is_singular()) continue;
    WeierstrassCurve smooth(a1, a2, a3, a4, a6);
    EPoint p(x, y);
    if (2 * y + a1 * x + a3 == 0) continue;  // skip 2-torsion seeds
    return {smooth, p};
  }
}

}  // namespace

TEST_CASE("b-invariants and the construction identity") {
  CHECK(E1.b2() == 24 * 24 + 4 * 25);
  CHECK(4 * E1.b8() == E1.b2() * E1.b6() - E1.b4() * E1.b4());
  CHECK(1728 * E1.discriminant() == E1.c4().pow(3) - E1.c6().pow(2));
  CHECK(1728 * E2.discriminant() == E2.c4().pow(3) - E2.c6().pow(2));
  CHECK_THROWS_AS(WeierstrassCurve(0, 0, 0, 0, 0), SingularCurve);
  CHECK(WeierstrassCurve::possibly_singular(0, 0, 0, 0, 0).is_singular());
  CHECK(WeierstrassCurve::parse("24,25,852,-1120,-28000") == E1);
}

TEST_CASE("addition examples") {
  EPoint p(86, 222);
  CHECK(E1.contains(p));
  CHECK(E1.add(EPoint(), p) == p);
  CHECK(E1.add(p, p) == EPoint(r(-14335, 784), r(-289575, 21952)));
  CHECK(E2.dbl(EPoint(-56, r(404, 3))) == EPoint(r(-199, 4), r(245, 6)));
  CHECK_THROWS_AS(E1.add(EPoint(1, 1), p), NotOnCurve);
}

TEST_CASE("multiplication examples") {
  EPoint p(86, 222);
  CHECK(E1.mul(2, p) == EPoint(r(-14335, 784), r(-289575, 21952)));
  CHECK(E1.mul(1, p) == p);
  CHECK(E1.mul(0, p).is_identity());
  CHECK(E1.mul(4, p) == E1.mul(2, E1.mul(2, p)));
  CHECK(E1.mul(-3, p) == E1.neg(E1.mul(3, p)));
}

TEST_CASE("two-torsion examples") {
  // jacobian_long of v^2 = (4u+1)(3u+1)(2u+1)(u+1): a1 = sum k, a2 = e2 - a1^2/4,
  // a3 = 2 e3, a4 = -4 e4, a6 = a2 a4
  Rat a1 = 10, a2 = 35 - Rat(25), a3 = 2 * 50, a4 = -4 * 24;
  WeierstrassCurve ek(a1, a2, a3, a4, a2 * a4);
  bool found = false;
  for (const auto& t : ek.two_torsion()) found = found || t.x() == -4 * 1 - 3 * 2;
  CHECK(found);

  auto t1 = WeierstrassCurve::short_form(-1, 0).two_torsion();
  REQUIRE(t1.size() == 3);
  CHECK(t1[0] == EPoint(-1, 0));
  CHECK(t1[1] == EPoint(0, 0));
  CHECK(t1[2] == EPoint(1, 0));
  auto t2 = WeierstrassCurve::short_form(0, 1).two_torsion();
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == EPoint(-1, 0));
}

TEST_CASE("halving examples") {
  auto h1 = E1.halves(EPoint(r(-14335, 784), r(-289575, 21952)));
  CHECK(std::find(h1.begin(), h1.end(), EPoint(86, 222)) != h1.end());
  auto h2 = E2.halves(EPoint(r(-199, 4), r(245, 6)));
  CHECK(std::find(h2.begin(), h2.end(), EPoint(-56, r(404, 3))) != h2.end());
  auto h0 = WeierstrassCurve::short_form(-1, 0).halves(EPoint());
  CHECK(h0 == std::vector<EPoint>{EPoint(), EPoint(-1, 0), EPoint(0, 0), EPoint(1, 0)});
}

TEST_CASE("group law agrees with the textbook formulas and is a group") {
  Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    auto [e, p] = rand_curve_with_point(rng);
    EPoint p2 = e.dbl(p), p3 = e.add(p2, p);
    CHECK(p2 == naive_add(e, p, p));
    CHECK(p3 == naive_add(e, p2, p));
    CHECK(e.contains(p2));
    CHECK(e.contains(p3));
    CHECK(e.add(p2, p) == e.add(p, p2));
    CHECK(e.add(e.add(p, p2), p3) == e.add(p, e.add(p2, p3)));
    CHECK(e.neg(e.neg(p3)) == p3);
    CHECK(e.add(p3, e.neg(p3)).is_identity());
    CHECK(e.mul(5, p) == e.add(p2, p3));
  }
}

TEST_CASE("halves of 2R contain R and every half doubles back") {
  Rng rng(37);
  for (int it = 0; it < 100; ++it) {
    auto [e, p] = rand_curve_with_point(rng);
    EPoint target = e.dbl(p);
    auto hs = e.halves(target);
    CHECK(std::find(hs.begin(), hs.end(), p) != hs.end());
    for (const auto& h : hs) CHECK(e.dbl(h) == target);
  }
}

TEST_CASE("two-torsion points satisfy 2y + a1 x + a3 = 0") {
  Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    // roots chosen so the 2-division polynomial splits
    Rat r1 = dqtest::rand_rat(rng, 5), r2 = dqtest::rand_rat(rng, 5), r3 = dqtest::rand_rat(rng, 5);
    if (r1 == r2 || r2 == r3 || r1 == r3) continue;
    Rat a1 = dqtest::rand_rat(rng, 3), a3 = dqtest::rand_rat(rng, 3);
    // (y + (a1 x + a3)/2)^2 = (x-r1)(x-r2)(x-r3)
    Rat s = -(r1 + r2 + r3), t = r1 * r2 + r1 * r3 + r2 * r3, u = -r1 * r2 * r3;
    Rat a2 = s - a1 * a1 / 4, a4 = t - a1 * a3 / 2, a6 = u - a3 * a3 / 4;
    WeierstrassCurve e(a1, a2, a3, a4, a6);
    auto tt = e.two_torsion();
    CHECK(tt.size() == 3);
    for (const auto& p : tt) {
      CHECK(2 * p.y() + a1 * p.x() + a3 == 0);
      CHECK(e.dbl(p).is_identity());
    }
  }
}

TEST_CASE("text formats") {
  CHECK(EPoint::parse("O").is_identity());
  CHECK(EPoint::parse("-14335/784,-289575/21952") == EPoint(r(-14335, 784), r(-289575, 21952)));
  CHECK(EPoint(r(1, 2), 3).str() == "1/2,3");
  CHECK(E1.str() == "24,25,852,-1120,-28000");
  CHECK_THROWS_AS(EPoint::parse("1,2,3"), std::invalid_argument);
}
