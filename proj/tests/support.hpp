#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// The oracles deliberately avoid the library routine they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "dq/descent.hpp"
#include "dq/poly.hpp"
#include "dq/quartic.hpp"
#include "dq/rat.hpp"

namespace dqtest {

using dq::Factors;
using dq::Int;
using dq::Poly;
using dq::QPoint;
using dq::QuarticCurve;
using dq::Rat;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat rand_rat(Rng& rng, long bound) {
  long n = uniform(rng, -bound, bound);
  long d = uniform(rng, 1, bound);
  return Rat(Int(n), Int(d));
}

inline Rat rand_nonzero(Rng& rng, long bound) {
  for (;;) {
    Rat r = rand_rat(rng, bound);
    if (!r.is_zero()) return r;
  }
}

// Square test by trial: is there p/q with p <= pmax, q <= qmax and (p/q)^2 = r?
inline bool brute_is_square(const Rat& r, long pmax, long qmax) {
  if (r.sign() < 0) return false;
  for (long q = 1; q <= qmax; ++q)
    for (long p = 0; p <= pmax; ++p)
      if (Rat(Int(p * p), Int(q * q)) == r) return true;
  return false;
}

// Square test through floating-point-free bisection on integers.
inline bool bisect_is_square(const Int& n) {
  if (n < 0) return false;
  Int lo = 0, hi = n + 1;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo * lo == n;
}

inline bool oracle_is_square(const Rat& r) {
  return r.sign() >= 0 && bisect_is_square(r.num()) && bisect_is_square(r.den());
}

inline std::vector<long> divisors(long n) {
  n = std::abs(n);
  std::vector<long> d;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

// Rational roots of an integer polynomial (ascending coefficients) by
// testing every +-(divisor of constant)/(divisor of leading).
inline std::vector<Rat> oracle_rational_roots(std::vector<long> c) {
  std::vector<Rat> roots;
  while (!c.empty() && c.front() == 0) {
    if (roots.empty()) roots.push_back(0);
    c.erase(c.begin());
  }
  std::vector<Rat> asc;
  for (long v : c) asc.push_back(v);
  Poly p(asc);
  if (p.degree() >= 1) {
    for (long num : divisors(c.front()))
      for (long den : divisors(c.back()))
        for (long s : {-1L, 1L}) {
          Rat cand(Int(s * num), Int(den));
          if (p(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Discriminant of a factored quartic from its roots: the curve
// discriminant (c4^3 - c6^2)/1728 equals 16 * lead^6 * prod (ri - rj)^2.
inline Rat oracle_quartic_disc(const Factors& f) {
  Rat lead = 1;
  for (const auto& l : f) lead *= l.a;
  Rat prod = lead.pow(6);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Rat d = f[i].root() - f[j].root();
      prod *= d * d;
    }
  return 16 * prod;
}

// Random factored quartic with distinct roots and a square constant term:
// b4 = b1 b2 b3 k^2 makes prod bi = (b1 b2 b3 k)^2.
inline QuarticCurve rand_square_constant_quartic(Rng& rng, long bound = 6) {
  for (;;) {
    Factors f;
    for (std::size_t i = 0; i < 3; ++i) f[i] = {rand_nonzero(rng, bound), rand_nonzero(rng, bound)};
    Rat k = rand_nonzero(rng, 3);
    f[3] = {rand_nonzero(rng, bound), f[0].b * f[1].b * f[2].b * k * k};
    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) distinct = distinct && f[i].root() != f[j].root();
    if (distinct) return QuarticCurve(f);
  }
}

inline Rat positive_q(const QuarticCurve& c) { return *dq::square_root(c.e()); }

// All affine points with |num|, den <= h by a plain double loop.
inline std::vector<QPoint> brute_points(const QuarticCurve& c, long h) {
  std::vector<QPoint> out;
  for (long n = 1; n <= h; ++n)
    for (long m = -h; m <= h; ++m) {
      if (std::gcd(m, n) != 1) continue;
      Rat u{Int(m), Int(n)};
      Rat val = c(u);
      if (!oracle_is_square(val)) continue;
      Rat v(Int(0));
      if (!val.is_zero()) v = Rat(*dq::square_root(val));
      out.emplace_back(u, v);
      if (!v.is_zero()) out.emplace_back(u, -v);
    }
  return out;
}

// Halving oracle on the Jacobian: Q is a double iff its image has a half.
inline bool oracle_double(const dq::QuarticGroup& g, const QPoint& q) {
  return !g.jacobian().halves(g.to_jacobian(q)).empty();
}

// Rational 4-torsion restated: some 2-torsion point of the Jacobian halves.
inline bool oracle_4_torsion(const dq::KTuple& k) {
  auto e = dq::jacobian_long(dq::k_quartic(k));
  for (const auto& t : e.two_torsion())
    if (!e.halves(t).empty()) return true;
  return false;
}

inline bool hits_root(const QuarticCurve& c, const Rat& x) {
  for (const auto& f : c.factors())
    if (f(x).is_zero()) return true;
  return false;
}

// Affine points on c: a small box search plus a few group-law images.
inline std::vector<QPoint> sample_points(const QuarticCurve& c, const dq::QuarticGroup& g, long box = 6) {
  auto pts = brute_points(c, box);
  std::vector<QPoint> seeds = pts;
  for (const auto& p : seeds) {
    for (long n : {2L, 3L}) {
      try {
        auto m = g.mul(n, p);
        if (m.is_affine()) pts.push_back(m);
      } catch (const dq::ExceptionalPoint&) {
      }
    }
    if (pts.size() > 24) break;
  }
  return pts;
}

}  // namespace dqtest
