#include "dq/ptsearch.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace dq {

unsigned search_threads(const SearchConfig& cfg) {
  if (cfg.threads != 0) return cfg.threads;
  if (const char* env = std::getenv("DQ_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// rhs scaled to integer coefficients: rhs = (sum c_i t^i) / scale.
struct IntegerForm {
  std::vector<Int> c;
  Int scale;
  int degree;
};

IntegerForm integer_form(const Poly& rhs) {
  IntegerForm f;
  f.scale = 1;
  for (const auto& a : rhs.coeffs()) mpz_lcm(f.scale.get_mpz_t(), f.scale.get_mpz_t(), a.den().get_mpz_t());
  for (const auto& a : rhs.coeffs()) f.c.push_back(a.num() * (f.scale / a.den()));
  f.degree = rhs.degree();
  return f;
}

// Points with denominator n in [n_lo, n_hi], ascending by (n, m).
std::vector<RhsPoint> search_range(const Poly& rhs, const IntegerForm& f, std::int64_t height, std::int64_t n_lo,
                                   std::int64_t n_hi) {
  std::vector<RhsPoint> out;
  const int d = f.degree;
  Int hom, test;
  std::vector<Int> npow(static_cast<std::size_t>(d + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    npow[0] = 1;
    for (int i = 1; i <= d; ++i) npow[static_cast<std::size_t>(i)] = npow[static_cast<std::size_t>(i - 1)] * static_cast<long>(n);
    for (std::int64_t m = -height; m <= height; ++m) {
      if (std::gcd(m, n) != 1) continue;
      // Homogenized value n^d * scale * rhs(m/n).
      hom = f.c[static_cast<std::size_t>(d)];
      for (int i = d - 1; i >= 0; --i) {
        hom *= static_cast<long>(m);
        hom += f.c[static_cast<std::size_t>(i)] * npow[static_cast<std::size_t>(d - i)];
      }
      // rhs(m/n) is a square iff hom * scale * n^(d mod 2) is.
      test = hom * f.scale;
      if (d % 2 == 1) test *= static_cast<long>(n);
      if (sgn(test) < 0 || !mpz_perfect_square_p(test.get_mpz_t())) continue;
      Rat t(Int(static_cast<long>(m)), Int(static_cast<long>(n)));
      auto r = square_root(rhs(t));
      if (!r) throw std::logic_error("homogenized square test disagrees with exact evaluation");
      out.push_back({t, *r});
    }
  }
  return out;
}

}  // namespace

std::vector<RhsPoint> search_rhs(const Poly& rhs, const SearchConfig& cfg) {
  if (rhs.is_zero()) throw std::invalid_argument("search_rhs: zero right-hand side");
  if (cfg.height < 1) throw std::invalid_argument("search height must be at least 1");
  const IntegerForm form = integer_form(rhs);
  const std::int64_t H = cfg.height;
  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(search_threads(cfg), H));

  std::vector<std::vector<RhsPoint>> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    parts[0] = search_range(rhs, form, H, 1, H);
  } else {
    // Contiguous n-blocks keep the merge a plain concatenation.
    std::vector<std::thread> pool;
    const std::int64_t block = (H + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
      std::int64_t lo = 1 + w * block, hi = std::min(H, (w + 1) * block);
      if (lo > hi) continue;
      pool.emplace_back([&, w, lo, hi] { parts[static_cast<std::size_t>(w)] = search_range(rhs, form, H, lo, hi); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<RhsPoint> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

namespace {

Poly require_cubic(Poly rhs) {
  if (rhs.degree() != 3) throw std::invalid_argument("cubic_to_weierstrass needs a degree-3 right-hand side");
  return rhs;
}

}  // namespace

CubicModel::CubicModel(Poly rhs)
    : rhs_(require_cubic(std::move(rhs))),
      curve_(0, rhs_[2], 0, rhs_[1] * rhs_[3], rhs_[0] * rhs_[3] * rhs_[3]) {}

EPoint CubicModel::to_curve(const Rat& t, const Rat& r) const {
  if (r * r != rhs_(t)) throw NotOnCurve("(" + t.str() + "," + r.str() + ") does not satisfy r^2 = rhs(t)");
  return {rhs_[3] * t, rhs_[3] * r};
}

RhsPoint CubicModel::from_curve(const EPoint& p) const {
  if (p.is_identity()) throw std::invalid_argument("the identity has no t-coordinate");
  return {p.x() / rhs_[3], p.y() / rhs_[3]};
}

std::vector<EPoint> generate(const WeierstrassCurve& e, const std::vector<EPoint>& seeds, const SearchConfig& cfg) {
  for (const auto& s : seeds)
    if (!e.contains(s)) throw NotOnCurve("seed (" + s.str() + ") is not on [" + e.str() + "]");
  std::vector<EPoint> out;
  if (seeds.empty()) return out;
  const long B = cfg.budget;
  const EPoint& p1 = seeds[0];
  const bool two = seeds.size() >= 2;
  std::set<EPoint> seen;
  for (long m = -B; m <= B; ++m) {
    EPoint mp = e.mul(m, p1);
    for (long n = two ? -B : 0; n <= (two ? B : 0); ++n) {
      EPoint pt = two ? e.add(mp, e.mul(n, seeds[1])) : mp;
      if (pt.is_identity() || !seen.insert(pt).second) continue;
      out.push_back(std::move(pt));
    }
  }
  return out;
}

std::vector<QPoint> generate(const QuarticGroup& group, const std::vector<QPoint>& seeds, const SearchConfig& cfg) {
  std::vector<EPoint> images;
  for (const auto& s : seeds) images.push_back(group.to_jacobian(s));
  std::vector<QPoint> out;
  for (const auto& p : generate(group.jacobian(), images, cfg)) {
    try {
      out.push_back(group.from_jacobian(p));
    } catch (const ExceptionalPoint&) {
      // lands on a point at infinity of the model
    }
  }
  return out;
}

}  // namespace dq
