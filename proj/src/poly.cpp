#include "dq/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dq {

Poly::Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::from_descending(std::vector<Rat> descending) {
  std::reverse(descending.begin(), descending.end());
  return Poly(std::move(descending));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return Poly(std::move(d));
}

Poly Poly::shifted(const Rat& s) const {
  // Horner in polynomial arithmetic: p(x+s) = (...(c_n)(x+s) + c_{n-1})...
  Poly acc;
  const Poly xs = Poly::linear(1, s);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + Poly::constant(*it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
  std::vector<Rat> r = p.c_;
  for (auto& c : r) c *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<Rat> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rat> quo(static_cast<std::size_t>(degree() - dd + 1));
  const Rat lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    Rat f = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quo[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rat mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Scales p to an integer polynomial with content 1 and positive leading
// coefficient. Keeps the Sturm chain from growing rational denominators.
Poly primitive(const Poly& p) {
  Int lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Int> ints;
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    Int v = c.num() * (lcm_den / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (p.leading().sign() < 0) content = -content;
  std::vector<Rat> out;
  for (auto& v : ints) out.emplace_back(Int(v / content));
  return Poly(std::move(out));
}

int sign_at(const Poly& p, const Rat& x) { return p(x).sign(); }

class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    chain_.push_back(p);
    chain_.push_back(primitive(p.derivative()));
    while (true) {
      Poly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
      if (r.is_zero()) break;
      // Sturm needs -rem; primitive() normalizes the sign, so restore it.
      Poly neg = primitive(r);
      if (r.leading().sign() > 0) neg = Rat(-1) * neg;
      chain_.push_back(std::move(neg));
    }
  }

  int variations(const Rat& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

 private:
  std::vector<Poly> chain_;
};

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::set<Rat> roots;
  if (p.degree() == 0) return {};

  Poly sq = primitive(p.divmod(gcd(p, p.derivative())).first);
  if (sq[0].is_zero()) {
    roots.insert(Rat());
    sq = primitive(Poly(std::vector<Rat>(sq.coeffs().begin() + 1, sq.coeffs().end())));
  }
  if (sq.degree() >= 1) {
    const Rat lead = sq.leading();  // positive integer
    // Cauchy bound, rounded up to an integer so the endpoints are never roots.
    Rat bound = 0;
    for (const auto& c : sq.coeffs()) bound = std::max(bound, (c / lead).abs());
    Int b = bound.num() / bound.den() + 2;
    const SturmChain sturm(sq);

    auto candidate_check = [&](const Rat& lo, const Rat& hi) {
      // Interval width * lead < 1 holds, so at most one k/lead lies in (lo, hi].
      Rat scaled = hi * lead;
      Int k;
      mpz_fdiv_q(k.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
      Rat cand = Rat(k, lead.num());
      if (cand > lo && cand <= hi && sq(cand).is_zero()) roots.insert(cand);
    };

    // Work list of (lo, hi, root count in (lo, hi]); lo and hi are never roots.
    std::vector<std::tuple<Rat, Rat, int>> work;
    Rat lo0(Int(-b)), hi0(b);
    work.emplace_back(lo0, hi0, sturm.variations(lo0) - sturm.variations(hi0));
    while (!work.empty()) {
      auto [lo, hi, count] = work.back();
      work.pop_back();
      if (count == 0) continue;
      if (count == 1) {
        int slo = sign_at(sq, lo);
        while ((hi - lo) * lead >= 1) {
          Rat mid = (lo + hi) / 2;
          int s = sign_at(sq, mid);
          if (s == 0) {
            roots.insert(mid);
            lo = hi;
            break;
          }
          if (s == slo)
            lo = mid;
          else
            hi = mid;
        }
        if (lo < hi) candidate_check(lo, hi);
        continue;
      }
      Rat mid = (lo + hi) / 2;
      if (sq(mid).is_zero()) {
        roots.insert(mid);
        // Nudge the split point off the root; the root itself stays counted
        // in one half and is simply re-found there.
        Rat step = (hi - lo) / 4;
        while (sq(mid + step).is_zero()) step /= 2;
        mid += step;
      }
      int vmid = sturm.variations(mid);
      work.emplace_back(lo, mid, sturm.variations(lo) - vmid);
      work.emplace_back(mid, hi, vmid - sturm.variations(hi));
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace dq
