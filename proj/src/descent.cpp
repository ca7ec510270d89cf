#include "dq/descent.hpp"

#include <sstream>

namespace dq {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

const LinearFactor& factor(const QuarticCurve& c, int i) { return c.factors()[static_cast<std::size_t>(i - 1)]; }

bool hits_root(const QuarticCurve& c, const Rat& x) {
  for (const auto& f : c.factors())
    if (f(x).is_zero()) return true;
  return false;
}

// Square class bookkeeping shared by both bases. `base_factor(i)` is fi(x0)
// for an affine base and ai for inf+.
template <typename BaseFactor>
void fill_pairs(SquareClassCert& cert, const QuarticCurve& c, const Rat& xq, BaseFactor base_factor) {
  cert.pairs.clear();
  for (auto [i, j] : kPairs) {
    PairValue pv;
    pv.i = i;
    pv.j = j;
    pv.value = base_factor(i) * base_factor(j) * factor(c, i)(xq) * factor(c, j)(xq);
    pv.witness = square_root(pv.value);
    cert.pairs.push_back(std::move(pv));
  }
  cert.delta = 0;
  for (const auto& f : c.factors()) {
    Rat v = f(xq);
    if (!v.is_zero()) {
      cert.delta = v;
      break;
    }
  }
  cert.z.reset();
  if (cert.delta.is_zero()) return;
  std::array<Rat, 4> z;
  for (std::size_t i = 0; i < 4; ++i) {
    auto r = square_root(c.factors()[i](xq) / cert.delta);
    if (!r) return;
    z[i] = *r;
  }
  cert.z = z;
}

bool all_pairs_square(const SquareClassCert& cert) {
  // g_ij g_ik g_jk is a square by construction, so any two squares among a
  // triangle force the third. Check that the computed flags respect it.
  auto sq = [&](int i, int j) {
    for (const auto& p : cert.pairs)
      if (p.i == i && p.j == j) return p.is_square();
    return false;
  };
  auto nonzero = [&](int i, int j) {
    for (const auto& p : cert.pairs)
      if (p.i == i && p.j == j) return !p.value.is_zero();
    return false;
  };
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) {
        if (!nonzero(i, j) || !nonzero(i, k) || !nonzero(j, k)) continue;
        int n = sq(i, j) + sq(i, k) + sq(j, k);
        if (n == 2) throw std::logic_error("square-class consistency violated on a pair triangle");
      }
  for (const auto& p : cert.pairs)
    if (!p.is_square()) return false;
  return true;
}

void require_affine_on(const QuarticCurve& c, const QPoint& p, const char* what) {
  if (!p.is_affine()) throw std::invalid_argument(std::string(what) + " must be an affine point");
  if (!c.contains(p)) throw NotOnCurve(std::string(what) + " (" + p.str() + ") is not on [" + c.str() + "]");
}

DoubleVerdict via_oracle(const QuarticCurve& c, const QPoint& base, const QPoint& q, DoubleVerdict v) {
  QuarticGroup group(c, base);
  v.cert.method = SquareClassCert::Method::Oracle;
  v.cert.halves = group.jacobian().halves(group.to_jacobian(q));
  v.is_double = !v.cert.halves.empty();
  return v;
}

}  // namespace

std::string SquareClassCert::str() const {
  std::ostringstream os;
  os << "method=" << (method == Method::Criterion ? "criterion" : "oracle") << "\n";
  for (const auto& p : pairs) {
    os << "g" << p.i << p.j << "=" << p.value;
    if (p.witness)
      os << " square=yes sqrt=" << *p.witness;
    else
      os << " square=no";
    os << "\n";
  }
  os << "delta=" << delta << "\n";
  if (z) os << "z=" << (*z)[0] << "," << (*z)[1] << "," << (*z)[2] << "," << (*z)[3] << "\n";
  for (const auto& h : halves) os << "half=" << h.str() << "\n";
  return os.str();
}

Rat gij(const QuarticCurve& c, const Rat& x0, const Rat& xq, int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::out_of_range("factor index outside 1..4");
  const auto &fi = factor(c, i), &fj = factor(c, j);
  return fi(x0) * fj(x0) * fi(xq) * fj(xq);
}

DoubleVerdict is_double(const QuarticCurve& c, const QPoint& base, const QPoint& q) {
  require_affine_on(c, base, "base point");
  require_affine_on(c, q, "point");
  const Rat& x0 = base.u();
  if (hits_root(c, x0)) throw std::invalid_argument("base point x0 = " + x0.str() + " is a root of the quartic");
  const Rat& xq = q.u();

  DoubleVerdict v;
  fill_pairs(v.cert, c, xq, [&](int i) { return factor(c, i)(x0); });
  if (hits_root(c, xq) || xq == x0) return via_oracle(c, base, q, std::move(v));
  v.is_double = all_pairs_square(v.cert);
  return v;
}

DoubleVerdict is_double_inf_base(const QuarticCurve& c, const QPoint& q) {
  Rat lead = 1;
  for (const auto& f : c.factors()) lead *= f.a;
  if (!is_square(lead))
    throw Inapplicable("product of leading coefficients " + lead.str() + " is not a square; inf+ is not rational");
  if (!c.contains(q)) throw NotOnCurve("point (" + q.str() + ") is not on [" + c.str() + "]");
  const QPoint base = QPoint::inf_plus();

  DoubleVerdict v;
  if (!q.is_affine()) {
    v.cert.method = SquareClassCert::Method::Oracle;
    return via_oracle(c, base, q, std::move(v));
  }
  const Rat& xq = q.u();
  fill_pairs(v.cert, c, xq, [&](int i) { return factor(c, i).a; });
  if (hits_root(c, xq)) return via_oracle(c, base, q, std::move(v));
  v.is_double = all_pairs_square(v.cert);
  return v;
}

DeltaCertificate delta_certificate(const QuarticCurve& c, const QPoint& base, const QPoint& q) {
  require_affine_on(c, base, "base point");
  for (auto [i, j] : kPairs)
    if (!is_square(factor(c, i)(base.u()) * factor(c, j)(base.u())))
      throw std::invalid_argument("delta certificate needs every fi(x0) fj(x0) to be a square");
  auto verdict = is_double(c, base, q);
  if (!verdict.is_double) throw std::invalid_argument("point (" + q.str() + ") is not in 2C(Q)");
  DeltaCertificate out;
  out.delta = verdict.cert.delta;
  out.delta_is_square = is_square(out.delta);
  out.fifth_candidate = q.u();
  return out;
}

// ---- 4-torsion ---------------------------------------------------------------

QuarticCurve k_quartic(const KTuple& k) {
  for (const auto& ki : k)
    if (ki.is_zero()) throw std::invalid_argument("k-tuple entries must be nonzero");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (k[i] == k[j]) throw std::invalid_argument("k-tuple entries must be distinct");
  return QuarticCurve(Factors{{{k[0], 1}, {k[1], 1}, {k[2], 1}, {k[3], 1}}});
}

Torsion4Verdict has_rational_4_torsion(const KTuple& k) {
  k_quartic(k);  // validation
  const Rat &k1 = k[0], &k2 = k[1], &k3 = k[2], &k4 = k[3];
  const std::array<std::pair<Rat, Rat>, 3> conditions{{
      {(k1 - k3) * (k2 - k4), (k1 - k2) * (k3 - k4)},
      {(k2 - k3) * (k1 - k4), (k1 - k2) * (k4 - k3)},
      {(k3 - k2) * (k1 - k4), (k1 - k3) * (k4 - k2)},
  }};
  for (int n = 0; n < 3; ++n) {
    const auto& [p, q] = conditions[static_cast<std::size_t>(n)];
    if (is_square(p) && is_square(q)) return {true, n + 1};
  }
  return {};
}

std::array<TwoTorsionPreimage, 3> two_torsion_preimages(const KTuple& k) {
  k_quartic(k);
  const Rat &k1 = k[0], &k2 = k[1], &k3 = k[2], &k4 = k[3];
  const Rat half(1, 2);

  std::array<TwoTorsionPreimage, 3> out;
  out[0].point = EPoint(-k1 * k4 - k2 * k3, half * (k1 * k1 * k4 - k1 * k2 * k3 - k1 * k2 * k4 - k1 * k3 * k4 + k1 * k4 * k4 +
                                                    k2 * k2 * k3 + k2 * k3 * k3 - k2 * k3 * k4));
  out[1].point = EPoint(-k1 * k3 - k2 * k4, half * (k1 * k1 * k3 - k1 * k2 * k3 - k1 * k2 * k4 + k1 * k3 * k3 - k1 * k3 * k4 +
                                                    k2 * k2 * k4 - k2 * k3 * k4 + k2 * k4 * k4));
  out[2].point = EPoint(-k1 * k2 - k3 * k4, half * (k1 * k1 * k2 + k1 * k2 * k2 - k1 * k2 * k3 - k1 * k2 * k4 - k1 * k3 * k4 -
                                                    k2 * k3 * k4 + k3 * k3 * k4 + k3 * k4 * k4));

  struct Form {
    Rat num_u, den, num_v;
  };
  const std::array<Form, 3> forms{{
      {k1 - k2 - k3 + k4, k2 * k3 - k1 * k4, -((k1 - k2) * (k1 - k3) * (k2 - k4) * (k3 - k4))},
      {-k1 + k2 - k3 + k4, k1 * k3 - k2 * k4, (k1 - k2) * (k2 - k3) * (k1 - k4) * (k3 - k4)},
      {-k1 - k2 + k3 + k4, k1 * k2 - k3 * k4, (k1 - k3) * (-k2 + k3) * (k1 - k4) * (k2 - k4)},
  }};
  for (std::size_t n = 0; n < 3; ++n) {
    const auto& f = forms[n];
    if (f.den.is_zero()) {
      out[n].failure = "denominator vanishes; the preimage is a point at infinity";
      continue;
    }
    out[n].preimage = QPoint(f.num_u / f.den, f.num_v / (f.den * f.den));
  }
  return out;
}

}  // namespace dq
