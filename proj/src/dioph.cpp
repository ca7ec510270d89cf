#include "dq/dioph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dq/descent.hpp"
#include "dq/ptsearch.hpp"

namespace dq {

DTuple::DTuple(Rat q, std::vector<Rat> elements) : q_(std::move(q)), elements_(std::move(elements)) {
  if (q_.is_zero()) throw std::invalid_argument("q must be nonzero");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].is_zero()) throw std::invalid_argument("element " + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (elements_[i] == elements_[j])
        throw std::invalid_argument("elements " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are equal (" +
                                    elements_[i].str() + ")");
  }
}

std::optional<PairCheck> VerifyResult::first_failure() const {
  for (const auto& p : pairs)
    if (!p.root) return p;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> VerifyResult::failing_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : pairs)
    if (!p.root) out.emplace_back(p.i, p.j);
  return out;
}

VerifyResult verify(const DTuple& tuple) {
  VerifyResult r;
  const auto& x = tuple.elements();
  r.ok = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      PairCheck p;
      p.i = i + 1;
      p.j = j + 1;
      p.value = x[i] * x[j] + tuple.q();
      p.root = square_root(p.value);
      r.ok = r.ok && p.root.has_value();
      r.pairs.push_back(std::move(p));
    }
  return r;
}

namespace {

void require_quadruple(const Rat& q, const std::array<Rat, 4>& quad, const std::string& label) {
  DTuple t(q, {quad.begin(), quad.end()});
  auto res = verify(t);
  if (auto f = res.first_failure())
    throw std::invalid_argument("not a " + label + "-quadruple: a" + std::to_string(f->i) + " a" + std::to_string(f->j) +
                                " + q = " + f->value.str() + " is not a square");
}

bool is_torsion(const WeierstrassCurve& e, const EPoint& p) {
  // Rational torsion orders are at most 12.
  EPoint acc = p;
  for (int k = 1; k <= 12; ++k) {
    if (acc.is_identity()) return true;
    acc = e.add(acc, p);
  }
  return false;
}

// Up to two non-torsion points, the second not a small multiple of the first.
std::vector<EPoint> pick_generators(const WeierstrassCurve& e, const std::vector<EPoint>& pts, long budget) {
  std::vector<EPoint> gens;
  for (const auto& p : pts) {
    if (p.is_identity() || is_torsion(e, p)) continue;
    if (gens.empty()) {
      gens.push_back(p);
      continue;
    }
    bool dependent = false;
    for (long k = -std::max(budget, 1L); k <= std::max(budget, 1L) && !dependent; ++k)
      dependent = e.mul(k, gens[0]) == p;
    if (!dependent) {
      gens.push_back(p);
      break;
    }
  }
  return gens;
}

}  // namespace

std::vector<Extension> extend_quadruple(const Rat& q, const std::array<Rat, 4>& quad, std::int64_t search_height,
                                        long doubling_budget) {
  require_quadruple(q, quad, "D(" + q.str() + ")");
  const QuarticCurve cs(Factors{{{quad[0], q}, {quad[1], q}, {quad[2], q}, {quad[3], q}}});
  const QPoint base(0, q * q);
  const QuarticGroup group(cs, base);

  SearchConfig cfg;
  cfg.height = search_height;
  cfg.budget = doubling_budget;

  std::vector<QPoint> found;
  for (const auto& [t, r] : search_rhs(cs.poly(), cfg)) {
    found.emplace_back(t, r);
    if (!r.is_zero()) found.emplace_back(t, -r);
  }

  std::vector<std::pair<QPoint, std::string>> candidates;
  for (const auto& p : found) {
    candidates.emplace_back(p, "searched point (" + p.str() + ")");
    try {
      candidates.emplace_back(group.dbl(p), "2*(" + p.str() + ")");
    } catch (const ExceptionalPoint&) {
      // the double is a point at infinity
    }
  }

  // Generators: (0, -q^2) first, then the first independent searched point.
  std::vector<EPoint> images;
  const QPoint antipode(0, -q * q);
  images.push_back(group.to_jacobian(antipode));
  for (const auto& p : found) images.push_back(group.to_jacobian(p));
  auto gens = pick_generators(group.jacobian(), images, doubling_budget);
  if (!gens.empty()) {
    std::string label = "combination of";
    std::vector<QPoint> seeds;
    for (const auto& g : gens) {
      seeds.push_back(group.from_jacobian(g));
      label += " (" + seeds.back().str() + ")";
    }
    for (const auto& p : generate(group, seeds, cfg)) candidates.emplace_back(p, label);
  }

  std::map<Rat, Extension> out;
  for (const auto& [pt, how] : candidates) {
    if (!pt.is_affine()) continue;
    const Rat& u = pt.u();
    if (u.is_zero() || std::find(quad.begin(), quad.end(), u) != quad.end() || out.count(u)) continue;
    auto verdict = is_double(cs, base, pt);
    if (!verdict.is_double || !is_square(verdict.cert.delta) || !verdict.cert.z) continue;
    if (!verify(DTuple(q, {quad[0], quad[1], quad[2], quad[3], u})).ok)
      throw std::logic_error("extension " + u.str() + " from a square delta fails verification");
    out.emplace(u, Extension{u, pt, how});
  }

  std::vector<Extension> result;
  for (auto& [u, e] : out) result.push_back(std::move(e));
  std::sort(result.begin(), result.end(), [](const Extension& a, const Extension& b) { return height_less(a.fifth, b.fifth); });
  return result;
}

// ---- families -----------------------------------------------------------------

namespace {

Poly lin(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }

std::vector<FamilySpec> make_families() {
  std::vector<FamilySpec> f;
  f.push_back({"thm2",
               {lin(0, 1), lin(8, 16), lin(14, 25), lin(20, 36)},
               lin(9, 16),
               Rat(-4) * (lin(1, 2) * lin(7, 13) * lin(13, 22)),
               Poly({1369, 7424, 13408, 8064}),
               Poly({1369, 7424, 13408, 8064})});
  f.push_back({"thm3i",
               {lin(0, 4), lin(8, 144), lin(1, 25), lin(3, 49)},
               lin(1, 16),
               Rat(-4) * (lin(2, 37) * lin(3, 58) * lin(5, 82)),
               Poly({-1, 416, 16928, 164736}),
               Poly({1, -416, -16928, -164736})});
  f.push_back({"thm3ii",
               {lin(0, 1), lin(26, 9), lin(12, 4), lin(40, 16)},
               lin(49, 16),
               Rat(4) * (lin(1, 2) * lin(13, 5) * lin(27, 10) * lin(49, 16)),
               Poly({96721, 104336, 37472, 4480}),
               Poly({96721, 104336, 37472, 4480}) * lin(49, 16)});
  f.push_back({"thm3iii",
               {lin(0, 1), lin(-1, Rat(1, 4)), lin(5, Rat(9, 4)), lin(8, 4)},
               lin(9, 4),
               lin(2, 1) * lin(9, 4) * lin(8, 5) * lin(14, 5),
               Poly({324, 496, 248, 40}),
               Poly({81, 124, 62, 10}) * lin(9, 4)});
  return f;
}

}  // namespace

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> table = make_families();
  return table;
}

const FamilySpec& family(std::string_view name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected thm2, thm3i, thm3ii or thm3iii)");
}

FamilyValue family_fifth(std::string_view name, const Rat& t) {
  const FamilySpec& f = family(name);
  FamilyValue v;
  v.t = t;
  v.q = f.q(t);
  if (v.q.is_zero()) throw DegenerateParameter("q vanishes at t = " + t.str());
  for (std::size_t i = 0; i < 4; ++i) v.quad[i] = f.quadruple[i](t);
  const Rat den = f.fifth_den(t);
  if (den.is_zero()) throw DegenerateParameter("denominator of the fifth element vanishes at t = " + t.str());
  v.fifth = f.fifth_num(t) / den;
  const auto xs = v.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw DegenerateParameter("element " + std::to_string(i + 1) + " is zero at t = " + t.str());
    for (std::size_t j = 0; j < i; ++j)
      if (xs[i] == xs[j])
        throw DegenerateParameter("elements " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide at t = " +
                                  t.str());
  }
  return v;
}

std::vector<FamilyValue> family_enumerate(std::string_view name, const EnumerateConfig& cfg) {
  const FamilySpec& f = family(name);
  SearchConfig sc;
  sc.height = cfg.height;
  sc.budget = cfg.budget;
  sc.threads = cfg.threads;

  const auto searched = search_rhs(f.aux_rhs, sc);
  std::set<Rat, decltype(&height_less)> ts(&height_less);
  for (const auto& p : searched) ts.insert(p.t);

  if (f.aux_rhs.degree() == 3) {
    const CubicModel model(f.aux_rhs);
    std::vector<EPoint> pts;
    for (const auto& p : searched) pts.push_back(model.to_curve(p.t, p.r));
    auto gens = pick_generators(model.curve(), pts, cfg.budget);
    for (const auto& p : generate(model.curve(), gens, sc)) ts.insert(model.from_curve(p).t);
  } else {
    auto root = square_root(f.aux_rhs[0]);
    if (!root || root->is_zero())
      throw std::logic_error("auxiliary quartic of " + f.name + " has no square constant term");
    const QuarticCurve c(f.aux_rhs[4], f.aux_rhs[3], f.aux_rhs[2], f.aux_rhs[1], f.aux_rhs[0]);
    const QuarticGroup group(c, QPoint(0, *root));
    std::vector<EPoint> pts;
    for (const auto& p : searched) pts.push_back(group.to_jacobian(QPoint(p.t, p.r)));
    auto gens = pick_generators(group.jacobian(), pts, cfg.budget);
    std::vector<QPoint> seeds;
    for (const auto& g : gens) seeds.push_back(group.from_jacobian(g));
    for (const auto& p : generate(group, seeds, sc))
      if (p.is_affine()) ts.insert(p.u());
  }

  std::vector<FamilyValue> out;
  for (const auto& t : ts) {
    if (out.size() >= cfg.max_results) break;
    try {
      FamilyValue v = family_fifth(name, t);
      if (verify(DTuple(v.q, v.elements())).ok) out.push_back(std::move(v));
    } catch (const DegenerateParameter&) {
      // skipped
    }
  }
  return out;
}

std::array<Rat, 2> regular_extension(const Rat& qr, const std::array<Rat, 4>& quad) {
  if (qr.is_zero()) throw std::invalid_argument("q must be nonzero");
  const Rat q2 = qr * qr;
  require_quadruple(q2, quad, "D(" + q2.str() + ")");
  const Rat &x1 = quad[0], &x2 = quad[1], &x3 = quad[2], &x4 = quad[3];
  const Rat prod = x1 * x2 * x3 * x4;
  const Rat q4 = q2 * q2;
  if (prod == q4) throw std::invalid_argument("x1 x2 x3 x4 equals q^4; the regular extension is undefined");

  Rat ys = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) ys *= *square_root(quad[i] * quad[j] + q2);
  const Rat sum = x1 + x2 + x3 + x4;
  const Rat e3 = x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4;
  const Rat q3 = q2 * qr;
  const Rat rest = qr * prod * sum + 2 * q3 * e3 + q4 * qr * sum;
  const Rat b = (prod - q4) * (prod - q4);
  return {q3 * (2 * ys + rest) / b, q3 * (-2 * ys + rest) / b};
}

}  // namespace dq
