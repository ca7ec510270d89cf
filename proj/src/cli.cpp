#include "dq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "dq/descent.hpp"
#include "dq/dioph.hpp"
#include "dq/ptsearch.hpp"
#include "dq/quartic.hpp"
#include "text.hpp"

namespace dq::cli {

namespace {

using nlohmann::json;

struct Output {
  std::ostream& out;
  bool json_mode = false;

  // One result: a structured object in --json mode, a text line otherwise.
  void emit(const json& obj, const std::string& text) const {
    if (json_mode)
      out << obj.dump() << "\n";
    else
      out << text << "\n";
  }
};

json rats(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

std::string join(const std::vector<Rat>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

std::array<Rat, 4> four(const std::string& s, const char* what) {
  auto v = detail::split_rats(s, 4, what);
  return {v[0], v[1], v[2], v[3]};
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const Output& o, const std::string& q_text, const std::string& elements) {
  DTuple tuple(Rat::parse(q_text), detail::split_rats(elements, 0, "--elements"));
  auto res = verify(tuple);
  json pairs = json::array();
  for (const auto& p : res.pairs) {
    json jp{{"i", p.i}, {"j", p.j}, {"value", p.value.str()}, {"square", p.root.has_value()}};
    if (p.root) jp["sqrt"] = p.root->str();
    pairs.push_back(jp);
  }
  if (o.json_mode) {
    o.emit({{"command", "verify"},
            {"verdict", res.ok ? "PASS" : "FAIL"},
            {"q", tuple.q().str()},
            {"elements", rats(tuple.elements())},
            {"pairs", pairs}},
           "");
  } else {
    o.out << (res.ok ? "PASS" : "FAIL") << " q=" << tuple.q() << " elements=" << join(tuple.elements()) << "\n";
    for (const auto& p : res.pairs) {
      o.out << "pair " << p.i << "," << p.j << " value=" << p.value;
      if (p.root)
        o.out << " sqrt=" << *p.root << "\n";
      else
        o.out << " square=no\n";
    }
  }
  return res.ok ? kOk : kFail;
}

// ---- extend -------------------------------------------------------------------

int cmd_extend(const Output& o, const std::string& q_text, const std::string& quad_text, std::int64_t height, long budget) {
  const Rat q = Rat::parse(q_text);
  const auto quad = four(quad_text, "--quadruple");
  auto ext = extend_quadruple(q, quad, height, budget);
  for (const auto& e : ext) {
    o.emit({{"command", "extend"},
            {"q", q.str()},
            {"quadruple", rats({quad.begin(), quad.end()})},
            {"fifth", e.fifth.str()},
            {"point", e.point.str()},
            {"provenance", e.provenance}},
           "fifth=" + e.fifth.str() + " point=" + e.point.str() + " provenance=" + e.provenance);
  }
  if (ext.empty()) {
    o.emit({{"command", "extend"}, {"q", q.str()}, {"quadruple", rats({quad.begin(), quad.end()})}, {"fifth", nullptr}},
           "no extension found (search height " + std::to_string(height) + ", budget " + std::to_string(budget) + ")");
    return kFail;
  }
  return kOk;
}

// ---- family -------------------------------------------------------------------

void emit_quintuple(const Output& o, const std::string& name, const FamilyValue& v, const VerifyResult& res) {
  o.emit({{"command", "family"},
          {"name", name},
          {"t", v.t.str()},
          {"q", v.q.str()},
          {"elements", rats(v.elements())},
          {"verified", res.ok}},
         "t=" + v.t.str() + " q=" + v.q.str() + " elements=" + join(v.elements()));
}

int cmd_family(const Output& o, const std::string& name, const std::string& t_text, bool enumerate, std::int64_t height,
               std::size_t max, long budget) {
  family(name);  // validates the name before any work
  if (!enumerate) {
    FamilyValue v;
    try {
      v = family_fifth(name, Rat::parse(t_text));
    } catch (const DegenerateParameter& e) {
      o.emit({{"command", "family"}, {"name", name}, {"t", t_text}, {"degenerate", e.what()}},
             std::string("degenerate: ") + e.what());
      return kFail;
    }
    auto res = verify(DTuple(v.q, v.elements()));
    emit_quintuple(o, name, v, res);
    if (!res.ok) {
      auto f = *res.first_failure();
      if (!o.json_mode)
        o.out << "FAIL pair " << f.i << "," << f.j << " value=" << f.value << " is not a square\n";
      return kFail;
    }
    return kOk;
  }
  EnumerateConfig cfg;
  cfg.height = height;
  cfg.max_results = max;
  cfg.budget = budget;
  auto found = family_enumerate(name, cfg);
  for (const auto& v : found) emit_quintuple(o, name, v, verify(DTuple(v.q, v.elements())));
  return found.empty() ? kFail : kOk;
}

// ---- halve --------------------------------------------------------------------

QuarticCurve factored(const std::string& spec) {
  auto c = QuarticCurve::parse(spec);
  if (c.is_factored()) return c;
  if (auto s = c.split()) return *s;
  throw std::invalid_argument("quartic " + c.str() + " does not split into linear factors over Q");
}

int cmd_halve(const Output& o, const std::string& quartic, const std::string& base_text, const std::string& point_text) {
  const QuarticCurve c = factored(quartic);
  QPoint base = QPoint::parse(base_text);
  QPoint q = QPoint::parse(point_text);
  if (!c.contains(base)) throw NotOnCurve("base (" + base.str() + ") is not on the quartic");
  if (!c.contains(q)) throw NotOnCurve("point (" + q.str() + ") is not on the quartic");

  DoubleVerdict verdict;
  if (base.kind() == QPoint::Kind::Affine) {
    verdict = is_double(c, base, q);
  } else {
    // y -> -y swaps inf+ and inf- and respects the group structure.
    QPoint qq = q;
    if (base.kind() == QPoint::Kind::InfMinus)
      qq = q.is_affine() ? QPoint(q.u(), -q.v()) : (q.kind() == QPoint::Kind::InfPlus ? QPoint::inf_minus() : QPoint::inf_plus());
    verdict = is_double_inf_base(c, qq);
  }

  const QuarticGroup group(c, base);
  std::vector<std::string> halves;
  for (const auto& h : group.jacobian().halves(group.to_jacobian(q))) {
    try {
      halves.push_back(group.from_jacobian(h).str());
    } catch (const ExceptionalPoint&) {
      halves.push_back("jacobian:" + h.str());
    }
  }

  const auto& cert = verdict.cert;
  if (o.json_mode) {
    json pairs = json::array();
    for (const auto& p : cert.pairs) {
      json jp{{"i", p.i}, {"j", p.j}, {"value", p.value.str()}, {"square", p.is_square()}};
      if (p.witness) jp["sqrt"] = p.witness->str();
      pairs.push_back(jp);
    }
    json obj{{"command", "halve"},
             {"double", verdict.is_double},
             {"method", cert.method == SquareClassCert::Method::Criterion ? "criterion" : "oracle"},
             {"pairs", pairs},
             {"delta", cert.delta.str()},
             {"halves", halves}};
    if (cert.z) obj["z"] = rats({cert.z->begin(), cert.z->end()});
    o.emit(obj, "");
  } else {
    o.out << "verdict=" << (verdict.is_double ? "YES" : "NO") << "\n" << cert.str();
    for (const auto& h : halves) o.out << "half_point=" << h << "\n";
  }
  return verdict.is_double ? kOk : kFail;
}

// ---- torsion4 -----------------------------------------------------------------

int cmd_torsion4(const Output& o, const std::string& k_text) {
  const KTuple k = four(k_text, "--k");
  auto v = has_rational_4_torsion(k);
  auto pre = two_torsion_preimages(k);
  static const char* roman[] = {"", "i", "ii", "iii"};
  if (o.json_mode) {
    json pts = json::array();
    for (std::size_t n = 0; n < 3; ++n) {
      json p{{"name", "P" + std::to_string(n + 2)}, {"point", pre[n].point.str()}};
      if (pre[n].preimage)
        p["preimage"] = pre[n].preimage->str();
      else
        p["failure"] = pre[n].failure;
      pts.push_back(p);
    }
    json obj{{"command", "torsion4"}, {"k", rats({k.begin(), k.end()})}, {"has_4_torsion", v.has_4_torsion}, {"two_torsion", pts}};
    if (v.has_4_torsion) obj["condition"] = roman[v.condition];
    o.emit(obj, "");
  } else {
    o.out << (v.has_4_torsion ? std::string("YES condition=") + roman[v.condition] : std::string("NO")) << "\n";
    for (std::size_t n = 0; n < 3; ++n) {
      o.out << "P" << n + 2 << "=" << pre[n].point.str();
      if (pre[n].preimage)
        o.out << " preimage=" << pre[n].preimage->str() << "\n";
      else
        o.out << " preimage=none (" << pre[n].failure << ")\n";
    }
  }
  return v.has_4_torsion ? kOk : kFail;
}

// ---- jacobian -----------------------------------------------------------------

int cmd_jacobian(const Output& o, const std::string& quartic, const std::string& form) {
  const QuarticCurve c = QuarticCurve::parse(quartic);
  const WeierstrassCurve e = form == "long" ? jacobian_long(c) : jacobian_short(c);
  const auto inv = c.invariants();
  o.emit({{"command", "jacobian"},
          {"form", form},
          {"curve", rats({e.a1(), e.a2(), e.a3(), e.a4(), e.a6()})},
          {"I", inv.I.str()},
          {"J", inv.J.str()},
          {"c4", inv.c4.str()},
          {"c6", inv.c6.str()},
          {"disc", inv.disc.str()},
          {"j", e.j_invariant().str()}},
         "curve=" + e.str() + "\nI=" + inv.I.str() + " J=" + inv.J.str() + " c4=" + inv.c4.str() + " c6=" + inv.c6.str() +
             " disc=" + inv.disc.str() + "\nj=" + e.j_invariant().str());
  return kOk;
}

// ---- search -------------------------------------------------------------------

int cmd_search(const Output& o, const std::string& rhs_text, std::int64_t height, unsigned threads) {
  const Poly rhs = Poly::from_descending(detail::split_rats(rhs_text, 0, "--rhs"));
  SearchConfig cfg;
  cfg.height = height;
  cfg.threads = threads;
  for (const auto& p : search_rhs(rhs, cfg))
    o.emit({{"command", "search"}, {"t", p.t.str()}, {"r", p.r.str()}}, "t=" + p.t.str() + " r=" + p.r.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rational tools for quartic curves, 2-descent and D(q)-tuples", "dq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "one JSON object per result line");

  std::string q, elements, quad, name, t, quartic, base, point, k, form = "short", rhs;
  std::int64_t height = 50;
  long budget = 2;
  std::size_t max = 10;
  bool enumerate = false;
  unsigned threads = 0;

  auto* verify_cmd = app.add_subcommand("verify", "check that every a_i a_j + q is a square");
  verify_cmd->add_option("--q", q, "the constant q")->required();
  verify_cmd->add_option("--elements", elements, "comma-separated rationals")->required();

  auto* extend_cmd = app.add_subcommand("extend", "fifth elements for a D(q)-quadruple");
  extend_cmd->add_option("--q", q, "the constant q")->required();
  extend_cmd->add_option("--quadruple", quad, "four comma-separated rationals")->required();
  extend_cmd->add_option("--height", height, "point search height")->check(CLI::PositiveNumber);
  extend_cmd->add_option("--budget", budget, "combination bound for the group law")->check(CLI::NonNegativeNumber);

  auto* family_cmd = app.add_subcommand("family", "quintuples from the parametric families");
  family_cmd->add_option("--name", name, "thm2, thm3i, thm3ii or thm3iii")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3i", "thm3ii", "thm3iii"}));
  auto* t_opt = family_cmd->add_option("--t", t, "parameter value");
  auto* enum_opt = family_cmd->add_flag("--enumerate", enumerate, "search the auxiliary curve");
  t_opt->excludes(enum_opt);
  family_cmd->add_option("--height", height, "auxiliary search height")->check(CLI::PositiveNumber);
  family_cmd->add_option("--max", max, "maximum number of quintuples");
  family_cmd->add_option("--budget", budget, "combination bound for the group law")->check(CLI::NonNegativeNumber);

  auto* halve_cmd = app.add_subcommand("halve", "decide whether a point is twice a rational point");
  halve_cmd->add_option("--quartic", quartic, "a,b,c,d,e or (a1,b1)(a2,b2)(a3,b3)(a4,b4)")->required();
  halve_cmd->add_option("--base", base, "identity point: u,v or inf+ / inf-")->required();
  halve_cmd->add_option("--point", point, "the point to halve")->required();

  auto* torsion_cmd = app.add_subcommand("torsion4", "rational 4-torsion on the k-quartic");
  torsion_cmd->add_option("--k", k, "four comma-separated rationals")->required();

  auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian and invariants of a quartic");
  jac_cmd->add_option("--quartic", quartic, "a,b,c,d,e or factored form")->required();
  jac_cmd->add_option("--form", form, "long or short")->check(CLI::IsMember({"long", "short"}));

  auto* search_cmd = app.add_subcommand("search", "rational points on r^2 = rhs(t)");
  search_cmd->add_option("--rhs", rhs, "coefficients, highest degree first")->required();
  search_cmd->add_option("--height", height, "search height")->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", threads, "worker threads (default: DQ_THREADS or all cores)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Output o{out, json_mode};
  try {
    if (verify_cmd->parsed()) return cmd_verify(o, q, elements);
    if (extend_cmd->parsed()) return cmd_extend(o, q, quad, height, budget);
    if (family_cmd->parsed()) {
      if (!enumerate && t.empty()) throw std::invalid_argument("family needs --t or --enumerate");
      return cmd_family(o, name, t, enumerate, height, max, budget);
    }
    if (halve_cmd->parsed()) return cmd_halve(o, quartic, base, point);
    if (torsion_cmd->parsed()) return cmd_torsion4(o, k);
    if (jac_cmd->parsed()) return cmd_jacobian(o, quartic, form);
    if (search_cmd->parsed()) return cmd_search(o, rhs, height, threads);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace dq::cli
