#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dq/cli.hpp"
#include "dq/dioph.hpp"
#include "support.hpp"

using namespace dq;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream is(out);
    for (std::string l; std::getline(is, l);)
      if (!l.empty()) v.push_back(l);
    return v;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string field(const std::string& line, const std::string& key) {
  auto pos = line.find(key + "=");
  REQUIRE(pos != std::string::npos);
  auto start = pos + key.size() + 1;
  return line.substr(start, line.find(' ', start) - start);
}

std::vector<Rat> rat_list(const std::string& s) {
  std::vector<Rat> v;
  std::istringstream is(s);
  for (std::string tok; std::getline(is, tok, ',');) v.push_back(Rat::parse(tok));
  return v;
}

}  // namespace

TEST_CASE("verify command") {
  auto ok = run({"verify", "--q", "25", "--elements", "1,24,39,56"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.lines()[0].rfind("PASS", 0) == 0);
  CHECK(ok.lines().size() == 7);
  CHECK(ok.lines()[1] == "pair 1,2 value=49 sqrt=7");

  auto bad = run({"verify", "--q", "31/3", "--elements", "1/2,28/3,193/12,23"});
  CHECK(bad.code == cli::kFail);
  CHECK(bad.lines()[0].rfind("FAIL", 0) == 0);

  auto neg = run({"verify", "--q", "53/21", "--elements", "-17/42,32/21,163/42,38/7,-50224/240429"});
  CHECK(neg.code == cli::kOk);
}

TEST_CASE("json output is one object per line") {
  auto r = run({"--json", "family", "--name", "thm2", "--enumerate", "--height", "60", "--max", "4"});
  CHECK(r.code == cli::kOk);
  auto lines = r.lines();
  CHECK(lines.size() == 4);
  for (const auto& l : lines) {
    auto j = json::parse(l);
    CHECK(j["command"] == "family");
    CHECK(j["verified"] == true);
    std::vector<Rat> xs;
    for (const auto& e : j["elements"]) xs.push_back(Rat::parse(e.get<std::string>()));
    CHECK(verify(DTuple(Rat::parse(j["q"].get<std::string>()), xs)).ok);
  }
  auto v = run({"verify", "--json", "--q", "25", "--elements", "1,24,39,56"});
  auto j = json::parse(v.lines().at(0));
  CHECK(j["verdict"] == "PASS");
  CHECK(j["pairs"].size() == 6);
}

TEST_CASE("family command text output round-trips") {
  auto r = run({"family", "--name", "thm2", "--t", "-131/252"});
  CHECK(r.code == cli::kOk);
  auto line = r.lines().at(0);
  CHECK(Rat::parse(field(line, "q")) == Rat(Int(43), Int(63)));
  auto xs = rat_list(field(line, "elements"));
  CHECK(xs.back() == Rat(Int(60085), Int(183708)));
  CHECK(verify(DTuple(Rat::parse(field(line, "q")), xs)).ok);

  auto deg = run({"family", "--name", "thm2", "--t", "0"});
  CHECK(deg.code == cli::kFail);
  CHECK(deg.out.find("degenerate") != std::string::npos);
}

TEST_CASE("extend, halve, torsion4, jacobian and search commands") {
  auto e = run({"extend", "--q", "13/7", "--quadruple", "-25/56,6/7,159/56,55/14", "--height", "30"});
  CHECK(e.code == cli::kOk);
  CHECK(e.out.find("fifth=-17889/103544 ") != std::string::npos);
  CHECK(run({"extend", "--q", "25", "--quadruple", "1,24,39,56", "--height", "10", "--budget", "1"}).code == cli::kFail);

  auto h = run({"halve", "--quartic", "(1,1)(4,1)(5,1)(14,1)", "--base", "0,1", "--point", "-56/55,1053/605"});
  CHECK(h.code == cli::kOk);
  CHECK(h.lines().at(0) == "verdict=YES");
  CHECK(run({"halve", "--quartic", "(1,2)(1,4)(1,8)(1,9)", "--base", "inf+", "--point", "-5,6"}).code == cli::kFail);

  auto t = run({"torsion4", "--k", "4,3,2,1"});
  CHECK(t.code == cli::kOk);
  CHECK(t.lines().at(0) == "YES condition=i");
  CHECK(run({"torsion4", "--k", "7/3,-2/3,2,1"}).code == cli::kFail);

  auto j = run({"jacobian", "--quartic", "280,426,169,24,1", "--form", "long"});
  CHECK(j.code == cli::kOk);
  CHECK(j.lines().at(0) == "curve=24,25,852,-1120,-28000");
  auto js = run({"jacobian", "--quartic", "1,0,0,0,1"});
  CHECK(js.lines().at(0) == "curve=0,0,0,-5184,0");

  auto s = run({"search", "--rhs", "1,0,0,1", "--height", "5", "--threads", "2"});
  CHECK(s.code == cli::kOk);
  CHECK(s.lines() == std::vector<std::string>{"t=-1 r=0", "t=0 r=1", "t=2 r=3"});
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"verify", "--q", "25"}).code == cli::kUsage);
  CHECK(run({"verify", "--q", "abc", "--elements", "1,2"}).code == cli::kUsage);
  CHECK(run({"verify", "--q", "0", "--elements", "1,2"}).code == cli::kUsage);
  CHECK(run({"family", "--name", "thm9", "--t", "1"}).code == cli::kUsage);
  CHECK(run({"family", "--name", "thm2"}).code == cli::kUsage);
  CHECK(run({"family", "--name", "thm2", "--t", "1", "--enumerate"}).code == cli::kUsage);
  CHECK(run({"jacobian", "--quartic", "1,0,0,0,2", "--form", "long"}).code == cli::kUsage);
  CHECK(run({"extend", "--q", "1", "--quadruple", "1,2,3,4"}).code == cli::kUsage);
  auto bad = run({"search", "--rhs", "0"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"--help"}).code == cli::kOk);
}
