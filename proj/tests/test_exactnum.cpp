#include <doctest.h>

#include <sstream>

#include "dq/poly.hpp"
#include "dq/rat.hpp"
#include "support.hpp"

using namespace dq;
using dqtest::Rng;

namespace {

// Small fraction with __int128 components, reduced by std::gcd.
struct Frac {
  __int128 n, d;
  Frac(__int128 num, __int128 den) {
    if (den < 0) num = -num, den = -den;
    __int128 g = std::gcd(num < 0 ? -num : num, den);
    n = num / g;
    d = den / g;
  }
  bool matches(const Rat& r) const {
    return r.num() == Int(static_cast<long>(n)) && r.den() == Int(static_cast<long>(d));
  }
};

Frac to_frac(const Rat& r) { return Frac(r.num().get_si(), r.den().get_si()); }

}  // namespace

TEST_CASE("rationals are canonical on construction and parse") {
  CHECK(Rat(Int(6), Int(-4)).str() == "-3/2");
  CHECK(Rat(Int(0), Int(7)).den() == 1);
  CHECK(Rat::parse("12/-8") == Rat(Int(-3), Int(2)));
  CHECK(Rat::parse("-4/-6").str() == "2/3");
  CHECK(Rat::parse("−" "5/10").str() == "-1/2");
  CHECK(Rat::parse(" 42 ") == 42);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
  CHECK_FALSE(Rat(1).checked_div(0).has_value());
  CHECK(*Rat(1).checked_div(4) == Rat(Int(1), Int(4)));
  CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZero);
}

TEST_CASE("arithmetic matches a reduced-fraction oracle and stays canonical") {
  Rng rng(101);
  for (int it = 0; it < 2000; ++it) {
    Rat a = dqtest::rand_rat(rng, 1000), b = dqtest::rand_nonzero(rng, 1000);
    Frac fa = to_frac(a), fb = to_frac(b);
    CHECK(Frac(fa.n * fb.d + fb.n * fa.d, fa.d * fb.d).matches(a + b));
    CHECK(Frac(fa.n * fb.d - fb.n * fa.d, fa.d * fb.d).matches(a - b));
    CHECK(Frac(fa.n * fb.n, fa.d * fb.d).matches(a * b));
    CHECK(Frac(fa.n * fb.d, fa.d * fb.n).matches(a / b));
    for (const Rat& r : {a + b, a - b, a * b, a / b}) {
      CHECK(r.den() >= 1);
      Int g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
    }
    CHECK(((a < b) == (fa.n * fb.d < fb.n * fa.d)));
  }
}

TEST_CASE("textual form round-trips") {
  Rng rng(7);
  for (int it = 0; it < 500; ++it) {
    Rat a = dqtest::rand_rat(rng, 100000);
    CHECK(Rat::parse(a.str()) == a);
    std::ostringstream os;
    os << a;
    CHECK(os.str() == a.str());
  }
}

TEST_CASE("height is max(|num|, den)") {
  CHECK(Rat(Int(-17), Int(42)).height() == 42);
  CHECK(Rat(Int(-131), Int(5)).height() == 131);
  CHECK(height_less(Rat(Int(1), Int(2)), Rat(3)));
  CHECK(height_less(Rat(-1), Rat(1)));
}

TEST_CASE("is_square examples") {
  CHECK(*square_root(0) == 0);
  auto r = square_root(Rat(Int(169), Int(3025)));
  REQUIRE(r);
  CHECK(*r == Rat(Int(13), Int(55)));
  CHECK_FALSE(is_square(Rat(Int(-1), Int(55))));
  CHECK_FALSE(is_square(Rat(Int(1), Int(2))));
  CHECK(*square_root(Rat(Int(3657830400), Int(1))) == 60480);
}

TEST_CASE("int_sqrt examples") {
  CHECK(int_sqrt(1369) == std::pair<Int, bool>(37, true));
  CHECK(int_sqrt(2) == std::pair<Int, bool>(1, false));
  CHECK(int_sqrt(96721) == std::pair<Int, bool>(311, true));
  CHECK(int_sqrt(0) == std::pair<Int, bool>(0, true));
  CHECK_THROWS_AS(int_sqrt(-4), std::domain_error);
}

TEST_CASE("square test agrees with brute search and its witness squares back") {
  Rng rng(11);
  for (int it = 0; it < 400; ++it) {
    Rat r = dqtest::rand_rat(rng, 30);
    if (it % 3 == 0) r = r * r;
    auto s = square_root(r);
    if (s) {
      CHECK(s->sign() >= 0);
      CHECK(*s * *s == r);
    }
    CHECK(s.has_value() == dqtest::brute_is_square(r, 30, 30));
  }
  for (int it = 0; it < 300; ++it) {
    Int n = Int(static_cast<long>(dqtest::uniform(rng, 0, 1L << 40)));
    auto [root, exact] = int_sqrt(n);
    CHECK(root * root <= n);
    CHECK((root + 1) * (root + 1) > n);
    CHECK(exact == dqtest::bisect_is_square(n));
  }
}

TEST_CASE("rational_roots examples") {
  CHECK(rational_roots(Poly({-1, 0, 1})) == std::vector<Rat>{-1, 1});
  CHECK(rational_roots(Poly({0, -4, 0, 4})) == std::vector<Rat>{-1, 0, 1});
  CHECK(rational_roots(Poly({1, 0, 1})).empty());
  CHECK_THROWS_AS(rational_roots(Poly()), std::invalid_argument);
  CHECK(rational_roots(Poly({5})).empty());
  // repeated roots collapse
  CHECK(rational_roots(Poly({1, -2, 1}) * Poly({Rat(Int(-1), Int(3)), 1})) == std::vector<Rat>{Rat(Int(1), Int(3)), 1});
}

TEST_CASE("rational_roots agrees with divisor enumeration on built polynomials") {
  Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    // product of (d x - n) for random small roots n/d and an irreducible quadratic
    Poly p = Poly({Rat(dqtest::uniform(rng, 1, 3))});
    int k = static_cast<int>(dqtest::uniform(rng, 0, 4));
    for (int i = 0; i < k; ++i) {
      long n = dqtest::uniform(rng, -6, 6), d = dqtest::uniform(rng, 1, 4);
      p = p * Poly({Rat(-n), Rat(d)});
    }
    if (dqtest::uniform(rng, 0, 1)) p = p * Poly({Rat(dqtest::uniform(rng, 1, 5)), 0, 1});
    if (p.degree() < 1) continue;
    std::vector<long> ints;
    for (const auto& c : p.coeffs()) ints.push_back(c.num().get_si());
    auto expect = dqtest::oracle_rational_roots(ints);
    auto got = rational_roots(p);
    CHECK(got == expect);
    for (const auto& r : got) CHECK(p(r).is_zero());
    // rational coefficients: scaling by 1/7 keeps the roots
    CHECK(rational_roots(Rat(Int(1), Int(7)) * p) == got);
  }
}

TEST_CASE("polynomial helpers") {
  Poly p = Poly::from_descending({1, 2, 3});  // x^2 + 2x + 3
  CHECK(p[0] == 3);
  CHECK(p(2) == 11);
  CHECK(p.derivative() == Poly({2, 2}));
  CHECK(p.shifted(1) == Poly({6, 4, 1}));
  CHECK(p.shifted(1).shifted(-1) == p);
  auto [q, r] = (p * Poly({1, 1}) + Poly({5})).divmod(p);
  CHECK(q == Poly({1, 1}));
  CHECK(r == Poly({5}));
  CHECK(gcd(Poly({-1, 0, 1}), Poly({1, 1})) == Poly({1, 1}));
  CHECK_THROWS_AS(p.divmod(Poly()), DivisionByZero);
}
