#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidalg/errors.hpp"
#include "braidalg/exact/exact.hpp"

using namespace braidalg;
using namespace braidalg::exact;

namespace {

const Ring xy = Ring::of({"x", "y"});

RatFunc rf(const char* s, const Ring& r = xy) { return parse_ratfunc(s, r); }
MultiPoly poly(const char* s, const Ring& r = xy) {
  RatFunc f = parse_ratfunc(s, r);
  REQUIRE(f.den().is_one());
  return f.num();
}

MultiPoly random_poly(std::mt19937& gen, const Ring& ring, int terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<MultiPoly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      m.exp[i] = static_cast<std::uint16_t>(deg(gen));
      m.degree += m.exp[i];
    }
    ts.emplace_back(m, Rational(coef(gen), 1 + (t % 3)));
  }
  return MultiPoly::from_terms(ring, ts);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational::parse("-12/8").to_string() == "-3/2");
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Rational::parse("1.5"), UsageError);
  CHECK_THROWS_AS(Rational::parse("--1"), UsageError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), MathError);
}

TEST_CASE("ring ordering puts spectral variables first") {
  const Ring r = Ring::of({"mu", "v", "a", "x", "z", "y", "mu"});
  REQUIRE(r.size() == 6);
  CHECK(r.names() == std::vector<std::string>{"x", "y", "z", "v", "a", "mu"});
  CHECK(r == Ring::of({"a", "mu", "x", "y", "z", "v"}));
}

TEST_CASE("poly_arith examples") {
  CHECK(poly("(x+y)*(x-y)") == poly("x^2 - y^2"));
  CHECK(poly("x^2 + 3*y") + MultiPoly(xy) == poly("x^2 + 3*y"));
  CHECK(poly("(x+1)*(x+1)") == poly("x^2 + 2*x + 1"));
  CHECK(poly("(x+1)*(x+1)").to_string() == "x^2 + 2*x + 1");
  CHECK(poly("3/2*x*y^2 - y + 1/3").to_string() == "3/2*x*y^2 - y + 1/3");

  const MultiPoly other = MultiPoly::variable(Ring::of({"x", "z"}), "x");
  CHECK_THROWS_AS(poly("x") + other, UsageError);
  CHECK_THROWS_AS(poly("x") * other, UsageError);
}

TEST_CASE("poly_gcd examples") {
  const MultiPoly p = poly("x^2 - y^2");
  const MultiPoly q = poly("x + y");
  const MultiPoly g = gcd(p, q);
  CHECK(g == poly("x + y"));
  // Oracle: the gcd divides both inputs exactly.
  CHECK(p.divide_exact(g).has_value());
  CHECK(q.divide_exact(g).has_value());

  CHECK(gcd(poly("2*x + 4*y"), MultiPoly(xy)) == poly("x + 2*y"));
  CHECK(gcd(MultiPoly(xy, Rational(3)), MultiPoly(xy, Rational(6))).is_one());
  CHECK_THROWS_AS(gcd(MultiPoly(xy), MultiPoly(xy)), UsageError);

  const Ring r4 = Ring::of({"x", "y", "z", "q"});
  const MultiPoly a = poly("(x*y - z)^2*(q + x)*(y - 2)", r4);
  const MultiPoly b = poly("(x*y - z)*(y - 2)^2*(q*z + 1)", r4);
  CHECK(gcd(a, b) == poly("(x*y - z)*(y - 2)", r4).monic());
  CHECK(gcd(poly("x^3*y", r4), poly("x^2*y^2 + x*y^3", r4)) == poly("x*y", r4));
}

TEST_CASE("gcd of multiples is an associate of g times gcd") {
  std::mt19937 gen(7);
  const Ring r3 = Ring::of({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    const MultiPoly p = random_poly(gen, r3, 3, 2);
    const MultiPoly q = random_poly(gen, r3, 3, 2);
    const MultiPoly g = random_poly(gen, r3, 2, 2);
    if (p.is_zero() || q.is_zero() || g.is_zero()) continue;
    const MultiPoly lhs = gcd(p * g, q * g);
    const MultiPoly rhs = (g * gcd(p, q)).monic();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rf_arith examples") {
  CHECK(rf("(2*x+2)/(4*x+4)") == RatFunc(xy, Rational(1, 2)));
  CHECK(rf("x/y") / rf("x/y") == RatFunc(xy, Rational(1)));
  CHECK(rf("1/(1+x)") + rf("x/(1+x)") == RatFunc(xy, Rational(1)));
  CHECK_THROWS_WITH_AS(rf("x") / RatFunc(xy), "zero divisor", MathError);

  const RatFunc r = rf("(2*x + 4)/(6*x*y + 3)");
  CHECK(r.den().leading_coefficient().is_one());
  CHECK(r.to_string() == "(1/3*x + 2/3)/(x*y + 1/2)");
}

TEST_CASE("canonical form is unique regardless of construction order") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = random_poly(gen, xy, 3, 2);
    const MultiPoly q = random_poly(gen, xy, 3, 2);
    const MultiPoly g = random_poly(gen, xy, 2, 1);
    if (q.is_zero() || g.is_zero()) continue;
    // Build p*g / q*g directly, and as (p/q) reduced first then scaled by g/g.
    const RatFunc direct(p * g, q * g);
    const RatFunc staged = RatFunc(p, q) * RatFunc(g.scaled(Rational(3)), g.scaled(Rational(3)));
    CHECK(direct == staged);
    CHECK(direct.num() == staged.num());
    CHECK(direct.den() == staged.den());
  }
}

TEST_CASE("rf_eval examples and homomorphism") {
  CHECK(rf("1/(1+x)").evaluate({{"x", Rational(1)}}) == Rational(1, 2));
  CHECK_THROWS_WITH_AS(rf("(x+y)/(x-y)").evaluate({{"x", Rational(1)}, {"y", Rational(1)}}), "pole",
                       MathError);
  CHECK(rf("x*y").evaluate({{"x", Rational(2, 3)}, {"y", Rational(3)}}) == Rational(2));

  std::mt19937 gen(5);
  std::uniform_int_distribution<int> pick(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly n1 = random_poly(gen, xy, 3, 2), d1 = random_poly(gen, xy, 2, 2);
    const MultiPoly n2 = random_poly(gen, xy, 3, 2), d2 = random_poly(gen, xy, 2, 2);
    if (d1.is_zero() || d2.is_zero()) continue;
    const RatFunc r(n1, d1), s(n2, d2);
    const std::map<std::string, Rational> pt{{"x", Rational(pick(gen), 7)}, {"y", Rational(pick(gen), 5)}};
    try {
      const Rational er = r.evaluate(pt), es = s.evaluate(pt);
      CHECK((r * s).evaluate(pt) == er * es);
      CHECK((r + s).evaluate(pt) == er + es);
      ++checked;
    } catch (const MathError&) {
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("substitution and valuation") {
  const RatFunc f = rf("(x + y)/(1 + x*y)");
  CHECK(f.substitute("y", rf("x")) == rf("2*x/(1 + x^2)"));
  CHECK(rf("x^3*y + x^4").num().valuation_in(0) == 3);
}

TEST_CASE("mat_mul and mat_inv examples") {
  const QMatrix id = QMatrix::identity(3, Rational());
  CHECK(id.inverse() == id);

  const Ring zr = Ring::of({"z"});
  RMatrix n(2, 2, RatFunc(zr));
  n(0, 1) = RatFunc(zr, Rational(5));
  const RMatrix one = RMatrix::identity(2, RatFunc(zr));
  const RatFunc z = RatFunc::variable(zr, "z");
  CHECK((one - z * n).inverse() == one + z * n);

  QMatrix sing(2, 2, std::vector<Rational>{1, 2, 2, 4});
  CHECK_THROWS_WITH_AS(sing.inverse(), "singular matrix: determinant is 0", MathError);
  CHECK(sing.determinant().is_zero());

  QMatrix a(2, 3, Rational());
  CHECK_THROWS_AS(a * a, UsageError);
}

TEST_CASE("inverse is two-sided for random invertible matrices") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> pick(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    QMatrix m(n, n, Rational());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(pick(gen), 1 + (i + j) % 3);
    if (m.determinant().is_zero()) continue;
    const QMatrix inv = m.inverse();
    CHECK((inv * m).is_identity());
    CHECK((m * inv).is_identity());
    CHECK(inv.determinant() * m.determinant() == Rational(1));
  }
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + trial % 2;
    RMatrix m(n, n, RatFunc(xy));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = RatFunc(random_poly(gen, xy, 2, 1));
    if (m.determinant().is_zero()) continue;
    const RMatrix inv = m.inverse();
    CHECK((inv * m).is_identity());
    CHECK((m * inv).is_identity());
  }
}

TEST_CASE("parser rejects unknown symbols and garbage") {
  CHECK_THROWS_AS(rf("x + w"), UsageError);
  CHECK_THROWS_AS(rf("x + "), UsageError);
  CHECK_THROWS_AS(rf("(x"), UsageError);
  CHECK(rf("x^-2") == rf("1/(x*x)"));
  CHECK(symbols_in("mu*x + nu^2") == std::vector<std::string>{"mu", "x", "nu"});
}
