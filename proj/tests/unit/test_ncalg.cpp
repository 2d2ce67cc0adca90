#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidalg/errors.hpp"
#include "braidalg/exact/exact.hpp"
#include "braidalg/ncalg/relations.hpp"

using namespace braidalg;
using namespace braidalg::ncalg;
using exact::QMatrix;

namespace {

const Ring q0 = Ring();

NCPoly gen(int n, int i, const Ring& r = q0) { return NCPoly::generator(n, r, i); }

NCPoly random_ncpoly(std::mt19937& g, int n) {
  std::uniform_int_distribution<int> len(0, 3), letter(1, n - 1), coef(-3, 3);
  NCPoly p(n, q0);
  for (int k = 0; k < 4; ++k) {
    Word w;
    for (int l = len(g); l > 0; --l) w.push_back(static_cast<std::uint8_t>(letter(g)));
    p += NCPoly::monomial(n, w, RatFunc(q0, Rational(coef(g))));
  }
  return p;
}

// Test-side evaluation of an NCPoly with constant coefficients on matrices.
QMatrix evaluate(const NCPoly& p, const std::vector<QMatrix>& mats, const std::map<std::string, Rational>& point) {
  const std::size_t d = mats.front().rows();
  QMatrix sum(d, d, Rational());
  for (const auto& [w, c] : p.terms()) {
    QMatrix m = QMatrix::identity(d, Rational());
    for (auto letter : w) m = m * mats[letter - 1];
    sum = sum + c.evaluate(point) * m;
  }
  return sum;
}

}  // namespace

TEST_CASE("nc_arith examples") {
  const NCPoly s1 = gen(3, 1), s2 = gen(3, 2);
  CHECK(commutator(s1, s1).is_zero());
  CHECK((s1 * s2 - s2 * s1).size() == 2);
  const NCPoly p = (s1 + s2) * s1;
  CHECK(p == s1 * s1 + s2 * s1);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Word{2, 1}).is_one());
  CHECK_THROWS_AS(gen(3, 1) + gen(4, 1), UsageError);
  CHECK_THROWS_AS(gen(3, 3), UsageError);
}

TEST_CASE("serialization uses length-then-lex word order") {
  const NCPoly s1 = gen(3, 1), s2 = gen(3, 2);
  const NCPoly p = s2 * s1 * s1 + s1.scaled(RatFunc(q0, Rational(-1, 2))) + s1 * s2 + NCPoly::scalar(3, q0, Rational(3));
  const auto ser = p.serialize();
  REQUIRE(ser.size() == 4);
  CHECK(ser[0] == std::pair<std::string, std::string>{"", "3"});
  CHECK(ser[1] == std::pair<std::string, std::string>{"1", "-1/2"});
  CHECK(ser[2] == std::pair<std::string, std::string>{"1.2", "1"});
  CHECK(ser[3] == std::pair<std::string, std::string>{"2.1.1", "1"});
  CHECK(word_from_string("2.1.1") == Word{2, 1, 1});
  CHECK_THROWS_AS(word_from_string("2..1"), UsageError);
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937 g(17);
  for (int trial = 0; trial < 30; ++trial) {
    const NCPoly p = random_ncpoly(g, 4), q = random_ncpoly(g, 4), r = random_ncpoly(g, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
  }
}

TEST_CASE("flip examples and properties") {
  const NCPoly s1 = gen(3, 1), s2 = gen(3, 2);
  CHECK(flip(s1 * s2 * s2) == s2 * s1 * s1);
  std::mt19937 g(4);
  for (int trial = 0; trial < 20; ++trial) {
    const NCPoly p = random_ncpoly(g, 5), q = random_ncpoly(g, 5);
    CHECK(flip(flip(p)) == p);
    CHECK(flip(p * q) == flip(p) * flip(q));
    CHECK(flip(p + q) == flip(p) + flip(q));
  }
  const NCPoly aa1 = symbolic_A3().aa1;
  const NCPoly f = flip(aa1);
  CHECK((f == aa1 || f == -aa1));
  CHECK(f == aa1);
}

TEST_CASE("relations_for element counts") {
  const auto braid4 = relations_for(Algebra::Braid, 4);
  CHECK(braid4.elements.size() == 3);
  int locality = 0, braid = 0;
  for (const auto& r : braid4.elements) {
    locality += r.label.rfind("com", 0) == 0;
    braid += r.label.rfind("braid", 0) == 0;
  }
  CHECK(locality == 1);
  CHECK(braid == 2);
  CHECK(braid4.elements[0].label == "com[1,3]");
  CHECK(braid4.elements[0].element == commutator(gen(4, 1), gen(4, 3)));

  const auto a3 = relations_for(Algebra::A, 3, parse_params({{"a", "a"}, {"b", "b"}, {"c", "c"}}));
  REQUIRE(a3.elements.size() == 5);
  CHECK(a3.elements[0].label == "aa1[i=1]");
  CHECK(a3.elements[4].label == "aa4[i=1]");

  const auto h3 = relations_for(Algebra::Hecke, 3, parse_params({{"q", "q"}}));
  REQUIRE(h3.elements.size() == 3);
  CHECK(h3.elements[0].label == "braid[i=1]");
  CHECK(h3.elements[1].label == "hecke[i=1]");
  CHECK(h3.elements[2].label == "hecke[i=2]");

  // Locality pairs at n = 6: |i-j| > 1 among 1..5.
  CHECK(relations_for(Algebra::B, 6).elements.size() == 6 + 4 * 4);
  CHECK(relations_for(Algebra::Braid, 2).elements.empty());
  CHECK(relations_for(Algebra::Hecke, 2, parse_params({{"q", "2"}})).elements.size() == 1);

  CHECK_THROWS_AS(relations_for(Algebra::A, 1, {}), UsageError);
  CHECK_THROWS_AS(relations_for(Algebra::A, 3, parse_params({{"a", "1"}, {"b", "0"}})), UsageError);
  CHECK_THROWS_AS(relations_for(Algebra::B, 3, parse_params({{"q", "1"}})), UsageError);
}

TEST_CASE("C relations are the flip of B relations at n = 3") {
  const auto b = relations_for(Algebra::B, 3);
  const auto c = relations_for(Algebra::C, 3);
  REQUIRE(b.elements.size() == c.elements.size());
  CHECK(flip(b.elements[0].element) == -c.elements[0].element);  // braid flips to its negative
  for (std::size_t k = 1; k < b.elements.size(); ++k) CHECK(flip(b.elements[k].element) == c.elements[k].element);
}

TEST_CASE("Hecke quadratic element") {
  const auto h = relations_for(Algebra::Hecke, 3, parse_params({{"q", "q"}}));
  const Ring& r = h.ring;
  const RatFunc q = RatFunc::variable(r, "q");
  const NCPoly s = NCPoly::generator(3, r, 1);
  const NCPoly expected = s * s - s.scaled(q + RatFunc(r, Rational(1))) + NCPoly::scalar(3, q);
  CHECK(h.elements[1].element == expected);
}

TEST_CASE("prop1 certificate") {
  const auto res = prop1_certificate();
  CHECK(res.pass);
  CHECK(res.residual.is_zero());
  CHECK_FALSE(res.target.is_zero());

  // a = 2: both sides specialize to the same element.
  const std::map<std::string, Rational> a2{{"a", Rational(2)}};
  CHECK(res.combination.specialize(a2) == res.target.specialize(a2));
  CHECK(res.target.specialize(a2).is_zero());

  for (auto t : kProp1Terms) {
    const auto mutated = prop1_certificate(t);
    CHECK_MESSAGE(!mutated.pass, to_string(t));
    CHECK(!mutated.residual.is_zero());
  }
}

TEST_CASE("prop1 certificate via matrix evaluation") {
  // Independent route: evaluate the combination and target at random numeric
  // a, b, c on random 3x3 matrices; the free-algebra identity must survive.
  const auto rel = symbolic_A3();
  const auto res = prop1_certificate();
  std::mt19937 g(99);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<QMatrix> mats(2, QMatrix(3, 3, Rational()));
    for (auto& m : mats)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(v(g));
    const std::map<std::string, Rational> pt{{"a", Rational(v(g), 3)}, {"b", Rational(v(g))}, {"c", Rational(v(g))}};
    const QMatrix combo = evaluate(res.combination, mats, pt);
    CHECK(combo == evaluate(res.target, mats, pt));
    CHECK_FALSE(combo.is_zero());
  }
  // The printed sign on the aa1 terms does not cancel.
  const Ring& r = rel.ring;
  const RatFunc a = RatFunc::variable(r, "a"), b = RatFunc::variable(r, "b");
  const NCPoly s1 = NCPoly::generator(3, r, 1), s2 = NCPoly::generator(3, r, 2);
  const RatFunc two(r, Rational(2));
  const NCPoly printed = rel.aa3.scaled(a - two) + commutator(s1 - s2, rel.aa2).scaled(a) -
                         ((s1.scaled(two) + s2) * rel.aa1).scaled(a) - (rel.aa1 * (s1 + s2.scaled(two))).scaled(a) -
                         rel.aa1.scaled(a * b);
  CHECK_FALSE((printed - res.target).is_zero());
}
