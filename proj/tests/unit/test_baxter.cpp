#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidalg/baxter/baxter.hpp"
#include "braidalg/errors.hpp"
#include "braidalg/exact/parse.hpp"

using namespace braidalg;
using namespace braidalg::baxter;
using reps::builtin_rep;

namespace {

const Ring xy = Ring::of({"x", "y"});
RatFunc rf(const char* s, const Ring& r = xy) { return exact::parse_ratfunc(s, r); }

std::vector<SpectralFn> all_fns() {
  return {SpectralFn::case_i(2, 1, 0, 1), SpectralFn::case_i(1, 0, 3, -2), SpectralFn::case_i(Rational(-1, 2), Rational(1, 2), 1, 1),
          SpectralFn::case_ii(), SpectralFn::case_iii(), SpectralFn::hecke_ratio()};
}

std::vector<Rep> all_reps() {
  return {builtin_rep("A3_2dim"), builtin_rep("B3_2dim"), builtin_rep("C3_2dim"), builtin_rep("B3_only"),
          builtin_rep("Hecke3_std"), builtin_rep("Hecke3_neg"), builtin_rep("scalar")};
}

}  // namespace

TEST_CASE("f_eval examples") {
  const RatFunc ii = SpectralFn::case_ii().eval(xy, "x", "y");
  CHECK(ii == rf("(1+y)*x/(1+x)"));
  CHECK(ii.substitute("y", rf("x")) == rf("x"));
  const Ring cxy = Ring::of({"x", "y"});
  CHECK(SpectralFn::case_i(1, 0, 0, 5).eval(cxy, "x", "y") == rf("x/(1 + 5*x*y)"));
  CHECK(SpectralFn::hecke_ratio().eval(xy, "x", "y") == rf("x/y"));
  CHECK(SpectralFn::case_iii().eval(xy, "x", "y") == rf("(1+x)*y/(1+y)"));
  CHECK(SpectralFn::case_i(2, 1, 0, 1).a() == Rational(2));
  CHECK(SpectralFn::case_i(1, 0, 4, 1).a().is_zero());
  CHECK_THROWS_AS(SpectralFn::case_i(3, 1, 0, 1), UsageError);
  CHECK_THROWS_AS(SpectralFn::case_ii().eval(xy, "x", "x"), UsageError);
  CHECK(SpectralFn::case_ii().eval(Rational(1), Rational(2)) == Rational(3, 2));
  CHECK_THROWS_WITH_AS(SpectralFn::hecke_ratio().eval(Rational(1), Rational(0)), "pole", MathError);
}

TEST_CASE("spectral function json") {
  const auto j = SpectralFn::case_i(2, 1, 0, 1).to_json();
  CHECK(j.dump() == R"({"case":"i","alpha1":"2","alpha2":"1","b":"0","c":"1"})");
  CHECK(SpectralFn::from_json(nlohmann::json::parse(j.dump())).label() == SpectralFn::case_i(2, 1, 0, 1).label());
  CHECK(SpectralFn::from_json(nlohmann::json{{"case", "hecke"}}).kind() == SpectralFn::Case::HeckeRatio);
  CHECK_THROWS_AS(SpectralFn::from_json(nlohmann::json{{"case", "ii"}, {"b", "1"}}), UsageError);
  CHECK_THROWS_AS(SpectralFn::from_json(nlohmann::json{{"case", "i"}, {"alpha1", "1/0"}, {"alpha2", "0"}, {"b", "0"}, {"c", "0"}}), UsageError);
  CHECK_THROWS_AS(SpectralFn::from_json(nlohmann::json{{"case", "iv"}}), UsageError);
}

TEST_CASE("build_R on nilpotent generators terminates the series") {
  const Rep a = builtin_rep("A3_2dim");
  const SpectralFn fn = SpectralFn::case_i(2, 1, 0, 1);
  for (int site = 1; site <= 2; ++site) {
    const RMatrixSym R = build_R(a, site, fn);
    const RMatrix id = RMatrix::identity(2, R.fxy);
    CHECK(R.value == id + (R.fyx - R.fxy) * R.sigma);
    CHECK(R.invariant_holds());
  }
}

TEST_CASE("build_R on scalar rep and singular factor") {
  const Rep s = builtin_rep("scalar");
  const RMatrixSym R = build_R(s, 1, SpectralFn::case_ii());
  const RatFunc lambda = R.sigma(0, 0);
  const RatFunc one = lambda.one_like();
  CHECK(R.value(0, 0) == (one - R.fxy * lambda) / (one - R.fyx * lambda));

  // lambda = 1 with f(y,x) = y/x is fine; a rep whose s equals 1/f(y,x)
  // identically cannot be built from constants, but the zero-determinant
  // path is reached with a numeric rep where I - f(y,x) s vanishes: use
  // case (i) with alpha = (1, 0), b = c = 0, so f(y,x) = y, and s = 1/y is
  // not constant. Instead check the error path of the inverse directly.
  const Rep ones = builtin_rep("scalar", {{"lambda", "0"}});
  CHECK(build_R(ones, 1, SpectralFn::hecke_ratio()).value.is_identity());
  exact::RMatrix sing(2, 2, std::vector<RatFunc>{one, one, one, one});
  CHECK_THROWS_AS(sing.inverse(), MathError);
}

TEST_CASE("regularity and unitarity for every rep and function") {
  for (const Rep& rep : all_reps()) {
    for (const SpectralFn& fn : all_fns()) {
      for (int site = 1; site < rep.n; ++site) {
        const RMatrixSym R = build_R(rep, site, fn);
        CHECK_MESSAGE(R.invariant_holds(), rep.name << " " << fn.label());
        // f(x, x) = 1 for u/v: on an eigenvalue 1 of s the factor ratio
        // (1 - x/y)/(1 - y/x) tends to -1, so R(x, x) = I fails there.
        const RMatrix s = rep.gen(site);
        const bool eigen_one = (RMatrix::identity(rep.dim, s(0, 0)) - s).determinant().is_zero();
        const bool expect_regular = !(fn.kind() == SpectralFn::Case::HeckeRatio && eigen_one);
        CHECK_MESSAGE(check_regularity(R) == expect_regular, rep.name << " " << fn.label());
        CHECK_MESSAGE(check_unitarity(rep, site, fn), rep.name << " " << fn.label());
      }
    }
  }
}

TEST_CASE("case (i) with alpha = (1, 0) is the a = 0 family") {
  const Rep a = builtin_rep("A3_2dim", {{"c", "3"}});
  const SpectralFn fn = SpectralFn::case_i(1, 0, 2, 3);
  const Ring ring = working_ring(a, {"x", "y"});
  const RMatrixSym R = build_R(a, 2, fn);
  // Independent build from the explicit f = (x + 2xy)/(1 + 3xy).
  const RatFunc f = exact::parse_ratfunc("(x + 2*x*y)/(1 + 3*x*y)", ring);
  const RatFunc g = exact::parse_ratfunc("(y + 2*x*y)/(1 + 3*x*y)", ring);
  const RMatrix s = a.embed(ring).gen(2);
  const RMatrix id = RMatrix::identity(2, f);
  CHECK(R.value == (id - f * s) * (id - g * s).inverse());
}

TEST_CASE("H_closed, H_series and h") {
  const Rep a = builtin_rep("A3_2dim");
  CHECK(H_closed(a, 1) == H_series(a, 1, "z", 1));
  CHECK(H_closed(a, 2) == a.embed(working_ring(a, {"z"})).gen(2));
  CHECK(H_series(a, 2, "z", 5) == H_closed(a, 2));

  for (const Rep& rep : all_reps()) {
    for (int site = 1; site < rep.n; ++site) {
      const RMatrix diff = H_closed(rep, site) - H_series(rep, site, "z", 8);
      const long val = min_valuation(diff, "z");
      CHECK_MESSAGE((val < 0 || val >= 9), rep.name);
    }
  }
  const Rep h = builtin_rep("Hecke3_std");
  CHECK(min_valuation(H_closed(h, 1) - H_series(h, 1, "z", 8), "z") == 9);

  const Ring zr = Ring::of({"z"});
  CHECK(h_fun(1, 0, 1, zr, "z") == exact::parse_ratfunc("1/(z^2 - 1)", zr));
  CHECK_THROWS_WITH_AS(h_fun(0, 1, 1, zr, "z"), "h undefined, Lemma requires a≠0", PreconditionError);
}

TEST_CASE("numeric R agrees with the symbolic one") {
  const Rep b = builtin_rep("B3_2dim", {{"nu", "2"}, {"mu", "-3"}});
  const RMatrixSym R = build_R(b, 1, SpectralFn::case_ii());
  const std::map<std::string, Rational> pt{{"x", Rational(3, 7)}, {"y", Rational(-5, 2)}};
  const QMatrix sym = R.value.map([&](const RatFunc& e) { return e.evaluate(pt); });
  const QMatrix sigma = b.gen(1).map([](const RatFunc& e) { return e.constant_value(); });
  CHECK(R_numeric(sigma, SpectralFn::case_ii(), Rational(3, 7), Rational(-5, 2)) == sym);
  CHECK_THROWS_AS(R_numeric(sigma, SpectralFn::case_ii(), Rational(-1), Rational(2)), MathError);
}

TEST_CASE("spectral variable clash") {
  const Rep r = builtin_rep("A3_2dim", {{"mu", "x"}});
  CHECK_THROWS_AS(build_R(r, 1, SpectralFn::case_ii()), UsageError);
}
