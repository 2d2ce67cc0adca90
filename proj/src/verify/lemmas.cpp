#include <chrono>

#include "braidalg/errors.hpp"
#include "braidalg/verify/verify.hpp"

namespace braidalg::verify {

namespace {

// Generators, H_i(z), H_i(v) and scalar helpers over Q(z, v, params).
struct LemmaContext {
  exact::Ring ring;
  RMatrix s1, s2, H1z, H2z, H1v, H2v;
  RatFunc z, v;

  explicit LemmaContext(const Rep& rep) : ring(baxter::working_ring(rep, {"z", "v"})) {
    if (rep.n < 3) throw UsageError("the Lemma identities need s1 and s2 (n >= 3), got n=" + std::to_string(rep.n));
    const Rep r = rep.embed(ring);
    s1 = r.gen(1);
    s2 = r.gen(2);
    H1z = baxter::H_closed_in(ring, rep, 1, "z");
    H2z = baxter::H_closed_in(ring, rep, 2, "z");
    H1v = baxter::H_closed_in(ring, rep, 1, "v");
    H2v = baxter::H_closed_in(ring, rep, 2, "v");
    z = RatFunc::variable(ring, "z");
    v = RatFunc::variable(ring, "v");
  }
  RatFunc k(const Rational& q) const { return RatFunc(ring, q); }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerifyReport lemma_suite_A(const Rep& rep, const Rational& alpha1, const Rational& alpha2, const Rational& b,
                           const Rational& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const Rational a = alpha1 * alpha2;
  if (a.is_zero()) throw PreconditionError("Lemma requires a≠0");
  reps::require_relations(rep, ncalg::relations_for(ncalg::Algebra::A, rep.n, reps::numeric_params({{"a", a}, {"b", b}, {"c", c}})),
                          "lemma_suite_A");
  const LemmaContext L(rep);
  const auto& [ring, s1, s2, H1z, H2z, H1v, H2v, z, v] = L;
  const RatFunc ka = L.k(a), kb = L.k(b), kc = L.k(c);
  const RatFunc hz = baxter::h_fun(a, b, c, ring, "z");
  const RatFunc hv = baxter::h_fun(a, b, c, ring, "v");
  const RMatrix D = s2 * s2 * s1 - s2 * s1 * s1;

  VerifyReport report;
  report.check = "lemma_A " + rep.name + " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();

  const RMatrix rel1_mid = (-kc) * D;
  report.residuals.push_back(compare("rel1 first", ka * (s2 * s2 * s2 * s1 * s1 - s2 * s2 * s1 * s1 * s1), rel1_mid));
  report.residuals.push_back(compare("rel1 second", rel1_mid, ka * (s1 * s1 * s2 * s2 * s2 - s1 * s1 * s1 * s2 * s2)));

  const RMatrix rel2_mid = (z * hz) * D;
  report.residuals.push_back(compare("rel2 first", s2 * H1z - H2z * s1, rel2_mid));
  report.residuals.push_back(compare("rel2 second", rel2_mid, H1z * s2 - s1 * H2z));

  report.residuals.push_back(compare("rel4", H2v * H1z - H2z * H1v, ((v - z) * hz * hv) * D));

  const RMatrix rel5_rhs = (ka / (z * v)) * (s2 - s1) + ((kc * z * v - kb * v - ka) / ka * hz * hv) * D +
                           (ka / (v * (v - z) * hv)) * (H1v - H2v) - (ka / (z * (v - z) * hz)) * (H1z - H2z);
  report.residuals.push_back(compare("rel5", s1 * H2v * H1z - H2z * H1v * s2, rel5_rhs));

  for (const auto& r : report.residuals) {
    if (r.vacuous) report.notes.push_back(r.label + ": vacuous (both sides are zero)");
  }
  report.finalize();
  report.elapsed_ms = ms_since(t0);
  return report;
}

VerifyReport lemma_suite_B(const Rep& rep) {
  const auto t0 = std::chrono::steady_clock::now();
  reps::require_relations(rep, ncalg::relations_for(ncalg::Algebra::B, rep.n), "lemma_suite_B");
  const LemmaContext L(rep);
  const auto& [ring, s1, s2, H1z, H2z, H1v, H2v, z, v] = L;
  const RatFunc one = L.k(1);
  const RMatrix D = s2 * s2 * s1 - s2 * s1 * s1;
  const RMatrix sq = s1 * s1 - s2 * s2;

  VerifyReport report;
  report.check = "lemma_B " + rep.name;

  report.residuals.push_back(compare("relb1", s2 * s2 * s2 * s1 * s1 - s2 * s2 * s1 * s1 * s1,
                                     s2 * s2 * s2 - s1 * s1 * s1 + s1 * s1 - s2 * s2));
  report.residuals.push_back(
      compare("rel2b", s2 * H1z - H2z * s1, (z / (z - one)) * (D + sq) + s2 - s1 + H1z - H2z));
  report.residuals.push_back(compare("rel2bb", s1 * H2z - H1z * s2, (one / (z - one)) * (s2 - s1) - H1z + H2z));
  report.residuals.push_back(compare("rel4b", H2v * H1z - H2z * H1v,
                                     ((v - z) / ((v - one) * (z - one))) * (D + sq - s1 + s2) +
                                         (one / (v - one)) * (H2z - H1z) - (one / (z - one)) * (H2v - H1v)));
  report.residuals.push_back(compare(
      "rel5b", s1 * H2v * H1z - H2z * H1v * s2,
      ((v * z - z + one) / (z * (z - one) * (v - one))) * (s2 - s1) + (v / ((v - one) * (z - one))) * (D + sq) +
          ((v - z + one) / ((v - z) * (z - one))) * (H1v - H2v) - (v / (z * (v - one) * (v - z))) * (H1z - H2z)));

  for (const auto& r : report.residuals) {
    if (r.vacuous) report.notes.push_back(r.label + ": vacuous (both sides are zero)");
  }
  report.finalize();
  report.elapsed_ms = ms_since(t0);
  return report;
}

}  // namespace braidalg::verify
