#include <chrono>

#include "braidalg/errors.hpp"
#include "braidalg/verify/verify.hpp"

namespace braidalg::verify {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void require_two_generators(const Rep& rep) {
  if (rep.n < 3) throw UsageError("the braided Yang-Baxter equation needs s1 and s2 (n >= 3), got n=" + std::to_string(rep.n));
}

}  // namespace

Residual compare(const std::string& label, const RMatrix& lhs, const RMatrix& rhs) {
  Residual res;
  res.label = label;
  const RMatrix diff = lhs - rhs;
  for (const auto& e : diff.entries()) {
    if (e.is_zero()) continue;
    ++res.nonzero_entries;
    res.max_terms = std::max(res.max_terms, e.num().size());
  }
  res.vacuous = lhs.is_zero() && rhs.is_zero();
  return res;
}

QMatrix evaluate_at(const RMatrix& m, const Point& point) {
  std::vector<Rational> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) {
    const Rational den = e.den().evaluate(point);
    if (den.is_zero()) throw MathError("pole");
    out.push_back(e.num().evaluate(point) / den);
  }
  return QMatrix(m.rows(), m.cols(), std::move(out));
}

VerifyReport ybe_symbolic(const Rep& rep, const SpectralFn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  require_two_generators(rep);
  VerifyReport report;
  report.check = "ybe " + rep.name + " f=" + fn.label();
  try {
    const auto ring = baxter::working_ring(rep, {"x", "y", "z"});
    const auto R = [&](int site, const char* u, const char* v) {
      return baxter::build_R_in(ring, rep, site, fn, u, v).value;
    };
    const RMatrix lhs = R(1, "x", "y") * R(2, "x", "z") * R(1, "y", "z");
    const RMatrix rhs = R(2, "y", "z") * R(1, "x", "z") * R(2, "x", "y");
    report.residuals.push_back(compare("ybe", lhs, rhs));
  } catch (const MathError& e) {
    report.error = e.what();
  }
  report.finalize();
  report.elapsed_ms = ms_since(t0);
  return report;
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

Rational sample_rational(std::mt19937_64& rng) {
  constexpr long kNum = 1000000;
  constexpr long kDen = 1000;
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * kNum + 1)) - kNum;
  const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(kDen)) + 1;
  return Rational(num, den);
}

VerifyReport ybe_random(const Rep& rep, const SpectralFn& fn, int trials, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  require_two_generators(rep);
  if (trials < 1) throw UsageError("trials must be positive");
  VerifyReport report;
  report.check = "ybe " + rep.name + " f=" + fn.label();
  report.mode = "random";
  report.seed = seed;
  report.trials = trials;

  std::vector<std::string> vars{"x", "y", "z"};
  for (const auto& s : rep.ring.names()) {
    if (s == "x" || s == "y" || s == "z") throw UsageError("rep symbol " + s + " clashes with a spectral variable");
    vars.push_back(s);
  }

  Residual res;
  res.label = "ybe";
  int failed = 0;
  for (int t = 0; t < trials && report.error.empty(); ++t) {
    auto rng = trial_rng(seed, t);
    Sample sample;
    sample.trial = t;
    for (;;) {
      Point pt;
      for (const auto& v : vars) pt[v] = sample_rational(rng);
      try {
        const QMatrix s1 = evaluate_at(rep.gen(1), pt);
        const QMatrix s2 = evaluate_at(rep.gen(2), pt);
        const Rational &x = pt["x"], &y = pt["y"], &z = pt["z"];
        const auto R = [&](const QMatrix& s, const Rational& u, const Rational& v) {
          return baxter::R_numeric(s, fn, u, v);
        };
        const QMatrix diff = R(s1, x, y) * R(s2, x, z) * R(s1, y, z) - R(s2, y, z) * R(s1, x, z) * R(s2, x, y);
        sample.point = std::move(pt);
        sample.equal = diff.is_zero();
        if (!sample.equal) {
          ++failed;
          res.nonzero_entries = std::max(res.nonzero_entries, diff.nonzero_count());
        }
        break;
      } catch (const MathError&) {
        if (++sample.pole_resamples > 100) {
          report.error = "measure-zero sampling failure";
          break;
        }
      }
    }
    report.samples.push_back(std::move(sample));
  }
  if (failed) res.detail = "failed trials: " + std::to_string(failed) + "/" + std::to_string(trials);
  report.residuals.push_back(std::move(res));
  report.finalize();
  report.elapsed_ms = ms_since(t0);
  return report;
}

}  // namespace braidalg::verify
