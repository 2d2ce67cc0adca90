#include <chrono>

#include "braidalg/errors.hpp"
#include "braidalg/verify/verify.hpp"

namespace braidalg::verify {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// R acting on legs 0 and j of (C^d)^{(x)(L+1)}, leg 0 most significant.
QMatrix embed_legs(const QMatrix& R, std::size_t d, int L, int j) {
  const std::size_t n = ipow(d, L + 1);
  const std::size_t s0 = ipow(d, L), sj = ipow(d, L - j);
  QMatrix out(n, n, Rational());
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t a = col / s0 % d, b = col / sj % d;
    const std::size_t rest = col - a * s0 - b * sj;
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      for (std::size_t b2 = 0; b2 < d; ++b2) {
        const Rational& e = R(a2 * d + b2, a * d + b);
        if (!e.is_zero()) out(rest + a2 * s0 + b2 * sj, col) = e;
      }
    }
  }
  return out;
}

QMatrix flip(std::size_t d) {
  QMatrix P(d * d, d * d, Rational());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) P(b * d + a, a * d + b) = Rational(1);
  return P;
}

}  // namespace

Rational reference_point(const SpectralFn& fn) {
  const auto ring = exact::Ring::of({"x", "y"});
  const RatFunc zero(ring, Rational());
  try {
    fn.eval(ring, "x", "y").substitute("y", zero);
    fn.eval(ring, "y", "x").substitute("y", zero);
    return Rational();
  } catch (const MathError&) {
    return Rational(1);
  }
}

QMatrix transfer_matrix(const QMatrix& R, std::size_t d, int L) {
  if (L < 1) throw UsageError("chain length must be positive");
  QMatrix mono = embed_legs(R, d, L, 1);
  for (int j = 2; j <= L; ++j) mono = embed_legs(R, d, L, j) * mono;
  const std::size_t m = ipow(d, L);
  QMatrix t(m, m, Rational());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) t(r, c) += mono(a * m + r, a * m + c);
  return t;
}

std::vector<std::pair<Rational, Rational>> random_point_pairs(std::uint64_t seed, int count) {
  std::vector<std::pair<Rational, Rational>> out;
  for (int i = 0; i < count; ++i) {
    auto rng = trial_rng(seed, i);
    Rational x1 = sample_rational(rng);
    out.emplace_back(std::move(x1), sample_rational(rng));
  }
  return out;
}

VerifyReport transfer_commute(const Rep& rep, const SpectralFn& fn, const TransferOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (rep.ring.size() != 0) throw UsageError("transfer harness needs a numeric rep, " + rep.name + " has symbols");
  std::size_t d = 1;
  while (d * d < rep.dim) ++d;
  if (d * d != rep.dim) {
    throw UsageError("transfer harness needs dimension d^2, got " + std::to_string(rep.dim));
  }
  for (int L : opt.lengths) {
    if (L < 1) throw UsageError("chain length must be positive");
  }

  const Rep lifted = reps::chain_rep(rep.gen(1), d, 3, rep.name + " on V^3");
  const VerifyReport pre = opt.require_ybe ? ybe_random(lifted, fn, opt.trials, opt.seed) : VerifyReport{};
  if (!pre.passed()) {
    throw PreconditionError("transfer harness: " + lifted.name + " fails ybe_random (seed " + std::to_string(opt.seed) +
                            ", trials " + std::to_string(opt.trials) + ")" +
                            (pre.error.empty() ? "" : ": " + pre.error));
  }

  VerifyReport report;
  report.check = "transfer " + rep.name + " f=" + fn.label() + (opt.corrupt ? " corrupted" : "");
  report.seed = opt.seed;
  const Rational y0 = reference_point(fn);
  report.notes.push_back("y0=" + y0.to_string());
  report.notes.push_back("precondition ybe_random on " + lifted.name + (opt.require_ybe ? ": pass" : ": skipped"));

  const QMatrix sigma = evaluate_at(rep.gen(1), {});
  const QMatrix P = flip(d);
  const auto R_at = [&](const Rational& x) {
    QMatrix R = P * baxter::R_numeric(sigma, fn, x, y0);
    if (opt.corrupt) R(0, 1) += Rational(1);
    return R;
  };
  const auto points = opt.points.empty() ? random_point_pairs(opt.seed, 5) : opt.points;
  try {
    for (int L : opt.lengths) {
      for (const auto& [x1, x2] : points) {
        const QMatrix t1 = transfer_matrix(R_at(x1), d, L);
        const QMatrix t2 = transfer_matrix(R_at(x2), d, L);
        const QMatrix comm = t1 * t2 - t2 * t1;
        Residual res;
        res.label = "L=" + std::to_string(L) + " x1=" + x1.to_string() + " x2=" + x2.to_string();
        res.nonzero_entries = comm.nonzero_count();
        res.vacuous = t1.is_zero() && t2.is_zero();
        report.residuals.push_back(std::move(res));
      }
    }
  } catch (const MathError& e) {
    report.error = std::string(e.what()) + " at a sample point; resample the points";
  }
  report.finalize();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace braidalg::verify
