#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidalg/baxter/baxter.hpp"
#include "braidalg/exact/exact.hpp"
#include "braidalg/reps/rep.hpp"
#include "braidalg/verify/report.hpp"

namespace braidalg::verify {

using baxter::SpectralFn;
using exact::QMatrix;
using exact::RatFunc;
using exact::Rational;
using exact::RMatrix;
using reps::Rep;

using Point = std::map<std::string, Rational>;

/// Residual summary of lhs - rhs; vacuous when both sides are zero.
Residual compare(const std::string& label, const RMatrix& lhs, const RMatrix& rhs);

/// Evaluates every entry at `point`; throws MathError("pole") on a vanishing
/// denominator.
QMatrix evaluate_at(const RMatrix& m, const Point& point);

/// R1(x,y) R2(x,z) R1(y,z) - R2(y,z) R1(x,z) R2(x,y) over Q(x, y, z, params).
VerifyReport ybe_symbolic(const Rep& rep, const SpectralFn& fn);

/// Per-trial generator derived from (seed, trial) only.
std::mt19937_64 trial_rng(std::uint64_t seed, int trial);
/// Uniform integer in [-10^6, 10^6] over a uniform denominator in [1, 10^3].
Rational sample_rational(std::mt19937_64& rng);

/// Same identity at `trials` random points of (x, y, z, rep symbols).
/// Poles and singular factors trigger a resample; more than 100 in a row
/// is reported as an error.
VerifyReport ybe_random(const Rep& rep, const SpectralFn& fn, int trials, std::uint64_t seed);

/// rel1, rel2, rel4, rel5 over Q(z, v, params) for A(a, b, c), a = alpha1 * alpha2.
VerifyReport lemma_suite_A(const Rep& rep, const Rational& alpha1, const Rational& alpha2, const Rational& b,
                           const Rational& c);
/// relb1, rel2b, rel2bb, rel4b, rel5b over Q(z, v, params).
VerifyReport lemma_suite_B(const Rep& rep);

struct TransferOptions {
  std::vector<int> lengths{2, 3, 4};
  std::vector<std::pair<Rational, Rational>> points;
  /// Seed and trials of the ybe_random precondition.
  std::uint64_t seed = 1;
  int trials = 20;
  /// Adds 1 to entry (0, 1) of R as a negative control.
  bool corrupt = false;
  /// Skipping the precondition is for diagnostics only.
  bool require_ybe = true;
};

/// Reference point y0: 0 unless f has a pole there, else 1.
Rational reference_point(const SpectralFn& fn);

/// Transfer matrix t(x) = Tr_0 R_{0L}(x) ... R_{01}(x) with R = P Ř(x, y0),
/// where the rep's s_1 is the two-site operator on V (x) V.
QMatrix transfer_matrix(const QMatrix& R, std::size_t d, int L);

/// [t(x1), t(x2)] = 0 at every point pair and every length. The rep must be
/// numeric with square dimension d^2; its tensor-lifted chain on three
/// sites must pass ybe_random first.
VerifyReport transfer_commute(const Rep& rep, const SpectralFn& fn, const TransferOptions& opt);

/// `count` point pairs drawn from the per-trial generator.
std::vector<std::pair<Rational, Rational>> random_point_pairs(std::uint64_t seed, int count);

}  // namespace braidalg::verify
