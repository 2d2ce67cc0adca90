#pragma once

#include <string>
#include <string_view>

#include "braidalg/exact/exact.hpp"
#include "braidalg/reps/rep.hpp"
#include "json.hpp"

namespace braidalg::baxter {

using exact::QMatrix;
using exact::RatFunc;
using exact::Rational;
using exact::Ring;
using exact::RMatrix;
using reps::Rep;

/// One of the admissible f(x,y): case (i) with parameters, (ii), (iii),
/// or the ratio u/v.
class SpectralFn {
 public:
  enum class Case { I, II, III, HeckeRatio };

  /// Requires alpha1 - alpha2 = +1 or -1.
  static SpectralFn case_i(const Rational& alpha1, const Rational& alpha2, const Rational& b, const Rational& c);
  static SpectralFn case_ii() { return SpectralFn(Case::II); }
  static SpectralFn case_iii() { return SpectralFn(Case::III); }
  static SpectralFn hecke_ratio() { return SpectralFn(Case::HeckeRatio); }

  Case kind() const { return kind_; }
  const Rational& alpha1() const { return alpha1_; }
  const Rational& alpha2() const { return alpha2_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  /// alpha1 * alpha2 (case i only; zero otherwise).
  Rational a() const { return alpha1_ * alpha2_; }

  std::string label() const;
  nlohmann::ordered_json to_json() const;
  static SpectralFn from_json(const nlohmann::json& j);

  /// f(u, v) as a canonical rational function in `ring`, which must
  /// contain u and v.
  RatFunc eval(const Ring& ring, std::string_view u, std::string_view v) const;
  /// f at rational values; throws MathError("pole") on a vanishing
  /// denominator.
  Rational eval(const Rational& u, const Rational& v) const;

 private:
  explicit SpectralFn(Case k) : kind_(k) {}
  Case kind_;
  Rational alpha1_, alpha2_, b_, c_;
};

RatFunc f_eval(const SpectralFn& fn, const Ring& ring, std::string_view u, std::string_view v);

/// Ř_i(x,y) = (I - f(x,y) s_i)(I - f(y,x) s_i)^{-1} over Q(x, y, rep symbols).
struct RMatrixSym {
  RMatrix value;
  RMatrix sigma;  // s_i embedded in the same ring
  int site = 1;
  std::string x, y;
  RatFunc fxy, fyx;

  /// value * (I - f(y,x) s) == I - f(x,y) s.
  bool invariant_holds() const;
};

/// Ring of the rep extended by the given spectral variables.
Ring working_ring(const Rep& rep, std::initializer_list<std::string> vars);

/// Throws MathError naming the vanishing determinant when I - f(y,x) s_i is
/// identically singular.
RMatrixSym build_R(const Rep& rep, int site, const SpectralFn& fn, const std::string& x = "x",
                   const std::string& y = "y");
/// Same construction with the ring fixed by the caller.
RMatrixSym build_R_in(const Ring& ring, const Rep& rep, int site, const SpectralFn& fn, const std::string& x,
                      const std::string& y);

/// Ř at rational spectral values over Q; throws MathError on a pole or a
/// singular factor. `sigma` must be a numeric matrix.
QMatrix R_numeric(const QMatrix& sigma, const SpectralFn& fn, const Rational& x, const Rational& y);

bool check_regularity(const RMatrixSym& R);
bool check_unitarity(const Rep& rep, int site, const SpectralFn& fn);

/// s_i (I - z s_i)^{-1}.
RMatrix H_closed(const Rep& rep, int site, const std::string& z = "z");
RMatrix H_closed_in(const Ring& ring, const Rep& rep, int site, const std::string& z);
/// sum_{l=0}^{N} s_i^{l+1} z^l.
RMatrix H_series(const Rep& rep, int site, const std::string& z, unsigned order);
/// a / (c z^2 - b z - a); a = 0 is a PreconditionError.
RatFunc h_fun(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& z);
RatFunc h_fun(const Rational& a, const Rational& b, const Rational& c, const Ring& ring, const std::string& z);

/// Smallest z-valuation of the numerators of the nonzero entries of m, or
/// -1 when m is zero.
long min_valuation(const RMatrix& m, const std::string& z);

}  // namespace braidalg::baxter
