#pragma once

#include <map>
#include <ostream>
#include <string>

#include "braidalg/exact/matrix.hpp"
#include "braidalg/exact/multipoly.hpp"

namespace braidalg::exact {

/// Rational function num/den over Q in canonical form: gcd(num, den) = 1 and
/// the graded-lex leading coefficient of den is 1. Equal functions have
/// identical representations, so operator== is structural.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Ring ring);
  RatFunc(Ring ring, const Rational& constant);
  explicit RatFunc(MultiPoly num);
  /// Reduces and normalizes. Throws MathError("zero divisor") if den == 0.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc variable(const Ring& ring, std::string_view name);

  const Ring& ring() const { return num_.ring(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  RatFunc zero_like() const { return RatFunc(ring()); }
  RatFunc one_like() const { return RatFunc(ring(), Rational(1)); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc scaled(const Rational& c) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  /// Exact value at a point. Throws MathError("pole") if den vanishes there.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Replaces variable `name` by `value` (which must live in the same ring).
  RatFunc substitute(std::string_view name, const RatFunc& value) const;
  /// Partial evaluation: replaces each listed variable by a rational value.
  RatFunc specialize(const std::map<std::string, Rational>& values) const;
  RatFunc embed(const Ring& target) const;

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(MultiPoly num, MultiPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc normalized(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_{Ring(), Rational(1)};
};

// Over Q(vars) the elimination runs on polynomials: each row is cleared of
// denominators, Bareiss steps divide exactly in Q[vars], and only the final
// entries are reduced to canonical form.
template <>
Matrix<RatFunc> Matrix<RatFunc>::inverse() const;
template <>
RatFunc Matrix<RatFunc>::determinant() const;

}  // namespace braidalg::exact
