#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidalg/exact/rational.hpp"
#include "braidalg/exact/ring.hpp"

namespace braidalg::exact {

/// Exponent vector indexed by the owning ring's variable order. Unused
/// slots stay zero, so monomials from rings that embed into each other
/// compare consistently.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for `other / *this`.
  Monomial quotient(const Monomial& divisor) const;
};

/// Graded lexicographic comparison: total degree first, then the exponent
/// of the earliest variable in ring order.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// in strictly decreasing graded-lex order with no zero coefficients; the
/// zero polynomial has no terms.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  MultiPoly(Ring ring, const Rational& constant);

  static MultiPoly variable(const Ring& ring, std::string_view name);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static MultiPoly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].second.is_one(); }
  Rational constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().second; }
  std::uint32_t total_degree() const { return is_zero() ? 0 : terms_.front().first.degree; }
  unsigned degree_in(std::size_t var) const;
  /// Smallest exponent of `var` across all terms (0 for the zero polynomial).
  unsigned valuation_in(std::size_t var) const;
  /// Bit i set iff variable i occurs in some term.
  std::uint32_t support_mask() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  /// Exact quotient, or nullopt when `divisor` does not divide this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  /// As divide_exact, throwing MathError when the division is not exact.
  MultiPoly divide(const MultiPoly& divisor) const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;

  /// Coefficients with respect to variable `var`; entry k multiplies var^k
  /// and no longer contains `var`.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const Ring& ring, std::size_t var,
                                     const std::vector<MultiPoly>& coeffs);

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Replaces variable `var` by the polynomial `value` (same ring).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Re-expresses this polynomial over a ring containing all variables that
  /// actually occur. Throws UsageError otherwise.
  MultiPoly embed(const Ring& target) const;

  /// Canonical sorted term list, e.g. "x^2*y - 3/2*z + 1".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_same_ring(const MultiPoly& o, const char* op) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q. gcd(p, 0) = monic(p); constants
/// have gcd 1. Throws UsageError when both arguments are zero.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

}  // namespace braidalg::exact
