#include "braidalg/exact/ratfunc.hpp"

#include "braidalg/errors.hpp"

namespace braidalg::exact {

RatFunc::RatFunc(Ring ring) : num_(ring), den_(ring, Rational(1)) {}

RatFunc::RatFunc(Ring ring, const Rational& constant) : num_(ring, constant), den_(ring, Rational(1)) {}

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(num_.ring(), Rational(1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) {
  if (!(num.ring() == den.ring())) {
    throw UsageError("mismatched variable lists in fraction: " + num.ring().to_string() + " vs " +
                     den.ring().to_string());
  }
  if (den.is_zero()) throw MathError("zero divisor");
  const MultiPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = num.divide(g);
    den = den.divide(g);
  }
  *this = normalized(std::move(num), std::move(den));
}

RatFunc RatFunc::normalized(MultiPoly num, MultiPoly den) {
  if (num.is_zero()) return RatFunc(num.ring());
  const Rational lc = den.leading_coefficient();
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc RatFunc::variable(const Ring& ring, std::string_view name) {
  return RatFunc(MultiPoly::variable(ring, name));
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw UsageError("rational function is not constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

namespace {

void require_same(const RatFunc& a, const RatFunc& b, const char* op) {
  if (!(a.ring() == b.ring())) {
    throw UsageError(std::string("mismatched variable lists in ") + op + ": " + a.ring().to_string() +
                     " vs " + b.ring().to_string());
  }
}

}  // namespace

// Henrici-style addition: only gcd(num, gcd(den_a, den_b)) can cancel.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  require_same(a, b, "add");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Canonical{});
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  const MultiPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return RatFunc::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  const MultiPoly ad = a.den_.divide(g);
  const MultiPoly bd = b.den_.divide(g);
  MultiPoly num = a.num_ * bd + b.num_ * ad;
  MultiPoly den = a.den_ * bd;
  if (num.is_zero()) return RatFunc(a.ring());
  const MultiPoly h = gcd(num, g);
  if (!h.is_one()) {
    num = num.divide(h);
    den = den.divide(h);
  }
  return RatFunc::normalized(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  require_same(a, b, "mul");
  if (a.is_zero() || b.is_zero()) return RatFunc(a.ring());
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  const MultiPoly g1 = gcd(an, bd);
  if (!g1.is_one()) {
    an = an.divide(g1);
    bd = bd.divide(g1);
  }
  const MultiPoly g2 = gcd(bn, ad);
  if (!g2.is_one()) {
    bn = bn.divide(g2);
    ad = ad.divide(g2);
  }
  return RatFunc::normalized(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  require_same(a, b, "div");
  return a * b.inverse();
}

RatFunc RatFunc::scaled(const Rational& c) const {
  if (c.is_zero()) return RatFunc(ring());
  return RatFunc(num_.scaled(c), den_, Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("zero divisor");
  return normalized(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

Rational RatFunc::evaluate(const std::map<std::string, Rational>& point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) throw MathError("pole");
  return num_.evaluate(point) / d;
}

namespace {

// p(value) for p polynomial in `var` with coefficients in the other variables.
RatFunc compose(const MultiPoly& p, std::size_t var, const RatFunc& value) {
  const auto coeffs = p.coefficients_in(var);
  RatFunc acc(p.ring());
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * value + RatFunc(coeffs[k]);
  return acc;
}

}  // namespace

RatFunc RatFunc::substitute(std::string_view name, const RatFunc& value) const {
  require_same(*this, value, "substitute");
  const auto idx = ring().index_of(name);
  if (!idx) throw UsageError("variable " + std::string(name) + " not in ring " + ring().to_string());
  if (!(num_.support_mask() & (1u << *idx)) && !(den_.support_mask() & (1u << *idx))) return *this;
  const RatFunc d = compose(den_, *idx, value);
  if (d.is_zero()) throw MathError("pole");
  return compose(num_, *idx, value) / d;
}

RatFunc RatFunc::specialize(const std::map<std::string, Rational>& values) const {
  RatFunc r = *this;
  for (const auto& [name, value] : values) {
    if (ring().contains(name)) r = r.substitute(name, RatFunc(ring(), value));
  }
  return r;
}

RatFunc RatFunc::embed(const Ring& target) const {
  if (target == ring()) return *this;
  return RatFunc(num_.embed(target), den_.embed(target), Canonical{});
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const auto wrap = [](const MultiPoly& p) {
    return p.size() == 1 && p.leading_coefficient().is_integer() && p.leading_coefficient().sign() > 0
               ? p.to_string()
               : "(" + p.to_string() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace braidalg::exact
