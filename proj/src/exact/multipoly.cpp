#include "braidalg/exact/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg::exact {

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  r.degree = degree + other.degree;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - divisor.exp[i]);
  r.degree = degree - divisor.degree;
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_before(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grlex_compare(a.first, b.first) > 0;
}

// Merges two descending term lists, b scaled by `sign`.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a,
                                   const std::vector<MultiPoly::Term>& b, bool negate_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grlex_compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational s = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
  return out;
}

}  // namespace

MultiPoly::MultiPoly(Ring ring, const Rational& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace_back(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(const Ring& ring, std::string_view name) {
  const auto idx = ring.index_of(name);
  if (!idx) throw UsageError("variable " + std::string(name) + " not in ring " + ring.to_string());
  MultiPoly p(ring);
  Monomial m;
  m.exp[*idx] = 1;
  m.degree = 1;
  p.terms_.emplace_back(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  MultiPoly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw UsageError("polynomial is not constant: " + to_string());
  return is_zero() ? Rational() : terms_[0].second;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp[var]);
  return d;
}

unsigned MultiPoly::valuation_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().first.exp[var];
  for (const auto& [m, c] : terms_) d = std::min<unsigned>(d, m.exp[var]);
  return d;
}

std::uint32_t MultiPoly::support_mask() const {
  std::uint32_t mask = 0;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m.exp[i]) mask |= (1u << i);
    }
  }
  return mask;
}

void MultiPoly::require_same_ring(const MultiPoly& o, const char* op) const {
  if (!(ring_ == o.ring_)) {
    throw UsageError(std::string("mismatched variable lists in ") + op + ": " + ring_.to_string() +
                     " vs " + o.ring_.to_string());
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o, "add");
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o, "sub");
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b, "mul");
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].first, a.terms_[0].second);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].first, b.terms_[0].second);
  std::vector<MultiPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
  }
  return MultiPoly::from_terms(a.ring_, std::move(prods));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) r.terms_.emplace_back(m, k * c);
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& mono, const Rational& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) r.terms_.emplace_back(m * mono, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(ring_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  require_same_ring(divisor, "div");
  if (divisor.is_zero()) throw MathError("zero divisor");
  MultiPoly quotient(ring_);
  if (is_zero()) return quotient;
  const auto& [lm, lc] = divisor.leading_term();
  if (divisor.terms_.size() == 1) {
    for (const auto& [m, c] : terms_) {
      if (!lm.divides(m)) return std::nullopt;
      quotient.terms_.emplace_back(m.quotient(lm), c / lc);
    }
    return quotient;
  }
  // Leading and trailing monomials of a product are the products of those
  // of its factors.
  if (!lm.divides(terms_.front().first) || !divisor.terms_.back().first.divides(terms_.back().first)) {
    return std::nullopt;
  }
  std::vector<Term> q;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial t = rm.quotient(lm);
    Rational k = rc / lc;
    rem.terms_ = merge(rem.terms_, divisor.times_monomial(t, k).terms_, true);
    q.emplace_back(t, std::move(k));
  }
  quotient.terms_ = std::move(q);
  return quotient;
}

MultiPoly MultiPoly::divide(const MultiPoly& divisor) const {
  auto q = divide_exact(divisor);
  if (!q) throw MathError("inexact polynomial division: (" + to_string() + ") / (" + divisor.to_string() + ")");
  return std::move(*q);
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned e = rest.exp[var];
    rest.exp[var] = 0;
    rest.degree -= e;
    buckets[e].emplace_back(rest, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(const Ring& ring, std::size_t var,
                                       const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms()) {
      Monomial shifted = m;
      shifted.exp[var] = static_cast<std::uint16_t>(shifted.exp[var] + k);
      shifted.degree += static_cast<std::uint32_t>(k);
      terms.emplace_back(shifted, c);
    }
  }
  return from_terms(ring, std::move(terms));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  const std::uint32_t mask = support_mask();
  std::vector<Rational> values(ring_.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    auto it = point.find(ring_.name(i));
    if (it == point.end()) throw UsageError("variable " + ring_.name(i) + " not assigned");
    values[i] = it->second;
  }
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m.exp[i]) t *= values[i].pow(m.exp[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  require_same_ring(value, "substitute");
  const auto coeffs = coefficients_in(var);
  MultiPoly result(ring_);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value + coeffs[k];
  }
  return result;
}

MultiPoly MultiPoly::embed(const Ring& target) const {
  if (target == ring_) return *this;
  std::vector<int> map(ring_.size(), -1);
  const std::uint32_t mask = support_mask();
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    if (auto j = target.index_of(ring_.name(i))) {
      map[i] = static_cast<int>(*j);
    } else if (mask & (1u << i)) {
      throw UsageError("cannot embed polynomial in " + target.to_string() + ": variable " +
                       ring_.name(i) + " is missing");
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    r.degree = m.degree;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m.exp[i]) r.exp[static_cast<std::size_t>(map[i])] = m.exp[i];
    }
    terms.emplace_back(r, c);
  }
  return from_terms(target, std::move(terms));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || m.degree == 0) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (!m.exp[i]) continue;
      if (wrote) os << "*";
      os << ring_.name(i);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring_ == b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) {
      return false;
    }
  }
  return true;
}

}  // namespace braidalg::exact
