// Multivariate gcd over Q by the subresultant polynomial remainder sequence,
// recursive on variables: the polynomial is viewed as univariate in one main
// variable with coefficients in Q[remaining variables], contents are split
// off by recursive gcds, and the primitive parts run through the PRS.

#include <algorithm>
#include <bit>

#include "braidalg/errors.hpp"
#include "braidalg/exact/multipoly.hpp"

namespace braidalg::exact {

namespace {

using UPoly = std::vector<MultiPoly>;  // coefficient k multiplies t^k

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

MultiPoly gcd_impl(const MultiPoly& p, const MultiPoly& q);

MultiPoly content(const UPoly& p) {
  std::vector<const MultiPoly*> order;
  for (const auto& c : p) {
    if (!c.is_zero()) order.push_back(&c);
  }
  MultiPoly g(p.front().ring());
  for (const MultiPoly* cp : order) {
    const MultiPoly& c = *cp;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly divide_coeffs(const UPoly& p, const MultiPoly& d) {
  UPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.divide(d));
  return out;
}

UPoly primitive_part(const UPoly& p) {
  const MultiPoly c = content(p);
  return c.is_one() ? p : divide_coeffs(p, c);
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = udeg(b);
  const MultiPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  while (!a.empty() && udeg(a) >= db) {
    const MultiPoly lr = a.back();
    const int shift = udeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= lr * b[static_cast<std::size_t>(k)];
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    const MultiPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  const Ring ring = a.front().ring();
  MultiPoly g(ring, Rational(1));
  MultiPoly h(ring, Rational(1));
  for (;;) {
    const int delta = udeg(a) - udeg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive_part(b);
    if (udeg(r) == 0) return UPoly{MultiPoly(ring, Rational(1))};
    a = std::move(b);
    const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    b = divide_coeffs(r, divisor);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = g.pow(static_cast<unsigned>(delta)).divide(h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

MultiPoly content_wrt(const MultiPoly& p, std::size_t var) {
  const auto coeffs = p.coefficients_in(var);
  return content(coeffs);
}

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& q) {
  Monomial m = mono.leading_term().first;
  for (const auto& [tm, c] : q.terms()) {
    m.degree = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp[i] = std::min(m.exp[i], tm.exp[i]);
      m.degree += m.exp[i];
    }
  }
  return MultiPoly(q.ring(), Rational(1)).times_monomial(m, Rational(1));
}

MultiPoly gcd_impl(const MultiPoly& p, const MultiPoly& q) {
  const Ring& ring = p.ring();
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return MultiPoly(ring, Rational(1));
  if (p.size() == 1) return monomial_gcd(p, q);
  if (q.size() == 1) return monomial_gcd(q, p);
  if (p.monic() == q.monic()) return p.monic();

  const std::uint32_t mp = p.support_mask();
  const std::uint32_t mq = q.support_mask();
  // A variable present in only one argument cannot occur in the gcd.
  if (const std::uint32_t only_p = mp & ~mq) {
    return gcd_impl(content_wrt(p, static_cast<std::size_t>(std::countr_zero(only_p))), q);
  }
  if (const std::uint32_t only_q = mq & ~mp) {
    return gcd_impl(p, content_wrt(q, static_cast<std::size_t>(std::countr_zero(only_q))));
  }

  // Main variable: the shared one of least degree.
  std::size_t var = 0;
  unsigned best = ~0u;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!(mp & (1u << i))) continue;
    const unsigned d = std::max(p.degree_in(i), q.degree_in(i));
    if (d < best) {
      best = d;
      var = i;
    }
  }

  UPoly up = p.coefficients_in(var);
  UPoly uq = q.coefficients_in(var);
  const MultiPoly cp = content(up);
  const MultiPoly cq = content(uq);
  const MultiPoly cg = gcd_impl(cp, cq);
  if (!cp.is_one()) up = divide_coeffs(up, cp);
  if (!cq.is_one()) uq = divide_coeffs(uq, cq);
  const UPoly g = subresultant_gcd(std::move(up), std::move(uq));
  return (cg * MultiPoly::from_coefficients(ring, var, g)).monic();
}

}  // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.ring() == q.ring())) {
    throw UsageError("mismatched variable lists in gcd: " + p.ring().to_string() + " vs " +
                     q.ring().to_string());
  }
  if (p.is_zero() && q.is_zero()) throw UsageError("gcd of two zero polynomials");
  return gcd_impl(p, q);
}

}  // namespace braidalg::exact
