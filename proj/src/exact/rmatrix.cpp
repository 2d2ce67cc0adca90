#include <algorithm>

#include "braidalg/errors.hpp"
#include "braidalg/exact/ratfunc.hpp"

namespace braidalg::exact {

namespace {

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return (a * b.divide(gcd(a, b))).monic();
}

struct PolyRows {
  std::size_t n = 0, cols = 0;
  std::vector<MultiPoly> data;
  std::vector<MultiPoly> row_scale;  // row i was multiplied by row_scale[i]
  MultiPoly& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

// Clears denominators row by row; `extra` identity columns are appended.
PolyRows clear_rows(const Matrix<RatFunc>& m, std::size_t extra) {
  PolyRows p;
  p.n = m.rows();
  p.cols = m.cols() + extra;
  const Ring ring = m(0, 0).ring();
  p.data.assign(p.n * p.cols, MultiPoly(ring));
  for (std::size_t i = 0; i < p.n; ++i) {
    MultiPoly l(ring, Rational(1));
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m(i, j);
      if (!e.is_zero()) p.at(i, j) = e.num() * l.divide(e.den());
    }
    if (extra) p.at(i, m.cols() + i) = MultiPoly(ring, Rational(1));
    p.row_scale.push_back(std::move(l));
  }
  return p;
}

// Row with the sparsest nonzero entry in column k among rows k..n-1.
std::size_t pick_pivot(PolyRows& a, std::size_t k) {
  std::size_t best = a.n;
  for (std::size_t i = k; i < a.n; ++i) {
    const MultiPoly& e = a.at(i, k);
    if (e.is_zero()) continue;
    if (best == a.n || e.size() < a.at(best, k).size()) best = i;
  }
  return best;
}

void swap_poly_rows(PolyRows& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(s, j));
  std::swap(a.row_scale[r], a.row_scale[s]);
}

}  // namespace

template <>
RatFunc Matrix<RatFunc>::determinant() const {
  require_square("determinant");
  PolyRows a = clear_rows(*this, 0);
  const Ring ring = data_.front().ring();
  MultiPoly scale(ring, Rational(1));
  for (const auto& l : a.row_scale) scale *= l;
  MultiPoly prev(ring, Rational(1));
  bool negate = false;
  const std::size_t n = a.n;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t p = pick_pivot(a, k);
    if (p == n) return RatFunc(ring);
    if (p != k) {
      swap_poly_rows(a, k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = a.at(k, k) * a.at(i, j);
        if (!a.at(i, k).is_zero() && !a.at(k, j).is_zero()) v -= a.at(i, k) * a.at(k, j);
        a.at(i, j) = prev.is_one() ? std::move(v) : v.divide(prev);
      }
      a.at(i, k) = MultiPoly(ring);
    }
    prev = a.at(k, k);
  }
  MultiPoly det = a.at(n - 1, n - 1);
  if (negate) det = -det;
  return RatFunc(std::move(det), std::move(scale));
}

template <>
Matrix<RatFunc> Matrix<RatFunc>::inverse() const {
  require_square("inverse");
  const std::size_t n = rows_;
  const Ring ring = data_.front().ring();
  PolyRows a = clear_rows(*this, n);
  const std::vector<MultiPoly> col_scale = a.row_scale;
  MultiPoly prev(ring, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = pick_pivot(a, k);
    if (p == n) throw MathError("singular matrix: determinant is 0");
    swap_poly_rows(a, k, p);
    const MultiPoly pivot = a.at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const MultiPoly factor = a.at(i, k);
      for (std::size_t j = 0; j < a.cols; ++j) {
        if (j == k) continue;
        MultiPoly v = pivot * a.at(i, j);
        if (!factor.is_zero() && !a.at(k, j).is_zero()) v -= factor * a.at(k, j);
        a.at(i, j) = prev.is_one() ? std::move(v) : v.divide(prev);
      }
      a.at(i, k) = MultiPoly(ring);
    }
    prev = pivot;
  }
  // Row operations E turn [S A | I] into [prev I | E], so the right block is
  // prev (S A)^{-1} and A^{-1} = right * S / prev: column j picks up the
  // scale of original row j.
  Matrix<RatFunc> inv(n, n, RatFunc(ring));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const MultiPoly& e = a.at(i, n + j);
      if (!e.is_zero()) inv(i, j) = RatFunc(e * col_scale[j], prev);
    }
  }
  return inv;
}

}  // namespace braidalg::exact
