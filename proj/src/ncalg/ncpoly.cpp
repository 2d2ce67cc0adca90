#include "braidalg/ncalg/ncpoly.hpp"

#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg::ncalg {

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(w[k]);
  }
  return out;
}

Word word_from_string(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3) {
      throw UsageError("malformed word: " + text);
    }
    const int i = std::stoi(part);
    if (i < 1 || i > 255) throw UsageError("generator index out of range in word: " + text);
    w.push_back(static_cast<std::uint8_t>(i));
  }
  return w;
}

NCPoly::NCPoly(int n, Ring ring) : n_(n), ring_(std::move(ring)) {
  if (n < 2 || n > 256) throw UsageError("strand count must be in 2..256, got " + std::to_string(n));
}

NCPoly NCPoly::generator(int n, const Ring& ring, int i) {
  return monomial(n, Word{static_cast<std::uint8_t>(i)}, RatFunc(ring, Rational(1)));
}

NCPoly NCPoly::scalar(int n, const RatFunc& c) { return monomial(n, Word{}, c); }

NCPoly NCPoly::scalar(int n, const Ring& ring, const Rational& c) {
  return monomial(n, Word{}, RatFunc(ring, c));
}

NCPoly NCPoly::monomial(int n, Word w, const RatFunc& c) {
  NCPoly p(n, c.ring());
  for (auto letter : w) {
    if (letter < 1 || letter >= n) {
      throw UsageError("generator index " + std::to_string(letter) + " out of range for n=" +
                       std::to_string(n));
    }
  }
  if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
  return p;
}

RatFunc NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc(ring_) : it->second;
}

void NCPoly::require_compatible(const NCPoly& o, const char* op) const {
  if (n_ != o.n_) {
    throw UsageError(std::string("mismatched strand counts in ") + op + ": " + std::to_string(n_) +
                     " vs " + std::to_string(o.n_));
  }
  if (!(ring_ == o.ring_)) {
    throw UsageError(std::string("mismatched coefficient rings in ") + op + ": " + ring_.to_string() +
                     " vs " + o.ring_.to_string());
  }
}

void NCPoly::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_compatible(o, "add");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_compatible(o, "sub");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.require_compatible(b, "mul");
  NCPoly r(a.n_, a.ring_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
  if (!(c.ring() == ring_)) throw UsageError("scalar ring " + c.ring().to_string() + " does not match " + ring_.to_string());
  NCPoly r(n_, ring_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

NCPoly NCPoly::pow(unsigned e) const {
  NCPoly r = scalar(n_, ring_, Rational(1));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

NCPoly NCPoly::specialize(const std::map<std::string, Rational>& values) const {
  NCPoly r(n_, ring_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.specialize(values));
  return r;
}

NCPoly NCPoly::embed(const Ring& target) const {
  NCPoly r(n_, target);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.embed(target));
  return r;
}

std::vector<std::pair<std::string, std::string>> NCPoly::serialize() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.emplace_back(word_to_string(w), c.to_string());
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      if (!word.empty()) word += '*';
      word += "s" + std::to_string(w[k]);
      if (run > 1) word += "^" + std::to_string(run);
      k += run;
    }
    if (word.empty()) {
      out += "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      out += word;
    } else {
      out += "(" + c.to_string() + ")*" + word;
    }
  }
  return out;
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

NCPoly flip(const NCPoly& p) {
  const int n = p.strands();
  NCPoly r(n, p.ring());
  for (const auto& [w, c] : p.terms()) {
    Word f = w;
    for (auto& letter : f) letter = static_cast<std::uint8_t>(n - letter);
    r += NCPoly::monomial(n, std::move(f), c);
  }
  return r;
}

}  // namespace braidalg::ncalg
