#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "braidalg/exact/ratfunc.hpp"

namespace braidalg::ncalg {

using exact::RatFunc;
using exact::Rational;
using exact::Ring;

/// A word in the generators s_1..s_{n-1}; the empty word is the identity.
using Word = std::vector<std::uint8_t>;

/// Length first, then lexicographic on indices.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// "1.2.2" for s1 s2 s2, "" for the identity.
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& text);

/// Element of the free associative algebra on s_1..s_{n-1} with rational
/// function coefficients over `ring`.
class NCPoly {
 public:
  using TermMap = std::map<Word, RatFunc, WordOrder>;

  NCPoly(int n, Ring ring);
  static NCPoly generator(int n, const Ring& ring, int i);
  static NCPoly scalar(int n, const RatFunc& c);
  static NCPoly scalar(int n, const Ring& ring, const Rational& c);
  static NCPoly monomial(int n, Word w, const RatFunc& c);

  int strands() const { return n_; }
  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatFunc coefficient(const Word& w) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const RatFunc& c, const NCPoly& p) { return p.scaled(c); }
  NCPoly scaled(const RatFunc& c) const;
  NCPoly pow(unsigned e) const;

  /// Replaces coefficient symbols by rational values; the ring is kept.
  NCPoly specialize(const std::map<std::string, Rational>& values) const;
  NCPoly embed(const Ring& target) const;

  /// Deterministic list of (word, coefficient) strings in word order.
  std::vector<std::pair<std::string, std::string>> serialize() const;
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.to_string(); }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const NCPoly& o, const char* op) const;
  void add_term(const Word& w, const RatFunc& c);

  int n_;
  Ring ring_;
  TermMap terms_;
};

NCPoly commutator(const NCPoly& p, const NCPoly& q);

/// Letterwise index reversal j -> n - j; word order is preserved.
NCPoly flip(const NCPoly& p);

}  // namespace braidalg::ncalg
