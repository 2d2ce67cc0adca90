#include "braidalg/ncalg/relations.hpp"

#include <algorithm>

#include "braidalg/errors.hpp"
#include "braidalg/exact/parse.hpp"

namespace braidalg::ncalg {

std::string to_string(Algebra alg) {
  switch (alg) {
    case Algebra::Braid: return "Braid";
    case Algebra::Hecke: return "Hecke";
    case Algebra::A: return "A";
    case Algebra::B: return "B";
    case Algebra::C: return "C";
  }
  return "?";
}

Algebra algebra_from_string(const std::string& name) {
  if (name == "Braid") return Algebra::Braid;
  if (name == "Hecke") return Algebra::Hecke;
  if (name == "A") return Algebra::A;
  if (name == "B") return Algebra::B;
  if (name == "C") return Algebra::C;
  throw UsageError("unknown algebra: " + name);
}

std::vector<std::string> required_params(Algebra alg) {
  switch (alg) {
    case Algebra::A: return {"a", "b", "c"};
    case Algebra::Hecke: return {"q"};
    default: return {};
  }
}

AlgebraParams parse_params(const std::map<std::string, std::string>& text) {
  std::vector<std::string> symbols;
  for (const auto& [name, expr] : text) {
    for (auto& s : exact::symbols_in(expr)) symbols.push_back(std::move(s));
  }
  const Ring ring = Ring::of(symbols);
  AlgebraParams out;
  for (const auto& [name, expr] : text) out.emplace(name, exact::parse_ratfunc(expr, ring));
  return out;
}

namespace {

// Builds relation elements for one adjacent pair (s, t) = (s_i, s_{i+1}).
struct Pair {
  NCPoly s, t, one;
  NCPoly sq(const NCPoly& p) const { return p * p; }
  NCPoly cube(const NCPoly& p) const { return p * p * p; }
  NCPoly fourth(const NCPoly& p) const { return sq(p) * sq(p); }
};

Pair make_pair(int n, const Ring& ring, int i) {
  return Pair{NCPoly::generator(n, ring, i), NCPoly::generator(n, ring, i + 1),
              NCPoly::scalar(n, ring, Rational(1))};
}

NCPoly braid_element(const Pair& p) { return p.s * p.t * p.s - p.t * p.s * p.t; }

// Written with s, t as the pair (s_i, s_{i+1}).
NCPoly aa1(const Pair& p) {
  return commutator(p.sq(p.s), p.t) - commutator(p.s, p.sq(p.t));
}
NCPoly aa2(const Pair& p, const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  return commutator(p.t * p.s, p.s + p.t) - a * (p.cube(p.s) - p.cube(p.t)) -
         b * (p.sq(p.s) - p.sq(p.t)) + c * (p.s - p.t);
}
NCPoly aa5(const Pair& p, const RatFunc& a, const RatFunc& b) {
  return a * (p.s * p.cube(p.t) - p.cube(p.s) * p.t) + b * (p.sq(p.t) * p.s - p.t * p.sq(p.s));
}
NCPoly aa3(const Pair& p, const RatFunc& a, const RatFunc& b) {
  return a * (p.cube(p.t) * p.s - p.t * p.cube(p.s)) + b * (p.sq(p.t) * p.s - p.t * p.sq(p.s));
}
NCPoly aa4(const Pair& p, const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  return (a * a) * (p.fourth(p.t) * p.s - p.t * p.fourth(p.s)) -
         (b * b + a * c) * (p.sq(p.t) * p.s - p.t * p.sq(p.s));
}

NCPoly bb2(const Pair& p) {
  return p.sq(p.s) * p.t - p.s * p.sq(p.t) - (p.sq(p.s) - p.sq(p.t) + p.t - p.s);
}
NCPoly bb3(const Pair& p) {
  return p.cube(p.t) * p.s - p.t * p.cube(p.s) -
         (p.sq(p.t) * p.s - p.t * p.sq(p.s) + p.cube(p.t) - p.cube(p.s) - p.sq(p.t) + p.sq(p.s));
}
NCPoly bb4(const Pair& p) {
  return p.fourth(p.t) * p.s - p.t * p.fourth(p.s) -
         (p.sq(p.t) * p.s - p.t * p.sq(p.s) + p.fourth(p.t) - p.fourth(p.s) - p.sq(p.t) + p.sq(p.s));
}

NCPoly cc2(const Pair& p) {
  return p.sq(p.t) * p.s - p.t * p.sq(p.s) - (p.sq(p.t) - p.sq(p.s) + p.s - p.t);
}
NCPoly cc3(const Pair& p) {
  return p.cube(p.s) * p.t - p.s * p.cube(p.t) -
         (p.sq(p.s) * p.t - p.s * p.sq(p.t) + p.cube(p.s) - p.cube(p.t) - p.sq(p.s) + p.sq(p.t));
}
NCPoly cc4(const Pair& p) {
  return p.fourth(p.s) * p.t - p.s * p.fourth(p.t) -
         (p.sq(p.s) * p.t - p.s * p.sq(p.t) + p.fourth(p.s) - p.fourth(p.t) - p.sq(p.s) + p.sq(p.t));
}

std::string at(const std::string& name, int i) { return name + "[i=" + std::to_string(i) + "]"; }

}  // namespace

RelationSet relations_for(Algebra alg, int n, const AlgebraParams& params) {
  if (n < 2) throw UsageError("relations need n >= 2, got " + std::to_string(n));
  const auto required = required_params(alg);
  for (const auto& name : required) {
    if (!params.count(name)) throw UsageError("algebra " + to_string(alg) + " needs parameter " + name);
  }
  for (const auto& [name, value] : params) {
    if (std::find(required.begin(), required.end(), name) == required.end()) {
      throw UsageError("algebra " + to_string(alg) + " takes no parameter " + name);
    }
  }

  Ring ring;
  for (const auto& [name, value] : params) ring = Ring::join(ring, value.ring());
  AlgebraParams embedded;
  for (const auto& [name, value] : params) embedded.emplace(name, value.embed(ring));

  RelationSet set{alg, n, embedded, ring, {}};
  auto& out = set.elements;

  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back({"com[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     commutator(NCPoly::generator(n, ring, i), NCPoly::generator(n, ring, j))});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    const Pair p = make_pair(n, ring, i);
    switch (alg) {
      case Algebra::Braid:
      case Algebra::Hecke:
        out.push_back({at("braid", i), braid_element(p)});
        break;
      case Algebra::A: {
        const RatFunc& a = embedded.at("a");
        const RatFunc& b = embedded.at("b");
        const RatFunc& c = embedded.at("c");
        out.push_back({at("aa1", i), aa1(p)});
        out.push_back({at("aa2", i), aa2(p, a, b, c)});
        out.push_back({at("aa5", i), aa5(p, a, b)});
        out.push_back({at("aa3", i), aa3(p, a, b)});
        out.push_back({at("aa4", i), aa4(p, a, b, c)});
        break;
      }
      case Algebra::B:
        out.push_back({at("braid", i), braid_element(p)});
        out.push_back({at("bb2", i), bb2(p)});
        out.push_back({at("bb3", i), bb3(p)});
        out.push_back({at("bb4", i), bb4(p)});
        break;
      case Algebra::C:
        out.push_back({at("braid", i), braid_element(p)});
        out.push_back({at("cc2", i), cc2(p)});
        out.push_back({at("cc3", i), cc3(p)});
        out.push_back({at("cc4", i), cc4(p)});
        break;
    }
  }
  if (alg == Algebra::Hecke) {
    const RatFunc& q = embedded.at("q");
    const NCPoly one = NCPoly::scalar(n, ring, Rational(1));
    for (int i = 1; i <= n - 1; ++i) {
      const NCPoly s = NCPoly::generator(n, ring, i);
      out.push_back({at("hecke", i), (s - one) * (s - one.scaled(q))});
    }
  }
  return set;
}

SymbolicA3 symbolic_A3() {
  const Ring ring = Ring::of({"a", "b", "c"});
  const RatFunc a = RatFunc::variable(ring, "a");
  const RatFunc b = RatFunc::variable(ring, "b");
  const RatFunc c = RatFunc::variable(ring, "c");
  const Pair p = make_pair(3, ring, 1);
  return SymbolicA3{ring, aa1(p), aa2(p, a, b, c), aa3(p, a, b), aa4(p, a, b, c), aa5(p, a, b)};
}

std::string to_string(Prop1Term t) {
  switch (t) {
    case Prop1Term::Aa3Scaled: return "(a-2)*aa3";
    case Prop1Term::Aa2Commutator: return "a*[s1-s2, aa2]";
    case Prop1Term::Aa1Left: return "a*(2s1+s2)*aa1";
    case Prop1Term::Aa1Right: return "a*aa1*(s1+2s2)";
    case Prop1Term::Aa1Scalar: return "a*b*aa1";
  }
  return "?";
}

Prop1Result prop1_certificate(std::optional<Prop1Term> drop) {
  const SymbolicA3 rel = symbolic_A3();
  const Ring& ring = rel.ring;
  const RatFunc a = RatFunc::variable(ring, "a");
  const RatFunc b = RatFunc::variable(ring, "b");
  const RatFunc two(ring, Rational(2));
  const NCPoly s1 = NCPoly::generator(3, ring, 1);
  const NCPoly s2 = NCPoly::generator(3, ring, 2);
  const NCPoly two_s1 = s1.scaled(two);
  const NCPoly two_s2 = s2.scaled(two);

  // aa1 is stored as printed (LHS - RHS); the combination that cancels
  // against (a-2)*aa5 carries the opposite sign on the three aa1 terms.
  std::map<Prop1Term, NCPoly> terms;
  terms.emplace(Prop1Term::Aa3Scaled, rel.aa3.scaled(a - two));
  terms.emplace(Prop1Term::Aa2Commutator, commutator(s1 - s2, rel.aa2).scaled(a));
  terms.emplace(Prop1Term::Aa1Left, ((two_s1 + s2) * rel.aa1).scaled(a));
  terms.emplace(Prop1Term::Aa1Right, (rel.aa1 * (s1 + two_s2)).scaled(a));
  terms.emplace(Prop1Term::Aa1Scalar, rel.aa1.scaled(a * b));

  NCPoly combination(3, ring);
  for (const auto& [which, element] : terms) {
    if (drop && *drop == which) continue;
    combination += element;
  }
  NCPoly target = rel.aa5.scaled(a - two);
  NCPoly residual = combination - target;
  const bool pass = residual.is_zero();
  return Prop1Result{std::move(combination), std::move(target), std::move(residual), pass};
}

}  // namespace braidalg::ncalg
