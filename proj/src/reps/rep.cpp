#include "braidalg/reps/rep.hpp"

#include <algorithm>

#include "braidalg/errors.hpp"
#include "braidalg/exact/parse.hpp"

namespace braidalg::reps {

using ncalg::NCPoly;
using ncalg::Word;

std::string Rep::field() const {
  if (ring.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < ring.size(); ++i) s += (i ? "," : "") + ring.name(i);
  return s + ")";
}

Rep Rep::embed(const Ring& target) const {
  Rep r = *this;
  r.ring = target;
  for (auto& g : r.gens) g = g.map([&](const RatFunc& e) { return e.embed(target); });
  return r;
}

Rep Rep::specialize(const std::map<std::string, Rational>& values) const {
  Rep r = *this;
  for (auto& g : r.gens) g = g.map([&](const RatFunc& e) { return e.specialize(values); });
  return r;
}

Rep make_rep(std::string name, std::vector<RMatrix> gens) {
  if (gens.empty()) throw UsageError("a representation needs at least one generator");
  Rep r;
  r.name = std::move(name);
  r.n = static_cast<int>(gens.size()) + 1;
  r.dim = gens.front().rows();
  r.ring = gens.front()(0, 0).ring();
  for (const auto& g : gens) {
    if (!g.square() || g.rows() != r.dim) {
      throw UsageError("generator matrices must all be square of size " + std::to_string(r.dim));
    }
    for (const auto& e : g.entries()) {
      if (!(e.ring() == r.ring)) throw UsageError("generator entries live in different fields");
    }
  }
  r.gens = std::move(gens);
  return r;
}

namespace {

// Parses parameter expressions; absent parameters default to their own name.
std::map<std::string, RatFunc> resolve(const RepParams& given, const std::vector<std::string>& names,
                                       const std::string& rep) {
  for (const auto& [k, v] : given) {
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      throw UsageError("representation " + rep + " takes no parameter " + k);
    }
  }
  std::map<std::string, std::string> text;
  for (const auto& n : names) {
    auto it = given.find(n);
    text[n] = it == given.end() ? n : it->second;
  }
  std::vector<std::string> symbols;
  for (const auto& [k, e] : text) {
    for (auto& s : exact::symbols_in(e)) symbols.push_back(std::move(s));
  }
  const Ring ring = Ring::of(symbols);
  std::map<std::string, RatFunc> out;
  for (const auto& [k, e] : text) out.emplace(k, exact::parse_ratfunc(e, ring));
  return out;
}

RMatrix mat2(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d) {
  return RMatrix(2, 2, std::vector<RatFunc>{a, b, c, d});
}

Rep hecke3(const RatFunc& q, const std::string& name, bool negate) {
  const RatFunc o = q.zero_like(), one = q.one_like();
  RMatrix s1(4, 4, std::vector<RatFunc>{q, o, o, o,
                                        o, q + one, -one, o,
                                        o, q, o, o,
                                        o, o, o, q});
  RMatrix s2(4, 4, std::vector<RatFunc>{q, o, o, o,
                                        o, one, o, o,
                                        o, one, q, o,
                                        o, o, o, q});
  if (negate) {
    s1 = -s1;
    s2 = -s2;
  }
  return make_rep(name, {s1, s2});
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"A3_2dim", "B3_2dim", "B3_2dim_printed", "C3_2dim", "B3_only", "Hecke3_std", "Hecke3_neg", "scalar"};
}

Rep builtin_rep(const std::string& name, const RepParams& params) {
  if (name == "A3_2dim") {
    const auto p = resolve(params, {"c", "mu"}, name);
    const RatFunc& c = p.at("c");
    const RatFunc& mu = p.at("mu");
    const RatFunc o = c.zero_like(), one = c.one_like();
    return make_rep(name, {mat2(o, c, o, o), mat2(mu, -(mu * mu), one, -mu)});
  }
  if (name == "B3_2dim" || name == "B3_2dim_printed" || name == "C3_2dim") {
    const auto p = resolve(params, {"nu", "mu"}, name);
    const RatFunc& nu = p.at("nu");
    const RatFunc& mu = p.at("mu");
    const RatFunc o = nu.zero_like(), one = nu.one_like();
    // The printed upper-right entry -nu of s2 breaks the braid relation
    // unless mu = nu; -mu is the entry that makes both parameters free.
    const RatFunc corner = name == "B3_2dim_printed" ? -nu : -mu;
    Rep b = make_rep(name, {mat2(nu * mu, o, nu, one), mat2(one, corner, o, nu * mu)});
    if (name == "C3_2dim") {
      b = flip_rep(b);
      b.name = name;
    }
    return b;
  }
  if (name == "B3_only") {
    resolve(params, {}, name);
    const Ring r;
    const RatFunc o(r), one(r, Rational(1));
    return make_rep(name, {mat2(o, o, o, one), mat2(o, o, one, o)});
  }
  if (name == "Hecke3_std" || name == "Hecke3_neg") {
    const auto p = resolve(params, {"q"}, name);
    return hecke3(p.at("q"), name, name == "Hecke3_neg");
  }
  if (name == "scalar") {
    RepParams rest = params;
    int n = 3;
    if (auto it = rest.find("n"); it != rest.end()) {
      const Rational nv = Rational::parse(it->second);
      if (!nv.is_integer() || nv < Rational(2) || nv > Rational(64)) throw UsageError("scalar rep needs 2 <= n <= 64");
      n = static_cast<int>(nv.numerator().get_si());
      rest.erase(it);
    }
    if (auto it = rest.find("values"); it != rest.end()) {
      if (rest.size() != 1) throw UsageError("scalar rep takes either lambda or values");
      std::vector<std::string> parts;
      std::string cur;
      for (char ch : it->second + ",") {
        if (ch == ',') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      std::vector<std::string> symbols;
      for (const auto& s : parts) {
        for (auto& v : exact::symbols_in(s)) symbols.push_back(std::move(v));
      }
      const Ring ring = Ring::of(symbols);
      std::vector<RatFunc> values;
      for (const auto& s : parts) values.push_back(exact::parse_ratfunc(s, ring));
      Rep r = scalar_rep(values);
      r.name = name;
      return r;
    }
    const auto p = resolve(rest, {"lambda"}, name);
    Rep r = scalar_rep(std::vector<RatFunc>(static_cast<std::size_t>(n - 1), p.at("lambda")));
    r.name = name;
    return r;
  }
  throw UsageError("unknown representation: " + name);
}

Rep chain_rep(const RMatrix& two_site, std::size_t d, int n, std::string name) {
  if (two_site.rows() != d * d || !two_site.square()) {
    throw UsageError("two-site operator must be " + std::to_string(d * d) + "x" + std::to_string(d * d));
  }
  const RatFunc& proto = two_site(0, 0);
  std::vector<RMatrix> gens;
  for (int i = 1; i <= n - 1; ++i) {
    std::size_t left = 1, right = 1;
    for (int k = 1; k < i; ++k) left *= d;
    for (int k = i + 2; k <= n; ++k) right *= d;
    gens.push_back(RMatrix::identity(left, proto).kron(two_site).kron(RMatrix::identity(right, proto)));
  }
  return make_rep(std::move(name), std::move(gens));
}

Rep scalar_rep(const std::vector<RatFunc>& values) {
  std::vector<RMatrix> gens;
  for (const auto& v : values) gens.emplace_back(1, 1, std::vector<RatFunc>{v});
  return make_rep("scalar", std::move(gens));
}

Rep flip_rep(const Rep& rep) {
  Rep r = rep;
  std::reverse(r.gens.begin(), r.gens.end());
  r.name = "flip(" + rep.name + ")";
  return r;
}

RMatrix evaluate(const NCPoly& p, const Rep& rep) {
  if (p.strands() != rep.n) {
    throw UsageError("relation on " + std::to_string(p.strands()) + " strands applied to a rep with n=" +
                     std::to_string(rep.n));
  }
  const Ring ring = Ring::join(rep.ring, p.ring());
  const Rep r = rep.embed(ring);
  const RatFunc proto(ring);
  std::map<Word, RMatrix, ncalg::WordOrder> cache;
  cache.emplace(Word{}, RMatrix::identity(r.dim, proto));
  const auto word_matrix = [&](const Word& w) -> const RMatrix& {
    for (std::size_t len = 1; len <= w.size(); ++len) {
      Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
      if (cache.count(prefix)) continue;
      Word shorter(prefix.begin(), prefix.end() - 1);
      cache.emplace(prefix, cache.at(shorter) * r.gen(prefix.back()));
    }
    return cache.at(w);
  };
  RMatrix sum(r.dim, r.dim, proto);
  for (const auto& [w, c] : p.terms()) sum += c.embed(ring) * word_matrix(w);
  return sum;
}

namespace {

verify::Residual residual_of(const std::string& label, const RMatrix& m) {
  verify::Residual res;
  res.label = label;
  for (const auto& e : m.entries()) {
    if (e.is_zero()) continue;
    ++res.nonzero_entries;
    res.max_terms = std::max(res.max_terms, e.num().size());
  }
  return res;
}

}  // namespace

verify::VerifyReport check_relations(const Rep& rep, const RelationSet& rels) {
  if (rels.n != rep.n) {
    throw UsageError("relation set for n=" + std::to_string(rels.n) + " but rep has n=" + std::to_string(rep.n));
  }
  verify::VerifyReport report;
  report.check = "relations " + ncalg::to_string(rels.algebra) + " on " + rep.name;
  for (const auto& rel : rels.elements) report.residuals.push_back(residual_of(rel.label, evaluate(rel.element, rep)));
  report.finalize();
  return report;
}

void require_relations(const Rep& rep, const RelationSet& rels, const std::string& what) {
  const auto report = check_relations(rep, rels);
  if (report.passed()) return;
  std::string failed;
  for (const auto& r : report.residuals) {
    if (r.nonzero_entries) failed += (failed.empty() ? "" : ", ") + r.label;
  }
  throw PreconditionError(what + ": " + rep.name + " fails " + ncalg::to_string(rels.algebra) +
                          " relations (" + failed + ")");
}

// Scalar representations.

bool ScalarRepClass::matches(const std::vector<Rational>& assignment) const {
  switch (kind) {
    case Kind::Unconstrained:
      return true;
    case Kind::Uniform:
      return std::all_of(assignment.begin(), assignment.end(), [&](const Rational& v) { return v == assignment.front(); });
    case Kind::Pattern:
      return std::all_of(assignment.begin(), assignment.end(), [&](const Rational& v) {
        return std::find(values.begin(), values.end(), v) != values.end();
      });
  }
  return false;
}

std::string ScalarRepClass::describe() const {
  switch (kind) {
    case Kind::Unconstrained: return "unconstrained";
    case Kind::Uniform: return "uniform lambda";
    case Kind::Pattern: {
      std::string s = "pattern {";
      for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", " : "") + values[k].to_string();
      if (!symbolic.empty()) s += ", " + symbolic;
      return s + "}";
    }
  }
  return "?";
}

namespace {

Rational param(const std::map<std::string, Rational>& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw UsageError("scalar classification needs numeric parameter " + name);
  return it->second;
}

}  // namespace

std::vector<ScalarRepClass> classify_scalar(Algebra alg, const std::map<std::string, Rational>& params) {
  using K = ScalarRepClass::Kind;
  if (alg == Algebra::B || alg == Algebra::C) {
    if (!params.empty()) throw UsageError("algebra " + ncalg::to_string(alg) + " takes no parameters");
    return {{K::Uniform, {}, ""}, {K::Pattern, {Rational(0), Rational(1)}, ""}};
  }
  if (alg != Algebra::A) throw UsageError("scalar classification covers the A, B and C algebras");
  const Rational a = param(params, "a"), b = param(params, "b"), c = param(params, "c");
  if (!a.is_zero()) {
    // Nonzero values are the roots of a l^2 + b l - c.
    const Rational disc = b * b + Rational(4) * a * c;
    Rational root;
    if (disc.exact_sqrt(root)) {
      std::vector<Rational> vals{Rational(0)};
      for (const Rational& r : {(-b - root) / (Rational(2) * a), (-b + root) / (Rational(2) * a)}) {
        if (std::find(vals.begin(), vals.end(), r) == vals.end()) vals.push_back(r);
      }
      std::sort(vals.begin(), vals.end());
      return {{K::Uniform, {}, ""}, {K::Pattern, vals, ""}};
    }
    return {{K::Uniform, {}, ""},
            {K::Pattern, {Rational(0)}, "roots of " + a.to_string() + "*l^2 + " + b.to_string() + "*l - " + c.to_string()}};
  }
  if (!b.is_zero()) {
    std::vector<Rational> vals{Rational(0)};
    if (!c.is_zero()) vals.push_back(c / b);
    std::sort(vals.begin(), vals.end());
    return {{K::Uniform, {}, ""}, {K::Pattern, vals, ""}};
  }
  if (!c.is_zero()) return {{K::Uniform, {}, ""}};
  return {{K::Unconstrained, {}, ""}};
}

AlgebraParams numeric_params(const std::map<std::string, Rational>& params) {
  AlgebraParams out;
  for (const auto& [k, v] : params) out.emplace(k, RatFunc(Ring(), v));
  return out;
}

bool verify_scalar(const std::vector<Rational>& assignment, Algebra alg, const std::map<std::string, Rational>& params) {
  if (assignment.empty()) throw UsageError("scalar assignment needs at least one value");
  std::vector<RatFunc> values;
  for (const auto& v : assignment) values.emplace_back(Ring(), v);
  const Rep rep = scalar_rep(values);
  return check_relations(rep, ncalg::relations_for(alg, rep.n, numeric_params(params))).passed();
}

// Correspondences.

Correspondence correspondence_from_string(const std::string& s) {
  if (s == "hecke_in_A") return Correspondence::HeckeInA;
  if (s == "braid_coset_to_A") return Correspondence::BraidCosetToA;
  if (s == "B_to_A_shift") return Correspondence::BToAShift;
  throw UsageError("unknown correspondence: " + s);
}

std::string to_string(Correspondence c) {
  switch (c) {
    case Correspondence::HeckeInA: return "hecke_in_A";
    case Correspondence::BraidCosetToA: return "braid_coset_to_A";
    case Correspondence::BToAShift: return "B_to_A_shift";
  }
  return "?";
}

std::vector<ncalg::Relation> braid_coset_relations(int n, const RatFunc& b) {
  const Ring& ring = b.ring();
  std::vector<ncalg::Relation> out;
  for (int i = 1; i <= n - 2; ++i) {
    const NCPoly s = NCPoly::generator(n, ring, i), t = NCPoly::generator(n, ring, i + 1);
    const RatFunc b2 = b * b;
    out.push_back({"coset1[i=" + std::to_string(i) + "]",
                   t * t * s - t * s * s - b2 * (s - t) + b * (s * s - t * t)});
    out.push_back({"coset2[i=" + std::to_string(i) + "]",
                   s * s * t - s * t * t - b2 * (t - s) + b * (t * t - s * s)});
  }
  return out;
}

std::vector<ncalg::Relation> b_shift_relations(int n) {
  const Ring ring;
  std::vector<ncalg::Relation> out;
  for (int i = 1; i <= n - 2; ++i) {
    const NCPoly s = NCPoly::generator(n, ring, i), t = NCPoly::generator(n, ring, i + 1);
    out.push_back({"shift[i=" + std::to_string(i) + "]", t * s * s - t * t * s - (s * s - t * t + t - s)});
  }
  return out;
}

namespace {

RelationSet a_params(int n, const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  return ncalg::relations_for(Algebra::A, n, {{"a", a}, {"b", b}, {"c", c}});
}

// Applies s -> scale * (s - shift) to every generator.
Rep affine(const Rep& rep, const RatFunc& scale, const RatFunc& shift, const std::string& name) {
  const Ring ring = Ring::join(rep.ring, scale.ring());
  Rep r = rep.embed(ring);
  const RatFunc sc = scale.embed(ring), sh = shift.embed(ring);
  const RMatrix id = RMatrix::identity(r.dim, RatFunc(ring));
  for (auto& g : r.gens) g = sc * (g - sh * id);
  r.name = name;
  return r;
}

bool passes(const Rep& rep, const std::vector<ncalg::Relation>& rels) {
  for (const auto& r : rels) {
    if (!evaluate(r.element, rep).is_zero()) return false;
  }
  return true;
}

}  // namespace

verify::VerifyReport correspondence_check(Correspondence kind, const Rep& rep, const RatFunc& scalar) {
  const RatFunc zero = scalar.zero_like(), one = scalar.one_like();
  verify::VerifyReport report;
  switch (kind) {
    case Correspondence::HeckeInA: {
      require_relations(rep, ncalg::relations_for(Algebra::Hecke, rep.n, {{"q", scalar}}), "hecke_in_A");
      report = check_relations(rep, a_params(rep.n, zero, zero, -scalar));
      break;
    }
    case Correspondence::BraidCosetToA: {
      if (scalar.is_zero()) throw UsageError("braid_coset_to_A needs b != 0");
      require_relations(rep, ncalg::relations_for(Algebra::Braid, rep.n), "braid_coset_to_A");
      for (const auto& r : braid_coset_relations(rep.n, scalar)) {
        if (!evaluate(r.element, rep).is_zero()) {
          throw PreconditionError("braid_coset_to_A: " + rep.name + " fails " + r.label);
        }
      }
      const Rep sigma = affine(rep, one, scalar, rep.name + " - b");
      report = check_relations(sigma, a_params(rep.n, zero, scalar, -(scalar * scalar)));
      break;
    }
    case Correspondence::BToAShift: {
      if (scalar.is_zero()) throw UsageError("B_to_A_shift needs b != 0 (the map divides by b)");
      require_relations(rep, ncalg::relations_for(Algebra::B, rep.n), "B_to_A_shift");
      const bool extra = passes(rep, b_shift_relations(rep.n));
      const Rep sigma = affine(rep, scalar, one, "b*(" + rep.name + " - 1)");
      report = check_relations(sigma, a_params(rep.n, zero, scalar, -(scalar * scalar)));
      report.notes.push_back(std::string("extra relation of the shift holds: ") + (extra ? "yes" : "no"));
      // Inverse direction: s -> s/b + 1 returns the B rep.
      const Rep back = affine(sigma, scalar.inverse(), -scalar, "back");
      report.notes.push_back(std::string("inverse map recovers the B rep: ") +
                             (back.gens == rep.embed(back.ring).gens ? "yes" : "no"));
      break;
    }
  }
  report.check = "correspondence " + to_string(kind) + " on " + rep.name;
  return report;
}

}  // namespace braidalg::reps
