#include "braidalg/baxter/baxter.hpp"

#include "braidalg/errors.hpp"

namespace braidalg::baxter {

SpectralFn SpectralFn::case_i(const Rational& alpha1, const Rational& alpha2, const Rational& b, const Rational& c) {
  const Rational d = alpha1 - alpha2;
  if (d != Rational(1) && d != Rational(-1)) {
    throw UsageError("case (i) needs alpha1 - alpha2 = +1 or -1, got " + d.to_string());
  }
  SpectralFn fn(Case::I);
  fn.alpha1_ = alpha1;
  fn.alpha2_ = alpha2;
  fn.b_ = b;
  fn.c_ = c;
  return fn;
}

std::string SpectralFn::label() const {
  switch (kind_) {
    case Case::I:
      return "i(alpha1=" + alpha1_.to_string() + ",alpha2=" + alpha2_.to_string() + ",b=" + b_.to_string() +
             ",c=" + c_.to_string() + ")";
    case Case::II: return "ii";
    case Case::III: return "iii";
    case Case::HeckeRatio: return "hecke";
  }
  return "?";
}

nlohmann::ordered_json SpectralFn::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Case::I:
      j["case"] = "i";
      j["alpha1"] = alpha1_.to_string();
      j["alpha2"] = alpha2_.to_string();
      j["b"] = b_.to_string();
      j["c"] = c_.to_string();
      break;
    case Case::II: j["case"] = "ii"; break;
    case Case::III: j["case"] = "iii"; break;
    case Case::HeckeRatio: j["case"] = "hecke"; break;
  }
  return j;
}

SpectralFn SpectralFn::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("case") || !j["case"].is_string()) {
    throw UsageError("spectral function needs a \"case\" string");
  }
  const std::string c = j["case"].get<std::string>();
  const auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : j.items()) {
      bool ok = k == "case";
      for (const char* key : keys) ok = ok || k == key;
      if (!ok) throw UsageError("unknown field in spectral function: " + k);
    }
  };
  if (c == "i") {
    only({"alpha1", "alpha2", "b", "c"});
    const auto scalar = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_string()) throw UsageError(std::string("case (i) needs string field ") + key);
      return Rational::parse(j[key].get<std::string>());
    };
    return case_i(scalar("alpha1"), scalar("alpha2"), scalar("b"), scalar("c"));
  }
  only({});
  if (c == "ii") return case_ii();
  if (c == "iii") return case_iii();
  if (c == "hecke") return hecke_ratio();
  throw UsageError("unknown spectral case: " + c);
}

RatFunc SpectralFn::eval(const Ring& ring, std::string_view u, std::string_view v) const {
  if (u == v) throw UsageError("f needs two distinct variables");
  const RatFunc U = RatFunc::variable(ring, u), V = RatFunc::variable(ring, v);
  const RatFunc one(ring, Rational(1));
  switch (kind_) {
    case Case::I:
      return (U.scaled(alpha1_) + V.scaled(alpha2_) + (U * V).scaled(b_)) / (one + (U * V).scaled(c_));
    case Case::II: return (one + V) * U / (one + U);
    case Case::III: return (one + U) * V / (one + V);
    case Case::HeckeRatio: return U / V;
  }
  throw std::logic_error("unhandled spectral case");
}

Rational SpectralFn::eval(const Rational& u, const Rational& v) const {
  const auto div = [](const Rational& n, const Rational& d) {
    if (d.is_zero()) throw MathError("pole");
    return n / d;
  };
  const Rational one(1);
  switch (kind_) {
    case Case::I: return div(alpha1_ * u + alpha2_ * v + b_ * u * v, one + c_ * u * v);
    case Case::II: return div((one + v) * u, one + u);
    case Case::III: return div((one + u) * v, one + v);
    case Case::HeckeRatio: return div(u, v);
  }
  throw std::logic_error("unhandled spectral case");
}

RatFunc f_eval(const SpectralFn& fn, const Ring& ring, std::string_view u, std::string_view v) {
  return fn.eval(ring, u, v);
}

bool RMatrixSym::invariant_holds() const {
  const RMatrix id = RMatrix::identity(value.rows(), fxy);
  return value * (id - fyx * sigma) == id - fxy * sigma;
}

Ring working_ring(const Rep& rep, std::initializer_list<std::string> vars) {
  for (const auto& v : vars) {
    if (rep.ring.contains(v)) throw UsageError("representation symbol " + v + " clashes with a spectral variable");
  }
  return rep.ring.with(std::vector<std::string>(vars));
}

RMatrixSym build_R_in(const Ring& ring, const Rep& rep, int site, const SpectralFn& fn, const std::string& x,
                      const std::string& y) {
  if (site < 1 || site >= rep.n) throw UsageError("site " + std::to_string(site) + " out of range");
  RMatrixSym R;
  R.site = site;
  R.x = x;
  R.y = y;
  R.sigma = rep.embed(ring).gen(site);
  R.fxy = fn.eval(ring, x, y);
  R.fyx = fn.eval(ring, y, x);
  const RMatrix id = RMatrix::identity(rep.dim, R.fxy);
  const RMatrix denom = id - R.fyx * R.sigma;
  RMatrix inv;
  try {
    inv = denom.inverse();
  } catch (const MathError&) {
    throw MathError("singular: det(I - f(" + y + "," + x + ")*s" + std::to_string(site) + ") vanishes identically");
  }
  R.value = (id - R.fxy * R.sigma) * inv;
  return R;
}

RMatrixSym build_R(const Rep& rep, int site, const SpectralFn& fn, const std::string& x, const std::string& y) {
  return build_R_in(working_ring(rep, {x, y}), rep, site, fn, x, y);
}

QMatrix R_numeric(const QMatrix& sigma, const SpectralFn& fn, const Rational& x, const Rational& y) {
  const Rational fxy = fn.eval(x, y), fyx = fn.eval(y, x);
  const QMatrix id = QMatrix::identity(sigma.rows(), Rational());
  return (id - fxy * sigma) * (id - fyx * sigma).inverse();
}

bool check_regularity(const RMatrixSym& R) {
  const RatFunc xv = RatFunc::variable(R.fxy.ring(), R.x);
  const RMatrix at_diag = R.value.map([&](const RatFunc& e) { return e.substitute(R.y, xv); });
  return at_diag.is_identity();
}

bool check_unitarity(const Rep& rep, int site, const SpectralFn& fn) {
  const Ring ring = working_ring(rep, {"x", "y"});
  const RMatrixSym a = build_R_in(ring, rep, site, fn, "x", "y");
  const RMatrixSym b = build_R_in(ring, rep, site, fn, "y", "x");
  return (a.value * b.value).is_identity();
}

RMatrix H_closed_in(const Ring& ring, const Rep& rep, int site, const std::string& z) {
  const RMatrix s = rep.embed(ring).gen(site);
  const RatFunc zv = RatFunc::variable(ring, z);
  const RMatrix id = RMatrix::identity(rep.dim, zv);
  return s * (id - zv * s).inverse();
}

RMatrix H_closed(const Rep& rep, int site, const std::string& z) {
  return H_closed_in(working_ring(rep, {z}), rep, site, z);
}

RMatrix H_series(const Rep& rep, int site, const std::string& z, unsigned order) {
  const Ring ring = working_ring(rep, {z});
  const RMatrix s = rep.embed(ring).gen(site);
  const RatFunc zv = RatFunc::variable(ring, z);
  RMatrix power = s;
  RMatrix sum = s;
  RatFunc zl = zv.one_like();
  for (unsigned l = 1; l <= order; ++l) {
    power = power * s;
    zl = zl * zv;
    sum += zl * power;
  }
  return sum;
}

RatFunc h_fun(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& z) {
  if (a.is_zero()) throw PreconditionError("h undefined, Lemma requires a≠0");
  return a / (c * z * z - b * z - a);
}

RatFunc h_fun(const Rational& a, const Rational& b, const Rational& c, const Ring& ring, const std::string& z) {
  return h_fun(RatFunc(ring, a), RatFunc(ring, b), RatFunc(ring, c), RatFunc::variable(ring, z));
}

long min_valuation(const RMatrix& m, const std::string& z) {
  long best = -1;
  for (const auto& e : m.entries()) {
    if (e.is_zero()) continue;
    const auto idx = e.ring().index_of(z);
    const long val = idx ? static_cast<long>(e.num().valuation_in(*idx)) : 0;
    if (best < 0 || val < best) best = val;
  }
  return best;
}

}  // namespace braidalg::baxter
