#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidalg/exact/exact.hpp"
#include "braidalg/ncalg/relations.hpp"
#include "braidalg/verify/report.hpp"
#include "json.hpp"

namespace braidalg::reps {

using exact::RatFunc;
using exact::Rational;
using exact::Ring;
using exact::RMatrix;
using ncalg::Algebra;
using ncalg::AlgebraParams;
using ncalg::RelationSet;

/// Generators s_1..s_{n-1} as d x d matrices over Q(ring).
struct Rep {
  std::string name;
  int n = 0;
  std::size_t dim = 0;
  Ring ring;
  std::vector<RMatrix> gens;  // gens[i-1] represents s_i

  const RMatrix& gen(int i) const { return gens.at(static_cast<std::size_t>(i - 1)); }
  /// "Q" or "Q(mu,nu)".
  std::string field() const;
  Rep embed(const Ring& target) const;
  Rep specialize(const std::map<std::string, Rational>& values) const;
};

/// Validates shapes and builds a rep; throws UsageError on inconsistent input.
Rep make_rep(std::string name, std::vector<RMatrix> gens);

/// Parameter values by name, each an expression string ("1/2", "mu").
/// Parameters left out stay symbolic under their own name.
using RepParams = std::map<std::string, std::string>;

std::vector<std::string> builtin_names();
/// Built-in families: A3_2dim(c, mu), B3_2dim(nu, mu), B3_2dim_printed(nu, mu),
/// C3_2dim(nu, mu), B3_only(), Hecke3_std(q), Hecke3_neg(q),
/// scalar(lambda | values, n).
Rep builtin_rep(const std::string& name, const RepParams& params = {});

/// s_i acts as `two_site` on tensor legs i, i+1 of (C^d)^{(x) n}.
Rep chain_rep(const RMatrix& two_site, std::size_t d, int n, std::string name = "chain");

/// Scalar rep with s_i = values[i-1].
Rep scalar_rep(const std::vector<RatFunc>& values);

/// Generator j reassigned to n - j.
Rep flip_rep(const Rep& rep);

/// Evaluates an NCPoly at the generators; coefficient symbols are joined
/// with the rep's symbols.
RMatrix evaluate(const ncalg::NCPoly& p, const Rep& rep);

/// Per-element exact check of a relation set.
verify::VerifyReport check_relations(const Rep& rep, const RelationSet& rels);

/// Throws PreconditionError listing failed labels unless rep passes rels.
void require_relations(const Rep& rep, const RelationSet& rels, const std::string& what);

// Scalar representations.

struct ScalarRepClass {
  enum class Kind { Uniform, Pattern, Unconstrained };
  Kind kind;
  /// Pattern: values allowed independently per generator. For a != 0 with
  /// an irrational discriminant `values` holds only 0 and `symbolic` names
  /// the roots.
  std::vector<Rational> values;
  std::string symbolic;

  bool matches(const std::vector<Rational>& assignment) const;
  std::string describe() const;
};

/// Scalar classes for A (numeric a, b, c), B and C.
std::vector<ScalarRepClass> classify_scalar(Algebra alg, const std::map<std::string, Rational>& params = {});
bool verify_scalar(const std::vector<Rational>& assignment, Algebra alg,
                   const std::map<std::string, Rational>& params = {});
AlgebraParams numeric_params(const std::map<std::string, Rational>& params);

// Correspondences between algebras, checked on a representation.

enum class Correspondence { HeckeInA, BraidCosetToA, BToAShift };
Correspondence correspondence_from_string(const std::string& s);
std::string to_string(Correspondence c);

/// `scalar` is q for HeckeInA and b otherwise (b != 0).
verify::VerifyReport correspondence_check(Correspondence kind, const Rep& rep, const RatFunc& scalar);

/// The two cubic relations cutting A(0,b,-b^2) out of the braid algebra.
std::vector<ncalg::Relation> braid_coset_relations(int n, const RatFunc& b);
/// s_{i+1} s_i^2 - s_{i+1}^2 s_i = s_i^2 - s_{i+1}^2 + s_{i+1} - s_i.
std::vector<ncalg::Relation> b_shift_relations(int n);

nlohmann::ordered_json rep_to_json(const Rep& rep);
/// {"name":..., "symbols":[...], "matrices":[[[entry,...],...],...]}; entries
/// are expression strings.
Rep rep_from_json(const nlohmann::json& j);

}  // namespace braidalg::reps
