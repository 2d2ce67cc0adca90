#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidalg/ncalg/ncpoly.hpp"

namespace braidalg::ncalg {

enum class Algebra { Braid, Hecke, A, B, C };

std::string to_string(Algebra alg);
Algebra algebra_from_string(const std::string& name);

/// Parameter symbol -> value; a value may be a constant or a rational
/// function of free symbols (e.g. "a" -> a keeps a symbolic).
using AlgebraParams = std::map<std::string, RatFunc>;

/// Parameter names an algebra requires, in a fixed order.
std::vector<std::string> required_params(Algebra alg);

struct Relation {
  std::string label;  // e.g. "aa2[i=1]", "com[1,3]"
  NCPoly element;     // LHS - RHS
};

struct RelationSet {
  Algebra algebra;
  int n;
  AlgebraParams params;
  Ring ring;
  std::vector<Relation> elements;
};

/// Defining relations of the algebra on n strands. Missing or unexpected
/// parameters and n < 2 are usage errors. Parameter values are embedded in
/// the join of their rings.
RelationSet relations_for(Algebra alg, int n, const AlgebraParams& params = {});

/// Convenience: parameters given as expression strings ("a", "1/2", "-q").
AlgebraParams parse_params(const std::map<std::string, std::string>& text);

/// Elements of the A relations at n = 3 in the coefficient ring Q[a,b,c],
/// fully symbolic.
struct SymbolicA3 {
  Ring ring;
  NCPoly aa1, aa2, aa3, aa4, aa5;
};
SymbolicA3 symbolic_A3();

/// Terms of the combination that reduces aa3 and aa2 to (a-2) * aa5.
enum class Prop1Term { Aa3Scaled, Aa2Commutator, Aa1Left, Aa1Right, Aa1Scalar };
inline constexpr Prop1Term kProp1Terms[] = {Prop1Term::Aa3Scaled, Prop1Term::Aa2Commutator,
                                            Prop1Term::Aa1Left, Prop1Term::Aa1Right,
                                            Prop1Term::Aa1Scalar};
std::string to_string(Prop1Term t);

struct Prop1Result {
  NCPoly combination;
  NCPoly target;    // (a - 2) * aa5
  NCPoly residual;  // combination - target
  bool pass;
};

/// Evaluates the certificate in the free algebra with symbolic a, b, c.
/// `drop` omits one term (mutation control).
Prop1Result prop1_certificate(std::optional<Prop1Term> drop = std::nullopt);

}  // namespace braidalg::ncalg
