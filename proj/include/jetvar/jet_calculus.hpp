#pragma once

#include "jetvar/bundle.hpp"
#include "jetvar/jet_expr.hpp"

#include <functional>
#include <map>

namespace jetvar {

enum class DerivationParity { even, odd };

/// Extends variable images to a graded derivation of the whole algebra.
/// An even derivation satisfies D(ef) = De f + e Df; an odd one
/// D(ef) = De f + (-1)^|e| e Df, with the image inserted at the position of
/// the factor it replaces (signs tracked through the canonical odd order).
JetExpr apply_derivation(const JetExpr& e, DerivationParity parity,
                         const std::function<JetExpr(const EvenVariable&)>& even_image,
                         const std::function<JetExpr(const OddGenerator&)>& odd_image);

/// Total derivative D_a: chain rule through every jet and odd variable plus
/// the explicit x^a dependence.
JetExpr total_derivative(const JetExpr& e, int coord, const BundleSignature& sig);

/// Iterated total derivative over a spatial multi-index, then time_order
/// copies of D_t.
JetExpr total_derivative(const JetExpr& e, const MultiIndex& spatial, int time_order,
                         const BundleSignature& sig);

/// Total derivative D_t on the extended bundle: raises the dot count of
/// every jet and odd variable and differentiates explicit t dependence.
/// Rejects non-extended signatures.
JetExpr time_total_derivative(const JetExpr& e, const BundleSignature& sig);

/// Formal partial derivative treating all variables as independent.
JetExpr partial(const JetExpr& e, const EvenVariable& v);

/// Left partial derivative w.r.t. an odd generator: the generator is moved
/// to the front of the monomial (accumulating the Koszul sign) and stripped.
JetExpr partial_left(const JetExpr& e, const OddGenerator& g);

/// Homotopy scaling u^i_A -> tau * u^i_A, du^i_A -> tau * du^i_A at all time
/// orders; x and t untouched. Rejects expressions already containing tau
/// (it must be fresh).
JetExpr scale_fields(const JetExpr& e);

/// Exact definite integral over tau in [0,1]: tau^k -> 1/(k+1).
JetExpr integrate_parameter(const JetExpr& e);

/// Substitutes a rational value for tau.
JetExpr substitute_parameter(const JetExpr& e, const Rational& value);

/// Evaluates an even expression at a rational point; every occurring
/// variable must be assigned. Rejects expressions with odd generators.
Rational evaluate(const JetExpr& e, const std::map<EvenVariable, Rational>& assignment);

/// Checks that every coordinate and field index fits the signature and that
/// t (explicit or as dots) appears only when the signature is extended.
void check_in_signature(const JetExpr& e, const BundleSignature& sig);

}  // namespace jetvar
