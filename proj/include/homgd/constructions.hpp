#pragma once

#include <string>
#include <vector>

#include "homgd/algebra.hpp"
#include "homgd/axioms.hpp"

namespace homgd {

/// Output of a construction. Constructions never reject inputs that violate
/// the hypotheses of the corresponding theorem; each unmet hypothesis is
/// listed in `warnings` and the output is left for check_axioms to certify.
struct ConstructionResult {
  AlgebraCarrier algebra;
  std::vector<std::string> warnings;
};

/// [x, y] = x o y - y o x added to a carrier holding `circ` and `alpha`.
/// A Hom-Novikov input yields a Hom-GD output.
ConstructionResult commutator_bracket(const AlgebraCarrier& a);

enum class TwistKind { novikov, gd };

/// Applies alpha to both arguments: x o' y = a(x) o a(y).
///  - novikov: output circ is the twisted product and bracket is
///    a(x o y) - a(y o x); for a Novikov algebra with an endomorphism alpha the
///    output is Hom-Novikov and Hom-GD.
///  - gd: both circ and bracket are twisted; a GD bialgebra with an
///    endomorphism alpha gives a Hom-GD bialgebra.
ConstructionResult endomorphism_twist(const AlgebraCarrier& a, TwistKind kind);

enum class DerivationMode { plain, twisted };

/// From a commutative product `dot` with derivation D and map alpha:
///  plain:   x o y = x.D(y) + w x.y,          [x, y] = x.D(y) - y.D(x)
///  twisted: x o y = a(x.D(y)) + w a(x.y),    [x, y] = a(x.D(y)) - a(y.D(x))
ConstructionResult derivation_product(const AlgebraCarrier& a, const Scalar& w, DerivationMode mode);

/// From a Hom-Poisson carrier (dot, bracket, alpha) and a derivation D of dot
/// which is a weight-w derivation of the bracket: x o y = x.D(y) + w x.y, the
/// bracket kept as is.
ConstructionResult poisson_derived_gd(const AlgebraCarrier& a, const Scalar& w);

/// Residuals of (x o y) o a(z) - a(x) o (y o z) + (x.y).a(D^2 z) + w (x.y).a(D z)
/// for the plain derivation product built from `a`; vanishes on every triple
/// when dot is commutative Hom-associative and D commutes with alpha.
CheckReport derivation_associator_check(const AlgebraCarrier& a, const Scalar& w);

// Example generators.

/// Basis b_0..b_{d-1}; b_a.b_c = b_{a+c} (zero once a+c >= d), D(b_a) = a b_a,
/// alpha(b_a) = q^a b_a, then the twisted derivation product with weight w:
/// b_a o b_c = (c + w) q^(a+c) b_(a+c).
AlgebraCarrier truncated_euler(unsigned d, const Scalar& q, const Scalar& w);

/// Lie algebra (bracket) as GD bialgebra with circ = 0 and alpha = id.
AlgebraCarrier trivial_lie_gd(const AlgebraCarrier& lie);
/// Novikov algebra (circ) as GD bialgebra with bracket = 0 and alpha = id.
AlgebraCarrier trivial_novikov_gd(const AlgebraCarrier& novikov);

/// alpha = exp(D) for a nilpotent derivation D of the commutative associative
/// `dot`, followed by the twisted derivation product with weight w. Throws
/// Error when D is not nilpotent.
AlgebraCarrier nilpotent_exp(const AlgebraCarrier& comm_assoc_with_D, const Scalar& w);

/// Q[x]/(x^n) with D = x^2 d/dx (nilpotent).
AlgebraCarrier truncated_polynomial_algebra(unsigned n);
/// Q + V with V.V = 0, dim V = k, and D the nilpotent shift on V.
AlgebraCarrier square_zero_algebra(unsigned k);

}  // namespace homgd
