#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "homgd/algebra.hpp"
#include "homgd/conformal.hpp"
#include "homgd/distribution.hpp"
#include "homgd/laurent.hpp"

namespace homgd {

/// Which generator reads the bracket and product in the rank-n lambda-bracket.
///  standard:           [u_l v] = [v, u] + d(v o u) + l(u o v + v o u)
///  distribution_order: [u_l v] = [u, v] + d(u o v) + l(u o v + v o u)
/// Only `standard` turns Hom-GD bialgebras into Hom-Lie conformal algebras.
enum class BracketOrder { standard, distribution_order };

/// Finite carrier (circ, bracket, alpha) to a free conformal algebra of the
/// same rank with constant alpha.
ConformalAlgebra gd_to_conformal(const AlgebraCarrier& a, BracketOrder order = BracketOrder::standard);

/// Raised by conformal_to_gd; `pair` is the offending generator pair.
class ConversionError : public Error {
 public:
  ConversionError(const std::string& message, std::size_t i, std::size_t j);
  std::array<std::size_t, 2> pair;
};

/// Inverse of gd_to_conformal. Requires every bracket entry to lie in the
/// span of 1, d, l and alpha to be constant; each product is read from both
/// B(i, j) and B(j, i) and the two readings must agree.
AlgebraCarrier conformal_to_gd(const ConformalAlgebra& r);

/// [u t^m, v t^n] = [u, v] t^(m+n) + m (u o v) t^(m+n-1) - n (v o u) t^(m+n-1)
LaurentVec affinize_bracket(const AlgebraCarrier& a, const LaurentVec& x, const LaurentVec& y);
/// alpha (x) id.
LaurentVec affinize_map(const AlgebraCarrier& a, const LaurentVec& x);

struct AffineViolation {
  std::string identity;  // affine_skew or affine_hom_jacobi
  std::vector<std::size_t> basis;
  std::vector<std::int64_t> powers;
  LaurentVec residual;
};

struct AffinizationReport {
  bool passed = true;
  std::vector<AffineViolation> violations;
};

/// Skew-symmetry and Hom-Jacobi (with alpha (x) id) of the affinization on
/// every basis tuple and every choice of t-powers in [lo, hi].
AffinizationReport affinization_check_sampled(const AlgebraCarrier& a, std::int64_t lo = -2, std::int64_t hi = 2);

/// Residuals of the affinization with symbolic t-powers m, n, k. For the
/// triple (u, v, w) the Hom-Jacobi sum
///   [[u t^m, v t^n], alpha(w) t^k] + cyclic
/// equals D1 t^(m+n+k) + D2 t^(m+n+k-1) + D3 t^(m+n+k-2) with D1, D2, D3
/// carrier vectors whose coordinates are polynomials in m, n, k.
struct DeltaTriple {
  std::size_t i, j, k;
  std::array<PolyVec, 3> delta;
};

struct DeltaPair {
  std::size_t i, j;
  std::array<PolyVec, 2> skew;  // t^(m+n) and t^(m+n-1) parts of [u t^m, v t^n] + [v t^n, u t^m]
};

struct DeltaResiduals {
  std::vector<DeltaPair> pairs;      // nonzero only
  std::vector<DeltaTriple> triples;  // nonzero only

  bool vanishes() const { return pairs.empty() && triples.empty(); }
  /// Carrier identities responsible for the nonzero residuals, sorted:
  ///  skew parts -> skew_symmetry, D1 -> hom_jacobi,
  ///  coefficient of m in D2 -> hom_gd_compat,
  ///  coefficient of m^2 in D3 -> hom_novikov_2,
  ///  coefficient of m n in D3 -> hom_novikov_1.
  std::vector<std::string> localize() const;
};

DeltaResiduals affinization_check_symbolic(const AlgebraCarrier& a);

/// Mode p of the j-th component of [e_i(z), e_j(w)] in the affinization,
/// with e[m] = e t^m:  sum_s C(j, s) (-1)^(j-s) [e_i[s], e_j[p + j - s]].
LaurentVec affine_component_mode(const AlgebraCarrier& a, std::size_t i, std::size_t j, unsigned component,
                                 std::int64_t p);

}  // namespace homgd
