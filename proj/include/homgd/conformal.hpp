#pragma once

#include <string>
#include <vector>

#include "homgd/algebra.hpp"
#include "homgd/mpoly.hpp"

namespace homgd {

/// Free module of finite rank over Q[d] with a lambda-bracket given on the
/// generators. bracket(i, j) lists, per generator, a polynomial in (d, l);
/// alpha(r, c) is the coefficient (a polynomial in d) of e_r in alpha(e_c).
/// Extension of alpha to the module is f(d) e_c -> f(d) alpha(e_c), so alpha
/// commutes with d by construction.
class ConformalAlgebra {
 public:
  ConformalAlgebra() = default;
  explicit ConformalAlgebra(std::size_t rank, std::vector<std::string> names = {});

  std::size_t rank() const { return rank_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  const PolyVec& bracket(std::size_t i, std::size_t j) const { return table_.at(i * rank_ + j); }
  /// Throws Error when an entry mentions variables other than d and l.
  void set_bracket(std::size_t i, std::size_t j, PolyVec value);

  const MPoly& alpha(std::size_t r, std::size_t c) const { return alpha_.at(r * rank_ + c); }
  /// Throws Error when the entry mentions variables other than d.
  void set_alpha(std::size_t r, std::size_t c, MPoly value);
  /// alpha(e_c) as a module element.
  PolyVec alpha_image(std::size_t c) const;
  bool alpha_is_scalar() const;

  friend bool operator==(const ConformalAlgebra&, const ConformalAlgebra&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::string> names_;
  std::vector<PolyVec> table_;
  std::vector<MPoly> alpha_;
};

/// Module element sum_i coeffs[i](d) e_i; coefficients may carry l and u as
/// parameters during nested bracket expansion.
struct ConformalElement {
  PolyVec coeffs;

  static ConformalElement generator(std::size_t rank, std::size_t i);
};

/// [x_nu y] for an arbitrary polynomial nu, via
/// [f(d) a _nu h(d) b] = f(-nu) h(d + nu) [a_nu b], applied component-wise.
PolyVec bracket_at(const ConformalAlgebra& r, const ConformalElement& x, const ConformalElement& y,
                   const MPoly& nu);
/// [x_l y]; throws Error on a rank mismatch.
PolyVec extend_bracket(const ConformalAlgebra& r, const ConformalElement& x, const ConformalElement& y);
ConformalElement apply_alpha(const ConformalAlgebra& r, const ConformalElement& x);

struct PolyViolation {
  std::string identity;
  std::vector<std::size_t> basis;
  PolyVec residual;
};

struct ConformalReport {
  bool passed = true;
  std::vector<PolyViolation> violations;

  void add(std::string identity, std::vector<std::size_t> basis, PolyVec residual);
  void finalize();
};

/// [e_i _l e_j] + [e_j _{-l-d} e_i] per pair.
PolyVec skew_residual(const ConformalAlgebra& r, std::size_t i, std::size_t j);
ConformalReport check_skew(const ConformalAlgebra& r);

/// [alpha(a)_l [b_u c]] - [[a_l b]_{l+u} alpha(c)] - [alpha(b)_u [a_l c]] for
/// a = e_i, b = e_j, c = e_k, a vector of polynomials in (d, l, u).
PolyVec hom_jacobi_residual(const ConformalAlgebra& r, std::size_t i, std::size_t j, std::size_t k);
ConformalReport check_hom_jacobi(const ConformalAlgebra& r);

/// Smallest m with i + j < m for every d^i l^j in the table; the zero
/// bracket reports 0 with `zero_bracket` set.
struct Degree {
  unsigned value = 0;
  bool zero_bracket = false;
};
Degree degree_of(const ConformalAlgebra& r);

/// j-products e_i (n) e_j = n! * (coefficient of l^n in the bracket), with
/// the alpha matrix carried along for the Hom-Jacobi axiom.
struct JProductTable {
  std::size_t rank = 0;
  std::vector<std::vector<PolyVec>> products;  // index i * rank + j, then n
  std::vector<MPoly> alpha;                    // same layout as ConformalAlgebra

  /// e_i (n) e_j; zero beyond the stored range.
  PolyVec at(std::size_t i, std::size_t j, unsigned n) const;
  /// Largest n with a nonzero product, or -1 when every product vanishes.
  int max_index() const;
  PolyVec alpha_image(std::size_t c) const;
};

JProductTable j_products(const ConformalAlgebra& r);
/// Inverse of j_products: bracket = sum l^n / n! (e_i (n) e_j).
ConformalAlgebra reconstruct(const JProductTable& t, std::vector<std::string> names = {});
/// x (n) y for module elements, from the table alone.
PolyVec jproduct(const JProductTable& t, const PolyVec& x, const PolyVec& y, unsigned n);
/// Sesquilinearity, skew-symmetry and Hom-Jacobi in j-product form on every
/// generator pair/triple and every index up to max_index() + 2.
ConformalReport check_jproduct_axioms(const JProductTable& t);

struct ConformalResult {
  ConformalAlgebra algebra;
  std::vector<std::string> warnings;
};

/// [u_l v] = [u, v] on generators, alpha lifted entry-wise.
ConformalResult current_algebra(const AlgebraCarrier& lie);

/// Rank one, [L_l L] = (d + 2 l) L, alpha(L) = b L. Throws Error for b = 0.
ConformalAlgebra virasoro_like(const Scalar& b);
/// Hom-Jacobi residual of the Virasoro bracket with alpha(L) = f(d) L;
/// vanishes exactly when f is constant.
PolyVec virasoro_rigidity_residual(const MPoly& f);

}  // namespace homgd
