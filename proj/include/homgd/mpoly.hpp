#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "homgd/scalar.hpp"

namespace homgd {

// Formal variables. `d` is the derivation of a conformal module, `l` and `u`
// are the spectral parameters lambda and mu, `m`, `n`, `k` are the symbolic
// mode indices of the affinization.
enum class Var : std::uint8_t { d, l, u, m, n, k };
inline constexpr std::size_t kNumVars = 6;

char var_symbol(Var v);
/// Accepts the single-letter names above; anything else throws Error.
Var parse_var(std::string_view name);

using Exponents = std::array<std::uint32_t, kNumVars>;

/// Total degree first, then lexicographic with d > l > u > m > n > k. The
/// "greater" monomial sorts first so iteration yields serialization order.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using Assignment = std::map<Var, Scalar>;

/// Sparse multivariate polynomial over the rationals in canonical form: no
/// stored zero coefficients, so structural equality is polynomial equality.
class MPoly {
 public:
  using Terms = std::map<Exponents, Scalar, MonomialOrder>;

  MPoly() = default;
  MPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(Var v);
  static MPoly monomial(const Exponents& e, const Scalar& c);
  /// ASCII syntax: `d^2 + 3/2*d*l - (l+u)^2`.
  static MPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponents& e) const;
  /// Part of the polynomial multiplying v^power, with v removed.
  MPoly coefficient_of(Var v, unsigned power) const;
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  /// True when every variable with a positive exponent is in `allowed`.
  bool uses_only(std::initializer_list<Var> allowed) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  /// Replaces every occurrence of v by expr.
  MPoly subst(Var v, const MPoly& expr) const;
  /// Simultaneous substitution; variables absent from the map are kept.
  MPoly subst(const std::map<Var, MPoly>& sigma) const;
  /// Exact value; throws Error when a variable of the polynomial is unassigned.
  Scalar eval(const Assignment& at) const;

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);
  Terms terms_;
};

MPoly pow(const MPoly& p, unsigned exponent);
/// Substitution addressed by variable name (`"l"`, `"d"`, ...).
MPoly subst(const MPoly& p, std::string_view var_name, const MPoly& expr);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Vector of polynomials: coefficients of an element of a free module over
/// the generators, or a carrier-valued polynomial.
using PolyVec = std::vector<MPoly>;

bool is_zero(const PolyVec& v);
PolyVec operator+(const PolyVec& a, const PolyVec& b);
PolyVec operator-(const PolyVec& a, const PolyVec& b);
PolyVec operator*(const MPoly& p, const PolyVec& v);
PolyVec subst(const PolyVec& v, Var var, const MPoly& expr);
/// `[name0] p0; [name1] p1` style rendering, skipping zero components.
std::string to_string(const PolyVec& v, const std::vector<std::string>& names);

}  // namespace homgd
