#pragma once

#include <cstdint>
#include <map>

#include "homgd/conformal.hpp"
#include "homgd/laurent.hpp"

namespace homgd {

/// Local formal distribution a(z, w) = sum_j c^j(w) d_w^j delta(z, w) / j!,
/// with delta(z, w) = sum_n z^(-n-1) w^n. Each component c^j is a field,
/// written as a module element f_k(d) e_k where d acts as d/dw on
/// e_k(w) = sum_p e_k[p] w^(-p-1). Zero components are not stored.
struct LocalDistribution {
  std::size_t rank = 0;
  std::map<unsigned, PolyVec> components;

  bool is_zero() const { return components.empty(); }
  PolyVec component(unsigned j) const;
  friend bool operator==(const LocalDistribution&, const LocalDistribution&) = default;
};

/// [e_i(z), e_j(w)] with components c^j = e_i (j) e_j.
LocalDistribution distribution_bracket(const ConformalAlgebra& r, std::size_t i, std::size_t j);

/// sum_j l^j / j! c^j, which is the lambda-bracket.
PolyVec fourier(const LocalDistribution& a);

/// (z - w)^m a(z, w): component j moves to j - m, components below m vanish.
LocalDistribution multiply_by_z_minus_w(const LocalDistribution& a, unsigned m);

/// Coefficient of w^(-p-1) in the field; d^r e_k contributes
/// (-1)^r p (p-1) ... (p-r+1) e_k[p-r]. Entries must be polynomials in d.
LaurentVec field_mode(const PolyVec& field, std::int64_t p);

/// Coefficient of z^(-m-1) w^(-n-1): sum_j C(m, j) c^j[m + n - j].
LaurentVec distribution_mode(const LocalDistribution& a, std::int64_t m, std::int64_t n);

}  // namespace homgd
