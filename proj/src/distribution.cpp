#include "homgd/distribution.hpp"

namespace homgd {

PolyVec LocalDistribution::component(unsigned j) const {
  auto it = components.find(j);
  return it == components.end() ? PolyVec(rank) : it->second;
}

LocalDistribution distribution_bracket(const ConformalAlgebra& r, std::size_t i, std::size_t j) {
  const auto t = j_products(r);
  LocalDistribution out{r.rank(), {}};
  const auto& list = t.products.at(i * r.rank() + j);
  for (unsigned n = 0; n < list.size(); ++n)
    if (!is_zero(list[n])) out.components.emplace(n, list[n]);
  return out;
}

PolyVec fourier(const LocalDistribution& a) {
  PolyVec out(a.rank);
  const MPoly l = MPoly::var(Var::l);
  for (const auto& [j, c] : a.components) out = out + (pow(l, j) * (Scalar(1) / factorial(j))) * c;
  return out;
}

LocalDistribution multiply_by_z_minus_w(const LocalDistribution& a, unsigned m) {
  LocalDistribution out{a.rank, {}};
  for (const auto& [j, c] : a.components)
    if (j >= m) out.components.emplace(j - m, c);
  return out;
}

LaurentVec field_mode(const PolyVec& field, std::int64_t p) {
  LaurentVec out;
  for (std::size_t k = 0; k < field.size(); ++k) {
    const MPoly& f = field[k];
    if (f.is_zero()) continue;
    if (!f.uses_only({Var::d})) throw Error("field coefficients must be polynomials in d");
    for (unsigned r = 0; r <= f.degree(Var::d); ++r) {
      Scalar c = f.coefficient_of(Var::d, r).constant_term();
      if (c.is_zero()) continue;
      c *= falling_factorial(p, r);
      if (r % 2 == 1) c = -c;
      out.add(k, p - static_cast<std::int64_t>(r), c);
    }
  }
  return out;
}

LaurentVec distribution_mode(const LocalDistribution& a, std::int64_t m, std::int64_t n) {
  LaurentVec out;
  for (const auto& [j, c] : a.components) {
    Scalar b = binomial(m, j);
    // C(m, j) for negative m is (-1)^j C(j - m - 1, j).
    if (m < 0) {
      b = binomial(static_cast<long>(j) - m - 1, j);
      if (j % 2 == 1) b = -b;
    }
    if (b.is_zero()) continue;
    out += b * field_mode(c, m + n - static_cast<std::int64_t>(j));
  }
  return out;
}

}  // namespace homgd
