#include "homgd/conformal.hpp"

#include <algorithm>

#include "homgd/axioms.hpp"

namespace homgd {

namespace {

const MPoly kD = MPoly::var(Var::d);
const MPoly kL = MPoly::var(Var::l);
const MPoly kU = MPoly::var(Var::u);

PolyVec zeros(std::size_t n) { return PolyVec(n); }

void require_rank(const ConformalAlgebra& r, const PolyVec& v) {
  if (v.size() != r.rank())
    throw Error("element has " + std::to_string(v.size()) + " components, expected " + std::to_string(r.rank()));
}

void add_into(PolyVec& acc, const PolyVec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

// p = sum_r c_r d^r with c_r free of d.
std::vector<MPoly> d_coefficients(const MPoly& p) {
  std::vector<MPoly> out;
  const unsigned deg = p.degree(Var::d);
  if (p.is_zero()) return out;
  for (unsigned r = 0; r <= deg; ++r) out.push_back(p.coefficient_of(Var::d, r));
  return out;
}

}  // namespace

ConformalAlgebra::ConformalAlgebra(std::size_t rank, std::vector<std::string> names)
    : rank_(rank), names_(std::move(names)), table_(rank * rank, PolyVec(rank)), alpha_(rank * rank) {
  if (names_.empty())
    for (std::size_t i = 0; i < rank; ++i) names_.push_back("e" + std::to_string(i));
  if (names_.size() != rank) throw Error("generator name count does not match rank");
}

void ConformalAlgebra::set_bracket(std::size_t i, std::size_t j, PolyVec value) {
  if (i >= rank_ || j >= rank_) throw Error("bracket index out of range");
  if (value.size() != rank_) throw Error("bracket entry has wrong length");
  for (const auto& p : value)
    if (!p.uses_only({Var::d, Var::l})) throw Error("bracket entries may only use d and l");
  table_[i * rank_ + j] = std::move(value);
}

void ConformalAlgebra::set_alpha(std::size_t r, std::size_t c, MPoly value) {
  if (r >= rank_ || c >= rank_) throw Error("alpha index out of range");
  if (!value.uses_only({Var::d})) throw Error("alpha entries may only use d");
  alpha_[r * rank_ + c] = std::move(value);
}

PolyVec ConformalAlgebra::alpha_image(std::size_t c) const {
  PolyVec v(rank_);
  for (std::size_t r = 0; r < rank_; ++r) v[r] = alpha(r, c);
  return v;
}

bool ConformalAlgebra::alpha_is_scalar() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](const MPoly& p) { return p.is_constant(); });
}

ConformalElement ConformalElement::generator(std::size_t rank, std::size_t i) {
  ConformalElement e{PolyVec(rank)};
  e.coeffs.at(i) = MPoly(1);
  return e;
}

PolyVec bracket_at(const ConformalAlgebra& r, const ConformalElement& x, const ConformalElement& y,
                   const MPoly& nu) {
  require_rank(r, x.coeffs);
  require_rank(r, y.coeffs);
  const std::size_t n = r.rank();
  PolyVec out = zeros(n);
  const MPoly shifted = kD + nu;
  for (std::size_t p = 0; p < n; ++p) {
    if (x.coeffs[p].is_zero()) continue;
    const MPoly f = x.coeffs[p].subst(Var::d, -nu);
    for (std::size_t q = 0; q < n; ++q) {
      if (y.coeffs[q].is_zero()) continue;
      const PolyVec& b = r.bracket(p, q);
      if (is_zero(b)) continue;
      const MPoly scale = f * y.coeffs[q].subst(Var::d, shifted);
      add_into(out, scale * subst(b, Var::l, nu));
    }
  }
  return out;
}

PolyVec extend_bracket(const ConformalAlgebra& r, const ConformalElement& x, const ConformalElement& y) {
  return bracket_at(r, x, y, kL);
}

ConformalElement apply_alpha(const ConformalAlgebra& r, const ConformalElement& x) {
  require_rank(r, x.coeffs);
  ConformalElement out{zeros(r.rank())};
  for (std::size_t c = 0; c < r.rank(); ++c)
    if (!x.coeffs[c].is_zero()) add_into(out.coeffs, x.coeffs[c] * r.alpha_image(c));
  return out;
}

void ConformalReport::add(std::string identity, std::vector<std::size_t> basis, PolyVec residual) {
  if (!is_zero(residual)) violations.push_back({std::move(identity), std::move(basis), std::move(residual)});
}

void ConformalReport::finalize() {
  std::sort(violations.begin(), violations.end(), [](const PolyViolation& a, const PolyViolation& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.basis < b.basis;
  });
  passed = violations.empty();
}

PolyVec skew_residual(const ConformalAlgebra& r, std::size_t i, std::size_t j) {
  return r.bracket(i, j) + subst(r.bracket(j, i), Var::l, -kL - kD);
}

ConformalReport check_skew(const ConformalAlgebra& r) {
  ConformalReport rep;
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j) rep.add("skew_symmetry", {i, j}, skew_residual(r, i, j));
  rep.finalize();
  return rep;
}

PolyVec hom_jacobi_residual(const ConformalAlgebra& r, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = r.rank();
  const auto a = ConformalElement::generator(n, i);
  const auto b = ConformalElement::generator(n, j);
  const auto c = ConformalElement::generator(n, k);

  const ConformalElement bc{bracket_at(r, b, c, kU)};
  PolyVec res = bracket_at(r, apply_alpha(r, a), bc, kL);

  const ConformalElement ab{bracket_at(r, a, b, kL)};
  res = res - bracket_at(r, ab, apply_alpha(r, c), kL + kU);

  const ConformalElement ac{bracket_at(r, a, c, kL)};
  res = res - bracket_at(r, apply_alpha(r, b), ac, kU);
  return res;
}

ConformalReport check_hom_jacobi(const ConformalAlgebra& r) {
  ConformalReport rep;
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j)
      for (std::size_t k = 0; k < r.rank(); ++k) rep.add("hom_jacobi", {i, j, k}, hom_jacobi_residual(r, i, j, k));
  rep.finalize();
  return rep;
}

Degree degree_of(const ConformalAlgebra& r) {
  Degree deg{0, true};
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j)
      for (const auto& p : r.bracket(i, j)) {
        if (p.is_zero()) continue;
        deg.zero_bracket = false;
        deg.value = std::max(deg.value, p.total_degree() + 1);
      }
  return deg;
}

PolyVec JProductTable::at(std::size_t i, std::size_t j, unsigned n) const {
  const auto& list = products.at(i * rank + j);
  if (n >= list.size()) return PolyVec(rank);
  return list[n];
}

int JProductTable::max_index() const {
  int best = -1;
  for (const auto& list : products)
    for (std::size_t n = 0; n < list.size(); ++n)
      if (!is_zero(list[n])) best = std::max(best, static_cast<int>(n));
  return best;
}

PolyVec JProductTable::alpha_image(std::size_t c) const {
  PolyVec v(rank);
  for (std::size_t r = 0; r < rank; ++r) v[r] = alpha.at(r * rank + c);
  return v;
}

JProductTable j_products(const ConformalAlgebra& r) {
  const std::size_t n = r.rank();
  JProductTable t;
  t.rank = n;
  t.products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const PolyVec& b = r.bracket(i, j);
      unsigned top = 0;
      bool any = false;
      for (const auto& p : b)
        if (!p.is_zero()) {
          any = true;
          top = std::max(top, p.degree(Var::l));
        }
      if (!any) continue;
      auto& list = t.products[i * n + j];
      for (unsigned m = 0; m <= top; ++m) {
        PolyVec v(n);
        for (std::size_t g = 0; g < n; ++g) v[g] = factorial(m) * b[g].coefficient_of(Var::l, m);
        list.push_back(std::move(v));
      }
    }
  for (std::size_t rr = 0; rr < n; ++rr)
    for (std::size_t c = 0; c < n; ++c) t.alpha.push_back(r.alpha(rr, c));
  return t;
}

ConformalAlgebra reconstruct(const JProductTable& t, std::vector<std::string> names) {
  const std::size_t n = t.rank;
  ConformalAlgebra r(n, std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyVec b(n);
      const auto& list = t.products.at(i * n + j);
      for (unsigned m = 0; m < list.size(); ++m)
        add_into(b, (pow(kL, m) * (Scalar(1) / factorial(m))) * list[m]);
      r.set_bracket(i, j, std::move(b));
    }
  for (std::size_t rr = 0; rr < n; ++rr)
    for (std::size_t c = 0; c < n; ++c) r.set_alpha(rr, c, t.alpha.at(rr * n + c));
  return r;
}

// (d^r e_p)(n)(d^s e_q) = (-1)^r sum_t C(s,t) n!/(n-r-t)! d^(s-t) e_p(n-r-t)e_q.
PolyVec jproduct(const JProductTable& t, const PolyVec& x, const PolyVec& y, unsigned n) {
  const std::size_t rank = t.rank;
  if (x.size() != rank || y.size() != rank) throw Error("element length does not match the table rank");
  PolyVec out(rank);
  for (std::size_t p = 0; p < rank; ++p) {
    const auto fx = d_coefficients(x[p]);
    for (std::size_t q = 0; q < rank; ++q) {
      const auto hy = d_coefficients(y[q]);
      for (unsigned r = 0; r < fx.size(); ++r) {
        if (fx[r].is_zero()) continue;
        for (unsigned s = 0; s < hy.size(); ++s) {
          if (hy[s].is_zero()) continue;
          const MPoly base = fx[r] * hy[s];
          for (unsigned tt = 0; tt <= s && r + tt <= n; ++tt) {
            const unsigned idx = n - r - tt;
            PolyVec prod = t.at(p, q, idx);
            if (is_zero(prod)) continue;
            Scalar c = binomial(s, tt) * falling_factorial(n, r + tt);
            if (r % 2 == 1) c = -c;
            add_into(out, (c * base * pow(kD, s - tt)) * prod);
          }
        }
      }
    }
  }
  return out;
}

ConformalReport check_jproduct_axioms(const JProductTable& t) {
  const std::size_t rank = t.rank;
  const unsigned bound = static_cast<unsigned>(std::max(t.max_index(), 0) + 2);
  ConformalReport rep;
  auto gen = [rank](std::size_t i) { return ConformalElement::generator(rank, i).coeffs; };

  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (unsigned n = 0; n <= bound; ++n) {
        // (d a)(n) b = -n a(n-1) b
        PolyVec lhs = jproduct(t, kD * gen(i), gen(j), n);
        PolyVec rhs = n == 0 ? PolyVec(rank) : Scalar(-static_cast<long>(n)) * MPoly(1) * t.at(i, j, n - 1);
        rep.add("sesquilinearity_left", {i, j, n}, lhs - rhs);
        // a(n) d b = d(a(n) b) + n a(n-1) b
        lhs = jproduct(t, gen(i), kD * gen(j), n);
        rhs = kD * t.at(i, j, n);
        if (n > 0) rhs = rhs + MPoly(Scalar(static_cast<long>(n))) * t.at(i, j, n - 1);
        rep.add("sesquilinearity_right", {i, j, n}, lhs - rhs);
        // a(n) b = -sum_k (-1)^(n+k) d^k/k! b(n+k) a
        PolyVec skew = t.at(i, j, n);
        for (unsigned k = 0; n + k <= bound + 1; ++k) {
          PolyVec term = t.at(j, i, n + k);
          if (is_zero(term)) continue;
          Scalar c = Scalar(1) / factorial(k);
          if ((n + k) % 2 == 1) c = -c;
          skew = skew + (c * pow(kD, k)) * term;
        }
        rep.add("skew_symmetry", {i, j, n}, skew);
      }

  // alpha(a)(m)(b(n)c) = alpha(b)(n)(a(m)c) + sum_s C(m,s) (a(s)b)(m+n-s) alpha(c)
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k)
        for (unsigned m = 0; m <= bound; ++m)
          for (unsigned n = 0; n <= bound; ++n) {
            PolyVec res = jproduct(t, t.alpha_image(i), t.at(j, k, n), m);
            res = res - jproduct(t, t.alpha_image(j), t.at(i, k, m), n);
            for (unsigned s = 0; s <= m; ++s) {
              PolyVec ab = t.at(i, j, s);
              if (is_zero(ab)) continue;
              res = res - MPoly(binomial(m, s)) * jproduct(t, ab, t.alpha_image(k), m + n - s);
            }
            rep.add("hom_jacobi", {i, j, k, m, n}, res);
          }
  rep.finalize();
  return rep;
}

ConformalResult current_algebra(const AlgebraCarrier& lie) {
  const auto& bracket = lie.op(OpName::bracket);
  const Matrix& alpha = lie.map(MapName::alpha);
  const std::size_t n = lie.dim();
  ConformalResult out{ConformalAlgebra(n, lie.basis_names()), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = bracket.basis_product(i, j);
      PolyVec b(n);
      for (std::size_t g = 0; g < n; ++g) b[g] = MPoly(v[g]);
      out.algebra.set_bracket(i, j, std::move(b));
      out.algebra.set_alpha(i, j, MPoly(alpha(i, j)));
    }
  if (!check_axioms(lie, {Profile::hom_lie, Scalar(0)}).passed)
    out.warnings.push_back("input (bracket, alpha) is not Hom-Lie");
  return out;
}

ConformalAlgebra virasoro_like(const Scalar& b) {
  if (b.is_zero()) throw Error("virasoro twist needs b != 0");
  ConformalAlgebra r(1, {"L"});
  r.set_bracket(0, 0, {kD + MPoly(2) * kL});
  r.set_alpha(0, 0, MPoly(b));
  return r;
}

PolyVec virasoro_rigidity_residual(const MPoly& f) {
  ConformalAlgebra r(1, {"L"});
  r.set_bracket(0, 0, {kD + MPoly(2) * kL});
  r.set_alpha(0, 0, f);
  return hom_jacobi_residual(r, 0, 0, 0);
}

}  // namespace homgd
