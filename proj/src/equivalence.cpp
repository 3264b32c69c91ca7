#include "homgd/equivalence.hpp"

#include <algorithm>
#include <set>

namespace homgd {

namespace {

const MPoly kD = MPoly::var(Var::d);
const MPoly kL = MPoly::var(Var::l);

// Element of A (x) Q[t, t^-1] whose powers are E - s for a symbolic E; the
// key (index, s) stores the coefficient, a polynomial in m, n, k.
struct SymElem {
  MPoly exponent;
  std::map<std::pair<std::size_t, unsigned>, MPoly> terms;

  void add(std::size_t idx, unsigned deficit, const MPoly& c) {
    if (c.is_zero()) return;
    auto& slot = terms[{idx, deficit}];
    slot += c;
    if (slot.is_zero()) terms.erase({idx, deficit});
  }
};

SymElem sym_generator(std::size_t idx, Var power) {
  SymElem e{MPoly::var(power), {}};
  e.add(idx, 0, MPoly(1));
  return e;
}

SymElem sym_bracket(const StructureTensor& circ, const StructureTensor& bracket, const SymElem& x,
                    const SymElem& y) {
  SymElem out{x.exponent + y.exponent, {}};
  for (const auto& [kx, px] : x.terms)
    for (const auto& [ky, py] : y.terms) {
      const auto [i, sx] = kx;
      const auto [j, sy] = ky;
      const MPoly c = px * py;
      const MPoly mx = x.exponent - MPoly(Scalar(static_cast<long>(sx)));
      const MPoly my = y.exponent - MPoly(Scalar(static_cast<long>(sy)));
      for (const auto& [g, v] : bracket.cell(i, j)) out.add(g, sx + sy, v * c);
      for (const auto& [g, v] : circ.cell(i, j)) out.add(g, sx + sy + 1, v * c * mx);
      for (const auto& [g, v] : circ.cell(j, i)) out.add(g, sx + sy + 1, -(v * c * my));
    }
  return out;
}

SymElem sym_map(const Matrix& alpha, const SymElem& x) {
  SymElem out{x.exponent, {}};
  for (const auto& [key, p] : x.terms)
    for (std::size_t r = 0; r < alpha.dim(); ++r)
      if (!alpha(r, key.first).is_zero()) out.add(r, key.second, alpha(r, key.first) * p);
  return out;
}

SymElem sym_sum(SymElem a, const SymElem& b) {
  for (const auto& [key, p] : b.terms) a.add(key.first, key.second, p);
  return a;
}

PolyVec deficit_part(const SymElem& x, unsigned deficit, std::size_t dim) {
  PolyVec v(dim);
  for (const auto& [key, p] : x.terms)
    if (key.second == deficit) v[key.first] += p;
  return v;
}

unsigned max_deficit(const SymElem& x) {
  unsigned d = 0;
  for (const auto& [key, p] : x.terms) d = std::max(d, key.second);
  return d;
}

bool any_nonzero_coefficient(const PolyVec& v, const Exponents& e) {
  return std::any_of(v.begin(), v.end(), [&](const MPoly& p) { return !p.coefficient(e).is_zero(); });
}

Exponents exps(std::initializer_list<std::pair<Var, unsigned>> list) {
  Exponents e{};
  for (auto [v, p] : list) e[static_cast<std::size_t>(v)] = p;
  return e;
}

}  // namespace

ConformalAlgebra gd_to_conformal(const AlgebraCarrier& a, BracketOrder order) {
  const auto& circ = a.op(OpName::circ);
  const auto& bracket = a.op(OpName::bracket);
  const Matrix& alpha = a.map(MapName::alpha);
  const std::size_t n = a.dim();
  ConformalAlgebra r(n, a.basis_names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool standard = order == BracketOrder::standard;
      const Vec br = standard ? bracket.basis_product(j, i) : bracket.basis_product(i, j);
      const Vec dpart = standard ? circ.basis_product(j, i) : circ.basis_product(i, j);
      const Vec lpart = circ.basis_product(i, j) + circ.basis_product(j, i);
      PolyVec b(n);
      for (std::size_t g = 0; g < n; ++g) b[g] = MPoly(br[g]) + dpart[g] * kD + lpart[g] * kL;
      r.set_bracket(i, j, std::move(b));
      r.set_alpha(i, j, MPoly(alpha(i, j)));
    }
  return r;
}

ConversionError::ConversionError(const std::string& message, std::size_t i, std::size_t j)
    : Error(message + " at generator pair (" + std::to_string(i) + ", " + std::to_string(j) + ")"), pair{i, j} {}

AlgebraCarrier conformal_to_gd(const ConformalAlgebra& r) {
  const std::size_t n = r.rank();
  Matrix alpha(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.alpha(i, j).is_constant()) throw ConversionError("alpha is not constant", i, j);
      alpha(i, j) = r.alpha(i, j).constant_term();
    }

  // B(i, j) = c00 + c10 d + c01 l.
  struct Reading {
    Vec c00, c10, c01;
  };
  std::vector<Reading> read(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Reading& rd = read[i * n + j];
      rd.c00 = rd.c10 = rd.c01 = Vec(n);
      for (std::size_t g = 0; g < n; ++g) {
        const MPoly& p = r.bracket(i, j)[g];
        for (const auto& [e, c] : p.terms()) {
          const unsigned dd = e[static_cast<std::size_t>(Var::d)];
          const unsigned ll = e[static_cast<std::size_t>(Var::l)];
          if (dd + ll > 1) throw ConversionError("bracket entry '" + p.str() + "' is not in the span of 1, d, l", i, j);
        }
        rd.c00[g] = p.constant_term();
        rd.c10[g] = p.coefficient(exps({{Var::d, 1}}));
        rd.c01[g] = p.coefficient(exps({{Var::l, 1}}));
      }
    }

  StructureTensor circ(n), bracket(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Reading& ij = read[i * n + j];
      const Reading& ji = read[j * n + i];
      // From B(i, j): e_j o e_i = c10, e_i o e_j = c01 - c10, [e_j, e_i] = c00.
      // From B(j, i): e_i o e_j = c10, e_j o e_i = c01 - c10, [e_i, e_j] = c00.
      if (ij.c10 != ji.c01 - ji.c10 || ji.c10 != ij.c01 - ij.c10)
        throw ConversionError("the two readings of the product disagree", i, j);
      if (ij.c00 != -Scalar(1) * ji.c00) throw ConversionError("bracket is not skew-symmetric", i, j);
      circ.add(j, i, ij.c10);
      bracket.add(j, i, ij.c00);
      if (i != j) {
        circ.add(i, j, ji.c10);
        bracket.add(i, j, ji.c00);
      }
    }

  AlgebraCarrier out(n, r.generator_names());
  out.set_op(OpName::circ, std::move(circ));
  out.set_op(OpName::bracket, std::move(bracket));
  out.set_map(MapName::alpha, std::move(alpha));
  return out;
}

LaurentVec affinize_bracket(const AlgebraCarrier& a, const LaurentVec& x, const LaurentVec& y) {
  const auto& circ = a.op(OpName::circ);
  const auto& bracket = a.op(OpName::bracket);
  LaurentVec out;
  for (const auto& [kx, cx] : x.entries())
    for (const auto& [ky, cy] : y.entries()) {
      const auto [i, m] = kx;
      const auto [j, n] = ky;
      const Scalar c = cx * cy;
      for (const auto& [g, v] : bracket.cell(i, j)) out.add(g, m + n, c * v);
      if (m != 0)
        for (const auto& [g, v] : circ.cell(i, j)) out.add(g, m + n - 1, c * v * Scalar(static_cast<long>(m)));
      if (n != 0)
        for (const auto& [g, v] : circ.cell(j, i)) out.add(g, m + n - 1, -(c * v * Scalar(static_cast<long>(n))));
    }
  return out;
}

LaurentVec affinize_map(const AlgebraCarrier& a, const LaurentVec& x) {
  const Matrix& alpha = a.map(MapName::alpha);
  LaurentVec out;
  for (const auto& [key, c] : x.entries())
    for (std::size_t r = 0; r < alpha.dim(); ++r)
      if (!alpha(r, key.first).is_zero()) out.add(r, key.second, c * alpha(r, key.first));
  return out;
}

AffinizationReport affinization_check_sampled(const AlgebraCarrier& a, std::int64_t lo, std::int64_t hi) {
  const std::size_t n = a.dim();
  a.op(OpName::circ);
  a.op(OpName::bracket);
  a.map(MapName::alpha);
  AffinizationReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::int64_t p = lo; p <= hi; ++p)
        for (std::int64_t q = lo; q <= hi; ++q) {
          const auto x = LaurentVec::mono(i, p), y = LaurentVec::mono(j, q);
          LaurentVec r = affinize_bracket(a, x, y) + affinize_bracket(a, y, x);
          if (!r.is_zero()) rep.violations.push_back({"affine_skew", {i, j}, {p, q}, std::move(r)});
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::int64_t p = lo; p <= hi; ++p)
          for (std::int64_t q = lo; q <= hi; ++q)
            for (std::int64_t s = lo; s <= hi; ++s) {
              const auto x = LaurentVec::mono(i, p), y = LaurentVec::mono(j, q), z = LaurentVec::mono(k, s);
              LaurentVec r = affinize_bracket(a, affinize_bracket(a, x, y), affinize_map(a, z));
              r += affinize_bracket(a, affinize_bracket(a, y, z), affinize_map(a, x));
              r += affinize_bracket(a, affinize_bracket(a, z, x), affinize_map(a, y));
              if (!r.is_zero()) rep.violations.push_back({"affine_hom_jacobi", {i, j, k}, {p, q, s}, std::move(r)});
            }
  rep.passed = rep.violations.empty();
  return rep;
}

DeltaResiduals affinization_check_symbolic(const AlgebraCarrier& a) {
  const auto& circ = a.op(OpName::circ);
  const auto& bracket = a.op(OpName::bracket);
  const Matrix& alpha = a.map(MapName::alpha);
  const std::size_t n = a.dim();
  DeltaResiduals out;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto u = sym_generator(i, Var::m), v = sym_generator(j, Var::n);
      const SymElem s = sym_sum(sym_bracket(circ, bracket, u, v), sym_bracket(circ, bracket, v, u));
      DeltaPair pair{i, j, {deficit_part(s, 0, n), deficit_part(s, 1, n)}};
      if (!is_zero(pair.skew[0]) || !is_zero(pair.skew[1])) out.pairs.push_back(std::move(pair));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto u = sym_generator(i, Var::m), v = sym_generator(j, Var::n), w = sym_generator(k, Var::k);
        SymElem s = sym_bracket(circ, bracket, sym_bracket(circ, bracket, u, v), sym_map(alpha, w));
        s = sym_sum(s, sym_bracket(circ, bracket, sym_bracket(circ, bracket, v, w), sym_map(alpha, u)));
        s = sym_sum(s, sym_bracket(circ, bracket, sym_bracket(circ, bracket, w, u), sym_map(alpha, v)));
        if (max_deficit(s) > 2) throw Error("unexpected t-power in the affinization residual");
        DeltaTriple t{i, j, k, {deficit_part(s, 0, n), deficit_part(s, 1, n), deficit_part(s, 2, n)}};
        if (!is_zero(t.delta[0]) || !is_zero(t.delta[1]) || !is_zero(t.delta[2])) out.triples.push_back(std::move(t));
      }
  return out;
}

std::vector<std::string> DeltaResiduals::localize() const {
  std::set<std::string> names;
  if (!pairs.empty()) names.insert("skew_symmetry");
  const Exponents m1 = exps({{Var::m, 1}});
  const Exponents m2 = exps({{Var::m, 2}});
  const Exponents mn = exps({{Var::m, 1}, {Var::n, 1}});
  for (const auto& t : triples) {
    if (!is_zero(t.delta[0])) names.insert("hom_jacobi");
    if (any_nonzero_coefficient(t.delta[1], m1)) names.insert("hom_gd_compat");
    if (any_nonzero_coefficient(t.delta[2], m2)) names.insert("hom_novikov_2");
    if (any_nonzero_coefficient(t.delta[2], mn)) names.insert("hom_novikov_1");
  }
  return {names.begin(), names.end()};
}

LaurentVec affine_component_mode(const AlgebraCarrier& a, std::size_t i, std::size_t j, unsigned component,
                                 std::int64_t p) {
  LaurentVec out;
  const std::int64_t jj = component;
  for (std::int64_t s = 0; s <= jj; ++s) {
    Scalar c = binomial(jj, s);
    if ((jj - s) % 2 == 1) c = -c;
    out += c * affinize_bracket(a, LaurentVec::mono(i, s), LaurentVec::mono(j, p + jj - s));
  }
  return out;
}

}  // namespace homgd
