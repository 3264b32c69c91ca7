#include "homgd/constructions.hpp"

#include <memory>

namespace homgd {

namespace {

void warn_unless(bool ok, std::vector<std::string>& warnings, std::string message) {
  if (!ok) warnings.push_back(std::move(message));
}

bool passes(const AlgebraCarrier& a, Profile p) { return check_axioms(a, {p, Scalar(0)}).passed; }

AlgebraCarrier shell_of(const AlgebraCarrier& a) { return AlgebraCarrier(a.dim(), a.basis_names()); }

// x.D(y) for basis x = e_i, y = e_j.
Vec dot_with_derivative(const StructureTensor& dot, const Matrix& D, std::size_t i, std::size_t j) {
  return dot.apply(basis_vector(dot.dim(), i), D.column(j));
}

}  // namespace

ConstructionResult commutator_bracket(const AlgebraCarrier& a) {
  const auto& circ = a.op(OpName::circ);
  a.map(MapName::alpha);
  ConstructionResult out{a, {}};
  StructureTensor bracket(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) bracket.add(i, j, circ.basis_product(i, j) - circ.basis_product(j, i));
  out.algebra.set_op(OpName::bracket, std::move(bracket));
  warn_unless(passes(a, Profile::hom_novikov), out.warnings, "input (circ, alpha) is not Hom-Novikov");
  return out;
}

ConstructionResult endomorphism_twist(const AlgebraCarrier& a, TwistKind kind) {
  const Matrix& alpha = a.map(MapName::alpha);
  const std::size_t n = a.dim();
  const auto& circ = a.op(OpName::circ);
  ConstructionResult out{shell_of(a), {}};
  out.algebra.set_map(MapName::alpha, alpha);

  auto twisted = [&](const StructureTensor& t) {
    StructureTensor r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r.add(i, j, t.apply(alpha.column(i), alpha.column(j)));
    return r;
  };

  out.algebra.set_op(OpName::circ, twisted(circ));
  if (kind == TwistKind::novikov) {
    StructureTensor bracket(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        bracket.add(i, j, alpha.apply(circ.basis_product(i, j) - circ.basis_product(j, i)));
    out.algebra.set_op(OpName::bracket, std::move(bracket));
    warn_unless(passes(a, Profile::novikov), out.warnings, "input circ is not Novikov");
    warn_unless(is_endomorphism(a, MapName::alpha, {OpName::circ}), out.warnings,
                "alpha is not an endomorphism of circ");
  } else {
    const auto& bracket = a.op(OpName::bracket);
    out.algebra.set_op(OpName::bracket, twisted(bracket));
    warn_unless(passes(a, Profile::gd), out.warnings, "input is not a GD bialgebra");
    warn_unless(is_endomorphism(a, MapName::alpha, {OpName::circ, OpName::bracket}), out.warnings,
                "alpha is not an endomorphism of circ and bracket");
  }
  return out;
}

ConstructionResult derivation_product(const AlgebraCarrier& a, const Scalar& w, DerivationMode mode) {
  const auto& dot = a.op(OpName::dot);
  const Matrix& alpha = a.map(MapName::alpha);
  const Matrix& D = a.map(MapName::D);
  const std::size_t n = a.dim();
  const bool twisted = mode == DerivationMode::twisted;

  StructureTensor circ(n), bracket(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec xdy = dot_with_derivative(dot, D, i, j);
      Vec ydx = dot_with_derivative(dot, D, j, i);
      Vec c = xdy + w * dot.basis_product(i, j);
      Vec b = xdy - ydx;
      circ.add(i, j, twisted ? alpha.apply(c) : c);
      bracket.add(i, j, twisted ? alpha.apply(b) : b);
    }

  ConstructionResult out{shell_of(a), {}};
  out.algebra.set_op(OpName::circ, std::move(circ));
  out.algebra.set_op(OpName::bracket, std::move(bracket));
  out.algebra.set_map(MapName::alpha, alpha);

  warn_unless(commutes(a, MapName::alpha, MapName::D), out.warnings, "alpha and D do not commute");
  warn_unless(is_derivation(a, MapName::D, OpName::dot, Scalar(0)), out.warnings, "D is not a derivation of dot");
  if (twisted) {
    warn_unless(is_endomorphism(a, MapName::alpha, {OpName::dot}), out.warnings,
                "alpha is not an endomorphism of dot");
    AlgebraCarrier plain = a;
    plain.set_map(MapName::alpha, Matrix::identity(n));
    warn_unless(passes(plain, Profile::comm_hom_assoc), out.warnings, "dot is not commutative associative");
  } else {
    warn_unless(passes(a, Profile::comm_hom_assoc), out.warnings, "(dot, alpha) is not commutative Hom-associative");
  }
  return out;
}

ConstructionResult poisson_derived_gd(const AlgebraCarrier& a, const Scalar& w) {
  const auto& dot = a.op(OpName::dot);
  const auto& bracket = a.op(OpName::bracket);
  const Matrix& alpha = a.map(MapName::alpha);
  const Matrix& D = a.map(MapName::D);
  const std::size_t n = a.dim();

  StructureTensor circ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      circ.add(i, j, dot_with_derivative(dot, D, i, j) + w * dot.basis_product(i, j));

  ConstructionResult out{shell_of(a), {}};
  out.algebra.set_op(OpName::circ, std::move(circ));
  out.algebra.set_op(OpName::bracket, bracket);
  out.algebra.set_map(MapName::alpha, alpha);

  warn_unless(passes(a, Profile::hom_poisson), out.warnings, "input is not Hom-Poisson");
  warn_unless(commutes(a, MapName::alpha, MapName::D), out.warnings, "alpha and D do not commute");
  warn_unless(is_derivation(a, MapName::D, OpName::dot, Scalar(0)), out.warnings, "D is not a derivation of dot");
  warn_unless(is_derivation(a, MapName::D, OpName::bracket, w), out.warnings,
              "D is not a weight-" + w.str() + " derivation of bracket");
  return out;
}

CheckReport derivation_associator_check(const AlgebraCarrier& a, const Scalar& w) {
  struct Data {
    StructureTensor dot, circ;
    Matrix alpha, alpha_d, alpha_d2;
  };
  auto built = derivation_product(a, w, DerivationMode::plain).algebra;
  const Matrix& alpha = a.map(MapName::alpha);
  const Matrix& D = a.map(MapName::D);
  auto data = std::make_shared<const Data>(
      Data{a.op(OpName::dot), built.op(OpName::circ), alpha, alpha * D, alpha * D * D});
  const std::size_t n = a.dim();
  Identity id{"derivation_associator", 3, [data, n, w](std::size_t i, std::size_t j, std::size_t k) {
                const auto& d = *data;
                Vec x = basis_vector(n, i), y = basis_vector(n, j), z = basis_vector(n, k);
                Vec r = d.circ.apply(d.circ.apply(x, y), d.alpha.apply(z));
                r -= d.circ.apply(d.alpha.apply(x), d.circ.apply(y, z));
                Vec xy = d.dot.apply(x, y);
                r += d.dot.apply(xy, d.alpha_d2.apply(z));
                r += w * d.dot.apply(xy, d.alpha_d.apply(z));
                return r;
              }};
  return sweep(n, {id});
}

AlgebraCarrier truncated_euler(unsigned d, const Scalar& q, const Scalar& w) {
  if (d == 0) throw Error("truncated_euler needs d >= 1");
  if (q.is_zero()) throw Error("truncated_euler needs q != 0");
  std::vector<std::string> names;
  for (unsigned a = 0; a < d; ++a) names.push_back("b" + std::to_string(a));
  AlgebraCarrier base(d, names);
  StructureTensor dot(d);
  Matrix D(d), alpha(d);
  for (unsigned a = 0; a < d; ++a) {
    D(a, a) = Scalar(static_cast<long>(a));
    alpha(a, a) = pow(q, static_cast<long>(a));
    for (unsigned c = 0; a + c < d; ++c) dot.set(a, c, a + c, Scalar(1));
  }
  base.set_op(OpName::dot, std::move(dot));
  base.set_map(MapName::D, std::move(D));
  base.set_map(MapName::alpha, std::move(alpha));
  return derivation_product(base, w, DerivationMode::twisted).algebra;
}

AlgebraCarrier trivial_lie_gd(const AlgebraCarrier& lie) {
  AlgebraCarrier out = shell_of(lie);
  out.set_op(OpName::bracket, lie.op(OpName::bracket));
  out.set_op(OpName::circ, StructureTensor(lie.dim()));
  out.set_map(MapName::alpha, Matrix::identity(lie.dim()));
  return out;
}

AlgebraCarrier trivial_novikov_gd(const AlgebraCarrier& novikov) {
  AlgebraCarrier out = shell_of(novikov);
  out.set_op(OpName::circ, novikov.op(OpName::circ));
  out.set_op(OpName::bracket, StructureTensor(novikov.dim()));
  out.set_map(MapName::alpha, Matrix::identity(novikov.dim()));
  return out;
}

AlgebraCarrier nilpotent_exp(const AlgebraCarrier& comm_assoc_with_D, const Scalar& w) {
  AlgebraCarrier base = comm_assoc_with_D;
  base.set_map(MapName::alpha, homgd::nilpotent_exp(base.map(MapName::D)));
  return derivation_product(base, w, DerivationMode::twisted).algebra;
}

AlgebraCarrier truncated_polynomial_algebra(unsigned n) {
  if (n == 0) throw Error("truncated polynomial algebra needs n >= 1");
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a) names.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
  AlgebraCarrier out(n, names);
  StructureTensor dot(n);
  Matrix D(n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned c = 0; a + c < n; ++c) dot.set(a, c, a + c, Scalar(1));
    if (a + 1 < n) D(a + 1, a) = Scalar(static_cast<long>(a));
  }
  out.set_op(OpName::dot, std::move(dot));
  out.set_map(MapName::D, std::move(D));
  return out;
}

AlgebraCarrier square_zero_algebra(unsigned k) {
  std::vector<std::string> names{"1"};
  for (unsigned i = 1; i <= k; ++i) names.push_back("v" + std::to_string(i));
  const std::size_t n = k + 1;
  AlgebraCarrier out(n, names);
  StructureTensor dot(n);
  Matrix D(n);
  dot.set(0, 0, 0, Scalar(1));
  for (std::size_t i = 1; i < n; ++i) {
    dot.set(0, i, i, Scalar(1));
    dot.set(i, 0, i, Scalar(1));
    if (i + 1 < n) D(i + 1, i) = Scalar(1);
  }
  out.set_op(OpName::dot, std::move(dot));
  out.set_map(MapName::D, std::move(D));
  return out;
}

}  // namespace homgd
