// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "homgd/axioms.hpp"
#include "homgd/constructions.hpp"
#include "homgd/distribution.hpp"
#include "homgd/document.hpp"
#include "homgd/equivalence.hpp"
#include "oracle.hpp"

using namespace homgd;

namespace {

constexpr int kTrials = 100;
constexpr int kPerturbations = 50;
constexpr int kPoints = 10;
constexpr double kBudgetSeconds = 60.0;

// Collects failures for one criterion; the first few are printed.
struct Criterion {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  bool passed() const { return failures.empty(); }
};

void report(int number, const std::string& title, const Criterion& c, const std::string& extra = "") {
  std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << c.checks
            << " checks" << extra << ")\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    " << c.failures[i] << "\n";
  if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
}

bool passes(const AlgebraCarrier& a, Profile p) { return check_axioms(a, {p, Scalar(0)}).passed; }

std::string fixture(const std::string& name) { return std::string(HOMGD_FIXTURES) + "/" + name; }

const std::vector<std::string> kHomGdFixtures{"E3.alg",          "E4.alg",           "nilexp_poly.alg",
                                              "nilexp_square_zero.alg", "sl2_gd.alg", "novikov_gd.alg",
                                              "commutator.alg",  "sl2_twisted.alg"};

std::string label(const std::string& base, const Scalar& x) {
  std::ostringstream os;
  os << base << x;
  return os.str();
}

StructureTensor skew_tensor(std::size_t n, const std::vector<std::array<long, 4>>& entries) {
  StructureTensor t(n);
  for (const auto& [i, j, k, c] : entries) {
    t.set(i, j, k, Scalar(c));
    t.set(j, i, k, Scalar(-c));
  }
  return t;
}

StructureTensor tensor(std::size_t n, const std::vector<std::array<long, 4>>& entries) {
  StructureTensor t(n);
  for (const auto& [i, j, k, c] : entries) t.set(i, j, k, Scalar(c));
  return t;
}

AlgebraCarrier with_op(std::size_t n, OpName op, StructureTensor t) {
  AlgebraCarrier a(n);
  a.set_op(op, std::move(t));
  a.set_map(MapName::alpha, Matrix::identity(n));
  return a;
}

std::vector<std::pair<std::string, AlgebraCarrier>> lie_catalog() {
  std::vector<std::pair<std::string, AlgebraCarrier>> out;
  for (std::size_t n = 1; n <= 4; ++n) out.emplace_back("abelian" + std::to_string(n), with_op(n, OpName::bracket, StructureTensor(n)));
  out.emplace_back("aff2", with_op(2, OpName::bracket, skew_tensor(2, {{0, 1, 1, 1}})));
  out.emplace_back("heisenberg", with_op(3, OpName::bracket, skew_tensor(3, {{0, 1, 2, 1}})));
  out.emplace_back("r3", with_op(3, OpName::bracket, skew_tensor(3, {{0, 1, 1, 1}, {0, 2, 2, 1}})));
  out.emplace_back("sl2", with_op(3, OpName::bracket, skew_tensor(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}})));
  out.emplace_back("sl2+abelian",
                   with_op(4, OpName::bracket, skew_tensor(4, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}})));
  out.emplace_back("aff2+aff2", with_op(4, OpName::bracket, skew_tensor(4, {{0, 1, 1, 1}, {2, 3, 3, 1}})));
  return out;
}

std::vector<std::pair<std::string, AlgebraCarrier>> novikov_catalog() {
  std::vector<std::pair<std::string, AlgebraCarrier>> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    out.emplace_back("zero" + std::to_string(n), with_op(n, OpName::circ, StructureTensor(n)));
    std::vector<std::array<long, 4>> graded;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; a + c < n; ++c) graded.push_back({long(a), long(c), long(a + c), long(c + 1)});
    out.emplace_back("graded" + std::to_string(n), with_op(n, OpName::circ, tensor(n, graded)));
  }
  out.emplace_back("field", with_op(1, OpName::circ, tensor(1, {{0, 0, 0, 1}})));
  out.emplace_back("square", with_op(2, OpName::circ, tensor(2, {{0, 0, 1, 1}})));
  return out;
}

// Criterion 1.
void construction_theorems() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();

  for (unsigned d = 1; d <= 6; ++d)
    for (const Scalar& q : {Scalar(1), Scalar(2), Scalar(1, 2)})
      for (const Scalar& w : {Scalar(0), Scalar(1), Scalar(-1)}) {
        const auto e = truncated_euler(d, q, w);
        const std::string name = "truncated_euler(" + std::to_string(d) + ", " + label("", q) + ", " + label("", w) + ")";
        c.expect(passes(e, Profile::hom_gd), name + " hom_gd");
        AlgebraCarrier nov(d);
        nov.set_op(OpName::circ, e.op(OpName::circ));
        nov.set_map(MapName::alpha, e.map(MapName::alpha));
        c.expect(passes(nov, Profile::hom_novikov), name + " hom_novikov");
        const auto r = commutator_bracket(nov);
        c.expect(r.warnings.empty() && passes(r.algebra, Profile::hom_gd), name + " commutator");
      }

  for (const auto& [name, lie] : lie_catalog()) {
    c.expect(passes(lie, Profile::hom_lie), name + " hom_lie");
    const auto g = trivial_lie_gd(lie);
    c.expect(passes(g, Profile::gd) && passes(g, Profile::hom_gd), name + " trivial_lie_gd");
    const auto t = endomorphism_twist(g, TwistKind::gd);
    c.expect(t.warnings.empty() && passes(t.algebra, Profile::hom_gd), name + " gd twist");
  }
  for (const auto& [name, nov] : novikov_catalog()) {
    c.expect(passes(nov, Profile::novikov), name + " novikov");
    const auto g = trivial_novikov_gd(nov);
    c.expect(passes(g, Profile::gd) && passes(g, Profile::hom_gd), name + " trivial_novikov_gd");
    const auto t = endomorphism_twist(g, TwistKind::gd);
    c.expect(t.warnings.empty() && passes(t.algebra, Profile::hom_gd), name + " gd twist");
    const auto h = endomorphism_twist(nov, TwistKind::novikov);
    c.expect(h.warnings.empty() && passes(h.algebra, Profile::hom_novikov) && passes(h.algebra, Profile::hom_gd),
             name + " novikov twist");
  }
  for (const Scalar& w : {Scalar(0), Scalar(1), Scalar(-1)}) {
    for (unsigned n = 1; n <= 4; ++n)
      c.expect(passes(nilpotent_exp(truncated_polynomial_algebra(n), w), Profile::hom_gd),
               label("nilpotent_exp(truncated " + std::to_string(n) + ", w=", w) + ")");
    for (unsigned k = 1; k <= 3; ++k)
      c.expect(passes(nilpotent_exp(square_zero_algebra(k), w), Profile::hom_gd),
               label("nilpotent_exp(square_zero " + std::to_string(k) + ", w=", w) + ")");
  }

  gen::Rng rng(20261016);
  for (int t = 0; t < kTrials; ++t) {
    const std::string trial = " trial " + std::to_string(t);

    const auto nov = gen::hom_novikov(rng);
    const auto comm = commutator_bracket(nov);
    c.expect(comm.warnings.empty() && passes(comm.algebra, Profile::hom_gd), "commutator" + trial);

    const auto ntw = endomorphism_twist(gen::novikov_with_endomorphism(rng), TwistKind::novikov);
    c.expect(ntw.warnings.empty() && passes(ntw.algebra, Profile::hom_novikov) &&
                 passes(ntw.algebra, Profile::hom_gd),
             "novikov twist" + trial);

    const auto base = gen::change_basis(gen::hom_assoc_base(rng), rng);
    const Scalar w = rng.rational();
    const auto plain = derivation_product(base, w, DerivationMode::plain);
    c.expect(plain.warnings.empty() && passes(plain.algebra, Profile::hom_gd), "plain derivation product" + trial);
    c.expect(derivation_associator_check(base, w).passed, "derivation associator" + trial);

    std::string family;
    const auto dbase = gen::change_basis(gen::derivation_base(rng, &family), rng);
    const auto twisted = derivation_product(dbase, rng.rational(), DerivationMode::twisted);
    c.expect(twisted.warnings.empty() && passes(twisted.algebra, Profile::hom_gd),
             "twisted derivation product (" + family + ")" + trial);

    const auto gtw = endomorphism_twist(gen::gd_with_endomorphism(rng), TwistKind::gd);
    c.expect(gtw.warnings.empty() && passes(gtw.algebra, Profile::hom_gd), "gd twist" + trial);

    Scalar pw;
    const auto poisson = gen::hom_poisson(rng, pw);
    const auto pr = poisson_derived_gd(poisson, pw);
    c.expect(pr.warnings.empty() && passes(pr.algebra, Profile::hom_gd), "poisson derived" + trial);
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < kBudgetSeconds, "runtime " + std::to_string(seconds) + " s exceeds budget");
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.1f s", seconds);
  report(1, "construction theorems on the catalog and random inputs", c, buf);
}

std::vector<std::pair<std::string, AlgebraCarrier>> hom_gd_fixtures(Criterion& c) {
  std::vector<std::pair<std::string, AlgebraCarrier>> out;
  for (const auto& name : kHomGdFixtures) {
    try {
      auto a = load_finite(read_document(fixture(name)));
      c.expect(passes(a, Profile::hom_gd), name + " passes hom_gd");
      out.emplace_back(name, std::move(a));
    } catch (const std::exception& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  return out;
}

bool zero_residuals(const ConformalAlgebra& r) {
  const std::size_t n = r.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(skew_residual(r, i, j))) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(hom_jacobi_residual(r, i, j, k))) return false;
    }
  return true;
}

// Criterion 2.
void conformal_axioms() {
  Criterion c;
  for (const auto& [name, a] : hom_gd_fixtures(c)) {
    const auto r = gd_to_conformal(a);
    c.expect(check_skew(r).passed, name + " skew");
    c.expect(check_hom_jacobi(r).passed, name + " hom_jacobi");
    c.expect(zero_residuals(r), name + " residuals identically zero");
    c.expect(degree_of(r).value <= 2, name + " degree");
  }
  for (int b : {1, 2, -3}) {
    const auto v = virasoro_like(Scalar(b));
    const std::string name = "virasoro b=" + std::to_string(b);
    c.expect(check_skew(v).passed && check_hom_jacobi(v).passed, name);
    c.expect(zero_residuals(v) && degree_of(v).value == 2, name + " residuals and degree");
  }
  auto vd = virasoro_like(Scalar(1));
  vd.set_alpha(0, 0, MPoly::var(Var::d));
  c.expect(!check_hom_jacobi(vd).passed, "virasoro f=d must fail hom_jacobi");
  c.expect(!is_zero(virasoro_rigidity_residual(MPoly::var(Var::d))), "virasoro f=d residual nonzero");
  c.expect(is_zero(virasoro_rigidity_residual(MPoly(Scalar(5)))), "virasoro constant f residual zero");
  // f = a d + b: the residual vanishes only for a = 0.
  for (int a = -2; a <= 2; ++a) {
    const MPoly f = Scalar(a) * MPoly::var(Var::d) + MPoly(Scalar(3));
    c.expect(is_zero(virasoro_rigidity_residual(f)) == (a == 0), "virasoro f=" + f.str());
  }
  report(2, "conformal axioms of converted fixtures and Virasoro-like algebras", c);
}

bool conformal_ok(const ConformalAlgebra& r) { return check_skew(r).passed && check_hom_jacobi(r).passed; }

// Criterion 3.
void equivalence() {
  Criterion c;
  for (const auto& [name, a] : hom_gd_fixtures(c)) {
    const auto back = conformal_to_gd(gd_to_conformal(a));
    c.expect(back.op(OpName::circ) == a.op(OpName::circ) && back.op(OpName::bracket) == a.op(OpName::bracket) &&
                 back.map(MapName::alpha) == a.map(MapName::alpha),
             name + " roundtrip");
    c.expect(affinization_check_sampled(a).passed, name + " affinization sampled");
    c.expect(affinization_check_symbolic(a).vanishes(), name + " affinization symbolic");
  }

  const auto e = truncated_euler(3, Scalar(2), Scalar(0));
  gen::Rng rng(3202);
  int broken = 0;
  for (int t = 0; t < 1000 && broken < kPerturbations; ++t) {
    std::string what;
    const auto p = gen::perturb(e, rng, &what);
    if (passes(p, Profile::hom_gd)) continue;
    ++broken;
    const bool conf = conformal_ok(gd_to_conformal(p));
    const bool sampled = affinization_check_sampled(p).passed;
    const auto symbolic = affinization_check_symbolic(p);
    c.expect(!conf, what + ": conformal axioms still hold");
    c.expect(!sampled, what + ": sampled affinization passes");
    c.expect(!symbolic.vanishes(), what + ": symbolic affinization vanishes");
    c.expect(sampled == symbolic.vanishes(), what + ": affinization modes disagree");
  }
  c.expect(broken >= kPerturbations, "only " + std::to_string(broken) + " breaking perturbations");
  report(3, "equivalence roundtrip and breaking perturbations", c, ", " + std::to_string(broken) + " perturbations");
}

std::vector<std::pair<std::string, ConformalAlgebra>> conformal_fixtures(Criterion& c) {
  std::vector<std::pair<std::string, ConformalAlgebra>> out;
  for (const auto& [name, a] : hom_gd_fixtures(c)) out.emplace_back(name, gd_to_conformal(a));
  for (const char* name : {"virasoro.conf", "virasoro_d.conf", "current_lie2.conf", "E3.conf"}) {
    try {
      out.emplace_back(name, load_conformal(read_document(fixture(name))));
    } catch (const std::exception& e) {
      c.expect(false, std::string(name) + ": " + e.what());
    }
  }
  return out;
}

// Criterion 4.
void jproduct_layer() {
  Criterion c;
  for (const auto& [name, r] : conformal_fixtures(c)) {
    const auto t = j_products(r);
    c.expect(reconstruct(t, r.generator_names()) == r, name + " reconstruct");
    // The j-product axioms hold exactly where the lambda-bracket axioms do;
    // virasoro_d is the deliberate counterexample.
    const bool lambda_ok = conformal_ok(r);
    c.expect(lambda_ok == (name != "virasoro_d.conf"), name + " lambda axioms verdict");
    c.expect(check_jproduct_axioms(t).passed == lambda_ok, name + " j-product axioms");
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j) {
        const auto x = ConformalElement::generator(r.rank(), i), y = ConformalElement::generator(r.rank(), j);
        c.expect(fourier(distribution_bracket(r, i, j)) == extend_bracket(r, x, y),
                 name + " fourier of distribution bracket (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
  }
  report(4, "j-product extraction, axioms and distributions", c);
}

oracle::V eval(const PolyVec& v, const Assignment& at) {
  oracle::V out;
  for (const auto& p : v) out.push_back(p.eval(at));
  return out;
}

// Criterion 5.
void numeric_cross_check() {
  Criterion c;
  gen::Rng rng(55);
  auto point = [&] { return rng.rational(20, 9); };

  std::vector<std::pair<std::string, ConformalAlgebra>> zero_claims;
  for (auto& f : conformal_fixtures(c))
    if (f.first != "virasoro_d.conf") zero_claims.push_back(std::move(f));
  for (int b : {1, 2, -3}) zero_claims.emplace_back("virasoro b=" + std::to_string(b), virasoro_like(Scalar(b)));

  for (const auto& [name, r] : zero_claims) {
    const auto nc = oracle::NumericConformal::of(r);
    const std::size_t n = r.rank();
    for (int s = 0; s < kPoints; ++s) {
      const Scalar d0 = point(), l0 = point(), u0 = point();
      const Assignment at{{Var::d, d0}, {Var::l, l0}, {Var::u, u0}};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // [e_i _l e_j](d) + [e_j _(-l-d) e_i](d), read straight off the table.
          oracle::V skew(n);
          for (std::size_t g = 0; g < n; ++g)
            skew[g] = r.bracket(i, j)[g].eval(at) + r.bracket(j, i)[g].eval({{Var::d, d0}, {Var::l, -l0 - d0}});
          c.expect(oracle::zero(skew) && oracle::zero(eval(skew_residual(r, i, j), at)),
                   name + " skew at a random point");
          for (std::size_t k = 0; k < n; ++k) {
            c.expect(oracle::zero(nc.hom_jacobi_at(i, j, k, l0, u0, d0)), name + " oracle hom_jacobi at a point");
            c.expect(oracle::zero(eval(hom_jacobi_residual(r, i, j, k), at)), name + " hom_jacobi at a point");
          }
        }
    }
  }

  // Affinization with concrete t-powers drawn far outside the sampled window.
  Criterion dummy;
  for (const auto& [name, a] : hom_gd_fixtures(dummy)) {
    const std::size_t n = a.dim();
    for (int s = 0; s < kPoints; ++s) {
      const long m = rng.integer(-40, 40), p = rng.integer(-40, 40), q = rng.integer(-40, 40);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const auto x = LaurentVec::mono(i, m), y = LaurentVec::mono(j, p), z = LaurentVec::mono(k, q);
            const auto sum = affinize_bracket(a, affinize_map(a, x), affinize_bracket(a, y, z)) -
                             affinize_bracket(a, affinize_bracket(a, x, y), affinize_map(a, z)) -
                             affinize_bracket(a, affinize_map(a, y), affinize_bracket(a, x, z));
            c.expect(sum.is_zero(), name + " affinization hom_jacobi at powers " + std::to_string(m) + ", " +
                                        std::to_string(p) + ", " + std::to_string(q));
          }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto x = LaurentVec::mono(i, m), y = LaurentVec::mono(j, p);
          c.expect((affinize_bracket(a, x, y) + affinize_bracket(a, y, x)).is_zero(), name + " affinization skew");
        }
    }
  }

  // The one nonzero claim: f = d leaves a residual that is seen at some point.
  const auto res = virasoro_rigidity_residual(MPoly::var(Var::d));
  int nonzero = 0;
  for (int s = 0; s < kPoints; ++s)
    nonzero += !oracle::zero(eval(res, {{Var::d, point()}, {Var::l, point()}, {Var::u, point()}}));
  c.expect(nonzero > 0, "virasoro f=d residual vanishes at every sampled point");
  report(5, "residuals evaluated at random rational points", c);
}

}  // namespace

int main() {
  bool ok = true;
  for (const auto& run : std::vector<std::function<void()>>{construction_theorems, conformal_axioms, equivalence,
                                                            jproduct_layer, numeric_cross_check}) {
    std::ostringstream captured;
    auto* old = std::cout.rdbuf(captured.rdbuf());
    run();
    std::cout.rdbuf(old);
    ok = ok && captured.str().rfind("PASS", 0) == 0;
    std::cout << captured.str() << std::flush;
  }
  return ok ? 0 : 1;
}
