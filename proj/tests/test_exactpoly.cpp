#include "doctest.h"

#include "generators.hpp"
#include "homgd/laurent.hpp"
#include "homgd/mpoly.hpp"
#include "oracle.hpp"

using namespace homgd;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

MPoly random_poly(gen::Rng& rng, std::initializer_list<Var> vars, unsigned max_deg = 3, int terms = 4) {
  MPoly p;
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    for (Var v : vars) e[static_cast<std::size_t>(v)] = rng.integer(0, static_cast<int>(max_deg));
    p += MPoly::monomial(e, rng.rational());
  }
  return p;
}

Assignment random_point(gen::Rng& rng) {
  Assignment a;
  for (Var v : {Var::d, Var::l, Var::u, Var::m, Var::n, Var::k}) a[v] = rng.rational(9, 7);
  return a;
}

}  // namespace

TEST_CASE("scalars stay in lowest terms") {
  CHECK(Scalar(6, 4).str() == "3/2");
  CHECK(Scalar(3, -6).str() == "-1/2");
  CHECK(Scalar(0, 5).str() == "0");
  CHECK(Scalar::parse(" -10/4 ") == Scalar(-5, 2));
  CHECK(Scalar::parse("+7") == Scalar(7));
  CHECK(Scalar::parse("12345678901234567890/3").str() == "4115226300411522630");
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  CHECK_THROWS_AS(Scalar(7, 3).to_int64(), Error);
  CHECK(Scalar(-9, 3).to_int64() == -3);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(5) == Scalar(120));
  CHECK(binomial(5, 2) == Scalar(10));
  CHECK(binomial(2, 5) == Scalar(0));
  CHECK(falling_factorial(5, 3) == Scalar(60));
  CHECK(falling_factorial(-2, 2) == Scalar(6));
  CHECK(falling_factorial(4, 0) == Scalar(1));
  CHECK(pow(Scalar(1, 2), 3) == Scalar(1, 8));
  CHECK(pow(Scalar(2), -2) == Scalar(1, 4));
}

TEST_CASE("polynomial products") {
  CHECK(P("d + 2*l") * MPoly(1) == P("d + 2*l"));
  CHECK((P("d + l") * P("d - l")).str() == "d^2 - l^2");
  CHECK(P("d + 2*l") * P("d + l + 2*u") == P("d^2 + 3*l*d + 2*u*d + 2*l^2 + 4*l*u"));
  CHECK((P("d + 2*l") * P("d + l + 2*u")).str() == "d^2 + 3*d*l + 2*d*u + 2*l^2 + 4*l*u");
}

TEST_CASE("parse and print") {
  CHECK(P("d^2 + 3/2*l*d").str() == "d^2 + 3/2*d*l");
  CHECK(P("-(l+u)^2").str() == "-l^2 - 2*l*u - u^2");
  CHECK(P("0").is_zero());
  CHECK(P("2*d - 2*d").is_zero());
  CHECK(P("d/2").str() == "1/2*d");
  CHECK(P("-d").str() == "-d");
  CHECK(P("m*n*k - 1").str() == "m*n*k - 1");
  CHECK_THROWS_AS(P("d +"), ParseError);
  CHECK_THROWS_AS(P("x"), ParseError);
  CHECK_THROWS_AS(P("d^"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK_THROWS_AS(P("(d"), ParseError);

  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    MPoly p = random_poly(rng, {Var::d, Var::l, Var::u, Var::m, Var::n, Var::k});
    CHECK(MPoly::parse(p.str()) == p);
  }
}

TEST_CASE("substitution") {
  const MPoly skew = P("-l - d");
  CHECK(subst(P("l"), "l", skew) == P("-l - d"));
  CHECK(subst(P("d + 2*l"), "l", skew) == P("-d - 2*l"));
  CHECK(subst(P("l^2"), "l", skew) == P("l^2 + 2*l*d + d^2"));
  CHECK_THROWS_AS(subst(P("l"), "q", skew), Error);

  gen::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const MPoly p = random_poly(rng, {Var::d, Var::l});
    CHECK(p.subst(Var::l, skew).subst(Var::l, skew) == p);
  }
}

TEST_CASE("evaluation") {
  CHECK(P("d + 2*l").eval({{Var::d, Scalar(1)}, {Var::l, Scalar(3)}}) == Scalar(7));
  CHECK(MPoly().eval({}) == Scalar(0));
  CHECK(P("d^2 - l^2").eval({{Var::d, Scalar(2, 3)}, {Var::l, Scalar(1, 3)}}) == Scalar(1, 3));
  CHECK_THROWS_AS(P("d*u").eval({{Var::d, Scalar(1)}}), Error);
}

TEST_CASE("products agree with term-by-term expansion") {
  gen::Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const MPoly a = random_poly(rng, {Var::d, Var::l, Var::u});
    const MPoly b = random_poly(rng, {Var::d, Var::l, Var::m});
    CHECK(a * b == oracle::brute_multiply(a, b));
  }
}

TEST_CASE("ring axioms on random triples") {
  gen::Rng rng(2);
  for (int t = 0; t < 150; ++t) {
    const MPoly a = random_poly(rng, {Var::d, Var::l});
    const MPoly b = random_poly(rng, {Var::l, Var::u});
    const MPoly c = random_poly(rng, {Var::d, Var::u});
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation commutes with substitution") {
  gen::Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const MPoly p = random_poly(rng, {Var::d, Var::l, Var::u});
    const MPoly e = random_poly(rng, {Var::d, Var::l}, 2, 3);
    const MPoly s = p.subst(Var::l, e);
    for (int k = 0; k < 10; ++k) {
      Assignment pt = random_point(rng);
      Assignment moved = pt;
      moved[Var::l] = e.eval(pt);
      CHECK(s.eval(pt) == p.eval(moved));
      CHECK((p * e).eval(pt) == p.eval(pt) * e.eval(pt));
    }
  }
}

TEST_CASE("simultaneous substitution differs from sequential") {
  const MPoly p = P("d*l");
  const std::map<Var, MPoly> swap{{Var::d, P("l")}, {Var::l, P("d")}};
  CHECK(p.subst(swap) == P("d*l"));
  CHECK(P("d").subst(swap) == P("l"));
}

TEST_CASE("coefficients and degrees") {
  const MPoly p = P("3*d^2*l + d*l - 5*l + 7");
  CHECK(p.degree(Var::d) == 2);
  CHECK(p.degree(Var::l) == 1);
  CHECK(p.total_degree() == 3);
  CHECK(p.coefficient_of(Var::d, 2) == P("3*l"));
  CHECK(p.coefficient_of(Var::d, 0) == P("-5*l + 7"));
  CHECK(p.constant_term() == Scalar(7));
  CHECK(p.uses_only({Var::d, Var::l}));
  CHECK_FALSE(p.uses_only({Var::d}));
}

TEST_CASE("laurent vectors") {
  LaurentVec a = LaurentVec::mono(1, 3, Scalar(2));
  a.add(0, -1, Scalar(-1));
  CHECK(a.str({"b0", "b1"}) == "-b0[-1] + 2*b1[3]");
  a.add(1, 3, Scalar(-2));
  CHECK(a.str({"b0", "b1"}) == "-b0[-1]");
  a -= LaurentVec::mono(0, -1, Scalar(-1));
  CHECK(a.is_zero());
  CHECK(a.str({"b0", "b1"}) == "0");
}
