#include "homgd/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "homgd/axioms.hpp"
#include "homgd/conformal.hpp"
#include "homgd/constructions.hpp"
#include "homgd/document.hpp"
#include "homgd/equivalence.hpp"

namespace homgd {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string render(const Vec& v, const std::vector<std::string>& names) {
  PolyVec p;
  for (const auto& c : v) p.emplace_back(c);
  return to_string(p, names);
}

std::string render_basis(const std::vector<std::size_t>& basis, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? ", " : "") + names.at(basis[i]);
  return s + ")";
}

Scalar scalar_option(const std::string& text, const char* what) {
  try {
    return Scalar::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

void emit(const AlgebraDocument& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << serialize(doc);
  else
    write_document(path, doc);
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& out) {
  for (const auto& w : warnings) out << "warning: " << w << "\n";
}

int report_finite(const CheckReport& rep, const AlgebraCarrier& a, Profile profile, std::ostream& out) {
  if (rep.passed) {
    out << "PASS " << to_string(profile) << " (dim " << a.dim() << ")\n";
    return kExitPass;
  }
  out << "FAIL " << to_string(profile) << ": " << rep.violations.size() << " violation(s)\n";
  for (const auto& v : rep.violations)
    out << "  " << v.identity << " " << render_basis(v.basis, a.basis_names()) << ": "
        << render(v.residual, a.basis_names()) << "\n";
  return kExitViolations;
}

void report_conformal(const ConformalReport& rep, const char* title, const ConformalAlgebra& r, std::ostream& out) {
  if (rep.passed) {
    out << "PASS " << title << "\n";
    return;
  }
  out << "FAIL " << title << ": " << rep.violations.size() << " violation(s)\n";
  for (const auto& v : rep.violations) {
    out << "  " << v.identity << " (";
    for (std::size_t i = 0; i < v.basis.size(); ++i) out << (i ? ", " : "") << v.basis[i];
    out << "): " << to_string(v.residual, r.generator_names()) << "\n";
  }
}

struct Options {
  std::string profile, file, in, out;
  std::string weight = "0", mode, kind, bracket_order = "standard";
  std::string d = "3", q = "1", w = "0", b = "1", f;
  unsigned truncated = 0, square_zero = 0;
  long lo = -2, hi = 2;
};

int cmd_check(const Options& o, std::ostream& out) {
  auto profile = parse_profile(o.profile);
  if (!profile) throw UsageError("unknown profile '" + o.profile + "'");
  const auto a = load_finite(read_document(o.file));
  return report_finite(check_axioms(a, {*profile, Scalar(0)}), a, *profile, out);
}

int cmd_construct(const std::string& which, const Options& o, std::ostream& out) {
  const auto a = load_finite(read_document(o.in));
  const Scalar w = scalar_option(o.weight, "--weight");
  ConstructionResult r;
  if (which == "commutator") {
    r = commutator_bracket(a);
  } else if (which == "twist") {
    const std::string kind = o.kind.empty() ? "gd" : o.kind;
    if (kind != "gd" && kind != "novikov") throw UsageError("--kind must be novikov or gd");
    r = endomorphism_twist(a, kind == "gd" ? TwistKind::gd : TwistKind::novikov);
  } else if (which == "derivation") {
    const std::string mode = o.mode.empty() ? "twisted" : o.mode;
    if (mode != "plain" && mode != "twisted") throw UsageError("--mode must be plain or twisted");
    r = derivation_product(a, w, mode == "plain" ? DerivationMode::plain : DerivationMode::twisted);
  } else {
    r = poisson_derived_gd(a, w);
  }
  print_warnings(r.warnings, out);
  emit(to_document(r.algebra, {{"construction", which}}), o.out, out);
  return kExitPass;
}

int cmd_example(const std::string& which, const Options& o, std::ostream& out) {
  if (which == "truncated_euler") {
    const long d = scalar_option(o.d, "--d").to_int64();
    if (d < 1) throw UsageError("--d must be at least 1");
    const Scalar q = scalar_option(o.q, "--q"), w = scalar_option(o.w, "--w");
    auto a = truncated_euler(static_cast<unsigned>(d), q, w);
    emit(to_document(a, {{"example", "truncated_euler"}, {"d", d}, {"q", q.str()}, {"w", w.str()}}), o.out, out);
  } else if (which == "virasoro") {
    ConformalAlgebra r;
    if (!o.f.empty()) {
      MPoly f;
      try {
        f = MPoly::parse(o.f);
      } catch (const Error& e) {
        throw UsageError(std::string("--f: ") + e.what());
      }
      r = virasoro_like(Scalar(1));
      r.set_alpha(0, 0, f);
    } else {
      r = virasoro_like(scalar_option(o.b, "--b"));
    }
    emit(to_document(r, {{"example", "virasoro"}}), o.out, out);
  } else if (which == "trivial_lie_gd" || which == "trivial_novikov_gd" || which == "current") {
    if (o.in.empty()) throw UsageError(which + " needs --in");
    const auto a = load_finite(read_document(o.in));
    if (which == "current") {
      auto r = current_algebra(a);
      print_warnings(r.warnings, out);
      emit(to_document(r.algebra, {{"example", which}}), o.out, out);
    } else {
      auto g = which == "trivial_lie_gd" ? trivial_lie_gd(a) : trivial_novikov_gd(a);
      emit(to_document(g, {{"example", which}}), o.out, out);
    }
  } else if (which == "nilpotent_exp") {
    AlgebraCarrier base;
    if (!o.in.empty())
      base = load_finite(read_document(o.in));
    else if (o.truncated)
      base = truncated_polynomial_algebra(o.truncated);
    else if (o.square_zero)
      base = square_zero_algebra(o.square_zero);
    else
      throw UsageError("nilpotent_exp needs --in, --truncated or --square-zero");
    const Scalar w = scalar_option(o.w, "--w");
    emit(to_document(nilpotent_exp(base, w), {{"example", which}, {"w", w.str()}}), o.out, out);
  } else if (which == "truncated_poly" || which == "square_zero") {
    const unsigned n = which == "truncated_poly" ? o.truncated : o.square_zero;
    if (n == 0) throw UsageError(which == "truncated_poly" ? "--truncated must be positive" : "--square-zero must be positive");
    auto a = which == "truncated_poly" ? truncated_polynomial_algebra(n) : square_zero_algebra(n);
    emit(to_document(a, {{"example", which}}), o.out, out);
  } else {
    throw UsageError("unknown example '" + which + "'");
  }
  return kExitPass;
}

int cmd_equiv(const std::string& which, const Options& o, std::ostream& out) {
  const auto doc = read_document(o.in);
  if (which == "to-conformal") {
    if (o.bracket_order != "standard" && o.bracket_order != "distribution")
      throw UsageError("--order must be standard or distribution");
    const auto order = o.bracket_order == "standard" ? BracketOrder::standard : BracketOrder::distribution_order;
    emit(to_document(gd_to_conformal(load_finite(doc), order), doc.metadata), o.out, out);
  } else {
    emit(to_document(conformal_to_gd(load_conformal(doc)), doc.metadata), o.out, out);
  }
  return kExitPass;
}

int cmd_affinize(const Options& o, std::ostream& out) {
  const auto a = load_finite(read_document(o.file));
  const std::string mode = o.mode.empty() ? "sampled" : o.mode;
  const auto& names = a.basis_names();
  if (mode == "sampled") {
    if (o.lo > o.hi) throw UsageError("--lo must not exceed --hi");
    const auto rep = affinization_check_sampled(a, o.lo, o.hi);
    if (rep.passed) {
      out << "PASS affinization (sampled, powers " << o.lo << ".." << o.hi << ")\n";
      return kExitPass;
    }
    out << "FAIL affinization (sampled): " << rep.violations.size() << " violation(s)\n";
    for (const auto& v : rep.violations) {
      out << "  " << v.identity << " (";
      for (std::size_t i = 0; i < v.basis.size(); ++i)
        out << (i ? ", " : "") << names[v.basis[i]] << "[" << v.powers[i] << "]";
      out << "): " << v.residual.str(names) << "\n";
    }
    return kExitViolations;
  }
  if (mode != "symbolic") throw UsageError("--mode must be sampled or symbolic");
  const auto res = affinization_check_symbolic(a);
  if (res.vanishes()) {
    out << "PASS affinization (symbolic)\n";
    return kExitPass;
  }
  out << "FAIL affinization (symbolic)\n";
  for (const auto& p : res.pairs) {
    out << "  skew " << render_basis({p.i, p.j}, names) << ":";
    for (unsigned s = 0; s < 2; ++s)
      if (!is_zero(p.skew[s])) out << " t^(m+n" << (s ? "-1" : "") << ") " << to_string(p.skew[s], names) << ";";
    out << "\n";
  }
  for (const auto& t : res.triples) {
    out << "  jacobi " << render_basis({t.i, t.j, t.k}, names) << ":";
    for (unsigned s = 0; s < 3; ++s)
      if (!is_zero(t.delta[s]))
        out << " D" << s + 1 << " " << to_string(t.delta[s], names) << ";";
    out << "\n";
  }
  auto loc = res.localize();
  out << "  localized to:";
  for (const auto& n : loc) out << " " << n;
  out << "\n";
  return kExitViolations;
}

int cmd_conf_check(const Options& o, std::ostream& out) {
  const auto r = load_conformal(read_document(o.file));
  const auto skew = check_skew(r);
  const auto jac = check_hom_jacobi(r);
  const auto jp = check_jproduct_axioms(j_products(r));
  report_conformal(skew, "skew_symmetry", r, out);
  report_conformal(jac, "hom_jacobi", r, out);
  report_conformal(jp, "j_product_axioms", r, out);
  const auto deg = degree_of(r);
  if (deg.zero_bracket)
    out << "degree 0 (zero bracket)\n";
  else
    out << "degree " << deg.value << "\n";
  return skew.passed && jac.passed && jp.passed ? kExitPass : kExitViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"homgd: check, build and convert Hom-GD bialgebras and conformal algebras", "homgd"};
  app.require_subcommand(1);
  Options o;
  std::string which;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "check a finite algebra against an axiom profile");
  check->add_option("--profile", o.profile, "novikov, hom_novikov, hom_lie, comm_hom_assoc, gd, hom_gd, hom_poisson")
      ->required();
  check->add_option("file", o.file)->required();
  check->callback([&] { action = [&] { return cmd_check(o, out); }; });

  auto* construct = app.add_subcommand("construct", "build a new algebra from an input algebra");
  construct->add_option("construction", which)
      ->required()
      ->check(CLI::IsMember({"commutator", "twist", "derivation", "poisson"}));
  construct->add_option("--weight", o.weight, "rational weight w");
  construct->add_option("--mode", o.mode, "plain or twisted (derivation)");
  construct->add_option("--kind", o.kind, "novikov or gd (twist)");
  construct->add_option("--in", o.in)->required();
  construct->add_option("--out", o.out);
  construct->callback([&] { action = [&] { return cmd_construct(which, o, out); }; });

  auto* example = app.add_subcommand("example", "write a catalog example");
  example->add_option("name", which)
      ->required()
      ->check(CLI::IsMember({"truncated_euler", "virasoro", "trivial_lie_gd", "trivial_novikov_gd", "nilpotent_exp",
                             "current", "truncated_poly", "square_zero"}));
  example->add_option("--d", o.d);
  example->add_option("--q", o.q);
  example->add_option("--w", o.w);
  example->add_option("--b", o.b);
  example->add_option("--f", o.f, "polynomial alpha(L) = f(d) L");
  example->add_option("--truncated", o.truncated, "Q[x]/(x^n) base");
  example->add_option("--square-zero", o.square_zero, "Q + V base with dim V = k");
  example->add_option("--in", o.in);
  example->add_option("--out", o.out);
  example->callback([&] { action = [&] { return cmd_example(which, o, out); }; });

  auto* equiv = app.add_subcommand("equiv", "convert between Hom-GD bialgebras and conformal algebras");
  equiv->add_option("direction", which)->required()->check(CLI::IsMember({"to-conformal", "to-gd"}));
  equiv->add_option("--order", o.bracket_order, "standard or distribution (to-conformal)");
  equiv->add_option("--in", o.in)->required();
  equiv->add_option("--out", o.out);
  equiv->callback([&] { action = [&] { return cmd_equiv(which, o, out); }; });

  auto* affinize = app.add_subcommand("affinize-check", "check the affinization bracket");
  affinize->add_option("--mode", o.mode, "sampled or symbolic");
  affinize->add_option("--lo", o.lo);
  affinize->add_option("--hi", o.hi);
  affinize->add_option("file", o.file)->required();
  affinize->callback([&] { action = [&] { return cmd_affinize(o, out); }; });

  auto* conf = app.add_subcommand("conf-check", "skew, Hom-Jacobi, degree and j-product checks");
  conf->add_option("file", o.file)->required();
  conf->callback([&] { action = [&] { return cmd_conf_check(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace homgd
