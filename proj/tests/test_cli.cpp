#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homgd/cli.hpp"
#include "homgd/constructions.hpp"
#include "homgd/document.hpp"

using namespace homgd;
namespace fs = std::filesystem;

namespace {

std::string fixture(const char* name) { return std::string(HOMGD_FIXTURES) + "/" + name; }

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("homgd_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("check") {
  auto r = cli({"check", "--profile", "hom_gd", fixture("E3.alg")});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "PASS hom_gd (dim 3)\n");

  r = cli({"check", "--profile", "hom_gd", fixture("E3_broken.alg")});
  CHECK(r.code == kExitViolations);
  CHECK(r.out.rfind("FAIL hom_gd: ", 0) == 0);
  CHECK(r.out.find("(b0, b1, b1)") != std::string::npos);

  CHECK(cli({"check", "--profile", "hom_novikov", fixture("novikov.alg")}).code == kExitPass);
  CHECK(cli({"check", "--profile", "hom_lie", fixture("lie2.alg")}).code == kExitPass);
  CHECK(cli({"check", "--profile", "novikov", fixture("novikov_plain.alg")}).code == kExitPass);

  r = cli({"check", "--profile", "hom_gd", fixture("lie2.alg")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("circ") != std::string::npos);
  CHECK(cli({"check", "--profile", "bogus", fixture("E3.alg")}).code == kExitUsage);
  CHECK(cli({"check", "--profile", "hom_gd", fixture("bad_syntax.alg")}).code == kExitUsage);
  r = cli({"check", "--profile", "hom_gd", fixture("bad_rational.alg")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("ops.circ[1]") != std::string::npos);
  CHECK(cli({"check", fixture("E3.alg"), "--frobnicate"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitPass);
}

TEST_CASE("construct then check") {
  TempDir tmp;
  auto r = cli({"construct", "commutator", "--in", fixture("novikov.alg"), "--out", tmp / "gd.alg"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("warning") == std::string::npos);
  CHECK(cli({"check", "--profile", "hom_gd", tmp / "gd.alg"}).code == kExitPass);

  r = cli({"construct", "twist", "--kind", "gd", "--in", fixture("sl2_gd.alg"), "--out", tmp / "tw.alg"});
  CHECK(r.code == kExitPass);
  CHECK(cli({"check", "--profile", "hom_gd", tmp / "tw.alg"}).code == kExitPass);

  r = cli({"construct", "derivation", "--weight", "1/2", "--in", fixture("nilexp_poly.alg"), "--out", tmp / "x.alg"});
  CHECK(r.code == kExitUsage);  // no dot or D in a Hom-GD document

  r = cli({"construct", "commutator", "--in", fixture("E3_broken.alg"), "--out", tmp / "w.alg"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("warning: ") != std::string::npos);
  CHECK(fs::exists(tmp / "w.alg"));

  CHECK(cli({"construct", "nonsense", "--in", fixture("novikov.alg")}).code == kExitUsage);
}

TEST_CASE("derivation and Poisson constructions from documents") {
  TempDir tmp;
  AlgebraCarrier base(3);
  StructureTensor dot(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; a + c < 3; ++c) dot.set(a, c, a + c, Scalar(1));
  Matrix D(3), alpha(3);
  for (std::size_t i = 0; i < 3; ++i) {
    D(i, i) = Scalar(static_cast<long>(i));
    alpha(i, i) = pow(Scalar(2), static_cast<long>(i));
  }
  base.set_op(OpName::dot, dot);
  base.set_map(MapName::D, D);
  base.set_map(MapName::alpha, alpha);
  write_document(tmp / "base.alg", to_document(base));

  auto r = cli({"construct", "derivation", "--mode", "twisted", "--in", tmp / "base.alg", "--out", tmp / "e.alg"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("warning") == std::string::npos);
  CHECK(load_finite(read_document(tmp / "e.alg")).op(OpName::circ) == truncated_euler(3, Scalar(2), Scalar(0)).op(OpName::circ));

  r = cli({"construct", "derivation", "--mode", "plain", "--in", tmp / "base.alg", "--out", tmp / "p.alg"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("warning: ") != std::string::npos);

  base.set_op(OpName::bracket, StructureTensor(3));
  base.set_op(OpName::dot, [&] {
    StructureTensor t(3);
    for (const auto& e : dot.entries()) t.add(e.i, e.j, alpha.apply(basis_vector(3, e.k)));
    return t;
  }());
  write_document(tmp / "poisson.alg", to_document(base));
  r = cli({"construct", "poisson", "--weight", "0", "--in", tmp / "poisson.alg", "--out", tmp / "q.alg"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("warning") == std::string::npos);
  CHECK(cli({"check", "--profile", "hom_gd", tmp / "q.alg"}).code == kExitPass);
  CHECK(cli({"construct", "poisson", "--weight", "x", "--in", tmp / "poisson.alg"}).code == kExitUsage);
}

TEST_CASE("examples") {
  TempDir tmp;
  auto r = cli({"example", "truncated_euler", "--d", "3", "--q", "2", "--w", "0"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == [] {
    std::ifstream in(fixture("E3.alg"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  CHECK(cli({"example", "truncated_euler", "--d", "0"}).code == kExitUsage);
  CHECK(cli({"example", "truncated_euler", "--d", "3", "--q", "0"}).code == kExitUsage);
  CHECK(cli({"example", "virasoro", "--b", "0"}).code == kExitUsage);
  CHECK(cli({"example", "virasoro", "--b", "-3", "--out", tmp / "v.conf"}).code == kExitPass);
  CHECK(cli({"conf-check", tmp / "v.conf"}).code == kExitPass);
  CHECK(cli({"example", "virasoro", "--f", "d", "--out", tmp / "vd.conf"}).code == kExitPass);
  r = cli({"conf-check", tmp / "vd.conf"});
  CHECK(r.code == kExitViolations);
  CHECK(r.out.find("FAIL hom_jacobi") != std::string::npos);
  CHECK(cli({"example", "virasoro", "--f", "d +"}).code == kExitUsage);

  for (std::vector<std::string> args : {std::vector<std::string>{"nilpotent_exp", "--truncated", "4", "--w", "1"},
                                        {"nilpotent_exp", "--square-zero", "3"},
                                        {"trivial_lie_gd", "--in", fixture("sl2.alg")},
                                        {"trivial_novikov_gd", "--in", fixture("novikov_plain.alg")}}) {
    args.insert(args.begin(), "example");
    args.insert(args.end(), {"--out", tmp / "ex.alg"});
    CHECK(cli(args).code == kExitPass);
    CHECK(cli({"check", "--profile", "hom_gd", tmp / "ex.alg"}).code == kExitPass);
  }
  CHECK(cli({"example", "current", "--in", fixture("lie2.alg"), "--out", tmp / "c.conf"}).code == kExitPass);
  r = cli({"conf-check", tmp / "c.conf"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("degree 1") != std::string::npos);
  CHECK(cli({"example", "truncated_poly", "--truncated", "3"}).code == kExitPass);
  CHECK(cli({"example", "square_zero", "--square-zero", "2"}).code == kExitPass);
  CHECK(cli({"example", "nilpotent_exp"}).code == kExitUsage);
  CHECK(cli({"example", "nope"}).code == kExitUsage);
}

TEST_CASE("equivalence roundtrip through files") {
  TempDir tmp;
  CHECK(cli({"equiv", "to-conformal", "--in", fixture("E3.alg"), "--out", tmp / "E3.conf"}).code == kExitPass);
  CHECK(slurp(tmp / "E3.conf") == slurp(fixture("E3.conf")));
  auto r = cli({"conf-check", tmp / "E3.conf"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("degree 2") != std::string::npos);
  CHECK(cli({"equiv", "to-gd", "--in", tmp / "E3.conf", "--out", tmp / "back.alg"}).code == kExitPass);
  CHECK(load_finite(read_document(tmp / "back.alg")) == load_finite(read_document(fixture("E3.alg"))));
  CHECK(slurp(tmp / "back.alg") == slurp(fixture("E3.alg")));

  CHECK(cli({"equiv", "to-conformal", "--order", "distribution", "--in", fixture("E3.alg"), "--out", tmp / "d.conf"})
            .code == kExitPass);
  CHECK(cli({"conf-check", tmp / "d.conf"}).code == kExitViolations);
  CHECK(cli({"equiv", "to-conformal", "--order", "sideways", "--in", fixture("E3.alg")}).code == kExitUsage);
  r = cli({"equiv", "to-gd", "--in", fixture("virasoro_d.conf")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("generator pair") != std::string::npos);
  CHECK(cli({"equiv", "to-gd", "--in", fixture("E3.alg")}).code == kExitUsage);
}

TEST_CASE("affinize-check") {
  auto r = cli({"affinize-check", fixture("E3.alg")});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("PASS affinization (sampled", 0) == 0);
  CHECK(cli({"affinize-check", "--mode", "symbolic", fixture("E3.alg")}).code == kExitPass);
  r = cli({"affinize-check", "--mode", "symbolic", fixture("E3_broken.alg")});
  CHECK(r.code == kExitViolations);
  CHECK(r.out.find("localized to:") != std::string::npos);
  CHECK(cli({"affinize-check", "--lo", "-1", "--hi", "1", fixture("E3_broken.alg")}).code == kExitViolations);
  CHECK(cli({"affinize-check", "--lo", "2", "--hi", "1", fixture("E3.alg")}).code == kExitUsage);
  CHECK(cli({"affinize-check", "--mode", "psychic", fixture("E3.alg")}).code == kExitUsage);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"check", "--profile", "hom_gd", fixture("E3_broken.alg")};
  const auto a = cli(args), b = cli(args);
  CHECK(a.out == b.out);
  setenv("HOMGD_THREADS", "3", 1);
  CHECK(cli(args).out == a.out);
  unsetenv("HOMGD_THREADS");
  const std::vector<std::string> sym{"affinize-check", "--mode", "symbolic", fixture("E3_broken.alg")};
  CHECK(cli(sym).out == cli(sym).out);
}

TEST_CASE("installed binary exit codes") {
  TempDir tmp;
  const std::string bin = HOMGD_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " > " + (tmp / "out.txt") + " 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("check --profile hom_gd " + fixture("E3.alg")) == 0);
  CHECK(slurp(tmp / "out.txt") == "PASS hom_gd (dim 3)\n");
  CHECK(status("check --profile hom_gd " + fixture("E3_broken.alg")) == 1);
  CHECK(status("check --profile hom_gd " + fixture("bad_syntax.alg")) == 2);
  CHECK(status("") == 2);
  CHECK(status("example truncated_euler --d 3 --q 2 --w 0 --out " + (tmp / "e.alg")) == 0);
  CHECK(slurp(tmp / "e.alg") == slurp(fixture("E3.alg")));
}
