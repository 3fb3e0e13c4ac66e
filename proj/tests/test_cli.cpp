#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "toricfloer/builtins.hpp"
#include "toricfloer/cli.hpp"
#include "toricfloer/json_io.hpp"

using namespace toricfloer;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("builtins subcommand lists the catalog") {
  RunResult r = run({"builtins"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hirzebruch1") != std::string::npos);
  CHECK(r.out.find("blowup3") != std::string::npos);
  CHECK(r.out.find("cube_reflexive") != std::string::npos);
}

TEST_CASE("every builtin loads and validates") {
  for (const std::string& name :
       {"segment", "cp1", "cp2", "cp3", "hirzebruch1", "cube_reflexive"}) {
    RunResult r = run({"validate", "--builtin", name});
    CHECK(r.code == 0);
    CHECK(r.out.find("bounded=1") != std::string::npos);
  }
  for (const std::string& name : {"blowup3", "cube_blowup_a", "cube_blowup_b"}) {
    RunResult r = run({"validate", "--builtin", name, "--param", "1/8"});
    CHECK(r.code == 0);
  }
}

TEST_CASE("validate output mentions smoothness and reflexivity") {
  RunResult r = run({"validate", "--builtin", "hirzebruch1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("smooth=true") != std::string::npos);
  CHECK(r.out.find("reflexive=1") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"validate"}).code == 1);                        // no polytope source
  CHECK(run({"validate", "--builtin", "nope"}).code == 1);   // unknown builtin
  CHECK(run({"frobnicate"}).code == 1);                      // unknown subcommand
  CHECK(run({"areas", "--builtin", "hirzebruch1"}).code == 1);  // missing --fiber
  CHECK(run({"areas", "--builtin", "hirzebruch1", "--fiber", "1/0,0"}).code == 1);
  CHECK(run({"validate", "--builtin", "blowup3"}).code == 1);  // missing --param
  CHECK(run({"validate", "--builtin", "blowup3", "--param", "2/3"}).code == 1);
}

TEST_CASE("domain errors exit 2") {
  // exterior fiber
  CHECK(run({"areas", "--builtin", "hirzebruch1", "--fiber", "5,5"}).code == 2);
  // bfield mode at an uncertifiable fiber
  CHECK(run({"verdict", "--builtin", "blowup3", "--param", "1/8", "--fiber",
             "1/10,1/5", "--mode", "bfield"})
            .code == 2);
}

TEST_CASE("verdict: exact mode with certificate weights") {
  RunResult r = run({"verdict", "--builtin", "hirzebruch1", "--fiber", "0,0",
                     "--weights", "2,1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NonVanishing") != std::string::npos);

  RunResult plain = run({"verdict", "--builtin", "hirzebruch1", "--fiber", "0,0"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("verdict: Vanishing") != std::string::npos);
}

TEST_CASE("verdict: bfield mode pulls weights from the certificate") {
  RunResult r = run({"verdict", "--builtin", "blowup3", "--param", "1/8",
                     "--fiber", "1/8,1/8", "--mode", "bfield"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NonVanishing") != std::string::npos);
}

TEST_CASE("verdict: unitary holonomy as angle fractions") {
  RunResult r = run({"verdict", "--builtin", "cp2", "--fiber", "1/3,1/3",
                     "--holonomy", "1/3,1/3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NonVanishing") != std::string::npos);
}

TEST_CASE("convergent mode carries the non-certificate label") {
  RunResult r = run({"verdict", "--builtin", "hirzebruch1", "--fiber", "0,0",
                     "--weights", "2,1,1,1", "--mode", "convergent"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NonVanishingConvergent") != std::string::npos);
  CHECK(r.out.find("not a displaceability certificate") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
  std::vector<std::string> args = {"certify",  "--builtin", "blowup3",
                                   "--param",  "1/8",       "--fiber",
                                   "1/8,1/8",  "--json"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> scan_args = {"scan", "--builtin", "blowup3",
                                        "--param", "1/8", "--grid", "8", "--json"};
  RunResult sa = run(scan_args);
  RunResult sb = run(scan_args);
  CHECK(sa.code == 0);
  CHECK(sa.out == sb.out);
}

TEST_CASE("emitted certificate re-verifies after a JSON round trip") {
  RunResult r = run({"certify", "--builtin", "hirzebruch1", "--fiber", "0,0",
                     "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  Certificate cert = certificate_from_json(j);
  REQUIRE(cert.verdict == CertVerdict::Certified);
  Polytope h = builtin_polytope("hirzebruch1");
  auto m = m12(disc_classes(h, cert.fiber), trivial_field(2), cert.weights);
  for (const NovikovExact& c : m) CHECK(c.is_zero());
}

TEST_CASE("scan reports the three blowup3 fibers") {
  RunResult r = run({"scan", "--builtin", "blowup3", "--param", "1/8",
                     "--grid", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1/8,1/8)") != std::string::npos);
  CHECK(r.out.find("(1/8,3/4)") != std::string::npos);
  CHECK(r.out.find("(3/4,1/8)") != std::string::npos);
}

TEST_CASE("critical subcommand reports the cp2 roots") {
  RunResult r = run({"critical", "--builtin", "cp2", "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["critical_points"].size() == 3);
}

TEST_CASE("monotone subcommand") {
  RunResult r = run({"monotone", "--builtin", "cp2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/3") != std::string::npos);
  RunResult none = run({"monotone", "--builtin", "blowup3", "--param", "1/8"});
  CHECK(none.code == 0);
  CHECK(none.out.find("none") != std::string::npos);
}
