#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "higman/cli.hpp"
#include "higman/construct.hpp"
#include "higman/error.hpp"
#include "higman/verify.hpp"

using namespace higman;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("every verification case passes") {
  const auto ids = verify::case_ids();
  CHECK(ids.size() == 25);
  for (const auto& id : ids) {
    const auto r = verify::run_case(id);
    CAPTURE(id);
    CAPTURE(r.actual);
    CHECK(r.pass);
    CHECK(r.expected == r.actual);
    CHECK_FALSE(r.location.empty());
    CHECK(r.seed == verify::kDefaultSeed);
  }
  CHECK_THROWS_AS(verify::run_case("EX99"), UnknownCase);
}

TEST_CASE("run_all is deterministic and matches the serial run") {
  const auto a = verify::run_all();
  const auto b = verify::run_all_serial();
  CHECK(verify::to_text(a) == verify::to_text(b));
  CHECK(verify::to_json(a) == verify::to_json(verify::run_all()));
  const auto doc = nlohmann::json::parse(verify::to_json(a));
  REQUIRE(doc.size() == a.size());
  CHECK(doc[0]["id"] == "EX21a");
  for (const auto& rec : doc) {
    for (const char* k : {"id", "location", "verdict", "expected", "actual", "seed"}) CHECK(rec.contains(k));
  }
  const auto other = verify::run_all_serial(12345);
  CHECK(other.front().seed == 12345);
}

TEST_CASE("cli eval and member") {
  auto r = cli({"eval", "iota(tau(S), zeta(Z))", "--window", "0..2", "--vmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,0)\n");
  CHECK(cli({"eval", "Z"}).out == "(0)\n");
  r = cli({"eval", "omega2(S)", "--window", "0..4", "--vmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(cli({"eval", "E1", "--window=-1..1", "--vmax", "1"}).out == "(-1)\n(0)\n(1)\n");
  r = cli({"eval", "zeta(S)", "--window", "0..2", "--vmax", "30"});
  CHECK(r.code == 4);
  CHECK(r.err.find("zeta(S)") != std::string::npos);
  CHECK(cli({"member", "(7,8,0,0,2,3)", "omega2(upsilon(S,Z))"}).out == "In\n");
  CHECK(cli({"member", "(0)", "Z"}).code == 0);
  r = cli({"member", "(1,1)", "S"});
  CHECK(r.code == 1);
  CHECK(r.out == "Out\n");
  CHECK(cli({"member", "(0,20)", "zeta(S)"}).code == 3);
  const auto s = nlohmann::json::parse(cli({"member", "(1,1)", "S", "--format", "structured"}).out);
  CHECK(s["verdict"] == "Out");
}

TEST_CASE("cli words and subgroups") {
  CHECK(cli({"dconj", "a^(b0^2 b1^5 b2^3)", "--j", "1"}).out == "a^(b0^2 b1^6 b2^3)\n");
  CHECK(cli({"dconj", "a^(b0^2 b1^6 b2^3)", "--j", "1", "--inverse"}).out == "a^(b0^2 b1^5 b2^3)\n");
  CHECK(cli({"reduce", "a b b^-1"}).out == "a\n");
  CHECK(cli({"reduce", "b2", "--expanded"}).out == "b^(c^2)\n");
  const auto c = cli({"collect", "x2^-1 y1^3 y2 x1^2 x3", "--x", "x*", "--y", "y1,y2"});
  CHECK(c.out == "x2^-1\nx1^(y2^-1 y1^-3)\nx1^(y2^-1 y1^-3)\nx3^(y2^-1 y1^-3)\ntail: y1^3 y2\n");
  CHECK(cli({"collect", "x z", "--x", "x", "--y", "y"}).code == 4);
  CHECK(cli({"subgroup", "member", "a^6", "--gens", "a^2,a^3"}).code == 0);
  CHECK(cli({"subgroup", "member", "b", "--gens", "a"}).code == 1);
  CHECK(cli({"subgroup", "basis", "--gens", "a^2,a^3"}).out == "rank 1\na\n");
  CHECK(cli({"subgroup", "intersect", "--gens", "a", "--with", "b"}).out == "rank 0\n");
}

TEST_CASE("cli presentations") {
  const std::string path = "cli_test_demo.pres";
  {
    std::ofstream f(path);
    f << "gens: a b c l1 l2 l3\nrel: [a,b]\n";
  }
  auto r = cli({"present", "rope", "--k", path, "--lgens", "l1,l2,l3"});
  CHECK(r.code == 0);
  const auto p = parse_presentation(r.out);
  CHECK(p.relators.size() == 1 + 3);
  CHECK(p.gens.size() == 7);
  r = cli({"present", "hnn", "--base", path, "--letter", "u", "--pairs", "a=b,b=a"});
  CHECK(parse_presentation(r.out).relators.size() == 3);
  r = cli({"present", "amalgam", "--left", path, "--right", path, "--pairs", "a=a,b=b"});
  CHECK(parse_presentation(r.out).relators.size() == 4);
  CHECK(cli({"present", "amalgam", "--left", path, "--right", path, "--pairs", "a=a", "--no-rename"}).code == 4);
  CHECK(cli({"present", "catalog", "PSI"}).out == to_text(*catalog("PSI").presentation));
  CHECK(cli({"present", "catalog", "NOPE"}).code == 2);
  CHECK(cli({"present", "rope", "--k", "missing.pres", "--lgens", "a"}).code == 2);
  std::remove(path.c_str());
  // byte-identical output for identical invocations
  CHECK(cli({"present", "catalog", "THETA_AMALGAM"}).out == cli({"present", "catalog", "THETA_AMALGAM"}).out);
}

TEST_CASE("cli omega-walk and verify") {
  auto r = cli({"omega-walk", "(0,0,0,7,2,4,0,0,0,2,5,3,7,2,4)", "--m", "3", "--blocks", "(0),(2,5,3),(7,2,4)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6. Step2 by r:") != std::string::npos);
  CHECK(r.out.find("check: ok") != std::string::npos);
  CHECK(cli({"omega-walk", "(1,1,1)", "--m", "3", "--blocks", "(0)"}).code == 4);
  r = cli({"verify", "E42"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS E42", 0) == 0);
  r = cli({"verify", "all", "--format", "structured"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 25);
  CHECK(cli({"verify", "all"}).out == cli({"verify", "all"}).out);
  CHECK(cli({"verify", "EX99"}).code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"eval", "Z", "--nope"}).code == 2);
  CHECK(cli({"eval", "rho("}).code == 2);
  CHECK(cli({"eval", "Z", "--window", "3"}).code == 2);
  CHECK(cli({"eval", "Z", "--format", "xml"}).code == 2);
  CHECK(cli({"verify", "all", "--seed", "zz"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
