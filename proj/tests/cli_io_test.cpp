#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "paracyc/complex.hpp"
#include "paracyc/family.hpp"
#include "paracyc/io.hpp"

using namespace paracyc;
using njson = nlohmann::ordered_json;

namespace {

std::string cli() { return PARACYC_CLI_PATH; }
std::string fixdir() { return PARACYC_FIXDIR; }

int run(const std::string& args) {
  std::string cmd = cli() + " " + args + " > cli_io_last.log 2>&1";
  int st = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.ok) s += c.category + "/" + c.name + ": " + c.witness + "\n";
  return s;
}

}  // namespace

TEST_CASE("fixture files round-trip byte-identically and revalidate") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    std::string once = fixture_to_json(fixture_by_name(name));
    FixtureSet back = fixture_from_json(once);
    CHECK(fixture_to_json(back) == once);
    Report r = validate_fixture(back);
    INFO(failures(r));
    CHECK(r.all_ok());
  }
}

TEST_CASE("complex dumps round-trip byte-identically in both orientations") {
  FixtureSet fs = fixture_by_name("kc2");
  ParaComplex co = build_cocyclic(make_arealization(fs, "A1"), 3, "kc2 A1");
  ParaComplex ch = build_cyclic(make_brealization(fs, "B5"), 2, "kc2 B5");
  for (const ParaComplex* c : {&co, &ch}) {
    std::string once = complex_to_json(*c);
    ParaComplex back = complex_from_json(once);
    CHECK(complex_to_json(back) == once);
    CHECK(back.cochain == c->cochain);
    Report r = check_laws(back);
    INFO(failures(r));
    CHECK(r.all_ok());
    for (int n = 0; n <= c->top(); ++n) CHECK(back.t[n] == c->t[n]);
  }
}

TEST_CASE("scalar literals are strict, exact, and canonicalized") {
  auto tiny = [](const std::string& lit) {
    njson j;
    j["format"] = "paracyc-complex";
    j["name"] = "x";
    j["field"] = "rational";
    j["cochain"] = true;
    j["spaces"] = njson::array({njson::array({"a"})});
    j["d"] = njson::array({njson::array()});
    j["s"] = njson::array();
    j["t"] = njson::array({njson::array({njson::array({0, 0, lit})})});
    return j.dump();
  };
  CHECK_THROWS_AS(complex_from_json(tiny("1.5")), ParseError);
  CHECK_THROWS_AS(complex_from_json(tiny("1/0")), ParseError);
  CHECK_THROWS_AS(complex_from_json(tiny(" 1")), ParseError);
  CHECK_THROWS_AS(complex_from_json(tiny("1e3")), ParseError);
  CHECK_THROWS_AS(complex_from_json(tiny("")), ParseError);
  // non-canonical input is accepted but re-serializes in lowest terms
  ParaComplex c = complex_from_json(tiny("2/4"));
  CHECK(c.t[0].at(0, 0).str() == "1/2");
  CHECK(complex_to_json(c).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("malformed fixtures report the offending field") {
  std::string good = fixture_to_json(fixture_by_name("kc2"));
  auto doctored = [&](void (*tweak)(njson&)) {
    njson j = njson::parse(good);
    tweak(j);
    return j.dump();
  };
  CHECK_THROWS_WITH_AS(fixture_from_json("{\"format\":\"nope\"}"),
                       doctest::Contains("expected format"), ParseError);
  CHECK_THROWS_WITH_AS(fixture_from_json(doctored([](njson& j) { j["field"] = "real"; })),
                       doctest::Contains("unrecognized field"), ParseError);
  CHECK_THROWS_WITH_AS(
      fixture_from_json(doctored([](njson& j) { j["maps"]["B.mult"]["dom"] = {"B", "Q"}; })),
      doctest::Contains("unknown space \"Q\""), ParseError);
  CHECK_THROWS_WITH_AS(
      fixture_from_json(doctored(
          [](njson& j) { j["maps"]["B.mult"]["entries"][0][0] = "ghost"; })),
      doctest::Contains("unknown row label"), ParseError);
  // binding a map of the wrong shape to a role is caught before validation
  CHECK_THROWS_WITH_AS(
      fixture_from_json(doctored(
          [](njson& j) { j["bialgebroid"]["roles"]["counit"] = "B.mult"; })),
      doctest::Contains("expected"), ParseError);
  CHECK_THROWS_WITH_AS(
      fixture_from_json(doctored([](njson& j) {
        j["coefficients"].push_back(j["coefficients"][0]);
      })),
      doctest::Contains("duplicate coefficient"), ParseError);
  CHECK_THROWS_WITH_AS(fixture_from_json("[1, 2"), doctest::Contains("json"), ParseError);
}

TEST_CASE("the cli validates, builds, dumps, and re-checks deterministically") {
  std::string kc2 = fixdir() + "/kc2.json";
  CHECK(run("validate " + kc2) == 0);
  CHECK(run("build " + kc2 + " --family A1 --degree 3 --dump t1.json --report r1.json") == 0);
  CHECK(run("build " + kc2 + " --family A1 --degree 3 --dump t2.json --report r2.json") == 0);
  CHECK(slurp("t1.json") == slurp("t2.json"));
  CHECK(slurp("r1.json") == slurp("r2.json"));
  // re-ingesting a dump reproduces it byte for byte and re-checks green
  CHECK(run("check t1.json --dump t3.json --report r3.json") == 0);
  CHECK(slurp("t1.json") == slurp("t3.json"));
  njson r1 = njson::parse(slurp("r1.json"));
  njson r3 = njson::parse(slurp("r3.json"));
  CHECK(r1["checks"] == r3["checks"]);
  CHECK(r1["summary"]["failed"] == 0);
  CHECK(r1["command"] != r3["command"]);
}

TEST_CASE("the cli surfaces duality over dumped towers") {
  std::string kc2 = fixdir() + "/kc2.json";
  REQUIRE(run("build " + kc2 + " --family A1 --degree 2 --dump co.json") == 0);
  CHECK(run("dualize hat co.json --dump dual.json") == 0);
  ParaComplex d = complex_from_json(slurp("dual.json"));
  CHECK_FALSE(d.cochain);
  CHECK(check_laws(d).all_ok());
  // a singular twist is refused with the offending degree
  ParaComplex c = complex_from_json(slurp("co.json"));
  c.t[1] = LinMap::zero(c.fld, c.Z[1], c.Z[1]);
  spill("sing.json", complex_to_json(c));
  CHECK(run("dualize hat sing.json --report rs.json") == 1);
  njson rs = njson::parse(slurp("rs.json"));
  bool found = false;
  for (const auto& rec : rs["checks"])
    if (rec["name"] == "t invertible n=1" && rec["ok"] == false) found = true;
  CHECK(found);
  CHECK(run("dualize tau " + kc2 + " --family A1 --degree 2") == 0);
  CHECK(run("dualize pairing 3 " + kc2 + " --degree 1") == 0);
}

TEST_CASE("the cli rejects impossible requests without faking a report") {
  std::string kc2 = fixdir() + "/kc2.json";
  CHECK(run("build " + kc2 + " --family A3 --coeff mod_reg_r --degree 1") == 2);
  CHECK(run("build " + kc2 + " --family C9 --degree 1") == 2);
  CHECK(run("validate does_not_exist.json") == 2);
  spill("broken.json", "{\"format\": ");
  CHECK(run("validate broken.json") == 2);
}

TEST_CASE("a broken comultiplication fails validation with a witness") {
  njson j = njson::parse(fixture_to_json(fixture_by_name("kc2")));
  // perturb one structure constant of the comultiplication
  j["maps"]["B.comult"]["entries"][0][2] = "2";
  spill("skew.json", j.dump() + "\n");
  CHECK(run("validate skew.json --report rskew.json") == 1);
  njson r = njson::parse(slurp("rskew.json"));
  CHECK(r["summary"]["failed"].get<int>() > 0);
  bool witnessed = false;
  for (const auto& rec : r["checks"])
    if (rec["ok"] == false && !rec["witness"].get<std::string>().empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("the shipped fixture files match the generator") {
  REQUIRE(run("fixtures .") == 0);
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    CHECK(slurp(name + ".json") == slurp(fixdir() + "/" + name + ".json"));
  }
}
