// Command-line front end: validate fixture files, build para-(co)cyclic
// towers over them, check the simplicial/cyclic laws, and run the duality
// constructions (Connes dual, tau comparison, antipode pairings).
//
// Exit status: 0 when every check passed, 1 when some check failed,
// 2 on errors (unreadable input, malformed file, impossible request).
// Reports and dumps contain no timing, so identical runs write identical
// bytes; elapsed time goes to stdout only.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paracyc/duality.hpp"
#include "paracyc/family.hpp"
#include "paracyc/io.hpp"

using namespace paracyc;

namespace {

struct Out {
  std::string report_path;
  bool verbose = false;
};

int finish(const Report& r, const std::string& command, const Out& out) {
  int failed = 0;
  for (const auto& c : r.checks) {
    if (!c.ok) ++failed;
    if (!c.ok || out.verbose) {
      std::cout << (c.ok ? "[ ok ] " : "[FAIL] ") << c.category << " | " << c.name;
      if (!c.witness.empty()) std::cout << " | " << c.witness;
      std::cout << "\n";
    }
  }
  std::cout << r.checks.size() - failed << " passed, " << failed << " failed\n";
  if (!out.report_path.empty()) spill(out.report_path, report_to_json(r, command));
  return failed == 0 ? 0 : 1;
}

// Smallest e in 1..bound with m^e = id, else 0.
int power_order(const LinMap& m, int bound) {
  LinMap id = LinMap::identity(m.field(), m.dom());
  LinMap acc = m;
  for (int e = 1; e <= bound; ++e) {
    if (acc == id) return e;
    acc = acc * m;
  }
  return 0;
}

void antipode_order_probe(Report& r, const Bialgebroid& B) {
  if (!B.antipode) return;
  int e = power_order(*B.antipode, 64);
  r.add("antipode", "order", true,
        e ? "S^" + std::to_string(e) + " = id"
          : "no power S^e = id for e <= 64");
}

void twist_order_probe(Report& r, const ParaComplex& c) {
  for (int n = 0; n <= c.top(); ++n) {
    int bound = 4 * (n + 1);
    int e = t_order(c, n, bound);
    std::string nm = "order n=" + std::to_string(n);
    if (e == n + 1)
      r.add("twist", nm, true, "t^" + std::to_string(e) + " = id (cyclic)");
    else if (e > 0)
      r.add("twist", nm, true, "t^" + std::to_string(e) + " = id");
    else
      r.add("twist", nm, true, "no t^e = id for e <= " + std::to_string(bound));
  }
}

ParaComplex build_tower(const FixtureSet& fs, const std::string& family,
                        const std::string& coeff, int degree) {
  std::string name = fs.name + " " + family;
  if (family_is_cocyclic(family))
    return build_cocyclic(make_arealization(fs, family, coeff), degree, name);
  return build_cyclic(make_brealization(fs, family, coeff), degree, name);
}

int cmd_validate(const std::string& file, const Out& out) {
  FixtureSet fs = fixture_from_json(slurp(file));
  Report r = validate_fixture(fs);
  antipode_order_probe(r, fs.B);
  return finish(r, "validate " + file, out);
}

int cmd_build(const std::string& file, const std::string& family, const std::string& coeff,
              int degree, const std::string& dump, const Out& out) {
  FixtureSet fs = fixture_from_json(slurp(file));
  ParaComplex c = build_tower(fs, family, coeff, degree);
  Report r = check_laws(c);
  twist_order_probe(r, c);
  if (!dump.empty()) spill(dump, complex_to_json(c));
  std::string command = "build " + file + " --family " + family +
                        (coeff.empty() ? "" : " --coeff " + coeff) + " --degree " +
                        std::to_string(degree);
  return finish(r, command, out);
}

int cmd_check(const std::string& file, const std::string& dump, const Out& out) {
  ParaComplex c = complex_from_json(slurp(file));
  Report r = check_laws(c);
  twist_order_probe(r, c);
  if (!dump.empty()) spill(dump, complex_to_json(c));
  return finish(r, "check " + file, out);
}

int cmd_hat(const std::string& file, const std::string& dump, const Out& out) {
  ParaComplex c = complex_from_json(slurp(file));
  Report r;
  bool invertible = true;
  for (int n = 0; n <= c.top(); ++n) {
    std::string nm = "t invertible n=" + std::to_string(n);
    try {
      inverse(c.t[n]);
      r.add("dual", nm, true);
    } catch (const SingularMap& e) {
      r.add("dual", nm, false, e.what());
      invertible = false;
    }
  }
  if (!invertible)
    return finish(r, "dualize hat " + file, out);
  ParaComplex d = cyclic_dual(c);
  r.merge(check_laws(d));
  ParaComplex back = cyclic_dual(d);
  bool round = true;
  std::string witness;
  for (int n = 0; n <= c.top() && round; ++n) {
    if (!(back.t[n] == c.t[n])) { round = false; witness = "t n=" + std::to_string(n); }
    for (size_t k = 0; round && n >= 1 && k < c.d[n].size(); ++k)
      if (!(back.d[n][k] == c.d[n][k]))
        { round = false; witness = "d n=" + std::to_string(n); }
    for (size_t k = 0; round && n < c.top() && k < c.s[n].size(); ++k)
      if (!(back.s[n][k] == c.s[n][k]))
        { round = false; witness = "s n=" + std::to_string(n); }
  }
  r.add("dual", "hat hat = id", round, witness);
  if (!dump.empty()) spill(dump, complex_to_json(d));
  return finish(r, "dualize hat " + file, out);
}

int cmd_tau(const std::string& file, const std::string& family, const std::string& coeff,
            int degree, const Out& out) {
  FixtureSet fs = fixture_from_json(slurp(file));
  if (!family_is_cocyclic(family))
    throw KindMismatch("tau compares a para-cocyclic family with its dual; got " + family);
  ARealization a = make_arealization(fs, family, coeff);
  TauBridge bridge = tau_bridge(a, degree);
  std::string command = "dualize tau " + file + " --family " + family +
                        (coeff.empty() ? "" : " --coeff " + coeff) + " --degree " +
                        std::to_string(degree);
  return finish(bridge.report, command, out);
}

int cmd_pairing(int pair, const std::string& file, int degree, const Out& out) {
  FixtureSet fs = fixture_from_json(slurp(file));
  Report r = pairing_check(fs, pair, degree);
  std::string command = "dualize pairing " + std::to_string(pair) + " " + file +
                        " --degree " + std::to_string(degree);
  return finish(r, command, out);
}

int cmd_fixtures(const std::string& outdir) {
  for (const std::string& name : fixture_names()) {
    std::string path = outdir + "/" + name + ".json";
    spill(path, fixture_to_json(fixture_by_name(name)));
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"para-(co)cyclic module workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Out out;
  app.add_option("--report", out.report_path, "write the check report as JSON");
  app.add_flag("-v,--verbose", out.verbose, "print passing checks too");

  std::string file, family, coeff, dump;
  int degree = 2, pair = 1;

  auto* validate = app.add_subcommand("validate", "check every fixture axiom");
  validate->fallthrough();
  validate->add_option("file", file, "fixture file")->required();

  auto* build = app.add_subcommand("build", "build a tower and check its laws");
  build->fallthrough();
  build->add_option("file", file, "fixture file")->required();
  build->add_option("--family", family, "family id (A1..A8, B1..B8)")->required();
  build->add_option("--coeff", coeff, "override the module coefficient");
  build->add_option("--degree", degree, "top degree of the tower");
  build->add_option("--dump", dump, "write the tower as JSON");

  auto* check = app.add_subcommand("check", "re-check a dumped tower");
  check->fallthrough();
  check->add_option("file", file, "tower dump")->required();
  check->add_option("--dump", dump, "re-dump the tower (round-trip probe)");

  auto* dualize = app.add_subcommand("dualize", "duality constructions");
  dualize->fallthrough();
  dualize->require_subcommand(1);
  auto* hat = dualize->add_subcommand("hat", "Connes dual of a dumped tower");
  hat->fallthrough();
  hat->add_option("file", file, "tower dump")->required();
  hat->add_option("--dump", dump, "write the dual tower as JSON");
  auto* tau = dualize->add_subcommand("tau", "compare a lifted tower with the dual");
  tau->fallthrough();
  tau->add_option("file", file, "fixture file")->required();
  tau->add_option("--family", family, "para-cocyclic family id")->required();
  tau->add_option("--coeff", coeff, "override the module coefficient");
  tau->add_option("--degree", degree, "top degree of the comparison");
  auto* pairing = dualize->add_subcommand("pairing", "antipode pairing of twin families");
  pairing->fallthrough();
  pairing->add_option("pair", pair, "pairing id (1..8)")->required();
  pairing->add_option("file", file, "fixture file")->required();
  pairing->add_option("--degree", degree, "top degree of the comparison");

  auto* fixtures = app.add_subcommand("fixtures", "write the built-in fixture files");
  fixtures->fallthrough();
  fixtures->add_option("outdir", file, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  int status = 2;
  try {
    if (app.got_subcommand(validate)) status = cmd_validate(file, out);
    else if (app.got_subcommand(build)) status = cmd_build(file, family, coeff, degree, dump, out);
    else if (app.got_subcommand(check)) status = cmd_check(file, dump, out);
    else if (app.got_subcommand(fixtures)) status = cmd_fixtures(file);
    else if (dualize->got_subcommand(hat)) status = cmd_hat(file, dump, out);
    else if (dualize->got_subcommand(tau)) status = cmd_tau(file, family, coeff, degree, out);
    else if (dualize->got_subcommand(pairing)) status = cmd_pairing(pair, file, degree, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  std::cout << "elapsed " << ms << "ms\n";
  return status;
}
