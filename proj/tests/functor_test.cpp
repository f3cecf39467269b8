#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "paracyc/family.hpp"

using namespace paracyc;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.ok) s += c.category + "/" + c.name + ": " + c.witness + "\n";
  return s;
}

// Multiplication table of a group-algebra fixture, read off the structure
// constants; tab[i][j] is the index of basis_i * basis_j.
std::vector<std::vector<int>> group_table(const Bialgebroid& B) {
  int n = B.carrier.dim();
  std::vector<std::vector<int>> tab(n, std::vector<int>(n, -1));
  for (int r = 0; r < B.mult.rows(); ++r)
    for (const auto& [c, v] : B.mult.row(r)) tab[c / n][c % n] = r;
  return tab;
}

Report engine_report(const ARealization& a, const std::vector<ObjP>& objs) {
  Report r;
  r.merge(validate_monad(a.Tl, objs, "monad_l"));
  r.merge(validate_monad(a.Tr, objs, "monad_r"));
  r.merge(validate_distlaw(a.Tl, a.Tr, a.Phi, objs, "distlaw"));
  r.merge(validate_module_functor(a, objs));
  return r;
}

}  // namespace

TEST_CASE("all sixteen families satisfy the functor laws on kC2") {
  FixtureSet fs = fixture_kc2();
  for (const std::string& id : family_ids()) {
    CAPTURE(id);
    ARealization a = family_is_cocyclic(id) ? make_arealization(fs, id)
                                            : dualize(make_brealization(fs, id));
    Report r = engine_report(a, tower_objects(a, 3));
    INFO(failures(r));
    CHECK(r.all_ok());
  }
}

TEST_CASE("chain-side comonads satisfy their laws directly") {
  FixtureSet fs = fixture_kc2();
  for (const char* id : {"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8"}) {
    CAPTURE(id);
    BRealization b = make_brealization(fs, id);
    std::vector<ObjP> objs{b.cup, b.Sl.F.ob(b.cup)};
    Report r;
    r.merge(validate_comonad(b.Sl, objs, "comonad_l"));
    r.merge(validate_comonad(b.Sr, objs, "comonad_r"));
    INFO(failures(r));
    CHECK(r.all_ok());
  }
}

TEST_CASE("representative families pass on the Hopf and finite-field fixtures") {
  for (std::string fixture : {"sweedler", "taft3"}) {
    FixtureSet fs = fixture_by_name(fixture);
    int count = fixture == "taft3" ? 1 : 2;  // dim 9 carrier: keep the tower shallow
    for (std::string id : {"A1", "A2", "A3", "A7"}) {
      CAPTURE(fixture);
      CAPTURE(id);
      ARealization a = make_arealization(fs, id);
      Report r = engine_report(a, tower_objects(a, count));
      INFO(failures(r));
      CHECK(r.all_ok());
    }
    for (std::string id : {"B5", "B7"}) {
      CAPTURE(fixture);
      CAPTURE(id);
      ARealization a = dualize(make_brealization(fs, id));
      Report r = engine_report(a, tower_objects(a, count));
      INFO(failures(r));
      CHECK(r.all_ok());
    }
  }
}

TEST_CASE("the enveloping-base family glues tensor products over the base") {
  FixtureSet fs = fixture_lenv();
  ARealization a = make_arealization(fs, "A1");
  // A (x)_L M collapses from dim 4 to dim 2 over L = k x k.
  CHECK(a.Tl.F.ob(a.cup)->space().dim() == 2);
  CHECK(a.Tr.F.ob(a.cup)->space().dim() == 2);
  Report r = engine_report(a, tower_objects(a, 4));
  INFO(failures(r));
  CHECK(r.all_ok());
}

TEST_CASE("functor application is memoized per object") {
  FixtureSet fs = fixture_kc2();
  ARealization a = make_arealization(fs, "A1");
  CHECK(a.Tl.F.ob(a.cup).get() == a.Tl.F.ob(a.cup).get());
  ARealization copy = a;
  CHECK(copy.Tl.F.ob(a.cup).get() == a.Tl.F.ob(a.cup).get());
  CHECK(a.Tl.F.ob(a.cup).get() != a.Tr.F.ob(a.cup).get());
}

TEST_CASE("conjugation twists the rebracketing law on kS3 and stays lawful") {
  FixtureSet fs = fixture_ks3();
  Field f = fs.B.fld;
  int n = fs.B.carrier.dim();
  auto tab = group_table(fs.B);
  int e = -1;
  for (int r = 0; r < fs.B.unit.rows(); ++r)
    if (!fs.B.unit.row(r).empty()) e = r;
  REQUIRE(e >= 0);
  std::vector<int> inv(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (tab[g][h] == e) inv[g] = h;

  ARealization a = make_arealization(fs, "A1");
  // psi(g (x) x (x) h) = h^{-1} g h (x) x (x) h
  NatFn psi = [=](const ObjP& x) {
    int dx = x->space().dim();
    std::vector<std::tuple<int, int, Scalar>> es;
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int c = tab[tab[inv[h]][g]][h];
        for (int xi = 0; xi < dx; ++xi)
          es.emplace_back((c * dx + xi) * n + h, (g * dx + xi) * n + h, Scalar(f, 1));
      }
    ObjP src = a.Tr.F.ob(a.Tl.F.ob(x));
    ObjP tgt = a.Tl.F.ob(a.Tr.F.ob(x));
    return LinMap::from_entries(f, src->space(), tgt->space(), es);
  };
  std::vector<ObjP> objs = tower_objects(a, 2);
  Report lawful = validate_distlaw(a.Tl, a.Tr, psi, objs, "twisted");
  INFO(failures(lawful));
  CHECK(lawful.all_ok());

  // The identity is a morphism of both monads but does not intertwine the
  // twisted law with the plain one: exactly the compatibility square fails.
  NatFn ql = [=](const ObjP& x) { return LinMap::identity(f, a.Tl.F.ob(x)->space()); };
  NatFn qr = [=](const ObjP& x) { return LinMap::identity(f, a.Tr.F.ob(x)->space()); };
  Report bad =
      validate_distlaw_morphism(a.Tl, a.Tr, psi, a.Tl, a.Tr, a.Phi, ql, qr, objs, "compare");
  CHECK_FALSE(bad.all_ok());
  int dist_failures = 0;
  for (const auto& ch : bad.checks) {
    if (ch.name.rfind("distcompat", 0) == 0) {
      if (!ch.ok) ++dist_failures;
    } else {
      CHECK(ch.ok);
    }
  }
  CHECK(dist_failures > 0);
}

TEST_CASE("the sign automorphism is a distributive-law morphism on kC2") {
  FixtureSet fs = fixture_kc2();
  Field f = fs.B.fld;
  ARealization a = make_arealization(fs, "A1");
  LinMap sigma = LinMap::from_entries(f, fs.B.carrier, fs.B.carrier,
                                      {{0, 0, Scalar(f, 1)}, {1, 1, Scalar(f, -1)}});
  NatFn ql = [=](const ObjP& x) { return kron(sigma, LinMap::identity(f, x->space())); };
  NatFn qr = [=](const ObjP& x) { return kron(LinMap::identity(f, x->space()), sigma); };
  Report r = validate_distlaw_morphism(a.Tl, a.Tr, a.Phi, a.Tl, a.Tr, a.Phi, ql, qr,
                                       tower_objects(a, 2), "sign");
  INFO(failures(r));
  CHECK(r.all_ok());
}
