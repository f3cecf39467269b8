#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "paracyc/hopf.hpp"

using namespace paracyc;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.ok) s += c.category + "/" + c.name + ": " + c.witness + "\n";
  return s;
}

bool has_category(const Report& r, const std::string& cat) {
  auto cats = r.failed_categories();
  return std::find(cats.begin(), cats.end(), cat) != cats.end();
}

}  // namespace

TEST_CASE("builtin fixtures satisfy all structure axioms") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    FixtureSet fs = fixture_by_name(name);
    Report r = validate_fixture(fs);
    INFO(failures(r));
    CHECK(r.all_ok());
    CHECK(r.failed() == 0);
  }
}

TEST_CASE("sweedler structure constants") {
  Bialgebroid B = fixture_sweedler().B;
  REQUIRE(B.carrier.labels == std::vector<std::string>{"1", "x", "g", "gx"});
  // x g = -g x, x^2 = 0
  CHECK(B.mult.at(3, 1 * 4 + 2) == Scalar(QQ, -1));
  CHECK(B.mult.at(3, 2 * 4 + 1) == Scalar(QQ, 1));
  for (int r = 0; r < 4; ++r) CHECK(B.mult.at(r, 1 * 4 + 1).is_zero());
  // D(x) = x (x) 1 + g (x) x and the four monomials give 6 entries total
  CHECK(B.comult.at(1 * 4 + 0, 1) == Scalar(QQ, 1));
  CHECK(B.comult.at(2 * 4 + 1, 1) == Scalar(QQ, 1));
  CHECK(B.comult.nnz() == 6);
  // S(x) = -gx, S(gx) = x; S has order 4 and S^{-1} = S^3
  const LinMap& S = *B.antipode;
  CHECK(S.at(3, 1) == Scalar(QQ, -1));
  CHECK(S.at(1, 3) == Scalar(QQ, 1));
  LinMap S2 = S * S;
  CHECK_FALSE(S2.is_identity());
  CHECK((S2 * S2).is_identity());
  CHECK(*B.antipode_inv == S2 * S);
}

TEST_CASE("taft algebra at a cube root of unity over gf(7)") {
  Bialgebroid B = fixture_taft().B;
  Field f = gf(7);
  REQUIRE(B.carrier.dim() == 9);
  int x = 1, x2 = 2, g = 3, gx = 4, g2 = 6;
  // x g = 2 g x (2^3 = 1 mod 7), x^3 = 0
  CHECK(B.mult.at(gx, x * 9 + g) == Scalar(f, 2));
  CHECK(B.mult.at(gx, g * 9 + x) == Scalar(f, 1));
  for (int r = 0; r < 9; ++r) CHECK(B.mult.at(r, x2 * 9 + x).is_zero());
  // D(x^2) = x^2 (x) 1 + (2+1) gx (x) x + g^2 (x) x^2
  CHECK(B.comult.at(x2 * 9 + 0, x2) == Scalar(f, 1));
  CHECK(B.comult.at(gx * 9 + x, x2) == Scalar(f, 3));
  CHECK(B.comult.at(g2 * 9 + x2, x2) == Scalar(f, 1));
  // the antipode has order 6 = 2n
  const LinMap& S = *B.antipode;
  LinMap p = S;
  int ord = 1;
  while (!p.is_identity() && ord < 12) {
    p = p * S;
    ++ord;
  }
  CHECK(ord == 6);
}

TEST_CASE("symmetric group algebra is noncommutative with involutive antipode") {
  Bialgebroid B = fixture_ks3().B;
  const FinSpace& H = B.carrier;
  REQUIRE(H.dim() == 6);
  CHECK_FALSE(B.mult == B.mult * reorder(QQ, {H, H}, {1, 0}));
  CHECK((*B.antipode) * (*B.antipode) == LinMap::identity(QQ, H));
}

TEST_CASE("coadjoint coaction: trivial for group algebras, not for sweedler") {
  FixtureSet g = fixture_kc2();
  LinMap trivial_co =
      kron(g.B.unit, LinMap::identity(QQ, g.B.carrier))
          .with_spaces(g.B.carrier, tensor_space(g.B.carrier, g.B.carrier));
  CHECK(g.coeff("ccoring_coadj").obj.map("blcoact") == trivial_co);

  FixtureSet s = fixture_sweedler();
  const LinMap& cs = s.coeff("ccoring_coadj").obj.map("blcoact");
  // delta(x) = x (x) 1 - x (x) g + g (x) x
  CHECK(cs.at(1 * 4 + 0, 1) == Scalar(QQ, 1));
  CHECK(cs.at(1 * 4 + 2, 1) == Scalar(QQ, -1));
  CHECK(cs.at(2 * 4 + 1, 1) == Scalar(QQ, 1));
}

TEST_CASE("contraaction duals of the regular comodules") {
  FixtureSet fs = fixture_kc2();
  // for a group algebra the dual contraaction reads off the diagonal
  const LinMap& al = fs.coeff("ctr_dual_l").obj.map("bctr");
  CHECK(al.nnz() == 2);
  CHECK(al.at(0, 0) == Scalar(QQ, 1));
  CHECK(al.at(1, 1 * 2 + 1) == Scalar(QQ, 1));

  // sweedler's is not diagonal: alpha(F)(x') picks up F(1')(x') and F(x')(g')
  FixtureSet sw = fixture_sweedler();
  const LinMap& as = sw.coeff("ctr_dual_l").obj.map("bctr");
  CHECK(as.at(1, 1 * 4 + 0) == Scalar(QQ, 1));
  CHECK(as.at(1, 2 * 4 + 1) == Scalar(QQ, 1));
}

TEST_CASE("side flips produce valid structures of the flipped kind") {
  for (const std::string fname : {"kc2", "sweedler", "taft3"}) {
    CAPTURE(fname);
    FixtureSet fs = fixture_by_name(fname);
    for (const std::string cname : {"mod_reg_l", "comod_reg_r", "ctr_dual_l"}) {
      CAPTURE(cname);
      const Coefficient& c = fs.coeff(cname);
      Coefficient fc = flip_side(fs.B, c);
      CHECK(fc.kind != c.kind);
      Report r = validate_coefficient(fs.B, fc);
      INFO(failures(r));
      CHECK(r.all_ok());
      Coefficient back = flip_side(fs.B, fc);
      CHECK(back.kind == c.kind);
      if (fname == "kc2") {
        // S^2 = id here, so flipping twice restores the maps exactly
        for (const auto& [k, m] : c.obj.maps) CHECK(back.obj.map(k) == m);
      }
    }
  }
}

TEST_CASE("flip_side needs hopf data over the ground base") {
  FixtureSet fs = fixture_lenv();
  CHECK_THROWS_AS(flip_side(fs.B, fs.coeff("mcomod")), KindMismatch);
}

TEST_CASE("enveloping bialgebroid of k x k") {
  FixtureSet fs = fixture_lenv();
  const Bialgebroid& B = fs.B;
  REQUIRE(B.carrier.dim() == 4);
  CHECK_FALSE(B.base.trivial());
  CHECK_FALSE(B.src == B.tgt);
  CHECK((*B.antipode) * B.src == B.tgt);
  // the glue over L = k x k cuts B (x) B from 16 down to 8 dimensions
  Realized Bb = B.as_bimodule();
  Pres Q = tensor_over_base(B.base, Bb, Bb);
  CHECK(Q.dim() == 8);
  // a comultiplication representative supported on matching middle legs is
  // glue-equivalent to the shipped one
  LinMap alt = LinMap::zero(QQ, B.carrier, tensor_space(B.carrier, B.carrier));
  Scalar one = Scalar::one(QQ);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int c = 0; c < 2; ++c)
        alt.add_to((i * 2 + c) * 4 + (c * 2 + j), i * 2 + j, one);
  CHECK_FALSE(alt == B.comult);
  CHECK(Q.to_space() * alt == Q.to_space() * B.comult);
}

TEST_CASE("validators localize broken axioms") {
  SUBCASE("broken product") {
    Bialgebroid B = fixture_sweedler().B;
    LinMap m = B.mult;
    m.add_to(0, 1 * 4 + 1, Scalar(QQ, 1));  // x * x := 1
    B.mult = m;
    Report r = validate_bialgebroid(B);
    CHECK_FALSE(r.all_ok());
    CHECK(has_category(r, "algebra"));
  }
  SUBCASE("broken comultiplication") {
    Bialgebroid B = fixture_sweedler().B;
    LinMap d = B.comult;
    d.add_to(0, 1, Scalar(QQ, 1));  // D(x) += 1 (x) 1
    B.comult = d;
    Report r = validate_bialgebroid(B);
    CHECK_FALSE(r.all_ok());
    CHECK_FALSE(has_category(r, "algebra"));
    CHECK_FALSE(has_category(r, "srctgt"));
    CHECK((has_category(r, "coring") || has_category(r, "compat")));
  }
  SUBCASE("broken antipode leaves the bialgebra intact") {
    Bialgebroid B = fixture_sweedler().B;
    LinMap s = *B.antipode;
    s.add_to(3, 1, Scalar(QQ, 2));  // S(x) := +gx
    B.antipode = s;
    B.antipode_inv = inverse(s);
    CHECK(validate_bialgebroid(B).all_ok());
    Report r = validate_hopf(B);
    CHECK_FALSE(r.all_ok());
    CHECK(r.failed_categories() == std::vector<std::string>{"antipode"});
  }
  SUBCASE("broken module action") {
    FixtureSet fs = fixture_kc2();
    Coefficient c = fs.coeff("mod_reg_l");
    LinMap a = c.obj.map("blact");
    a.add_to(0, 0, Scalar(QQ, 1));
    c.obj.maps["blact"] = a;
    Report r = validate_coefficient(fs.B, c);
    CHECK_FALSE(r.all_ok());
    CHECK(has_category(r, "module"));
  }
  SUBCASE("broken coaction") {
    FixtureSet fs = fixture_kc2();
    Coefficient c = fs.coeff("comod_reg_l");
    LinMap a = c.obj.map("blcoact");
    a.add_to(1 * 2 + 0, 0, Scalar(QQ, 1));  // rho(1) += g (x) 1
    c.obj.maps["blcoact"] = a;
    Report r = validate_coefficient(fs.B, c);
    CHECK_FALSE(r.all_ok());
    CHECK(has_category(r, "comodule"));
  }
}
