#include <algorithm>
#include <array>

#include "paracyc/hopf.hpp"

namespace paracyc {

namespace {

using Entries = std::vector<std::tuple<int, int, Scalar>>;

Bialgebroid group_algebra(const std::string& name, Field f,
                          const std::vector<std::string>& labels,
                          const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(labels.size());
  FinSpace H = FinSpace::of(labels);
  Scalar one = Scalar::one(f);
  Entries me, de, ee, se;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) me.push_back({table[i][j], i * n + j, one});
    de.push_back({i * n + i, i, one});
    ee.push_back({0, i, one});
    for (int j = 0; j < n; ++j)
      if (table[i][j] == 0) se.push_back({j, i, one});
  }
  Bialgebroid b = Bialgebroid::bialgebra(
      name, f, H, LinMap::from_entries(f, tensor_space(H, H), H, me),
      LinMap::from_entries(f, FinSpace::line(), H, {{0, 0, one}}),
      LinMap::from_entries(f, H, tensor_space(H, H), de),
      LinMap::from_entries(f, H, FinSpace::line(), ee));
  b.antipode = LinMap::from_entries(f, H, H, se);
  b.antipode_inv = b.antipode;
  return b;
}

// The n^2-dimensional algebra  g^n = 1, x^n = 0, x g = omega g x  with
//   D(g) = g (x) g,  D(x) = x (x) 1 + g (x) x,  eps(g) = 1, eps(x) = 0,
//   S(g) = g^{n-1},  S(x) = -g^{n-1} x,
// for omega a primitive n-th root of unity. n = 2, omega = -1 is the
// 4-dimensional small quantum group; comultiplication and antipode on the
// monomial basis are generated by multiplying out the values on g and x.
Bialgebroid taft_like(const std::string& name, Field f, int n, const Scalar& omega) {
  int N = n * n;  // basis g^i x^j at i*n + j
  std::vector<std::string> labels(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string s;
      if (i >= 1) s += i == 1 ? "g" : "g" + std::to_string(i);
      if (j >= 1) s += j == 1 ? "x" : "x" + std::to_string(j);
      labels[i * n + j] = s.empty() ? "1" : s;
    }
  FinSpace H = FinSpace::of(labels);
  Scalar one = Scalar::one(f);
  std::vector<Scalar> pw(static_cast<size_t>(N) + 1, one);
  for (size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * omega;

  Entries me;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          if (j + j2 >= n) continue;
          me.push_back({((i + i2) % n) * n + (j + j2),
                        (i * n + j) * N + (i2 * n + j2), pw[j * i2]});
        }
  LinMap mult = LinMap::from_entries(f, tensor_space(H, H), H, me);
  LinMap unit = LinMap::from_entries(f, FinSpace::line(), H, {{0, 0, one}});
  Entries ee;
  for (int i = 0; i < n; ++i) ee.push_back({0, i * n, one});
  LinMap counit = LinMap::from_entries(f, H, FinSpace::line(), ee);

  FinSpace HH = tensor_space(H, H);
  LinMap m2 = kron(mult, mult) * reorder(f, {H, H, H, H}, {0, 2, 1, 3});
  auto prod = [&f](const LinMap& m, const LinMap& a, const LinMap& b) {
    return (m * kron(a, b)).with_spaces(FinSpace::line(), m.cod());
  };
  auto append_col = [](Entries& es, const LinMap& colv, int col) {
    for (int r = 0; r < colv.rows(); ++r)
      for (const auto& [c, v] : colv.row(r)) es.push_back({r, col, v});
  };

  int gi_ = n, xi_ = 1;
  LinMap dx = LinMap::from_entries(
      f, FinSpace::line(), HH, {{xi_ * N + 0, 0, one}, {gi_ * N + xi_, 0, one}});
  std::vector<LinMap> dxp{LinMap::from_entries(f, FinSpace::line(), HH, {{0, 0, one}})};
  for (int j = 1; j < n; ++j) dxp.push_back(prod(m2, dxp[j - 1], dx));
  Entries de;
  for (int i = 0; i < n; ++i) {
    int gi = i * n;
    LinMap dgi = LinMap::from_entries(f, FinSpace::line(), HH, {{gi * N + gi, 0, one}});
    for (int j = 0; j < n; ++j) append_col(de, prod(m2, dgi, dxp[j]), i * n + j);
  }
  LinMap comult = LinMap::from_entries(f, H, HH, de);

  LinMap sx = LinMap::from_entries(f, FinSpace::line(), H, {{(n - 1) * n + 1, 0, -one}});
  std::vector<LinMap> sxp{LinMap::from_entries(f, FinSpace::line(), H, {{0, 0, one}})};
  for (int j = 1; j < n; ++j) sxp.push_back(prod(mult, sxp[j - 1], sx));
  Entries se;
  for (int i = 0; i < n; ++i) {
    LinMap sgi =
        LinMap::from_entries(f, FinSpace::line(), H, {{((n - i) % n) * n, 0, one}});
    // anti-multiplicative: S(g^i x^j) = S(x)^j S(g)^i
    for (int j = 0; j < n; ++j) append_col(se, prod(mult, sxp[j], sgi), i * n + j);
  }
  Bialgebroid b = Bialgebroid::bialgebra(name, f, H, mult, unit, comult, counit);
  b.antipode = LinMap::from_entries(f, H, H, se);
  b.antipode_inv = inverse(*b.antipode);
  return b;
}

FinSpace dual_space(const FinSpace& s) {
  std::vector<std::string> ls;
  ls.reserve(s.labels.size());
  for (const auto& l : s.labels) ls.push_back(l + "'");
  return FinSpace::of(ls);
}

// Dual contraaction of a right coaction rho : X -> X (x) B on X* = D:
// alpha(F) = (x |-> F(x^(1))(x^(0))). In coordinates this is the transpose of
// rho read through the Hom(B, D) indexing (D-coordinate slow), a left
// contraaction.
LinMap contra_of_right(const LinMap& rho, const FinSpace& bc, const FinSpace& d) {
  return rho.transpose().with_spaces(hom_space(bc, d), d);
}

// Dual of a left coaction lam : X -> B (x) X, a right contraaction on X*.
LinMap contra_of_left(const LinMap& lam, const FinSpace& bc, const FinSpace& d) {
  int nb = bc.dim(), nx = d.dim();
  Entries es;
  for (int r = 0; r < lam.rows(); ++r)
    for (const auto& [c, v] : lam.row(r))
      es.push_back({c, (r % nx) * nb + (r / nx), v});
  return LinMap::from_entries(lam.field(), hom_space(bc, d), d, es);
}

// The canonical coefficient objects every ground-base Hopf fixture ships:
// regular (co)modules on both sides, the trivial and adjoint module-algebra
// structures on B itself, B as a module coring and (with the coadjoint
// coaction) as a comodule coring, and the linear duals of the regular
// comodules as contramodules.
void add_standard_coeffs(FixtureSet& fs) {
  const Bialgebroid& B = fs.B;
  const Field f = B.fld;
  const FinSpace& H = B.carrier;
  LinMap idH = LinMap::identity(f, H);
  const LinMap& S = *B.antipode;
  LinMap epsk = B.counit.with_spaces(H, FinSpace::line());
  auto add = [&fs](const std::string& name, const std::string& kind, const FinSpace& sp,
                   std::map<std::string, LinMap> maps) {
    fs.coeffs.emplace(
        name, Coefficient{name, kind, Realized{Pres::plain(fs.B.fld, sp), std::move(maps)}});
  };

  LinMap triv = kron(epsk, idH).with_spaces(tensor_space(H, H), H);
  add("alg_triv", "module_algebra_left", H,
      {{"mult", B.mult}, {"unit", B.unit}, {"blact", triv}});

  // adjoint action b . a = b_(1) a S(b_(2))
  LinMap adj = B.mult * kron(B.mult, idH) * kron(kron(idH, idH), S) *
               reorder(f, {H, H, H}, {0, 2, 1}) * kron(B.comult, idH);
  add("alg_adj", "module_algebra_left", H,
      {{"mult", B.mult}, {"unit", B.unit}, {"blact", adj}});

  add("comodalg_reg", "comodule_algebra_right", H,
      {{"mult", B.mult}, {"unit", B.unit}, {"brcoact", B.comult}});
  add("coring_reg", "module_coring_right", H,
      {{"comult", B.comult}, {"counit", B.counit}, {"bract", B.mult}});

  // coadjoint coaction c |-> c_(1) S(c_(3)) (x) c_(2)
  LinMap coadj = kron(B.mult, idH) * kron(kron(idH, S), idH) *
                 reorder(f, {H, H, H}, {0, 2, 1}) * kron(B.comult, idH) * B.comult;
  add("ccoring_coadj", "comodule_coring_left", H,
      {{"comult", B.comult}, {"counit", B.counit}, {"blcoact", coadj}});

  add("mod_reg_l", "module_left", H, {{"blact", B.mult}});
  add("mod_reg_r", "module_right", H, {{"bract", B.mult}});
  add("comod_reg_l", "comodule_left", H, {{"blcoact", B.comult}});
  add("comod_reg_r", "comodule_right", H, {{"brcoact", B.comult}});

  FinSpace D = dual_space(H);
  add("ctr_dual_l", "contramodule_left", D, {{"bctr", contra_of_right(B.comult, H, D)}});
  add("ctr_dual_r", "contramodule_right", D, {{"bctr", contra_of_left(B.comult, H, D)}});
}

FixtureSet finish(Bialgebroid b) {
  FixtureSet fs;
  fs.name = b.name;
  fs.B = std::move(b);
  add_standard_coeffs(fs);
  return fs;
}

}  // namespace

FixtureSet fixture_trivial() { return finish(group_algebra("trivial", QQ, {"1"}, {{0}})); }

FixtureSet fixture_kc2() {
  return finish(group_algebra("kc2", QQ, {"1", "g"}, {{0, 1}, {1, 0}}));
}

FixtureSet fixture_ks3() {
  std::vector<std::array<int, 3>> ps;
  std::array<int, 3> a{0, 1, 2};
  do ps.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  int n = static_cast<int>(ps.size());
  std::vector<std::string> labels;
  for (const auto& p : ps)
    labels.push_back("s" + std::to_string(p[0]) + std::to_string(p[1]) +
                     std::to_string(p[2]));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> c{ps[i][ps[j][0]], ps[i][ps[j][1]], ps[i][ps[j][2]]};
      table[i][j] = static_cast<int>(std::find(ps.begin(), ps.end(), c) - ps.begin());
    }
  return finish(group_algebra("ks3", QQ, labels, table));
}

FixtureSet fixture_sweedler() {
  return finish(taft_like("sweedler", QQ, 2, Scalar(QQ, -1)));
}

FixtureSet fixture_taft() { return finish(taft_like("taft3", gf(7), 3, Scalar(gf(7), 2))); }

FixtureSet fixture_lenv() {
  Field f = QQ;
  Scalar one = Scalar::one(f);
  FinSpace L = FinSpace::of({"p", "q"});
  LinMap multL =
      LinMap::from_entries(f, tensor_space(L, L), L, {{0, 0, one}, {1, 3, one}});
  LinMap unitL =
      LinMap::from_entries(f, FinSpace::line(), L, {{0, 0, one}, {1, 0, one}});
  FinSpace Bs = tensor_space(L, L);  // e_i (x) e_j at 2i + j

  Entries me, ue, se, te, de, ee, ae;
  for (int b = 0; b < 4; ++b) {
    me.push_back({b, b * 4 + b, one});  // componentwise product of idempotents
    ue.push_back({b, 0, one});
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      se.push_back({i * 2 + j, i, one});  // s(l) = l (x) 1
      te.push_back({i * 2 + j, j, one});  // t(l) = 1 (x) l
      ae.push_back({j * 2 + i, i * 2 + j, one});
      // D(e_i (x) e_j) = sum_{c,d} (e_i (x) e_c) (x) (e_d (x) e_j)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          de.push_back({(i * 2 + c) * 4 + (d * 2 + j), i * 2 + j, one});
    }
  ee = {{0, 0, one}, {1, 3, one}};  // eps(l (x) l') = l l'

  Bialgebroid b;
  b.name = "lenv";
  b.fld = f;
  b.left_sided = true;
  b.base = BaseAlgebra{f, L, multL, unitL};
  b.carrier = Bs;
  b.mult = LinMap::from_entries(f, tensor_space(Bs, Bs), Bs, me);
  b.unit = LinMap::from_entries(f, FinSpace::line(), Bs, ue);
  b.src = LinMap::from_entries(f, L, Bs, se);
  b.tgt = LinMap::from_entries(f, L, Bs, te);
  b.comult = LinMap::from_entries(f, Bs, tensor_space(Bs, Bs), de);
  b.counit = LinMap::from_entries(f, Bs, L, ee);
  b.antipode = LinMap::from_entries(f, Bs, Bs, ae);
  b.antipode_inv = b.antipode;

  FixtureSet fs;
  fs.name = "lenv";
  fs.B = b;
  // A = L as a left B-module algebra: (l (x) l') . a = l a l'
  LinMap blact = LinMap::from_entries(f, tensor_space(Bs, L), L, {{0, 0, one}, {1, 7, one}});
  fs.coeffs.emplace(
      "alg", Coefficient{"alg", "module_algebra_left",
                         Realized{Pres::plain(f, L),
                                  {{"mult", multL},
                                   {"unit", unitL},
                                   {"lact", multL},
                                   {"ract", multL},
                                   {"blact", blact}}}});
  // M = L as a left B-comodule: m |-> s(m) (x) 1
  Entries ce;
  for (int m = 0; m < 2; ++m)
    for (int c = 0; c < 2; ++c)
      for (int d = 0; d < 2; ++d) ce.push_back({(m * 2 + c) * 2 + d, m, one});
  LinMap blco = LinMap::from_entries(f, L, tensor_space(Bs, L), ce);
  fs.coeffs.emplace(
      "mcomod",
      Coefficient{"mcomod", "comodule_left",
                  Realized{Pres::plain(f, L),
                           {{"lact", multL}, {"ract", multL}, {"blcoact", blco}}}});
  return fs;
}

FixtureSet fixture_by_name(const std::string& name) {
  if (name == "trivial") return fixture_trivial();
  if (name == "kc2") return fixture_kc2();
  if (name == "ks3") return fixture_ks3();
  if (name == "sweedler") return fixture_sweedler();
  if (name == "taft3") return fixture_taft();
  if (name == "lenv") return fixture_lenv();
  throw KindMismatch("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"trivial", "kc2", "ks3", "sweedler", "taft3", "lenv"};
}

}  // namespace paracyc
