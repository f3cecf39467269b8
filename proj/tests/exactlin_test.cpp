#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "paracyc/linmap.hpp"
#include "test_util.hpp"

using namespace paracyc;
using testutil::map_of_vec;
using testutil::rand_invertible;
using testutil::rand_map;
using testutil::vec_of_map;

TEST_CASE("scalar arithmetic over Q and gf(p)") {
  Scalar a(QQ, 1, 3), b(QQ, 2, 5);
  CHECK((a + b).str() == "11/15");
  CHECK((a * b).str() == "2/15");
  CHECK((a - a).is_zero());
  CHECK(a.inv().str() == "3");

  Field f7 = gf(7);
  Scalar x(f7, 3), y(f7, 6);
  CHECK((x + y).str() == "2");
  CHECK((x * y).str() == "4");
  CHECK(x.inv().str() == "5");  // 3*5 = 15 = 1 mod 7
  CHECK((-x).str() == "4");
  CHECK(Scalar(f7, -1).str() == "6");
  CHECK(Scalar(f7, 1, 2).str() == "4");  // 1/2 = 4 mod 7

  CHECK_THROWS_AS((void)(a + x), FieldMismatch);
  CHECK(Scalar::parse(QQ, "-7/2").str() == "-7/2");
  CHECK_THROWS_AS(Scalar::parse(QQ, "oops"), ParseError);
}

TEST_CASE("identity, zero and composition basics") {
  FinSpace u = FinSpace::named("u", 3), v = FinSpace::named("v", 2);
  LinMap id3 = LinMap::identity(QQ, u);
  CHECK(id3.is_identity());
  CHECK(rank(id3) == 3);

  LinMap f = LinMap::from_entries(QQ, u, v,
                                  {{0, 0, Scalar(QQ, 1)},
                                   {0, 2, Scalar(QQ, -2)},
                                   {1, 1, Scalar(QQ, 3)}});
  CHECK((f * id3) == f);
  CHECK((LinMap::identity(QQ, v) * f) == f);
  CHECK(f.at(0, 2).str() == "-2");
  CHECK(f.transpose().transpose() == f);

  std::mt19937 rng(7);
  LinMap g = rand_map(QQ, FinSpace::named("w", 4), u, rng);
  CHECK((f * g).transpose() == (g.transpose() * f.transpose()));
}

TEST_CASE("kernel: frozen examples") {
  // ker(id) = 0
  FinSpace u = FinSpace::named("e", 3);
  CHECK(kernel(LinMap::identity(QQ, u)).dom().dim() == 0);

  // ker of the sum map [1 1] over gf(2) is spanned by (1,1)
  Field f2 = gf(2);
  FinSpace d2 = FinSpace::named("x", 2), c1 = FinSpace::named("y", 1);
  LinMap sum2 = LinMap::from_entries(f2, d2, c1, {{0, 0, Scalar(f2, 1)}, {0, 1, Scalar(f2, 1)}});
  LinMap k = kernel(sum2);
  CHECK(k.dom().dim() == 1);
  CHECK(k.at(0, 0).str() == "1");
  CHECK(k.at(1, 0).str() == "1");

  // ker of the zero map is everything, as the identity inclusion
  LinMap z = LinMap::zero(QQ, u, c1);
  CHECK(kernel(z).is_identity());
}

TEST_CASE("kernel: canonical free-column basis") {
  // f = [1 2 3; 2 4 6]: RREF has pivot col 0, free cols 1,2.
  FinSpace d = FinSpace::named("a", 3), c = FinSpace::named("b", 2);
  LinMap f = LinMap::from_entries(
      QQ, d, c,
      {{0, 0, Scalar(QQ, 1)}, {0, 1, Scalar(QQ, 2)}, {0, 2, Scalar(QQ, 3)},
       {1, 0, Scalar(QQ, 2)}, {1, 1, Scalar(QQ, 4)}, {1, 2, Scalar(QQ, 6)}});
  auto [incl, retr] = kernel_pair(f);
  CHECK(incl.dom().dim() == 2);
  CHECK(incl.dom().labels == std::vector<std::string>{"a1", "a2"});
  // basis vectors: (-2,1,0) and (-3,0,1)
  CHECK(incl.at(0, 0).str() == "-2");
  CHECK(incl.at(1, 0).str() == "1");
  CHECK(incl.at(2, 0).str() == "0");
  CHECK(incl.at(0, 1).str() == "-3");
  CHECK(incl.at(2, 1).str() == "1");
  CHECK((f * incl).is_zero());
  CHECK((retr * incl).is_identity());

  // canonical: row-equivalent matrices give the identical kernel inclusion
  std::mt19937 rng(11);
  LinMap p = rand_invertible(QQ, c, rng);
  CHECK(kernel(p * f) == incl);
}

TEST_CASE("cokernel: frozen examples") {
  // multiplication by 2 on Q is onto: coker = 0
  FinSpace l = FinSpace::named("t", 1);
  LinMap two = LinMap::from_entries(QQ, l, l, {{0, 0, Scalar(QQ, 2)}});
  auto [p0, s0] = cokernel_pair(two);
  CHECK(p0.cod().dim() == 0);

  // coker of the column (1,1)^T over Q: one coordinate, the second one
  FinSpace c2 = FinSpace::named("z", 2);
  LinMap col = LinMap::from_entries(QQ, l, c2, {{0, 0, Scalar(QQ, 1)}, {1, 0, Scalar(QQ, 1)}});
  auto [p, s] = cokernel_pair(col);
  CHECK(p.cod().dim() == 1);
  CHECK(p.cod().labels == std::vector<std::string>{"z1"});
  CHECK((p * col).is_zero());
  CHECK((p * s).is_identity());
  // class of e0 equals -(-1)*e1? p(e0) = -(coeff) with RREF row (1,1): p(e0) = -1 * [z1]
  CHECK(p.at(0, 0).str() == "-1");
  CHECK(p.at(0, 1).str() == "1");

  // canonical: column-equivalent matrices give the identical projection
  std::mt19937 rng(13);
  LinMap q = rand_invertible(QQ, l, rng);
  CHECK(cokernel_pair(col * q).first == p);
}

TEST_CASE("rank-nullity and exactness properties, both fields") {
  for (Field f : {QQ, gf(5)}) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
      FinSpace d = FinSpace::named("d", 2 + trial % 4), c = FinSpace::named("c", 1 + trial % 5);
      LinMap m = rand_map(f, d, c, rng, 0.5);
      int r = rank(m);
      auto [incl, retr] = kernel_pair(m);
      auto [proj, sect] = cokernel_pair(m);
      CHECK(r + incl.dom().dim() == d.dim());
      CHECK(proj.cod().dim() == c.dim() - r);
      CHECK((m * incl).is_zero());
      CHECK((proj * m).is_zero());
      CHECK((retr * incl).is_identity());
      CHECK((proj * sect).is_identity());
      CHECK(rank(m.transpose()) == r);
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(5);
  for (Field f : {QQ, gf(7)}) {
    FinSpace s = FinSpace::named("s", 4);
    LinMap m = rand_invertible(f, s, rng);
    LinMap mi = inverse(m);
    CHECK((m * mi).is_identity());
    CHECK((mi * m).is_identity());

    std::vector<Scalar> x;
    for (int i = 0; i < 4; ++i) x.push_back(testutil::rand_scalar(f, rng));
    auto y = m.apply(x);
    auto x2 = solve(m, y);
    CHECK(m.apply(x2) == y);
  }
  FinSpace s2 = FinSpace::named("s", 2);
  LinMap sing = LinMap::from_entries(QQ, s2, s2,
                                     {{0, 0, Scalar(QQ, 1)}, {1, 0, Scalar(QQ, 1)}});
  CHECK_THROWS_AS(inverse(sing), SingularMap);
  CHECK_THROWS_AS(solve(sing, {Scalar(QQ, 0), Scalar(QQ, 1)}), SingularMap);
}

TEST_CASE("kron: frozen example and functoriality") {
  FinSpace s2 = FinSpace::named("p", 2), s3 = FinSpace::named("q", 3);
  CHECK(kron(LinMap::identity(QQ, s2), LinMap::identity(QQ, s3)).is_identity());
  CHECK(kron(LinMap::identity(QQ, s2), LinMap::identity(QQ, s3)).rows() == 6);

  // left factor slowest: e_{01} (x) e_{12} lands at row 0*3+1, col 1*3+2
  LinMap a = LinMap::from_entries(QQ, s2, s2, {{0, 1, Scalar(QQ, 1)}});
  LinMap b = LinMap::from_entries(QQ, s3, s3, {{1, 2, Scalar(QQ, 5)}});
  LinMap ab = kron(a, b);
  CHECK(ab.at(1, 5).str() == "5");
  CHECK(ab.nnz() == 1);

  std::mt19937 rng(99);
  for (Field f : {QQ, gf(3)}) {
    FinSpace u = FinSpace::named("u", 2), v = FinSpace::named("v", 3), w = FinSpace::named("w", 2);
    LinMap m1 = rand_map(f, u, v, rng), m2 = rand_map(f, w, u, rng);
    LinMap n1 = rand_map(f, v, w, rng), n2 = rand_map(f, u, v, rng);
    CHECK(kron(m1 * m2, n1 * n2) == (kron(m1, n1) * kron(m2, n2)));
  }
}

TEST_CASE("reorder permutes tensor factors") {
  std::mt19937 rng(3);
  FinSpace u = FinSpace::named("u", 2), v = FinSpace::named("v", 3), w = FinSpace::named("w", 2);
  // swap(u,v) then swap back is the identity
  LinMap sw = reorder(QQ, {u, v, w}, {1, 0, 2});
  LinMap swback = reorder(QQ, {v, u, w}, {1, 0, 2});
  CHECK((swback * sw).is_identity());
  // naturality: reorder intertwines kron factors
  LinMap a = rand_map(QQ, u, u, rng), b = rand_map(QQ, v, v, rng), c = rand_map(QQ, w, w, rng);
  CHECK((sw * kron(kron(a, b), c)) == (kron(kron(b, a), c) * sw));
  // rotation by one: (x0,x1,x2) -> (x1,x2,x0)
  LinMap rot = reorder(QQ, {u, v, w}, {1, 2, 0});
  CHECK((rot * kron(kron(a, b), c)) == (kron(kron(b, c), a) * rot));
}

TEST_CASE("hom coordinate conventions") {
  std::mt19937 rng(17);
  FinSpace u = FinSpace::named("u", 2), v = FinSpace::named("v", 3);
  FinSpace up = FinSpace::named("U", 3), vp = FinSpace::named("V", 2), w = FinSpace::named("w", 2);

  LinMap h = rand_map(QQ, u, v, rng);
  LinMap g = rand_map(QQ, up, u, rng);
  LinMap post = rand_map(QQ, v, vp, rng);

  // hom_pre: coordinates of h |-> h*g
  auto lhs = hom_pre(g, v).apply(vec_of_map(h));
  CHECK(map_of_vec(QQ, up, v, lhs) == (h * g));
  // hom_post: coordinates of h |-> post*h
  auto lhs2 = hom_post(post, u).apply(vec_of_map(h));
  CHECK(map_of_vec(QQ, u, vp, lhs2) == (post * h));

  // hom_conj_r: h |-> Q*(h (x) id_W)*P
  LinMap P = rand_map(QQ, up, tensor_space(u, w), rng);
  LinMap Q = rand_map(QQ, tensor_space(v, w), vp, rng);
  auto lhs3 = hom_conj_r(P, Q, u, v, w).apply(vec_of_map(h));
  CHECK(map_of_vec(QQ, up, vp, lhs3) == (Q * kron(h, LinMap::identity(QQ, w)) * P));

  // hom_conj_l: h |-> Q*(id_W (x) h)*P
  LinMap P2 = rand_map(QQ, up, tensor_space(w, u), rng);
  LinMap Q2 = rand_map(QQ, tensor_space(w, v), vp, rng);
  auto lhs4 = hom_conj_l(P2, Q2, u, v, w).apply(vec_of_map(h));
  CHECK(map_of_vec(QQ, up, vp, lhs4) == (Q2 * kron(LinMap::identity(QQ, w), h) * P2));
}

TEST_CASE("currying and flattening") {
  std::mt19937 rng(23);
  FinSpace x = FinSpace::named("x", 3), u = FinSpace::named("u", 2), y = FinSpace::named("y", 2);
  LinMap act = rand_map(QQ, tensor_space(x, u), y, rng);
  LinMap cur = curry_right(act, x, u, y);
  // column at basis x_i is the map u |-> act(x_i (x) u)
  for (int i = 0; i < x.dim(); ++i) {
    std::vector<Scalar> e(x.dim(), Scalar::zero(QQ));
    e[i] = Scalar::one(QQ);
    LinMap slice = map_of_vec(QQ, u, y, cur.apply(e));
    for (int uu = 0; uu < u.dim(); ++uu)
      for (int yy = 0; yy < y.dim(); ++yy)
        CHECK(slice.at(yy, uu) == act.at(yy, i * u.dim() + uu));
  }
  LinMap act2 = rand_map(QQ, tensor_space(u, x), y, rng);
  LinMap cur2 = curry_left(act2, u, x, y);
  for (int i = 0; i < x.dim(); ++i) {
    std::vector<Scalar> e(x.dim(), Scalar::zero(QQ));
    e[i] = Scalar::one(QQ);
    LinMap slice = map_of_vec(QQ, u, y, cur2.apply(e));
    for (int uu = 0; uu < u.dim(); ++uu)
      for (int yy = 0; yy < y.dim(); ++yy)
        CHECK(slice.at(yy, uu) == act2.at(yy, uu * x.dim() + i));
  }

  // flatten_r: coords of c |-> (d |-> h(c (x) d))  match coords of h
  FinSpace c = FinSpace::named("c", 2), d = FinSpace::named("d", 3), q = FinSpace::named("q", 2);
  LinMap hflat = rand_map(QQ, tensor_space(c, d), q, rng);
  // nested coordinates: vec over Hom(C, Hom(D,Q))
  LinMap nested = curry_right(hflat, c, d, q);  // C -> Hom(D,Q)
  auto flatv = hom_flatten_r(QQ, c, d, q).apply(vec_of_map(nested));
  CHECK(map_of_vec(QQ, tensor_space(c, d), q, flatv) == hflat);

  // flatten_l: h(d (x) c) = nested(c)(d)
  LinMap hflat2 = rand_map(QQ, tensor_space(d, c), q, rng);
  LinMap nested2 = curry_left(hflat2, d, c, q);  // C -> Hom(D,Q)
  auto flatv2 = hom_flatten_l(QQ, c, d, q).apply(vec_of_map(nested2));
  CHECK(map_of_vec(QQ, tensor_space(d, c), q, flatv2) == hflat2);
}

TEST_CASE("determinism: elimination output is bit-stable") {
  std::mt19937 rng(2024);
  FinSpace d = FinSpace::named("d", 6), c = FinSpace::named("c", 4);
  LinMap m = rand_map(QQ, d, c, rng, 0.4);
  auto snap = [](const LinMap& f) {
    std::ostringstream os;
    for (int i = 0; i < f.rows(); ++i)
      for (const auto& [j, v] : f.row(i)) os << i << "," << j << ":" << v.str() << ";";
    return os.str();
  };
  auto [i1, r1] = kernel_pair(m);
  auto [p1, s1] = cokernel_pair(m);
  for (int rep = 0; rep < 3; ++rep) {
    auto [i2, r2] = kernel_pair(m);
    auto [p2, s2] = cokernel_pair(m);
    CHECK(snap(i2) == snap(i1));
    CHECK(snap(r2) == snap(r1));
    CHECK(snap(p2) == snap(p1));
    CHECK(snap(s2) == snap(s1));
  }
}
