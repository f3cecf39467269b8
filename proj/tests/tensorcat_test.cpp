#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracyc/tensorcat.hpp"
#include "test_util.hpp"

using namespace paracyc;

namespace {

// L = k x k: two orthogonal idempotents.
BaseAlgebra kxk() {
  FinSpace l = FinSpace::of({"p", "q"});
  LinMap mult = LinMap::from_entries(QQ, tensor_space(l, l), l,
                                     {{0, 0, Scalar(QQ, 1)}, {1, 3, Scalar(QQ, 1)}});
  LinMap unit = LinMap::from_entries(QQ, FinSpace::line(), l,
                                     {{0, 0, Scalar(QQ, 1)}, {1, 0, Scalar(QQ, 1)}});
  return BaseAlgebra{QQ, l, mult, unit};
}

// Upper triangular 2x2 matrices: noncommutative, [L,L] is one-dimensional.
BaseAlgebra upper_triangular() {
  FinSpace l = FinSpace::of({"e11", "e12", "e22"});
  LinMap mult = LinMap::from_entries(QQ, tensor_space(l, l), l,
                                     {{0, 0, Scalar(QQ, 1)},
                                      {1, 1, Scalar(QQ, 1)},
                                      {1, 5, Scalar(QQ, 1)},
                                      {2, 8, Scalar(QQ, 1)}});
  LinMap unit = LinMap::from_entries(QQ, FinSpace::line(), l,
                                     {{0, 0, Scalar(QQ, 1)}, {2, 0, Scalar(QQ, 1)}});
  return BaseAlgebra{QQ, l, mult, unit};
}

Realized regular_bimodule(const BaseAlgebra& L) {
  Realized x{Pres::plain(L.fld, L.carrier), {}};
  x.maps["lact"] = L.mult;
  x.maps["ract"] = L.mult;
  return x;
}

}  // namespace

TEST_CASE("base algebra validators") {
  CHECK(validate_base_algebra(kxk()).all_ok());
  CHECK(validate_base_algebra(upper_triangular()).all_ok());
  CHECK(validate_base_algebra(BaseAlgebra::ground(gf(7))).all_ok());

  BaseAlgebra bad = kxk();
  bad.mult.add_to(0, 1, Scalar(QQ, 1));  // p*q := p breaks associativity/unit
  Report r = validate_base_algebra(bad);
  CHECK_FALSE(r.all_ok());
  CHECK_FALSE(r.checks[1].ok);  // unit_left
  CHECK(r.checks[1].witness.find("<-") != std::string::npos);

  Realized reg = regular_bimodule(kxk());
  CHECK(validate_base_bimodule(kxk(), reg, "reg").all_ok());
  Realized broken = reg;
  broken.maps["lact"].add_to(1, 0, Scalar(QQ, 2));
  CHECK_FALSE(validate_base_bimodule(kxk(), broken, "broken").all_ok());
}

TEST_CASE("tensor over the base collapses L (x)_L L") {
  for (const BaseAlgebra& L : {kxk(), upper_triangular()}) {
    Realized x = regular_bimodule(L);
    Pres t = tensor_over_base(L, x, x);
    CHECK(t.dim() == L.carrier.dim());
    // multiplication descends to an isomorphism with L
    LinMap mu = induce(t, Pres::plain(L.fld, L.carrier), L.mult, "mu");
    LinMap iota =
        induce(Pres::plain(L.fld, L.carrier), t,
               kron(LinMap::identity(L.fld, L.carrier), L.unit)
                   .with_spaces(L.carrier, tensor_space(L.carrier, L.carrier)),
               "iota");
    CHECK((mu * iota).is_identity());
    CHECK((iota * mu).is_identity());
  }
}

TEST_CASE("tensor over the ground field is plain") {
  BaseAlgebra k = BaseAlgebra::ground(QQ);
  Realized x{Pres::plain(QQ, FinSpace::named("x", 3)), {}};
  Realized y{Pres::plain(QQ, FinSpace::named("y", 2)), {}};
  Pres t = tensor_over_base(k, x, y);
  CHECK(t.steps.empty());
  CHECK(t.dim() == 6);
}

TEST_CASE("cyclic tensor: empty and one-letter words") {
  // commutative base: L/[L,L] = L
  CHECK(cyclic_tensor(kxk(), {}).dim() == 2);
  // upper triangular: [L,L] = span(e12)
  Pres p = cyclic_tensor(upper_triangular(), {});
  CHECK(p.dim() == 2);
  // one-letter word over the regular bimodule is the same quotient
  BaseAlgebra L = upper_triangular();
  Realized x = regular_bimodule(L);
  Pres q = cyclic_tensor(L, {&x});
  CHECK(q.dim() == 2);
  CHECK(comparison(p, q, "cut").is_identity());
}

TEST_CASE("cyclic tensor: cut independence up to rotation") {
  BaseAlgebra L = upper_triangular();
  Realized x = regular_bimodule(L);
  Pres pxy = cyclic_tensor(L, {&x, &x});
  CHECK(pxy.dim() == 2);  // rotating the word gives an isomorphic quotient
  LinMap rot = reorder(L.fld, {x.space(), x.space()}, {1, 0});
  LinMap cmp = induce(pxy, pxy, rot, "rotation");
  LinMap cmp_inv = inverse(cmp);
  CHECK((cmp_inv * cmp).is_identity());
}

TEST_CASE("descend failures throw with context") {
  BaseAlgebra L = upper_triangular();
  Pres quot = cyclic_tensor(L, {});
  // the identity does not kill commutators
  CHECK_THROWS_AS(induce(quot, Pres::plain(QQ, L.carrier),
                         LinMap::identity(QQ, L.carrier), "id"),
                  DoesNotDescend);
  // a nonzero map cannot land in a zero subspace
  Pres zero_sub =
      Pres::plain(QQ, L.carrier).extended(Step::sub(LinMap::identity(QQ, L.carrier)));
  CHECK(zero_sub.dim() == 0);
  CHECK_THROWS_AS(induce(Pres::plain(QQ, L.carrier), zero_sub,
                         LinMap::identity(QQ, L.carrier), "into-zero"),
                  DoesNotDescend);
}

TEST_CASE("hom over the base: right- and left-linear maps") {
  BaseAlgebra L = kxk();
  Realized x = regular_bimodule(L);
  // Hom_{-,L}(L, L) = L (f is determined by f(1), freely)
  Pres hr = hom_right_linear(L, L.carrier, L.mult, x);
  CHECK(hr.dim() == 2);
  Pres hl = hom_left_linear(L, L.carrier, L.mult, x);
  CHECK(hl.dim() == 2);

  // over the noncommutative base: Hom_{-,L}(L,L) = L again, and evaluation at
  // 1 identifies it with L
  BaseAlgebra U = upper_triangular();
  Realized xu = regular_bimodule(U);
  Pres hu = hom_right_linear(U, U.carrier, U.mult, xu);
  CHECK(hu.dim() == 3);
  // eval at 1: Hom(L, L) -> L, then restricted along the inclusion
  LinMap ev1 = hom_pre(U.unit, U.carrier).with_spaces(hom_space(U.carrier, U.carrier), U.carrier);
  LinMap evr = induce(hu, Pres::plain(QQ, U.carrier), ev1, "ev1");
  CHECK(rank(evr) == 3);
}

TEST_CASE("transposed chains swap quotients and subspaces") {
  BaseAlgebra L = upper_triangular();
  Pres p = cyclic_tensor(L, {});
  Pres pt = p.transposed();
  REQUIRE(pt.steps.size() == 1);
  CHECK(pt.steps[0].kind == Step::Kind::Sub);
  CHECK(pt.dim() == p.dim());
  // retr * incl = id on the transposed side
  CHECK((pt.to_space() * pt.from_space()).is_identity());
  CHECK(pt.transposed().steps[0].kind == Step::Kind::Quot);
}

TEST_CASE("splice composes chains over the intermediate space") {
  BaseAlgebra L = upper_triangular();
  Pres p = cyclic_tensor(L, {});  // dim 2
  // further kill the class of e22 (label survives the first quotient)
  LinMap rel2 = LinMap::from_entries(QQ, FinSpace::line(), p.space(), {{1, 0, Scalar(QQ, 1)}});
  Pres q = Pres::plain(QQ, p.space()).extended(Step::quot(rel2));
  Pres pq = splice(p, q);
  CHECK(pq.dim() == 1);
  CHECK(pq.ambient.dim() == 3);
  CHECK((pq.to_space() * pq.from_space()).is_identity());
}
