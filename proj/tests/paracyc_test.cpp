#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "paracyc/complex.hpp"
#include "paracyc/family.hpp"

using namespace paracyc;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.ok) s += c.category + "/" + c.name + ": " + c.witness + "\n";
  return s;
}

using Entries = std::vector<std::tuple<int, int, Scalar>>;

FinSpace pow_space(const FinSpace& a, int k, const FinSpace& m) {
  FinSpace s = m;
  for (int j = 0; j < k; ++j) s = tensor_space(a, s);
  return s;
}

long ipow(long b, int e) {
  long r = 1;
  for (int j = 0; j < e; ++j) r *= b;
  return r;
}

// Classical complex built slot by slot with raw index loops; nothing below
// touches functors or presentations, so it is an independent cross-check.

// multiply the adjacent pair after p slots: A^(p+2+q) (x) M -> A^(p+1+q) (x) M
LinMap hand_mult_at(Field f, const FinSpace& a, const FinSpace& m, const LinMap& mult, int p,
                    int q) {
  int da = a.dim(), dm = m.dim();
  long dp = ipow(da, p), dq = ipow(da, q);
  Entries es;
  for (int r = 0; r < mult.rows(); ++r)
    for (const auto& [c, v] : mult.row(r)) {
      int i = c / da, j = c % da;
      for (long x = 0; x < dp; ++x)
        for (long y = 0; y < dq; ++y)
          for (int mm = 0; mm < dm; ++mm)
            es.emplace_back(static_cast<int>((((x * da + r) * dq + y) * dm) + mm),
                            static_cast<int>((((((x * da + i) * da + j) * dq + y) * dm) + mm)),
                            v);
    }
  return LinMap::from_entries(f, pow_space(a, p + q + 2, m), pow_space(a, p + q + 1, m), es);
}

// insert the unit after p slots: A^(p+q) (x) M -> A^(p+1+q) (x) M
LinMap hand_unit_at(Field f, const FinSpace& a, const FinSpace& m, const LinMap& unit, int p,
                    int q) {
  int da = a.dim(), dm = m.dim();
  long dp = ipow(da, p), dq = ipow(da, q);
  Entries es;
  for (int r = 0; r < unit.rows(); ++r)
    for (const auto& [c0, v] : unit.row(r)) {
      (void)c0;
      for (long x = 0; x < dp; ++x)
        for (long y = 0; y < dq; ++y)
          for (int mm = 0; mm < dm; ++mm)
            es.emplace_back(static_cast<int>((((x * da + r) * dq + y) * dm) + mm),
                            static_cast<int>(((x * dq + y) * dm) + mm), v);
    }
  return LinMap::from_entries(f, pow_space(a, p + q, m), pow_space(a, p + 1 + q, m), es);
}

// a0 .. an (x) m  |->  a1 .. an (x) (m_(-1) |> a0) (x) m_(0),
// coact : M -> B (x) M, act : B (x) A -> A.
LinMap hand_twist_cochain(Field f, const FinSpace& a, const FinSpace& m, const LinMap& act,
                          const LinMap& coact, int n) {
  int da = a.dim(), dm = m.dim();
  long rest = ipow(da, n);
  Entries es;
  for (int r1 = 0; r1 < coact.rows(); ++r1) {
    int b = r1 / dm, m0 = r1 % dm;
    for (const auto& [mi, v1] : coact.row(r1))
      for (int r2 = 0; r2 < act.rows(); ++r2)
        for (const auto& [c2, v2] : act.row(r2)) {
          if (c2 / da != b) continue;
          int a0 = c2 % da;
          for (long mid = 0; mid < rest; ++mid)
            es.emplace_back(static_cast<int>(((mid * da + r2) * dm) + m0),
                            static_cast<int>((((a0 * rest + mid) * dm) + mi)), v1 * v2);
        }
  }
  FinSpace z = pow_space(a, n + 1, m);
  return LinMap::from_entries(f, z, z, es);
}

// a0 .. an (x) m  |->  (m_(1) |> an) (x) a0 .. a_(n-1) (x) m_(0),
// coact : M -> M (x) B, act : B (x) A -> A.
LinMap hand_twist_chain(Field f, const FinSpace& a, const FinSpace& m, const LinMap& act,
                        const LinMap& coact, int n) {
  int da = a.dim(), dm = m.dim(), db = act.dom().dim() / da;
  long rest = ipow(da, n);
  Entries es;
  for (int r1 = 0; r1 < coact.rows(); ++r1) {
    int m0 = r1 / db, b = r1 % db;
    for (const auto& [mi, v1] : coact.row(r1))
      for (int r2 = 0; r2 < act.rows(); ++r2)
        for (const auto& [c2, v2] : act.row(r2)) {
          if (c2 / da != b) continue;
          int an = c2 % da;
          for (long mid = 0; mid < rest; ++mid)
            es.emplace_back(static_cast<int>(((r2 * rest + mid) * dm) + m0),
                            static_cast<int>(((mid * da + an) * dm) + mi), v1 * v2);
        }
  }
  FinSpace z = pow_space(a, n + 1, m);
  return LinMap::from_entries(f, z, z, es);
}

// A^(slots) (x) M -> A^(slots) (x) (M (x) A): append the unit in the cup slot
LinMap hand_append_unit(Field f, const FinSpace& a, const FinSpace& m, const LinMap& unit,
                        int slots) {
  int da = a.dim(), dm = m.dim();
  long dx = ipow(da, slots);
  Entries es;
  for (int r = 0; r < unit.rows(); ++r)
    for (const auto& [c0, v] : unit.row(r)) {
      (void)c0;
      for (long x = 0; x < dx; ++x)
        for (int mm = 0; mm < dm; ++mm)
          es.emplace_back(static_cast<int>(((x * dm + mm) * da) + r),
                          static_cast<int>(x * dm + mm), v);
    }
  return LinMap::from_entries(f, pow_space(a, slots, m),
                              tensor_space(pow_space(a, slots, m), a), es);
}

}  // namespace

TEST_CASE("all sixteen families build lawful towers on kC2") {
  FixtureSet fs = fixture_kc2();
  for (const std::string& id : family_ids()) {
    CAPTURE(id);
    ParaComplex c = family_is_cocyclic(id) ? build_cocyclic(make_arealization(fs, id), 3)
                                           : build_cyclic(make_brealization(fs, id), 3);
    CHECK(c.cochain == family_is_cocyclic(id));
    Report r = check_laws(c);
    INFO(failures(r));
    CHECK(r.all_ok());
    for (int n = 0; n <= 3; ++n) CHECK(c.Z[n].dim() > 0);
  }
}

TEST_CASE("the generic tower reproduces the classical cochain complex (A1 on kC2)") {
  FixtureSet fs = fixture_kc2();
  Field f = fs.B.fld;
  const FinSpace& a = fs.B.carrier;
  const int N = 3;
  ParaComplex c = build_cocyclic(make_arealization(fs, "A1"), N);
  const Coefficient& m = fs.coeff("comod_reg_l");
  const FinSpace& ms = m.obj.space();
  LinMap act = fs.coeff("alg_adj").obj.map("blact");
  LinMap coact = m.obj.map("blcoact");
  for (int n = 0; n <= N; ++n) {
    CAPTURE(n);
    REQUIRE(c.Z[n].dim() == pow_space(a, n + 1, ms).dim());
    LinMap th = hand_twist_cochain(f, a, ms, act, coact, n);
    CHECK(c.t[n] == th);
    for (int k = 0; k < n; ++k) CHECK(c.d[n][k] == hand_unit_at(f, a, ms, fs.B.unit, k, n - k));
    if (n >= 1) CHECK(c.d[n][n] == th * hand_unit_at(f, a, ms, fs.B.unit, 0, n));
    if (n < N)
      for (int k = 0; k <= n; ++k) CHECK(c.s[n][k] == hand_mult_at(f, a, ms, fs.B.mult, k, n - k));
  }
}

TEST_CASE("the generic tower reproduces the classical chain complex (B5 on kC2)") {
  FixtureSet fs = fixture_kc2();
  Field f = fs.B.fld;
  const FinSpace& a = fs.B.carrier;
  const int N = 3;
  BRealization b = make_brealization(fs, "B5");
  ParaComplex c = build_cyclic(b, N);
  const Coefficient& m = fs.coeff("comod_reg_r");
  const FinSpace& ms = m.obj.space();
  LinMap act = fs.coeff("alg_adj").obj.map("blact");
  LinMap coact = m.obj.map("brcoact");

  // kappa_n : A^(n+1) (x) M -> Z_n, (a_0 .. a_n, m) |-> class of a_0 .. a_n (x) (m (x) 1)
  std::vector<ObjP> xs{b.cup};
  for (int j = 0; j <= N; ++j) xs.push_back(b.Sl.F.ob(xs.back()));
  std::vector<LinMap> kap;
  for (int n = 0; n <= N; ++n) {
    Pres pi = b.Pi(xs[n + 1]);
    REQUIRE(pi.space().dim() == c.Z[n].dim());
    kap.push_back(pi.to_space() * hand_append_unit(f, a, ms, fs.B.unit, n + 1));
    REQUIRE(rank(kap[n]) == c.Z[n].dim());
  }
  for (int n = 0; n <= N; ++n) {
    CAPTURE(n);
    LinMap th = hand_twist_chain(f, a, ms, act, coact, n);
    CHECK(c.t[n] * kap[n] == kap[n] * th);
    for (int k = 0; k < n; ++k)
      CHECK(c.d[n][k] * kap[n] == kap[n - 1] * hand_mult_at(f, a, ms, fs.B.mult, k, n - 1 - k));
    if (n >= 1)
      CHECK(c.d[n][n] * kap[n] == kap[n - 1] * (hand_mult_at(f, a, ms, fs.B.mult, 0, n - 1) * th));
    if (n < N)
      for (int k = 0; k <= n; ++k)
        CHECK(c.s[n][k] * kap[n] == kap[n + 1] * hand_unit_at(f, a, ms, fs.B.unit, k + 1, n - k));
  }
}

TEST_CASE("towers over the enveloping base glue and stay lawful") {
  FixtureSet fs = fixture_lenv();
  ParaComplex c = build_cocyclic(make_arealization(fs, "A1"), 3);
  Report r = check_laws(c);
  INFO(failures(r));
  CHECK(r.all_ok());
  for (int n = 0; n <= 3; ++n) CHECK(c.Z[n].dim() > 0);
}

TEST_CASE("Sweedler's algebra is para-cocyclic but genuinely not cocyclic") {
  FixtureSet fs = fixture_sweedler();
  ParaComplex c = build_cocyclic(make_arealization(fs, "A1"), 3);
  Report r = check_laws(c);
  INFO(failures(r));
  CHECK(r.all_ok());
  CHECK(c.Z[0].dim() == 16);
  CHECK(c.Z[1].dim() == 64);
  CHECK(c.Z[2].dim() == 256);
  CHECK(c.Z[3].dim() == 1024);
  // t^{n+1} != id in low degrees: the tower does not descend to a cocyclic one
  CHECK(t_order(c, 0, 1) == 0);
  CHECK(t_order(c, 1, 2) == 0);
  CHECK(t_order(c, 2, 3) == 0);
}

TEST_CASE("group-algebra towers are honestly cocyclic") {
  FixtureSet fs = fixture_kc2();
  ParaComplex c = build_cocyclic(make_arealization(fs, "A1"), 3);
  for (int n = 0; n <= 3; ++n) {
    int e = t_order(c, n, n + 1);
    CHECK(e > 0);
    CHECK((n + 1) % e == 0);
  }
}
