#include <string>
#include <utility>
#include <vector>

#include "paracyc/duality.hpp"

namespace paracyc {

namespace {

LinMap idm(Field f, const FinSpace& s) { return LinMap::identity(f, s); }

ObjP tower_b(const BRealization& b, int j) {
  ObjP x = b.cup;
  for (int i = 0; i < j; ++i) x = b.Sl.F.ob(x);
  return x;
}

ObjP tower_a(const ARealization& a, int j) {
  ObjP x = a.cup;
  for (int i = 0; i < j; ++i) x = a.Tl.F.ob(x);
  return x;
}

void iso_rows(Report& r, const std::string& cat, const std::vector<LinMap>& g) {
  for (size_t n = 0; n < g.size(); ++n) {
    bool ok = true;
    std::string note;
    try {
      inverse(g[n]);
    } catch (const Error& e) {
      ok = false;
      note = e.what();
    }
    r.add(cat, "iso deg " + std::to_string(n), ok, note);
  }
}

}  // namespace

LinMap antipode_w_inverse(const FixtureSet& fs, const std::string& family) {
  const Bialgebroid& B = fs.B;
  if (!B.hopf() || !B.antipode_inv)
    throw KindMismatch("antipode_w_inverse: fixture " + fs.name + " has no invertible antipode");
  auto names = family_coeffs(fs, family);
  const Coefficient& ac = fs.coeff(names.first);
  const Coefficient& yc = fs.coeff(names.second);
  const Field f = B.fld;
  const LinMap& Si = *B.antipode_inv;
  const FinSpace& bc = B.carrier;
  const FinSpace& as = ac.obj.space();
  const FinSpace& ys = yc.obj.space();

  if (family == "A1") {
    // A (x) M -> M (x) A:  a (x) m  |->  m_(0) (x) S'(m_(-1)) . a
    return kron(idm(f, ys), ac.obj.map("blact") * kron(Si, idm(f, as))) *
           reorder(f, {as, bc, ys}, {2, 1, 0}) * kron(idm(f, as), yc.obj.map("blcoact"));
  }
  if (family == "A2") {
    // A (x) N -> N (x) A:  a (x) n  |->  n . S'(a_(1)) (x) a_(0)
    return kron(yc.obj.map("bract") * kron(idm(f, ys), Si), idm(f, as)) *
           reorder(f, {as, bc, ys}, {2, 1, 0}) * kron(ac.obj.map("brcoact"), idm(f, ys));
  }
  if (family == "A3") {
    // Hom(C,Q) -> Hom(C,Q):  h  |->  (c |-> alpha(b |-> h(c . S'(b))))
    return hom_post(yc.obj.map("bctr"), as) * hom_unflatten_r(f, as, bc, ys) *
           hom_pre(ac.obj.map("bract") * kron(idm(f, as), Si), ys);
  }
  if (family == "A4") {
    // Hom(C,N) -> Hom(C,N):  h  |->  (c |-> h(c_(0)) . S'(c_(-1)))
    LinMap q = yc.obj.map("bract") * reorder(f, {bc, ys}, {1, 0});
    return hom_conj_l(kron(Si, idm(f, as)) * ac.obj.map("blcoact"), q, as, ys, bc);
  }
  if (family == "B1") {
    // N (x) C -> C (x) N:  n (x) c  |->  c_(0) (x) S'(c_(-1)) . n
    return kron(idm(f, as), yc.obj.map("blact") * kron(Si, idm(f, ys))) *
           reorder(f, {ys, bc, as}, {2, 1, 0}) * kron(idm(f, ys), ac.obj.map("blcoact"));
  }
  if (family == "B2") {
    // M (x) C -> C (x) M:  m (x) c  |->  c . S'(m_(1)) (x) m_(0)
    return kron(ac.obj.map("bract") * kron(idm(f, as), Si), idm(f, ys)) *
           reorder(f, {ys, bc, as}, {2, 1, 0}) * kron(yc.obj.map("brcoact"), idm(f, as));
  }
  if (family == "B3") {
    // Hom(A,Q) -> Hom(A,Q):  h  |->  (a |-> alpha(b |-> h(S'(b) . a)))
    return hom_post(yc.obj.map("bctr"), as) * hom_unflatten_l(f, as, bc, ys) *
           hom_pre(ac.obj.map("blact") * kron(Si, idm(f, as)), ys);
  }
  if (family == "B4") {
    // Hom(A,N) -> Hom(A,N):  h  |->  (a |-> S'(a_(1)) . h(a_(0)))
    LinMap q = yc.obj.map("blact") * reorder(f, {ys, bc}, {1, 0});
    return hom_conj_r(kron(idm(f, as), Si) * ac.obj.map("brcoact"), q, as, ys, bc);
  }
  throw KindMismatch("antipode_w_inverse: no closed form for family " + family);
}

Report pairing_check(const FixtureSet& fs, int pair, int degree) {
  if (pair < 1 || pair > 8) throw KindMismatch("pairing_check: pair index must be 1..8");
  Report r;
  const bool module_first = pair <= 4;
  const std::string off =
      module_first ? "A" + std::to_string(pair) : "B" + std::to_string(pair - 4);
  const std::string twin =
      module_first ? "B" + std::to_string(pair + 4) : "A" + std::to_string(pair);
  const std::string cat = "pairing " + std::to_string(pair);

  // the partner family acts on the same carrier through the inverse antipode
  const std::string mc = family_coeffs(fs, off).second;
  Coefficient flipped = flip_side(fs.B, fs.coeff(mc));
  FixtureSet twisted = fs;
  twisted.coeffs.erase(flipped.name);
  twisted.coeffs.emplace(flipped.name, flipped);

  std::vector<LinMap> g;
  if (module_first) {
    ARealization a = make_arealization(fs, off);
    LinMap winv = antipode_w_inverse(fs, off);
    check_eq(r, cat, off + " w . winv", a.w * winv, idm(a.fld, a.w.cod()));
    check_eq(r, cat, off + " winv . w", winv * a.w, idm(a.fld, a.w.dom()));
    check_eq(r, cat, off + " winv is the matrix inverse", winv, inverse(a.w));
    a.w_inv = winv;
    EmLift lift = em_lift(a);
    ParaComplex D = build_cyclic(lift.real, degree, off + " lifted");
    BRealization b = make_brealization(twisted, twin, flipped.name);
    ParaComplex E = build_cyclic(b, degree, twin + " twisted");
    try {
      for (int n = 0; n <= degree; ++n)
        g.push_back(comparison(lift.real.Pi(tower_b(lift.real, n + 1)),
                               b.Pi(tower_b(b, n + 1)),
                               cat + ": shared ambient, degree " + std::to_string(n)));
    } catch (const Error& e) {
      r.add(cat, "shared-ambient comparison", false, e.what());
      return r;
    }
    iso_rows(r, cat, g);
    check_intertwines(r, cat, E, D, g);
  } else {
    BRealization b = make_brealization(fs, off);
    LinMap winv = antipode_w_inverse(fs, off);
    check_eq(r, cat, off + " w . winv", b.w * winv, idm(b.fld, b.w.cod()));
    check_eq(r, cat, off + " winv . w", winv * b.w, idm(b.fld, b.w.dom()));
    check_eq(r, cat, off + " winv is the matrix inverse", winv, inverse(b.w));
    b.w_inv = winv;
    // lift on the transposed side, then read the result as a cochain complex
    ARealization ad = dualize(b);
    EmLift lift = em_lift(ad);
    ParaComplex D = transpose_complex(build_cyclic(lift.real, degree, off + " lifted"));
    ARealization adir = make_arealization(twisted, twin, flipped.name);
    ParaComplex E = build_cocyclic(adir, degree, twin + " twisted");
    try {
      for (int n = 0; n <= degree; ++n)
        g.push_back(comparison(lift.real.Pi(tower_b(lift.real, n + 1)).transposed(),
                               adir.Pi(tower_a(adir, n + 1)),
                               cat + ": shared ambient, degree " + std::to_string(n)));
    } catch (const Error& e) {
      r.add(cat, "shared-ambient comparison", false, e.what());
      return r;
    }
    iso_rows(r, cat, g);
    check_intertwines(r, cat, E, D, g);
  }
  return r;
}

}  // namespace paracyc
