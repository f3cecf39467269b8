#include "paracyc/functor.hpp"

#include <cstdlib>
#include <map>
#include <utility>

namespace paracyc {

ObjP make_obj(Pres pres, std::map<std::string, LinMap> maps) {
  auto r = std::make_shared<Realized>();
  r->pres = std::move(pres);
  r->maps = std::move(maps);
  return r;
}

int dim_cap() {
  static int cap = [] {
    if (const char* s = std::getenv("PARACYC_DIM_CAP")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 5000;
  }();
  return cap;
}

void guard_dim(long dim, const std::string& where) {
  if (dim > dim_cap())
    throw DimensionGuard(where + ": dimension " + std::to_string(dim) + " exceeds cap " +
                         std::to_string(dim_cap()));
}

namespace {

using Cache = std::map<const Realized*, ObjP>;

// Run one check; any engine error (failed descent, shape clash, ...) becomes
// a failed check with the error text as witness.
template <typename Fn>
void guarded(Report& r, const std::string& cat, const std::string& name, Fn&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.add(cat, name, false, e.what());
  }
}

}  // namespace

ARealization dualize(const BRealization& b) {
  auto to_dual = std::make_shared<Cache>();
  auto to_orig = std::make_shared<Cache>();

  // the transposed twin of an original-side object
  std::function<ObjP(const ObjP&)> dual_of = [to_dual, to_orig](const ObjP& x) -> ObjP {
    auto it = to_dual->find(x.get());
    if (it != to_dual->end()) return it->second;
    std::map<std::string, LinMap> maps;
    for (const auto& [k, m] : x->maps) maps.emplace(k, m.transpose());
    ObjP d = make_obj(x->pres.transposed(), std::move(maps));
    (*to_dual)[x.get()] = d;
    (*to_orig)[d.get()] = x;
    return d;
  };
  auto orig_of = [to_orig](const ObjP& xd) -> ObjP {
    auto it = to_orig->find(xd.get());
    if (it == to_orig->end())
      throw KindMismatch("dualize: object does not come from the original side");
    return it->second;
  };

  auto dual_endo = [dual_of, orig_of](const EndoR& e) -> EndoR {
    EndoR out;
    out.ob = [dual_of, orig_of, e](const ObjP& xd) { return dual_of(e.ob(orig_of(xd))); };
    out.mor = [orig_of, e](const ObjP& xd, const ObjP& yd, const LinMap& f) {
      return e.mor(orig_of(yd), orig_of(xd), f.transpose()).transpose();
    };
    return out;
  };

  ARealization a;
  a.name = b.name + "^T";
  a.fld = b.fld;
  a.Tl.F = dual_endo(b.Sl.F);
  a.Tl.mult = [orig_of, b](const ObjP& xd) { return b.Sl.comult(orig_of(xd)).transpose(); };
  a.Tl.unit = [orig_of, b](const ObjP& xd) { return b.Sl.counit(orig_of(xd)).transpose(); };
  a.Tr.F = dual_endo(b.Sr.F);
  a.Tr.mult = [orig_of, b](const ObjP& xd) { return b.Sr.comult(orig_of(xd)).transpose(); };
  a.Tr.unit = [orig_of, b](const ObjP& xd) { return b.Sr.counit(orig_of(xd)).transpose(); };
  a.Phi = [orig_of, b](const ObjP& xd) { return b.Psi(orig_of(xd)).transpose(); };
  if (b.Psi_inv)
    a.Phi_inv = [orig_of, b](const ObjP& xd) { return b.Psi_inv(orig_of(xd)).transpose(); };
  a.Pi = [orig_of, b](const ObjP& xd) { return b.Pi(orig_of(xd)).transposed(); };
  a.i_iso = [orig_of, b](const ObjP& xd) { return b.i_iso(orig_of(xd)).transpose(); };
  a.i_inv = [orig_of, b](const ObjP& xd) { return b.i_inv(orig_of(xd)).transpose(); };
  a.cup = dual_of(b.cup);
  a.w = b.w.transpose();
  if (b.w_inv.rows() != 0 || b.w_inv.cols() != 0) a.w_inv = b.w_inv.transpose();
  return a;
}

Report validate_monad(const MonadR& m, const std::vector<ObjP>& objs, const std::string& tag) {
  Report r;
  int j = 0;
  for (const ObjP& x : objs) {
    const std::string at = "#" + std::to_string(j++);
    guarded(r, tag, "assoc" + at, [&] {
      ObjP fx = m.F.ob(x), ffx = m.F.ob(fx);
      LinMap mx = m.mult(x);
      check_eq(r, tag, "assoc" + at, mx * m.F.mor(ffx, fx, mx), mx * m.mult(fx));
    });
    guarded(r, tag, "unit_l" + at, [&] {
      ObjP fx = m.F.ob(x);
      check_eq(r, tag, "unit_l" + at, m.mult(x) * m.F.mor(x, fx, m.unit(x)),
               LinMap::identity(fx->pres.fld, fx->space()));
    });
    guarded(r, tag, "unit_r" + at, [&] {
      ObjP fx = m.F.ob(x);
      check_eq(r, tag, "unit_r" + at, m.mult(x) * m.unit(fx),
               LinMap::identity(fx->pres.fld, fx->space()));
    });
  }
  return r;
}

Report validate_comonad(const ComonadR& c, const std::vector<ObjP>& objs, const std::string& tag) {
  Report r;
  int j = 0;
  for (const ObjP& x : objs) {
    const std::string at = "#" + std::to_string(j++);
    guarded(r, tag, "coassoc" + at, [&] {
      ObjP fx = c.F.ob(x), ffx = c.F.ob(fx);
      LinMap cx = c.comult(x);
      check_eq(r, tag, "coassoc" + at, c.F.mor(fx, ffx, cx) * cx, c.comult(fx) * cx);
    });
    guarded(r, tag, "counit_l" + at, [&] {
      ObjP fx = c.F.ob(x);
      check_eq(r, tag, "counit_l" + at, c.F.mor(fx, x, c.counit(x)) * c.comult(x),
               LinMap::identity(fx->pres.fld, fx->space()));
    });
    guarded(r, tag, "counit_r" + at, [&] {
      ObjP fx = c.F.ob(x);
      check_eq(r, tag, "counit_r" + at, c.counit(fx) * c.comult(x),
               LinMap::identity(fx->pres.fld, fx->space()));
    });
  }
  return r;
}

Report validate_distlaw(const MonadR& tl, const MonadR& tr, const NatFn& phi,
                        const std::vector<ObjP>& objs, const std::string& tag) {
  Report r;
  int j = 0;
  for (const ObjP& x : objs) {
    const std::string at = "#" + std::to_string(j++);
    guarded(r, tag, "unit_r" + at, [&] {
      ObjP tlx = tl.F.ob(x), trx = tr.F.ob(x);
      check_eq(r, tag, "unit_r" + at, phi(x) * tr.unit(tlx), tl.F.mor(x, trx, tr.unit(x)));
    });
    guarded(r, tag, "unit_l" + at, [&] {
      ObjP tlx = tl.F.ob(x), trx = tr.F.ob(x);
      check_eq(r, tag, "unit_l" + at, phi(x) * tr.F.mor(x, tlx, tl.unit(x)), tl.unit(trx));
    });
    guarded(r, tag, "mult_r" + at, [&] {
      ObjP tlx = tl.F.ob(x), trx = tr.F.ob(x);
      ObjP trtlx = tr.F.ob(tlx), tltrx = tl.F.ob(trx), trtrx = tr.F.ob(trx);
      LinMap lhs = phi(x) * tr.mult(tlx);
      LinMap rhs = tl.F.mor(trtrx, trx, tr.mult(x)) * phi(trx) * tr.F.mor(trtlx, tltrx, phi(x));
      check_eq(r, tag, "mult_r" + at, lhs, rhs);
    });
    guarded(r, tag, "mult_l" + at, [&] {
      ObjP tlx = tl.F.ob(x), trx = tr.F.ob(x);
      ObjP tltlx = tl.F.ob(tlx), trtlx = tr.F.ob(tlx), tltrx = tl.F.ob(trx);
      LinMap lhs = phi(x) * tr.F.mor(tltlx, tlx, tl.mult(x));
      LinMap rhs = tl.mult(trx) * tl.F.mor(trtlx, tltrx, phi(x)) * phi(tlx);
      check_eq(r, tag, "mult_l" + at, lhs, rhs);
    });
  }
  return r;
}

Report validate_module_functor(const ARealization& a, const std::vector<ObjP>& objs) {
  Report r;
  auto pi_map = [&a](const ObjP& x, const ObjP& y, const LinMap& f, const std::string& what) {
    return induce(a.Pi(x), a.Pi(y), f, what);
  };
  int j = 0;
  for (const ObjP& x : objs) {
    const std::string at = "#" + std::to_string(j++);
    guarded(r, "pi_module", "iso" + at, [&] {
      ObjP tlx = a.Tl.F.ob(x);
      LinMap ii = a.i_inv(x) * a.i_iso(x);
      check_eq(r, "pi_module", "iso" + at, ii,
               LinMap::identity(a.fld, a.Pi(tlx).space()));
    });
    guarded(r, "pi_module", "unit" + at, [&] {
      ObjP tlx = a.Tl.F.ob(x), trx = a.Tr.F.ob(x);
      LinMap lhs = a.i_iso(x) * pi_map(x, tlx, a.Tl.unit(x), "pi(unit_l)");
      LinMap rhs = pi_map(x, trx, a.Tr.unit(x), "pi(unit_r)");
      check_eq(r, "pi_module", "unit" + at, lhs, rhs);
    });
    guarded(r, "pi_module", "mult" + at, [&] {
      ObjP tlx = a.Tl.F.ob(x), trx = a.Tr.F.ob(x);
      ObjP tltlx = a.Tl.F.ob(tlx), trtlx = a.Tr.F.ob(tlx);
      ObjP tltrx = a.Tl.F.ob(trx), trtrx = a.Tr.F.ob(trx);
      LinMap lhs = a.i_iso(x) * pi_map(tltlx, tlx, a.Tl.mult(x), "pi(mult_l)");
      LinMap rhs = pi_map(trtrx, trx, a.Tr.mult(x), "pi(mult_r)") * a.i_iso(trx) *
                   pi_map(trtlx, tltrx, a.Phi(x), "pi(phi)") * a.i_iso(tlx);
      check_eq(r, "pi_module", "mult" + at, lhs, rhs);
    });
  }
  guarded(r, "cup_module", "unit", [&] {
    check_eq(r, "cup_module", "unit", a.w * a.Tr.unit(a.cup), a.Tl.unit(a.cup));
  });
  guarded(r, "cup_module", "mult", [&] {
    ObjP tlc = a.Tl.F.ob(a.cup), trc = a.Tr.F.ob(a.cup);
    LinMap lhs = a.w * a.Tr.mult(a.cup);
    LinMap rhs = a.Tl.mult(a.cup) * a.Tl.F.mor(trc, tlc, a.w) * a.Phi(a.cup) *
                 a.Tr.F.mor(trc, tlc, a.w);
    check_eq(r, "cup_module", "mult", lhs, rhs);
  });
  return r;
}

Report validate_distlaw_morphism(const MonadR& tl, const MonadR& tr, const NatFn& phi,
                                 const MonadR& tl2, const MonadR& tr2, const NatFn& phi2,
                                 const NatFn& ql, const NatFn& qr, const std::vector<ObjP>& objs,
                                 const std::string& tag) {
  Report r;
  auto monmor = [&](const MonadR& m, const MonadR& m2, const NatFn& q, const std::string& side) {
    int j = 0;
    for (const ObjP& x : objs) {
      const std::string at = side + "#" + std::to_string(j++);
      guarded(r, tag, "unit" + at, [&] {
        check_eq(r, tag, "unit" + at, q(x) * m.unit(x), m2.unit(x));
      });
      guarded(r, tag, "mult" + at, [&] {
        ObjP fx = m.F.ob(x), f2x = m2.F.ob(x);
        LinMap qq = m2.F.mor(fx, f2x, q(x)) * q(fx);
        check_eq(r, tag, "mult" + at, q(x) * m.mult(x), m2.mult(x) * qq);
      });
    }
  };
  monmor(tl, tl2, ql, ".l");
  monmor(tr, tr2, qr, ".r");
  int j = 0;
  for (const ObjP& x : objs) {
    const std::string at = "#" + std::to_string(j++);
    guarded(r, tag, "distcompat" + at, [&] {
      ObjP tlx = tl.F.ob(x), trx = tr.F.ob(x);
      ObjP tl2x = tl2.F.ob(x), tr2x = tr2.F.ob(x);
      LinMap lhs = phi2(x) * qr(tl2x) * tr.F.mor(tlx, tl2x, ql(x));
      LinMap rhs = tl2.F.mor(trx, tr2x, qr(x)) * ql(trx) * phi(x);
      check_eq(r, tag, "distcompat" + at, lhs, rhs);
    });
  }
  return r;
}

}  // namespace paracyc
