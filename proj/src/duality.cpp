#include "paracyc/duality.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>

namespace paracyc {

ParaComplex cyclic_dual(const ParaComplex& c) {
  ParaComplex out;
  out.name = c.name.empty() ? "dual" : "dual(" + c.name + ")";
  out.cochain = !c.cochain;
  out.fld = c.fld;
  out.Z = c.Z;
  const int top = c.top();
  out.d.resize(top + 1);
  if (top > 0) out.s.resize(top);
  for (int n = 0; n <= top; ++n) out.t.push_back(inverse(c.t[n]));
  // One extremal face walks through the twist, the remaining faces reindex
  // the degeneracies of the neighbouring degree, and the degeneracies pick
  // all faces but one extremal.  The two directions drop opposite extremal
  // faces: that makes them exact inverses of one another, not merely inverse
  // up to the degree shift automorphism.
  if (c.cochain) {
    for (int n = 1; n <= top; ++n) {
      out.d[n].push_back(c.s[n - 1][n - 1] * c.t[n]);
      for (int k = 1; k <= n; ++k) out.d[n].push_back(c.s[n - 1][k - 1]);
    }
    for (int n = 0; n < top; ++n)
      for (int k = 0; k <= n; ++k) out.s[n].push_back(c.d[n + 1][k]);
  } else {
    for (int n = 1; n <= top; ++n) {
      for (int k = 0; k < n; ++k) out.d[n].push_back(c.s[n - 1][k]);
      out.d[n].push_back(out.t[n] * c.s[n - 1][0]);
    }
    for (int n = 0; n < top; ++n)
      for (int k = 0; k <= n; ++k) out.s[n].push_back(c.d[n + 1][k + 1]);
  }
  return out;
}

void check_intertwines(Report& r, const std::string& category, const ParaComplex& to,
                       const ParaComplex& from, const std::vector<LinMap>& g) {
  const int top = from.top();
  for (int n = 0; n <= top; ++n)
    check_eq(r, category, "t deg " + std::to_string(n), to.t[n] * g[n], g[n] * from.t[n]);
  for (int n = 1; n <= top; ++n)
    for (int k = 0; k <= n; ++k) {
      const std::string nm = "d[" + std::to_string(n) + "][" + std::to_string(k) + "]";
      if (from.cochain)
        check_eq(r, category, nm, to.d[n][k] * g[n - 1], g[n] * from.d[n][k]);
      else
        check_eq(r, category, nm, to.d[n][k] * g[n], g[n - 1] * from.d[n][k]);
    }
  for (int n = 0; n < top; ++n)
    for (int k = 0; k <= n; ++k) {
      const std::string nm = "s[" + std::to_string(n) + "][" + std::to_string(k) + "]";
      if (from.cochain)
        check_eq(r, category, nm, to.s[n][k] * g[n + 1], g[n] * from.s[n][k]);
      else
        check_eq(r, category, nm, to.s[n][k] * g[n], g[n + 1] * from.s[n][k]);
    }
}

namespace {

bool have(const LinMap& m) { return m.rows() != 0 || m.cols() != 0; }

// Shared mutable state of one lift: the source realization plus the module
// structures, lifted coinvariant presentations and comparison maps discovered
// so far, keyed by the (memoized, hence stable) tower object pointers.
struct EmState {
  ARealization a;
  LinMap winv;
  std::map<const Realized*, LinMap> rho;
  std::map<const Realized*, Pres> pi;
  std::map<const Realized*, LinMap> thl, thr;
};
using St = std::shared_ptr<EmState>;

const LinMap& rho_of(const St& st, const ObjP& x) {
  auto it = st->rho.find(x.get());
  if (it == st->rho.end())
    throw KindMismatch("em_lift: object carries no composite-monad action");
  return it->second;
}

LinMap phi_inv_at(const St& st, const ObjP& x) {
  if (st->a.Phi_inv) return st->a.Phi_inv(x);
  return inverse(st->a.Phi(x));
}

// partial action through the right unit: T_l X -> T_l T_r X -> X
LinMap xi_l_of(const St& st, const ObjP& x) {
  const ARealization& a = st->a;
  return rho_of(st, x) * a.Tl.F.mor(x, a.Tr.F.ob(x), a.Tr.unit(x));
}

// partial action through the left unit: T_r X -> T_l T_r X -> X
LinMap xi_r_of(const St& st, const ObjP& x) {
  const ARealization& a = st->a;
  return rho_of(st, x) * a.Tl.unit(a.Tr.F.ob(x));
}

// module structure on T_l X: cross the law, fold the outer layer, act inside
LinMap rho_on_tl(const St& st, const ObjP& x) {
  const ARealization& a = st->a;
  ObjP tlx = a.Tl.F.ob(x), trx = a.Tr.F.ob(x);
  ObjP trtlx = a.Tr.F.ob(tlx), tltrx = a.Tl.F.ob(trx);
  return a.Tl.F.mor(tltrx, x, rho_of(st, x)) * a.Tl.F.mor(trx, tltrx, a.Tl.unit(trx)) *
         a.Tl.mult(trx) * a.Tl.F.mor(trtlx, tltrx, a.Phi(x));
}

// module structure on T_r X: fold inside, cross the inverted law, act outside
LinMap rho_on_tr(const St& st, const ObjP& x) {
  const ARealization& a = st->a;
  ObjP tlx = a.Tl.F.ob(x), trx = a.Tr.F.ob(x);
  ObjP trtrx = a.Tr.F.ob(trx), tltrx = a.Tl.F.ob(trx);
  return a.Tr.F.mor(tltrx, x, rho_of(st, x)) *
         a.Tr.F.mor(tlx, tltrx, a.Tl.F.mor(x, trx, a.Tr.unit(x))) * phi_inv_at(st, x) *
         a.Tl.F.mor(trtrx, trx, a.Tr.mult(x));
}

ObjP lift_ob(const St& st, const ObjP& x, bool left) {
  ObjP y = left ? st->a.Tl.F.ob(x) : st->a.Tr.F.ob(x);
  if (!st->rho.count(y.get()))
    st->rho.emplace(y.get(), left ? rho_on_tl(st, x) : rho_on_tr(st, x));
  return y;
}

// coinvariants of x followed by the coequalizer of the two partial actions
const Pres& pi_of(const St& st, const ObjP& x) {
  auto it = st->pi.find(x.get());
  if (it != st->pi.end()) return it->second;
  const ARealization& a = st->a;
  Pres base = a.Pi(x);
  LinMap pl = induce(a.Pi(a.Tl.F.ob(x)), base, xi_l_of(st, x), "em_lift: xi_l on coinvariants");
  LinMap pr = induce(a.Pi(a.Tr.F.ob(x)), base, xi_r_of(st, x), "em_lift: xi_r on coinvariants");
  LinMap rel = pl - pr * a.i_iso(x);
  return st->pi.emplace(x.get(), base.extended(Step::quot(rel))).first->second;
}

// theta_l(x): lifted coinvariants of S_l x -> coinvariants of x, the unique
// factorization of coinv(xi_r).i through the extra coequalizer; theta_r
// mirrors it with coinv(xi_l).i^{-1} through S_r x.
const LinMap& theta(const St& st, const ObjP& x, bool left) {
  auto& table = left ? st->thl : st->thr;
  auto it = table.find(x.get());
  if (it != table.end()) return it->second;
  const ARealization& a = st->a;
  ObjP lifted = lift_ob(st, x, left);
  const Pres& p = pi_of(st, lifted);
  const Step& q = p.steps.back();
  LinMap rhs =
      left ? induce(a.Pi(a.Tr.F.ob(x)), a.Pi(x), xi_r_of(st, x), "theta_l: xi_r on coinvariants") *
                 a.i_iso(x)
           : induce(a.Pi(a.Tl.F.ob(x)), a.Pi(x), xi_l_of(st, x), "theta_r: xi_l on coinvariants") *
                 a.i_inv(x);
  LinMap th = rhs * q.bwd;
  if (!(th * q.fwd == rhs))
    throw DoesNotDescend(std::string(left ? "theta_l" : "theta_r") +
                         ": the partial action does not factor through the lifted coinvariants");
  return table.emplace(x.get(), th).first->second;
}

}  // namespace

EmLift em_lift(const ARealization& a) {
  auto st = std::make_shared<EmState>();
  st->a = a;
  st->winv = have(a.w_inv) ? a.w_inv : inverse(a.w);

  const ObjP& cup = a.cup;
  ObjP trc = a.Tr.F.ob(cup), tlc = a.Tl.F.ob(cup);
  ObjP trtrc = a.Tr.F.ob(trc);
  // module structure on the lifted cup: fold inside, cross through w and back
  st->rho.emplace(trc.get(), st->winv * a.Tl.mult(cup) * a.Tl.F.mor(trc, tlc, a.w) *
                                 a.Tl.F.mor(trtrc, trc, a.Tr.mult(cup)));

  EmLift out;
  BRealization& b = out.real;
  b.name = a.name.empty() ? "em-lift" : a.name + ".em";
  b.fld = a.fld;
  b.Sl.F.ob = [st](const ObjP& x) { return lift_ob(st, x, true); };
  b.Sl.F.mor = a.Tl.F.mor;
  b.Sl.comult = [st](const ObjP& x) {
    return st->a.Tl.F.mor(x, st->a.Tl.F.ob(x), st->a.Tl.unit(x));
  };
  b.Sl.counit = [st](const ObjP& x) { return xi_l_of(st, x); };
  b.Sr.F.ob = [st](const ObjP& x) { return lift_ob(st, x, false); };
  b.Sr.F.mor = a.Tr.F.mor;
  b.Sr.comult = [st](const ObjP& x) {
    return st->a.Tr.F.mor(x, st->a.Tr.F.ob(x), st->a.Tr.unit(x));
  };
  b.Sr.counit = [st](const ObjP& x) { return xi_r_of(st, x); };
  b.Psi = [st](const ObjP& x) { return phi_inv_at(st, x); };
  b.Psi_inv = [st](const ObjP& x) { return st->a.Phi(x); };
  b.Pi = [st](const ObjP& x) { return pi_of(st, x); };
  b.i_iso = [st](const ObjP& x) { return inverse(theta(st, x, true)) * theta(st, x, false); };
  b.i_inv = [st](const ObjP& x) { return inverse(theta(st, x, false)) * theta(st, x, true); };
  b.cup = trc;
  b.w = a.Tr.F.mor(tlc, trc, st->winv) * phi_inv_at(st, cup);
  b.w_inv = a.Phi(cup) * a.Tr.F.mor(trc, tlc, a.w);

  out.action = [st](const ObjP& x) { return rho_of(st, x); };
  out.xi_l = [st](const ObjP& x) { return xi_l_of(st, x); };
  out.xi_r = [st](const ObjP& x) { return xi_r_of(st, x); };
  out.proj = [st](const ObjP& x) { return pi_of(st, x).steps.back().fwd; };
  out.theta_l = [st](const ObjP& x) { return theta(st, x, true); };
  out.theta_r = [st](const ObjP& x) { return theta(st, x, false); };
  return out;
}

Report validate_em_action(const ARealization& a, const ObjP& x, const LinMap& rho,
                          const std::string& tag) {
  Report r;
  ObjP trx = a.Tr.F.ob(x);
  check_eq(r, "em_action", tag + ".unit", rho * a.Tl.unit(trx) * a.Tr.unit(x),
           LinMap::identity(a.fld, x->space()));
  try {
    ObjP tltrx = a.Tl.F.ob(trx);
    ObjP trtrx = a.Tr.F.ob(trx);
    ObjP tltrtrx = a.Tl.F.ob(trtrx);
    ObjP trtltrx = a.Tr.F.ob(tltrx);
    // act twice versus multiply first in the composite monad
    LinMap lhs = rho * a.Tl.F.mor(trtltrx, trx, a.Tr.F.mor(tltrx, x, rho));
    LinMap mu = a.Tl.mult(trx) *
                a.Tl.F.mor(tltrtrx, tltrx, a.Tl.F.mor(trtrx, trx, a.Tr.mult(x))) *
                a.Tl.F.mor(trtltrx, tltrtrx, a.Phi(trx));
    check_eq(r, "em_action", tag + ".assoc", lhs, rho * mu);
  } catch (const DimensionGuard& e) {
    r.add("em_action", tag + ".assoc", true, std::string("skipped: ") + e.what());
  }
  return r;
}

TauBridge tau_bridge(const ARealization& a, int degree) {
  TauBridge out;
  out.dual = cyclic_dual(build_cocyclic(a, degree, a.name));
  EmLift lift = em_lift(a);
  out.lifted = build_cyclic(lift.real, degree, lift.real.name);

  // tau[n] = coinvariant image of the n-fold functor lift of w after theta_l
  ObjP src = a.Tr.F.ob(a.cup);
  ObjP tgt = a.Tl.F.ob(a.cup);
  LinMap wn = a.w;
  ObjP x = lift.real.cup;
  for (int n = 0;; ++n) {
    LinMap home = induce(a.Pi(src), a.Pi(tgt), wn, "tau: lifted w on coinvariants");
    out.tau.push_back(home * lift.theta_l(x));
    if (n == degree) break;
    wn = a.Tl.F.mor(src, tgt, wn);
    src = a.Tl.F.ob(src);
    tgt = a.Tl.F.ob(tgt);
    x = lift.real.Sl.F.ob(x);
  }
  for (int n = 0; n <= degree; ++n) {
    bool ok = true;
    std::string note;
    try {
      inverse(out.tau[n]);
    } catch (const Error& e) {
      ok = false;
      note = e.what();
    }
    out.report.add("tau", "invertible deg " + std::to_string(n), ok, note);
  }
  check_intertwines(out.report, "tau", out.dual, out.lifted, out.tau);
  return out;
}

}  // namespace paracyc
