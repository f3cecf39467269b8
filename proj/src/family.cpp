#include "paracyc/family.hpp"

#include <initializer_list>

namespace paracyc {

namespace {

using Entries = std::vector<std::tuple<int, int, Scalar>>;

LinMap idm(Field f, const FinSpace& s) { return LinMap::identity(f, s); }

// x |-> 1 (x) x and x |-> x (x) 1 for a unit k -> A.
LinMap insert_unit_left(Field f, const LinMap& unit, const FinSpace& x) {
  return kron(unit, idm(f, x)).with_spaces(x, tensor_space(unit.cod(), x));
}
LinMap insert_unit_right(Field f, const LinMap& unit, const FinSpace& x) {
  return kron(idm(f, x), unit).with_spaces(x, tensor_space(x, unit.cod()));
}
// eps (x) id and id (x) eps collapses for a counit C -> k.
LinMap collapse_counit_left(Field f, const LinMap& counit, const FinSpace& x) {
  return kron(counit, idm(f, x)).with_spaces(tensor_space(counit.dom(), x), x);
}
LinMap collapse_counit_right(Field f, const LinMap& counit, const FinSpace& x) {
  return kron(idm(f, x), counit).with_spaces(tensor_space(x, counit.dom()), x);
}
// x |-> (c |-> eps(c) x).
LinMap insert_counit(Field f, const LinMap& counit, const FinSpace& x) {
  return curry_right(collapse_counit_right(f, counit, x), x, counit.dom(), x);
}
// F |-> F(1).
LinMap eval_at_unit(Field f, const LinMap& unit, const FinSpace& x) {
  return hom_pre(unit, x).with_spaces(hom_space(unit.cod(), x), x);
}

// A (x) Hom(A,V) -> Hom(A,V): (a1, G) |-> (a |-> G(a a1)).
LinMap hom_lact_arg(const LinMap& mult, const FinSpace& a, const FinSpace& v) {
  Field f = mult.field();
  int da = a.dim(), dv = v.dim(), dh = da * dv;
  Entries es;
  for (int r = 0; r < mult.rows(); ++r)
    for (const auto& [c, val] : mult.row(r)) {
      int a0 = c / da, a1 = c % da;
      for (int x = 0; x < dv; ++x)
        es.emplace_back(x * da + a0, a1 * dh + x * da + r, val);
    }
  FinSpace h = hom_space(a, v);
  return LinMap::from_entries(f, tensor_space(a, h), h, es);
}
// Hom(A,V) (x) A -> Hom(A,V): (G, a2) |-> (a |-> G(a2 a)).
LinMap hom_ract_arg(const LinMap& mult, const FinSpace& a, const FinSpace& v) {
  Field f = mult.field();
  int da = a.dim(), dv = v.dim();
  Entries es;
  for (int r = 0; r < mult.rows(); ++r)
    for (const auto& [c, val] : mult.row(r)) {
      int a2 = c / da, a0 = c % da;
      for (int x = 0; x < dv; ++x)
        es.emplace_back(x * da + a0, (x * da + r) * da + a2, val);
    }
  FinSpace h = hom_space(a, v);
  return LinMap::from_entries(f, tensor_space(h, a), h, es);
}
// A (x) Hom(U,V) -> Hom(U,V): (a, G) |-> lact(a (x) G(-)).
LinMap hom_lact_post(const LinMap& lact, const FinSpace& a, const FinSpace& u,
                     const FinSpace& v) {
  Field f = lact.field();
  int du = u.dim(), dv = v.dim(), dh = du * dv;
  Entries es;
  for (int r = 0; r < lact.rows(); ++r)
    for (const auto& [c, val] : lact.row(r)) {
      int ai = c / dv, x = c % dv;
      for (int ui = 0; ui < du; ++ui)
        es.emplace_back(r * du + ui, ai * dh + x * du + ui, val);
    }
  FinSpace h = hom_space(u, v);
  return LinMap::from_entries(f, tensor_space(a, h), h, es);
}
// Hom(U,V) (x) A -> Hom(U,V): (G, a) |-> ract(G(-) (x) a).
LinMap hom_ract_post(const LinMap& ract, const FinSpace& a, const FinSpace& u,
                     const FinSpace& v) {
  Field f = ract.field();
  int da = a.dim(), du = u.dim();
  Entries es;
  for (int r = 0; r < ract.rows(); ++r)
    for (const auto& [c, val] : ract.row(r)) {
      int x = c / da, ai = c % da;
      for (int ui = 0; ui < du; ++ui)
        es.emplace_back(r * du + ui, (x * du + ui) * da + ai, val);
    }
  FinSpace h = hom_space(u, v);
  return LinMap::from_entries(f, tensor_space(h, a), h, es);
}
// Hom(A,Q) (x) W -> Hom(A,Q): (g, w) |-> (a |-> alpha(c |-> g(phi(c, a, w))))
// for a contraaction alpha : Hom(B,Q) -> Q and phi : B (x) A (x) W -> A.
LinMap hom_twist_ctr(const LinMap& alpha, const LinMap& phi, const FinSpace& a,
                     const FinSpace& w, const FinSpace& q, const FinSpace& bsp) {
  Field f = alpha.field();
  int da = a.dim(), dw = w.dim(), db = bsp.dim(), dh = da * q.dim();
  Entries es;
  for (int r = 0; r < alpha.rows(); ++r)
    for (const auto& [ca, va] : alpha.row(r)) {
      int qi = ca / db, cb = ca % db;
      for (int rp = 0; rp < phi.rows(); ++rp)
        for (const auto& [cp, vp] : phi.row(rp)) {
          int wi = cp % dw, rest = cp / dw;
          if (rest / da != cb) continue;
          es.emplace_back(r * da + rest % da, (qi * da + rp) * dw + wi, va * vp);
        }
    }
  FinSpace h = hom_space(a, q);
  return LinMap::from_entries(f, tensor_space(h, w), h, es);
}
// Hom(A,N) (x) A -> Hom(A,N): (g, a2) |-> (a |-> g(a2_(0) a) . a2_(1)).
LinMap hom_twist_coact(const LinMap& brco, const LinMap& mult, const LinMap& ract,
                       const FinSpace& a, const FinSpace& n, const FinSpace& bsp) {
  Field f = mult.field();
  int da = a.dim(), db = bsp.dim();
  Entries es;
  for (int r1 = 0; r1 < brco.rows(); ++r1) {
    int a20 = r1 / db, a21 = r1 % db;
    for (const auto& [a2, v1] : brco.row(r1))
      for (int rm = 0; rm < mult.rows(); ++rm)
        for (const auto& [cm, v2] : mult.row(rm)) {
          if (cm / da != a20) continue;
          int aa = cm % da;
          for (int rn = 0; rn < ract.rows(); ++rn)
            for (const auto& [cr, v3] : ract.row(rn)) {
              if (cr % db != a21) continue;
              es.emplace_back(rn * da + aa, ((cr / db) * da + rm) * da + a2, v1 * v2 * v3);
            }
        }
  }
  FinSpace h = hom_space(a, n);
  return LinMap::from_entries(f, tensor_space(h, a), h, es);
}

// Memoized object map; the cache keeps its keys alive so pointer identity is
// stable for the lifetime of the functor.
template <class Build>
std::function<ObjP(const ObjP&)> memo_ob(Build build) {
  auto cache = std::make_shared<std::map<const Realized*, std::pair<ObjP, ObjP>>>();
  return [cache, build](const ObjP& x) -> ObjP {
    auto it = cache->find(x.get());
    if (it != cache->end()) return it->second.second;
    ObjP r = build(x);
    cache->emplace(x.get(), std::make_pair(x, r));
    return r;
  };
}

// ---------------------------------------------------------------------------
// Tensor monads  A (x)_L -  and  - (x)_L A  for an algebra A in L-bimodules,
// with the cyclic coinvariants X / [L, X] and the rotation comparison.

MonadR tensor_monad(Field f, const BaseAlgebra& L, const ObjP& A, bool left) {
  FinSpace asp = A->space();
  LinMap multa = A->map("mult");
  LinMap unita = A->map("unit");
  bool glued = !L.trivial();
  FinSpace ls = L.carrier;
  LinMap aract = glued ? A->map("ract") : LinMap();
  LinMap alact = glued ? A->map("lact") : LinMap();

  auto ob = memo_ob([=](const ObjP& x) {
    const FinSpace& xs = x->space();
    guard_dim(static_cast<long>(asp.dim()) * xs.dim(), "tensor monad");
    FinSpace amb = left ? tensor_space(asp, xs) : tensor_space(xs, asp);
    Pres p = Pres::plain(f, amb);
    std::map<std::string, LinMap> maps;
    if (glued) {
      LinMap rel = left ? kron(aract, idm(f, xs)) - kron(idm(f, asp), x->map("lact"))
                        : kron(x->map("ract"), idm(f, asp)) - kron(idm(f, xs), alact);
      p = p.extended(Step::quot(rel));
      LinMap la = left ? kron(alact, idm(f, xs)) : kron(x->map("lact"), idm(f, asp));
      LinMap ra = left ? kron(idm(f, asp), x->map("ract")) : kron(idm(f, xs), aract);
      maps.emplace("lact", induce(kron_left(ls, p), p, la, "tensor monad lact"));
      maps.emplace("ract", induce(kron_right(p, ls), p, ra, "tensor monad ract"));
    }
    return make_obj(p, std::move(maps));
  });

  MonadR m;
  m.F.ob = ob;
  m.F.mor = [=](const ObjP& x, const ObjP& y, const LinMap& g) {
    LinMap plain = left ? kron(idm(f, asp), g) : kron(g, idm(f, asp));
    return induce(ob(x)->pres, ob(y)->pres, plain, "tensor monad mor");
  };
  m.mult = [=](const ObjP& x) {
    ObjP tx = ob(x), ttx = ob(tx);
    const FinSpace& xs = x->space();
    LinMap sig = tx->pres.from_space(), pi = tx->pres.to_space();
    LinMap plain = left ? pi * kron(multa, idm(f, xs)) * kron(idm(f, asp), sig)
                        : pi * kron(idm(f, xs), multa) * kron(sig, idm(f, asp));
    return induce(ttx->pres, Pres::plain(f, tx->space()), plain, "tensor monad mult");
  };
  m.unit = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap ins = left ? insert_unit_left(f, unita, xs) : insert_unit_right(f, unita, xs);
    return ob(x)->pres.to_space() * ins;
  };
  return m;
}

NatFn tensor_phi(Field f, const FinSpace& asp, const EndoR& tl, const EndoR& tr,
                 bool forward) {
  return [=](const ObjP& x) {
    ObjP tlx = tl.ob(x), trx = tr.ob(x);
    ObjP src = forward ? tr.ob(tlx) : tl.ob(trx);
    ObjP tgt = forward ? tl.ob(trx) : tr.ob(tlx);
    LinMap plain = forward ? kron(idm(f, asp), trx->pres.to_space()) *
                                 kron(tlx->pres.from_space(), idm(f, asp))
                           : kron(tlx->pres.to_space(), idm(f, asp)) *
                                 kron(idm(f, asp), trx->pres.from_space());
    return induce(src->pres, tgt->pres, plain, "tensor distributive law");
  };
}

std::function<Pres(const ObjP&)> cyclic_pi(Field f, const BaseAlgebra& L) {
  FinSpace ls = L.carrier;
  bool glued = !L.trivial();
  return [=](const ObjP& x) {
    Pres p = Pres::plain(f, x->space());
    if (!glued) return p;
    LinMap rel = x->map("lact") - x->map("ract") * reorder(f, {ls, x->space()}, {1, 0});
    return p.extended(Step::quot(rel));
  };
}

NatFn tensor_i(Field f, const FinSpace& asp, const EndoR& tl, const EndoR& tr,
               const std::function<Pres(const ObjP&)>& pi, bool forward) {
  return [=](const ObjP& x) {
    ObjP src = forward ? tl.ob(x) : tr.ob(x);
    ObjP tgt = forward ? tr.ob(x) : tl.ob(x);
    LinMap rot = forward ? reorder(f, {asp, x->space()}, {1, 0})
                         : reorder(f, {x->space(), asp}, {1, 0});
    // The rotation only descends through the tensor glue and the cyclic
    // quotient together, so fold the full chains from the plain ambient.
    return induce(splice(src->pres, pi(src)), splice(tgt->pres, pi(tgt)), rot,
                  "coinvariant rotation");
  };
}

ARealization lmod_tensor_family(Field f, const BaseAlgebra& L, const ObjP& A) {
  ARealization a;
  a.fld = f;
  a.Tl = tensor_monad(f, L, A, true);
  a.Tr = tensor_monad(f, L, A, false);
  FinSpace asp = A->space();
  a.Phi = tensor_phi(f, asp, a.Tl.F, a.Tr.F, true);
  a.Phi_inv = tensor_phi(f, asp, a.Tl.F, a.Tr.F, false);
  a.Pi = cyclic_pi(f, L);
  a.i_iso = tensor_i(f, asp, a.Tl.F, a.Tr.F, a.Pi, true);
  a.i_inv = tensor_i(f, asp, a.Tl.F, a.Tr.F, a.Pi, false);
  return a;
}

// ---------------------------------------------------------------------------
// Hom monads  Hom(C, -)  for a coassociative counital coring C over the ground
// field; the two monad structures flatten the nested hom in the two orders.

ARealization lmod_hom_family(Field f, const FinSpace& c, const LinMap& comult,
                             const LinMap& counit) {
  ARealization a;
  a.fld = f;
  auto mk = [&](bool left) {
    MonadR m;
    auto ob = memo_ob([=](const ObjP& x) {
      guard_dim(static_cast<long>(c.dim()) * x->space().dim(), "hom monad");
      return make_obj(Pres::plain(f, hom_space(c, x->space())));
    });
    m.F.ob = ob;
    m.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) { return hom_post(g, c); };
    m.mult = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      // T_l: F |-> (c |-> F(c_(1))(c_(2)));  T_r: F |-> (c |-> F(c_(2))(c_(1))).
      LinMap fl = left ? hom_flatten_r(f, c, c, xs) : hom_flatten_l(f, c, c, xs);
      return hom_pre(comult, xs) * fl;
    };
    m.unit = [=](const ObjP& x) { return insert_counit(f, counit, x->space()); };
    return m;
  };
  a.Tl = mk(true);
  a.Tr = mk(false);
  a.Phi = [=](const ObjP& x) { return hom_arg_switch(f, c, c, x->space()); };
  a.Phi_inv = a.Phi;
  a.Pi = [=](const ObjP& x) { return Pres::plain(f, x->space()); };
  a.i_iso = [=](const ObjP& x) { return idm(f, hom_space(c, x->space())); };
  a.i_inv = a.i_iso;
  return a;
}

// ---------------------------------------------------------------------------
// Tensor monads  C (x) -  and  - (x) C  on C-bicomodules over the ground
// field, with counit collapse as multiplication and the coactions as units.

ARealization cbicomod_family(Field f, const FinSpace& c, const LinMap& comult,
                             const LinMap& counit) {
  ARealization a;
  a.fld = f;
  auto mk = [&](bool left) {
    MonadR m;
    auto ob = memo_ob([=](const ObjP& x) {
      const FinSpace& xs = x->space();
      guard_dim(static_cast<long>(c.dim()) * xs.dim(), "bicomodule tensor monad");
      FinSpace amb = left ? tensor_space(c, xs) : tensor_space(xs, c);
      std::map<std::string, LinMap> maps;
      if (left) {
        maps.emplace("lcoact", kron(comult, idm(f, xs)).with_spaces(amb, tensor_space(c, amb)));
        maps.emplace("rcoact",
                     kron(idm(f, c), x->map("rcoact")).with_spaces(amb, tensor_space(amb, c)));
      } else {
        maps.emplace("rcoact", kron(idm(f, xs), comult).with_spaces(amb, tensor_space(amb, c)));
        maps.emplace("lcoact",
                     kron(x->map("lcoact"), idm(f, c)).with_spaces(amb, tensor_space(c, amb)));
      }
      return make_obj(Pres::plain(f, amb), std::move(maps));
    });
    m.F.ob = ob;
    m.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) {
      return left ? kron(idm(f, c), g) : kron(g, idm(f, c));
    };
    m.mult = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      return left ? kron(idm(f, c), collapse_counit_left(f, counit, xs))
                  : kron(collapse_counit_right(f, counit, xs), idm(f, c));
    };
    m.unit = [=](const ObjP& x) { return left ? x->map("lcoact") : x->map("rcoact"); };
    return m;
  };
  a.Tl = mk(true);
  a.Tr = mk(false);
  a.Phi = [=](const ObjP& x) {
    // (C (x) X) (x) C and C (x) (X (x) C) share flat coordinates.
    FinSpace src = tensor_space(tensor_space(c, x->space()), c);
    FinSpace tgt = tensor_space(c, tensor_space(x->space(), c));
    return idm(f, src).with_spaces(src, tgt);
  };
  a.Phi_inv = [=](const ObjP& x) {
    FinSpace src = tensor_space(c, tensor_space(x->space(), c));
    FinSpace tgt = tensor_space(tensor_space(c, x->space()), c);
    return idm(f, src).with_spaces(src, tgt);
  };
  a.Pi = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap cons = x->map("lcoact") - reorder(f, {xs, c}, {1, 0}) * x->map("rcoact");
    return Pres::plain(f, xs).extended(Step::sub(cons));
  };
  EndoR tl = a.Tl.F, tr = a.Tr.F;
  auto pi = a.Pi;
  // On the cotensor subspace c (x) x is determined by eps(c) x, so the rotation
  // collapses the outer factor and re-expands through the other coaction.
  a.i_iso = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap rot = reorder(f, {c, xs}, {1, 0}) * x->map("lcoact") * collapse_counit_left(f, counit, xs);
    return induce(pi(tl.ob(x)), pi(tr.ob(x)), rot, "coinvariant rotation");
  };
  a.i_inv = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap rot =
        reorder(f, {xs, c}, {1, 0}) * x->map("rcoact") * collapse_counit_right(f, counit, xs);
    return induce(pi(tr.ob(x)), pi(tl.ob(x)), rot, "coinvariant rotation");
  };
  return a;
}

// ---------------------------------------------------------------------------
// Hom monads  Hom(A, -)  on A-bimodules over the ground field (right adjoints
// of A (x) -), with the A-center as coinvariants.

ARealization abimod_hom_family(Field f, const FinSpace& asp, const LinMap& mult,
                               const LinMap& unit) {
  ARealization a;
  a.fld = f;
  auto mk = [&](bool left) {
    MonadR m;
    auto ob = memo_ob([=](const ObjP& x) {
      const FinSpace& xs = x->space();
      guard_dim(static_cast<long>(asp.dim()) * xs.dim(), "bimodule hom monad");
      std::map<std::string, LinMap> maps;
      if (left) {
        maps.emplace("lact", hom_lact_post(x->map("lact"), asp, asp, xs));
        maps.emplace("ract", hom_ract_arg(mult, asp, xs));
      } else {
        maps.emplace("ract", hom_ract_post(x->map("ract"), asp, asp, xs));
        maps.emplace("lact", hom_lact_arg(mult, asp, xs));
      }
      return make_obj(Pres::plain(f, hom_space(asp, xs)), std::move(maps));
    });
    m.F.ob = ob;
    m.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) { return hom_post(g, asp); };
    m.mult = [=](const ObjP& x) {
      return hom_post(eval_at_unit(f, unit, x->space()), asp);
    };
    m.unit = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      return left ? curry_right(x->map("ract"), xs, asp, xs)
                  : curry_left(x->map("lact"), asp, xs, xs);
    };
    return m;
  };
  a.Tl = mk(true);
  a.Tr = mk(false);
  a.Phi = [=](const ObjP& x) { return hom_arg_switch(f, asp, asp, x->space()); };
  a.Phi_inv = a.Phi;
  a.Pi = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap cons =
        curry_left(x->map("lact"), asp, xs, xs) - curry_right(x->map("ract"), xs, asp, xs);
    return Pres::plain(f, xs).extended(Step::sub(cons));
  };
  EndoR tl = a.Tl.F, tr = a.Tr.F;
  auto pi = a.Pi;
  a.i_iso = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap plain = curry_right(x->map("ract"), xs, asp, xs) * eval_at_unit(f, unit, xs);
    return induce(pi(tl.ob(x)), pi(tr.ob(x)), plain, "center comparison");
  };
  a.i_inv = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap plain = curry_left(x->map("lact"), asp, xs, xs) * eval_at_unit(f, unit, xs);
    return induce(pi(tr.ob(x)), pi(tl.ob(x)), plain, "center comparison");
  };
  return a;
}

// ---------------------------------------------------------------------------
// Tensor comonads  C (x) -  and  - (x) C  over the ground field.

BRealization lmod_tensor_cofamily(Field f, const FinSpace& c, const LinMap& comult,
                                  const LinMap& counit) {
  BRealization b;
  b.fld = f;
  auto mk = [&](bool left) {
    ComonadR s;
    auto ob = memo_ob([=](const ObjP& x) {
      guard_dim(static_cast<long>(c.dim()) * x->space().dim(), "tensor comonad");
      return make_obj(Pres::plain(
          f, left ? tensor_space(c, x->space()) : tensor_space(x->space(), c)));
    });
    s.F.ob = ob;
    s.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) {
      return left ? kron(idm(f, c), g) : kron(g, idm(f, c));
    };
    s.comult = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      return left ? kron(comult, idm(f, xs)) : kron(idm(f, xs), comult);
    };
    s.counit = [=](const ObjP& x) {
      return left ? collapse_counit_left(f, counit, x->space())
                  : collapse_counit_right(f, counit, x->space());
    };
    return s;
  };
  b.Sl = mk(true);
  b.Sr = mk(false);
  b.Psi = [=](const ObjP& x) {
    FinSpace src = tensor_space(c, tensor_space(x->space(), c));
    FinSpace tgt = tensor_space(tensor_space(c, x->space()), c);
    return idm(f, src).with_spaces(src, tgt);
  };
  b.Psi_inv = [=](const ObjP& x) {
    FinSpace src = tensor_space(tensor_space(c, x->space()), c);
    FinSpace tgt = tensor_space(c, tensor_space(x->space(), c));
    return idm(f, src).with_spaces(src, tgt);
  };
  b.Pi = [=](const ObjP& x) { return Pres::plain(f, x->space()); };
  b.i_iso = [=](const ObjP& x) { return reorder(f, {x->space(), c}, {1, 0}); };
  b.i_inv = [=](const ObjP& x) { return reorder(f, {c, x->space()}, {1, 0}); };
  return b;
}

// ---------------------------------------------------------------------------
// Hom comonads  Hom(A, -)  for an algebra A over the ground field, comonadic
// via precomposition with the multiplication.

BRealization lmod_hom_cofamily(Field f, const FinSpace& asp, const LinMap& mult,
                               const LinMap& unit) {
  BRealization b;
  b.fld = f;
  auto mk = [&](bool left) {
    ComonadR s;
    auto ob = memo_ob([=](const ObjP& x) {
      guard_dim(static_cast<long>(asp.dim()) * x->space().dim(), "hom comonad");
      return make_obj(Pres::plain(f, hom_space(asp, x->space())));
    });
    s.F.ob = ob;
    s.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) { return hom_post(g, asp); };
    s.comult = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      LinMap pre = hom_pre(mult, xs);
      return (left ? hom_unflatten_r(f, asp, asp, xs) : hom_unflatten_l(f, asp, asp, xs)) * pre;
    };
    s.counit = [=](const ObjP& x) { return eval_at_unit(f, unit, x->space()); };
    return s;
  };
  b.Sl = mk(true);
  b.Sr = mk(false);
  b.Psi = [=](const ObjP& x) { return hom_arg_switch(f, asp, asp, x->space()); };
  b.Psi_inv = b.Psi;
  b.Pi = [=](const ObjP& x) { return Pres::plain(f, x->space()); };
  b.i_iso = [=](const ObjP& x) { return idm(f, hom_space(asp, x->space())); };
  b.i_inv = b.i_iso;
  return b;
}

// ---------------------------------------------------------------------------
// Tensor comonads  A (x) -  and  - (x) A  on A-bimodules, comultiplication
// inserts the unit, counits are the actions; coinvariants X / [A, X].

BRealization abimod_tensor_cofamily(Field f, const FinSpace& asp, const LinMap& mult,
                                    const LinMap& unit) {
  BRealization b;
  b.fld = f;
  auto mk = [&](bool left) {
    ComonadR s;
    auto ob = memo_ob([=](const ObjP& x) {
      const FinSpace& xs = x->space();
      guard_dim(static_cast<long>(asp.dim()) * xs.dim(), "bimodule tensor comonad");
      FinSpace amb = left ? tensor_space(asp, xs) : tensor_space(xs, asp);
      std::map<std::string, LinMap> maps;
      if (left) {
        maps.emplace("lact", kron(mult, idm(f, xs)).with_spaces(tensor_space(asp, amb), amb));
        maps.emplace("ract",
                     kron(idm(f, asp), x->map("ract")).with_spaces(tensor_space(amb, asp), amb));
      } else {
        maps.emplace("ract", kron(idm(f, xs), mult).with_spaces(tensor_space(amb, asp), amb));
        maps.emplace("lact",
                     kron(x->map("lact"), idm(f, asp)).with_spaces(tensor_space(asp, amb), amb));
      }
      return make_obj(Pres::plain(f, amb), std::move(maps));
    });
    s.F.ob = ob;
    s.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) {
      return left ? kron(idm(f, asp), g) : kron(g, idm(f, asp));
    };
    s.comult = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      return left ? kron(idm(f, asp), insert_unit_left(f, unit, xs))
                  : kron(insert_unit_right(f, unit, xs), idm(f, asp));
    };
    s.counit = [=](const ObjP& x) { return left ? x->map("lact") : x->map("ract"); };
    return s;
  };
  b.Sl = mk(true);
  b.Sr = mk(false);
  b.Psi = [=](const ObjP& x) {
    FinSpace src = tensor_space(asp, tensor_space(x->space(), asp));
    FinSpace tgt = tensor_space(tensor_space(asp, x->space()), asp);
    return idm(f, src).with_spaces(src, tgt);
  };
  b.Psi_inv = [=](const ObjP& x) {
    FinSpace src = tensor_space(tensor_space(asp, x->space()), asp);
    FinSpace tgt = tensor_space(asp, tensor_space(x->space(), asp));
    return idm(f, src).with_spaces(src, tgt);
  };
  b.Pi = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap rel = x->map("lact") - x->map("ract") * reorder(f, {asp, xs}, {1, 0});
    return Pres::plain(f, xs).extended(Step::quot(rel));
  };
  EndoR sl = b.Sl.F, sr = b.Sr.F;
  auto pi = b.Pi;
  b.i_iso = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap plain = insert_unit_left(f, unit, xs) * x->map("lact") * reorder(f, {xs, asp}, {1, 0});
    return induce(pi(sr.ob(x)), pi(sl.ob(x)), plain, "cocenter comparison");
  };
  b.i_inv = [=](const ObjP& x) {
    const FinSpace& xs = x->space();
    LinMap plain = insert_unit_right(f, unit, xs) * x->map("ract") * reorder(f, {asp, xs}, {1, 0});
    return induce(pi(sl.ob(x)), pi(sr.ob(x)), plain, "cocenter comparison");
  };
  return b;
}

// ---------------------------------------------------------------------------
// Hom comonads  Hom(C, -)  on C-bicontramodules over the ground field: cofree
// contraaction on the hom argument, pointwise lift on the values.

BRealization cbictr_cofamily(Field f, const FinSpace& c, const LinMap& comult,
                             const LinMap& counit) {
  BRealization b;
  b.fld = f;
  auto mk = [&](bool left) {
    ComonadR s;
    auto ob = memo_ob([=](const ObjP& x) {
      const FinSpace& xs = x->space();
      guard_dim(static_cast<long>(c.dim()) * xs.dim(), "bicontramodule hom comonad");
      std::map<std::string, LinMap> maps;
      if (left) {
        maps.emplace("rctr", hom_pre(comult, xs) * hom_flatten_r(f, c, c, xs));
        maps.emplace("lctr", hom_post(x->map("lctr"), c) * hom_arg_switch(f, c, c, xs));
      } else {
        maps.emplace("lctr", hom_pre(comult, xs) * hom_flatten_l(f, c, c, xs));
        maps.emplace("rctr", hom_post(x->map("rctr"), c) * hom_arg_switch(f, c, c, xs));
      }
      return make_obj(Pres::plain(f, hom_space(c, xs)), std::move(maps));
    });
    s.F.ob = ob;
    s.F.mor = [=](const ObjP&, const ObjP&, const LinMap& g) { return hom_post(g, c); };
    s.comult = [=](const ObjP& x) {
      const FinSpace& xs = x->space();
      LinMap k = left ? collapse_counit_right(f, counit, c) : collapse_counit_left(f, counit, c);
      return (left ? hom_unflatten_r(f, c, c, xs) : hom_unflatten_l(f, c, c, xs)) *
             hom_pre(k, xs);
    };
    s.counit = [=](const ObjP& x) { return left ? x->map("rctr") : x->map("lctr"); };
    return s;
  };
  b.Sl = mk(true);
  b.Sr = mk(false);
  b.Psi = [=](const ObjP& x) { return hom_arg_switch(f, c, c, x->space()); };
  b.Psi_inv = b.Psi;
  b.Pi = [=](const ObjP& x) {
    LinMap rel = x->map("lctr") - x->map("rctr");
    return Pres::plain(f, x->space()).extended(Step::quot(rel));
  };
  EndoR sl = b.Sl.F, sr = b.Sr.F;
  auto pi = b.Pi;
  b.i_iso = [=](const ObjP& x) {
    LinMap plain = insert_counit(f, counit, x->space()) * x->map("rctr");
    return induce(pi(sr.ob(x)), pi(sl.ob(x)), plain, "contraaction comparison");
  };
  b.i_inv = [=](const ObjP& x) {
    LinMap plain = insert_counit(f, counit, x->space()) * x->map("lctr");
    return induce(pi(sl.ob(x)), pi(sr.ob(x)), plain, "contraaction comparison");
  };
  return b;
}

// ---------------------------------------------------------------------------

struct Plan {
  std::vector<const char*> functor;
  std::vector<const char*> module;
};

const std::map<std::string, Plan>& plans() {
  static const std::map<std::string, Plan> p{
      {"A1", {{"alg_adj", "alg"}, {"comod_reg_l", "mcomod"}}},
      {"A2", {{"comodalg_reg"}, {"mod_reg_r"}}},
      {"A3", {{"coring_reg"}, {"ctr_dual_l"}}},
      {"A4", {{"ccoring_coadj"}, {"mod_reg_r"}}},
      {"A5", {{"ccoring_coadj"}, {"mod_reg_r"}}},
      {"A6", {{"coring_reg"}, {"comod_reg_l"}}},
      {"A7", {{"alg_adj"}, {"ctr_dual_l"}}},
      {"A8", {{"comodalg_reg"}, {"mod_reg_r"}}},
      {"B1", {{"ccoring_coadj"}, {"mod_reg_l"}}},
      {"B2", {{"coring_reg"}, {"comod_reg_r"}}},
      {"B3", {{"alg_adj"}, {"ctr_dual_r"}}},
      {"B4", {{"comodalg_reg"}, {"mod_reg_l"}}},
      {"B5", {{"alg_adj"}, {"comod_reg_r"}}},
      {"B6", {{"comodalg_reg"}, {"mod_reg_l"}}},
      {"B7", {{"coring_reg"}, {"ctr_dual_r"}}},
      {"B8", {{"ccoring_coadj"}, {"mod_reg_l"}}},
  };
  return p;
}

std::string pick(const FixtureSet& fs, const std::vector<const char*>& names,
                 const std::string& id) {
  for (const char* n : names)
    if (fs.coeffs.count(n)) return n;
  throw KindMismatch("fixture " + fs.name + " has no " + std::string(names.front()) +
                     " coefficient for family " + id);
}

void need_ground(const FixtureSet& fs, const std::string& id) {
  if (!fs.B.base.trivial())
    throw KindMismatch("family " + id + " needs a bialgebra over the ground field");
}

const LinMap& need_map(const Coefficient& c, const std::string& key, const std::string& id) {
  if (!c.obj.has(key))
    throw KindMismatch("coefficient " + c.name + " lacks \"" + key + "\" needed by " + id);
  return c.obj.map(key);
}

}  // namespace

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                            "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8"};
  return ids;
}

bool family_is_cocyclic(const std::string& id) {
  if (!plans().count(id)) throw KindMismatch("unknown family: " + id);
  return id[0] == 'A';
}

std::pair<std::string, std::string> family_coeffs(const FixtureSet& fs, const std::string& id) {
  auto it = plans().find(id);
  if (it == plans().end()) throw KindMismatch("unknown family: " + id);
  return {pick(fs, it->second.functor, id), pick(fs, it->second.module, id)};
}

ARealization make_arealization(const FixtureSet& fs, const std::string& id,
                               const std::string& coeff) {
  if (!family_is_cocyclic(id))
    throw KindMismatch(id + " is a para-cyclic family; use make_brealization");
  const Bialgebroid& B = fs.B;
  Field f = B.fld;
  FinSpace bc = B.carrier;
  auto [fc, mc] = family_coeffs(fs, id);
  if (!coeff.empty()) mc = coeff;
  const Coefficient& ac = fs.coeff(fc);
  const Coefficient& yc = fs.coeff(mc);
  FinSpace ys = yc.obj.space();
  LinMap idy = idm(f, ys);

  ARealization a;
  if (id == "A1" || id == "A2") {
    ObjP alg = make_obj(ac.obj.pres, ac.obj.maps);
    a = lmod_tensor_family(f, B.base, alg);
    a.cup = make_obj(yc.obj.pres, yc.obj.maps);
    FinSpace asp = alg->space();
    LinMap w_plain;
    if (id == "A1") {
      // m (x) a  |->  m_(-1) . a (x) m_(0)
      w_plain = kron(need_map(ac, "blact", id), idy) * reorder(f, {bc, ys, asp}, {0, 2, 1}) *
                kron(need_map(yc, "blcoact", id), idm(f, asp));
    } else {
      // n (x) a  |->  a_(0) (x) n . a_(1)
      w_plain = kron(idm(f, asp), need_map(yc, "bract", id)) *
                reorder(f, {ys, asp, bc}, {1, 0, 2}) *
                kron(idy, need_map(ac, "brcoact", id));
    }
    ObjP trc = a.Tr.F.ob(a.cup), tlc = a.Tl.F.ob(a.cup);
    a.w = induce(trc->pres, tlc->pres, w_plain, id + " w");
  } else if (id == "A3" || id == "A4") {
    need_ground(fs, id);
    a = lmod_hom_family(f, bc, ac.obj.map("comult"), ac.obj.map("counit"));
    a.cup = make_obj(yc.obj.pres, yc.obj.maps);
    if (id == "A3") {
      // w(h)(c) = alpha(b |-> h(c . b))
      a.w = hom_post(need_map(yc, "bctr", id), bc) * hom_unflatten_r(f, bc, bc, ys) *
            hom_pre(need_map(ac, "bract", id), ys);
    } else {
      // w(h)(c) = h(c_(0)) . c_(-1)
      LinMap q = need_map(yc, "bract", id) * reorder(f, {bc, ys}, {1, 0});
      a.w = hom_conj_l(need_map(ac, "blcoact", id), q, bc, ys, bc);
    }
  } else if (id == "A5" || id == "A6") {
    need_ground(fs, id);
    LinMap comult = ac.obj.map("comult");
    a = cbicomod_family(f, bc, comult, ac.obj.map("counit"));
    FinSpace cupsp = tensor_space(ys, bc);
    if (id == "A5") {
      // n (x) c (x) d  |->  c_(0) (x) n . c_(-1) (x) d
      a.w = kron(idm(f, bc), kron(need_map(yc, "bract", id), idm(f, bc))) *
            reorder(f, {ys, bc, bc, bc}, {2, 0, 1, 3}) *
            kron(kron(idy, need_map(ac, "blcoact", id)), idm(f, bc));
    } else {
      // m (x) c (x) d  |->  c . m_(-1) (x) m_(0) (x) d
      a.w = kron(kron(need_map(ac, "bract", id), idy), idm(f, bc)) *
            reorder(f, {bc, ys, bc, bc}, {2, 0, 1, 3}) *
            kron(kron(need_map(yc, "blcoact", id), idm(f, bc)), idm(f, bc));
    }
    // The right coaction duplicates cofreely; the left one twists through w.
    LinMap rco = kron(idy, comult).with_spaces(cupsp, tensor_space(cupsp, bc));
    LinMap lco = (a.w * rco).with_spaces(cupsp, tensor_space(bc, cupsp));
    a.cup = make_obj(Pres::plain(f, cupsp), {{"lcoact", lco}, {"rcoact", rco}});
  } else if (id == "A7" || id == "A8") {
    need_ground(fs, id);
    LinMap mult = ac.obj.map("mult"), unit = ac.obj.map("unit");
    a = abimod_hom_family(f, bc, mult, unit);
    FinSpace cupsp = hom_space(bc, ys);
    LinMap lact = hom_lact_arg(mult, bc, ys);
    FinSpace aa = tensor_space(bc, bc);
    if (id == "A7") {
      const LinMap& alpha = need_map(yc, "bctr", id);
      const LinMap& act = need_map(ac, "blact", id);
      // (g . a2)(a) = alpha(c |-> g((c . a2) a))
      LinMap phi = mult * kron(act, idm(f, bc)) * reorder(f, {bc, bc, bc}, {0, 2, 1});
      a.cup = make_obj(Pres::plain(f, cupsp),
                       {{"lact", lact}, {"ract", hom_twist_ctr(alpha, phi, bc, bc, ys, bc)}});
      // w(h)(a)(b) = alpha(c |-> h(b)(c . a))
      LinMap rho = kron(idm(f, bc), act) * reorder(f, {bc, bc, bc}, {2, 0, 1});
      a.w = hom_unflatten_r(f, bc, bc, ys) * hom_post(alpha, aa) *
            hom_unflatten_l(f, aa, bc, ys) * hom_pre(rho, ys) * hom_flatten_r(f, bc, bc, ys);
    } else {
      const LinMap& brco = need_map(ac, "brcoact", id);
      const LinMap& bract = need_map(yc, "bract", id);
      // (g . a2)(a) = g(a2_(0) a) . a2_(1)
      a.cup = make_obj(Pres::plain(f, cupsp),
                       {{"lact", lact}, {"ract", hom_twist_coact(brco, mult, bract, bc, ys, bc)}});
      // w(h)(a)(b) = h(b)(a_(0)) . a_(1)
      LinMap p = kron(idm(f, bc), brco) * reorder(f, {bc, bc}, {1, 0});
      a.w = hom_unflatten_r(f, bc, bc, ys) * hom_conj_r(p, bract, aa, ys, bc) *
            hom_flatten_r(f, bc, bc, ys);
    }
  } else {
    throw KindMismatch("unknown family: " + id);
  }
  a.name = id + "/" + fs.name + "/" + mc;
  return a;
}

BRealization make_brealization(const FixtureSet& fs, const std::string& id,
                               const std::string& coeff) {
  if (family_is_cocyclic(id))
    throw KindMismatch(id + " is a para-cocyclic family; use make_arealization");
  const Bialgebroid& B = fs.B;
  Field f = B.fld;
  FinSpace bc = B.carrier;
  auto [fc, mc] = family_coeffs(fs, id);
  if (!coeff.empty()) mc = coeff;
  const Coefficient& ac = fs.coeff(fc);
  const Coefficient& yc = fs.coeff(mc);
  FinSpace ys = yc.obj.space();
  LinMap idy = idm(f, ys);
  need_ground(fs, id);

  BRealization b;
  if (id == "B1" || id == "B2") {
    b = lmod_tensor_cofamily(f, bc, ac.obj.map("comult"), ac.obj.map("counit"));
    b.cup = make_obj(yc.obj.pres, yc.obj.maps);
    if (id == "B1") {
      // c (x) n  |->  c_(-1) . n (x) c_(0)
      b.w = kron(need_map(yc, "blact", id), idm(f, bc)) * reorder(f, {bc, bc, ys}, {0, 2, 1}) *
            kron(need_map(ac, "blcoact", id), idy);
    } else {
      // c (x) m  |->  m_(0) (x) c . m_(1)
      b.w = kron(idy, need_map(ac, "bract", id)) * reorder(f, {bc, ys, bc}, {1, 0, 2}) *
            kron(idm(f, bc), need_map(yc, "brcoact", id));
    }
  } else if (id == "B3" || id == "B4") {
    b = lmod_hom_cofamily(f, bc, ac.obj.map("mult"), ac.obj.map("unit"));
    b.cup = make_obj(yc.obj.pres, yc.obj.maps);
    if (id == "B3") {
      // w(h)(a) = alpha(c |-> h(c . a))
      b.w = hom_post(need_map(yc, "bctr", id), bc) * hom_unflatten_l(f, bc, bc, ys) *
            hom_pre(need_map(ac, "blact", id), ys);
    } else {
      // w(h)(a) = a_(1) . h(a_(0))
      LinMap q = need_map(yc, "blact", id) * reorder(f, {ys, bc}, {1, 0});
      b.w = hom_conj_r(need_map(ac, "brcoact", id), q, bc, ys, bc);
    }
  } else if (id == "B5" || id == "B6") {
    LinMap mult = ac.obj.map("mult"), unit = ac.obj.map("unit");
    b = abimod_tensor_cofamily(f, bc, mult, unit);
    FinSpace cupsp = tensor_space(ys, bc);
    FinSpace amb_l = tensor_space(bc, cupsp), amb_r = tensor_space(cupsp, bc);
    if (id == "B5") {
      const LinMap& act = need_map(ac, "blact", id);
      const LinMap& brco = need_map(yc, "brcoact", id);
      // a1 . (m (x) a) = m_(0) (x) (m_(1) . a1) a ;  (m (x) a) . a2 = m (x) a a2
      LinMap tw = reorder(f, {bc, ys, bc, bc}, {1, 2, 0, 3}) * kron(idm(f, bc), kron(brco, idm(f, bc)));
      LinMap lact = (kron(idy, mult * kron(act, idm(f, bc))) * tw).with_spaces(amb_l, cupsp);
      LinMap ract = kron(idy, mult).with_spaces(amb_r, cupsp);
      b.cup = make_obj(Pres::plain(f, cupsp), {{"lact", lact}, {"ract", ract}});
      // a (x) m (x) e  |->  m_(0) (x) m_(1) . a (x) e
      b.w = (kron(idy, kron(act, idm(f, bc))) * tw).with_spaces(amb_l, amb_r);
    } else {
      const LinMap& blact = need_map(yc, "blact", id);
      const LinMap& brco = need_map(ac, "brcoact", id);
      // a1 . (n (x) a) = a1_(1) . n (x) a1_(0) a ;  (n (x) a) . a2 = n (x) a a2
      LinMap tw = reorder(f, {bc, bc, ys, bc}, {1, 2, 0, 3}) * kron(kron(brco, idy), idm(f, bc));
      LinMap lact = (kron(blact, mult) * tw).with_spaces(amb_l, cupsp);
      LinMap ract = kron(idy, mult).with_spaces(amb_r, cupsp);
      b.cup = make_obj(Pres::plain(f, cupsp), {{"lact", lact}, {"ract", ract}});
      // a (x) n (x) e  |->  a_(1) . n (x) a_(0) (x) e
      b.w = (kron(kron(blact, idm(f, bc)), idm(f, bc)) * tw).with_spaces(amb_l, amb_r);
    }
  } else if (id == "B7" || id == "B8") {
    LinMap comult = ac.obj.map("comult"), counit = ac.obj.map("counit");
    b = cbictr_cofamily(f, bc, comult, counit);
    FinSpace cupsp = hom_space(bc, ys);
    FinSpace cc = tensor_space(bc, bc);
    if (id == "B7") {
      const LinMap& alpha = need_map(yc, "bctr", id);
      // w(h)(c)(d) = alpha(b |-> h(d . b)(c))
      LinMap rho = kron(need_map(ac, "bract", id), idm(f, bc)) * reorder(f, {bc, bc, bc}, {2, 0, 1});
      b.w = hom_unflatten_r(f, bc, bc, ys) * hom_post(alpha, cc) *
            hom_unflatten_l(f, cc, bc, ys) * hom_pre(rho, ys) * hom_flatten_r(f, bc, bc, ys);
    } else {
      // w(h)(c)(d) = d_(-1) . h(d_(0))(c)
      LinMap p = reorder(f, {bc, bc, bc}, {1, 2, 0}) * kron(idm(f, bc), need_map(ac, "blcoact", id));
      b.w = hom_unflatten_r(f, bc, bc, ys) *
            hom_conj_l(p, need_map(yc, "blact", id), cc, ys, bc) *
            hom_flatten_r(f, bc, bc, ys);
    }
    // The left contraaction folds the doubled hom argument through the
    // comultiplication cofreely; the right one twists through w first.
    LinMap lctr = hom_pre(comult, ys) * hom_flatten_l(f, bc, bc, ys);
    LinMap rctr = lctr * b.w;
    b.cup = make_obj(Pres::plain(f, cupsp), {{"lctr", lctr}, {"rctr", rctr}});
  } else {
    throw KindMismatch("unknown family: " + id);
  }
  b.name = id + "/" + fs.name + "/" + mc;
  return b;
}

std::vector<ObjP> tower_objects(const ARealization& a, int count) {
  std::vector<ObjP> v{a.cup};
  for (int i = 1; i < count; ++i) v.push_back(a.Tl.F.ob(v.back()));
  return v;
}

}  // namespace paracyc
