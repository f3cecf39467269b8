#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "paracyc/hopf.hpp"
#include "paracyc/report.hpp"

namespace paracyc {

using ObjP = std::shared_ptr<const Realized>;

ObjP make_obj(Pres pres, std::map<std::string, LinMap> maps = {});

// Hard cap on the dimension of any space the engine is allowed to build.
// Defaults to 5000; the PARACYC_DIM_CAP environment variable overrides it.
int dim_cap();
void guard_dim(long dim, const std::string& where);  // throws DimensionGuard

using NatFn = std::function<LinMap(const ObjP&)>;

// An endofunctor of the working category, realized on presented objects.
// `ob` must be memoized so that repeated application yields pointer-identical
// objects: object pointers key every cache built on top of the functor.
struct EndoR {
  std::function<ObjP(const ObjP&)> ob;
  // image of a morphism f : X.space() -> Y.space()
  std::function<LinMap(const ObjP& x, const ObjP& y, const LinMap& f)> mor;
};

struct MonadR {
  EndoR F;
  NatFn mult;  // F F X -> F X
  NatFn unit;  // X -> F X
};

struct ComonadR {
  EndoR F;
  NatFn comult;  // F X -> F F X
  NatFn counit;  // F X -> X
};

// Data realizing one para-cocyclic tower: monads T_l, T_r on the working
// category, a distributive law Phi : T_r T_l -> T_l T_r, the coinvariants
// functor as a presentation chain Pi X over X.space(), a natural isomorphism
// i : Pi T_l -> Pi T_r, and the coefficient object cup = ⊔Y together with the
// single component w : T_r ⊔Y -> T_l ⊔Y that twists the top face.
struct ARealization {
  std::string name;
  Field fld{0};
  MonadR Tl, Tr;
  NatFn Phi;
  std::function<Pres(const ObjP&)> Pi;
  NatFn i_iso;      // Pi T_l X -> Pi T_r X
  NatFn i_inv;      // its inverse
  ObjP cup;
  LinMap w;         // T_r cup -> T_l cup
  NatFn Phi_inv;    // empty unless the tower needs the inverse law
  LinMap w_inv;     // default-empty; set when a closed-form inverse is known
};

// The mirror data for a para-cyclic tower: comonads S_l, S_r, a distributive
// law Psi : S_l S_r -> S_r S_l, i : Pi S_r -> Pi S_l and w : S_l ⊔Y -> S_r ⊔Y.
struct BRealization {
  std::string name;
  Field fld{0};
  ComonadR Sl, Sr;
  NatFn Psi;
  std::function<Pres(const ObjP&)> Pi;
  NatFn i_iso;      // Pi S_r X -> Pi S_l X
  NatFn i_inv;
  ObjP cup;
  LinMap w;         // S_l cup -> S_r cup
  NatFn Psi_inv;
  LinMap w_inv;
};

// Matrix transposition is a contravariant involution on realized categories;
// it turns comonads into monads and a para-cyclic realization into a
// para-cocyclic one over the transposed objects. Presentation steps swap
// Quot <-> Sub, all structure maps transpose.
ARealization dualize(const BRealization& b);

// Law validators. Each check lands in a named category so a broken axiom is
// localizable; equality failures carry a first-discrepancy witness.
Report validate_monad(const MonadR& m, const std::vector<ObjP>& objs, const std::string& tag);
Report validate_comonad(const ComonadR& c, const std::vector<ObjP>& objs, const std::string& tag);
Report validate_distlaw(const MonadR& tl, const MonadR& tr, const NatFn& phi,
                        const std::vector<ObjP>& objs, const std::string& tag);
// (Pi, i) as a module functor over the distributive law, and (cup, w) on the
// coefficient component; `objs` feed the i-axioms.
Report validate_module_functor(const ARealization& a, const std::vector<ObjP>& objs);

// Morphism of monad pairs with distributive laws: natural transformations
// ql : T_l -> T_l', qr : T_r -> T_r' that are monad morphisms and intertwine
// the distributive laws.
Report validate_distlaw_morphism(const MonadR& tl, const MonadR& tr, const NatFn& phi,
                                 const MonadR& tl2, const MonadR& tr2, const NatFn& phi2,
                                 const NatFn& ql, const NatFn& qr, const std::vector<ObjP>& objs,
                                 const std::string& tag);

}  // namespace paracyc
