#pragma once

#include "paracyc/presentation.hpp"
#include "paracyc/report.hpp"

namespace paracyc {

// The base algebra L that tensor products and hom spaces are taken over.
struct BaseAlgebra {
  Field fld{0};
  FinSpace carrier;
  LinMap mult;  // L (x) L -> L
  LinMap unit;  // k -> L

  static BaseAlgebra ground(Field f);
  bool trivial() const;  // the ground field itself
};

Report validate_base_algebra(const BaseAlgebra& L);

// Left/right module and bimodule laws over L for the named actions on
// X.space(). Checks only the actions present; "lact"/"ract" both present
// additionally checks that they commute.
Report validate_base_bimodule(const BaseAlgebra& L, const Realized& x, const std::string& tag);

// X (x)_L Y presented over X.ambient (x) Y.ambient: both chains lifted, then
// the glue relation  x.l (x) y - x (x) l.y  divided out (skipped when L is the
// ground field). Uses X's "ract" and Y's "lact".
Pres tensor_over_base(const BaseAlgebra& L, const Realized& x, const Realized& y);

// The cyclic tensor product of a word of L-bimodules: adjacent glue relations
// plus the wrap-around  x_0 ... x_{k-1}.l - l.x_0 ... x_{k-1}. The cut sits at
// the first factor: the ambient is the plain tensor in the given order. The
// empty word is L / [L,L].
Pres cyclic_tensor(const BaseAlgebra& L, const std::vector<const Realized*>& word);

// Right-L-linear maps Hom_{-,L}(C, X) for a plain right module (C, ract_c);
// chain = covariant lift of X's chain + the linearity constraint (skipped
// when L is the ground field). Uses X's "ract".
Pres hom_right_linear(const BaseAlgebra& L, const FinSpace& c, const LinMap& ract_c,
                      const Realized& x);
// Left-L-linear maps Hom_{L,-}(C, X) for a plain left module (C, lact_c);
// uses X's "lact".
Pres hom_left_linear(const BaseAlgebra& L, const FinSpace& c, const LinMap& lact_c,
                     const Realized& x);

}  // namespace paracyc
