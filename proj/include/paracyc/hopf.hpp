#pragma once

#include <map>
#include <optional>
#include <string>

#include "paracyc/tensorcat.hpp"

namespace paracyc {

// A bialgebroid over the base L, or (with antipode data) a Hopf algebroid,
// given by structure constants on a plain carrier. Bialgebras over the ground
// field are the special case base == k, src == tgt == unit.
//
// The comultiplication is stored as a k-level representative B -> B (x) B of
// the structure map into B (x)_L B; all laws that land in glued tensor spaces
// are checked after composing with the canonical projection, and the descent
// machinery re-verifies representative independence wherever a formula is
// used.
//
// Module conventions for the (x)_L glue on B:
//   left-sided:  l.b = s(l) b,  b.l = t(l) b
//   right-sided: l.b = b t(l),  b.l = b s(l)
struct Bialgebroid {
  std::string name;
  Field fld{0};
  bool left_sided = true;
  BaseAlgebra base;
  FinSpace carrier;
  LinMap mult;    // B (x) B -> B
  LinMap unit;    // k -> B
  LinMap src;     // L -> B, algebra map
  LinMap tgt;     // L -> B, anti-algebra map, commuting images
  LinMap comult;  // B -> B (x) B (representative)
  LinMap counit;  // B -> L
  std::optional<LinMap> antipode, antipode_inv;

  bool hopf() const { return antipode.has_value(); }
  LinMap lact() const;  // L (x) B -> B per the side convention
  LinMap ract() const;  // B (x) L -> B
  Realized as_bimodule() const;
  LinMap lmult(const LinMap& x) const;  // b |-> x b  for x : k -> B
  LinMap rmult(const LinMap& x) const;  // b |-> b x

  // Convenience for bialgebras over the ground field.
  static Bialgebroid bialgebra(std::string name, Field f, const FinSpace& carrier,
                               const LinMap& mult, const LinMap& unit, const LinMap& comult,
                               const LinMap& counit);
};

Report validate_bialgebroid(const Bialgebroid& B);
// Antipode laws: anti-algebra map, src/tgt exchange, the two convolution
// identities against s.eps / t.eps, and two-sided invertibility.
Report validate_hopf(const Bialgebroid& B);

// A named coefficient object over a bialgebroid. Structure maps on obj:
//   base actions         "lact"  : L (x) X -> X      "ract"  : X (x) L -> X
//   bialgebroid actions  "blact" : B (x) X -> X      "bract" : X (x) B -> X
//   coactions (reps)     "blcoact" : X -> B (x) X    "brcoact" : X -> X (x) B
//   contraactions        "bctr" : Hom(B, X) -> X
//   algebra structure    "mult", "unit"     coring structure "comult", "counit"
// Kinds: module_left, module_right, comodule_left, comodule_right,
//        contramodule_left, contramodule_right, module_algebra_left,
//        comodule_algebra_right, module_coring_right, comodule_coring_left.
struct Coefficient {
  std::string name;
  std::string kind;
  Realized obj;
};

Report validate_coefficient(const Bialgebroid& B, const Coefficient& c);

// Switch a one-sided coefficient to the other side through the (inverse)
// antipode: actions  b . n = S^{-1}(b) n  /  n . b = n S^{-1}(b), coactions
// with S^{-1} on the B-leg, contraactions precomposed with S^{-1}. Requires
// Hopf data; keeps the carrier.
Coefficient flip_side(const Bialgebroid& B, const Coefficient& c);

// A bialgebroid together with its shipped coefficient objects.
struct FixtureSet {
  std::string name;
  Bialgebroid B;
  std::map<std::string, Coefficient> coeffs;

  const Coefficient& coeff(const std::string& n) const;
};

Report validate_fixture(const FixtureSet& fs);

// Built-in fixtures.
FixtureSet fixture_trivial();   // the ground field as a bialgebra over Q
FixtureSet fixture_kc2();       // group algebra of Z/2 over Q
FixtureSet fixture_ks3();       // group algebra of S_3 over Q (noncommutative)
FixtureSet fixture_sweedler();  // Sweedler's 4-dim Hopf algebra over Q
FixtureSet fixture_taft();      // Taft algebra at a cube root of 1 over gf(7)
FixtureSet fixture_lenv();      // enveloping bialgebroid (k x k)^e over its base
FixtureSet fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace paracyc
