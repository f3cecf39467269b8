#pragma once

#include "paracyc/functor.hpp"

namespace paracyc {

// The sixteen built-in coefficient families. A1..A8 realize para-cocyclic
// towers (two monads with a distributive law); B1..B8 realize para-cyclic
// towers (two comonads). Each family fixes a working category, the functor
// pair, the coinvariants functor, and how a fixture's coefficients are turned
// into the tower coefficient.
const std::vector<std::string>& family_ids();
bool family_is_cocyclic(const std::string& id);

// Names of the fixture coefficients a family consumes (functor-driving
// algebra/(co)ring first, module coefficient second), after resolving
// fixture-specific aliases.
std::pair<std::string, std::string> family_coeffs(const FixtureSet& fs, const std::string& id);

// Realize a family over a fixture; `coeff` overrides the default module
// coefficient by name. make_arealization accepts A1..A8, make_brealization
// B1..B8; anything else throws KindMismatch.
ARealization make_arealization(const FixtureSet& fs, const std::string& id,
                               const std::string& coeff = "");
BRealization make_brealization(const FixtureSet& fs, const std::string& id,
                               const std::string& coeff = "");

// cup, T_l cup, ..., T_l^{count-1} cup: the objects a tower visits, for law
// validation.
std::vector<ObjP> tower_objects(const ARealization& a, int count);

}  // namespace paracyc
