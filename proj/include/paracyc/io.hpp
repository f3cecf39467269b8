#pragma once

#include <string>

#include "paracyc/complex.hpp"
#include "paracyc/hopf.hpp"
#include "paracyc/report.hpp"

namespace paracyc {

// JSON text <-> in-memory structures.
//
// Scalars travel as exact strings ("n" or "n/d" in lowest terms over the
// rationals, least nonnegative residues over a prime field), never as
// floating point, so serialize -> parse -> serialize is byte-identical.
// Malformed input throws ParseError naming the offending field; a syntax
// error carries the byte offset reported by the JSON reader.

// A fixture file declares named spaces (ordered basis label lists), named
// maps (dom/cod as lists of space references, entries as row-label /
// col-label / scalar-string triples), the role bindings that assemble them
// into a bialgebroid over its base, and the coefficient blocks. A space
// reference is a declared name, and "U->V" denotes the hom space from U
// to V; an empty dom/cod list is the ground line.
std::string fixture_to_json(const FixtureSet& fs);
FixtureSet fixture_from_json(const std::string& text);

// A complex dump records the tower spaces per degree and every structure
// map as integer-indexed sparse triples. Orientation travels with the
// "cochain" flag; map shapes are recovered from it.
std::string complex_to_json(const ParaComplex& c);
ParaComplex complex_from_json(const std::string& text);

// A report records the command it answers and one record per check, in
// emission order, plus summary counts. Degrees are lifted out of the
// check names where present. Timing is deliberately excluded so that
// identical runs serialize identically.
std::string report_to_json(const Report& r, const std::string& command);

// Whole-file helpers; failures throw ParseError naming the path.
std::string slurp(const std::string& path);
void spill(const std::string& path, const std::string& text);

}  // namespace paracyc
