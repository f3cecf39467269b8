#pragma once

#include <map>
#include <string>
#include <vector>

#include "paracyc/linmap.hpp"

namespace paracyc {

// One presentation step, refining a "previous" space to the "current" one.
//   Quot: cur = prev / im(rel), with the canonical projection pi and its
//         coordinate section sigma (pi * sigma = id, ker pi = im rel).
//   Sub:  cur = ker(cons) <= prev, with the canonical inclusion incl and its
//         coordinate retraction retr (retr * incl = id, im incl = ker cons).
struct Step {
  enum class Kind { Quot, Sub };
  Kind kind;
  LinMap witness;  // Quot: rel (R -> prev); Sub: cons (prev -> K)
  LinMap fwd;      // prev -> cur  (Quot: pi,   Sub: retr)
  LinMap bwd;      // cur -> prev  (Quot: sigma, Sub: incl)

  static Step quot(const LinMap& rel);
  static Step sub(const LinMap& cons);
  Step transposed() const;  // quot <-> sub under matrix transpose
};

// A realization of a space as a chain of quotient/sub steps over a plain
// ambient coordinate space. Trivial chains (no steps) are plain spaces.
struct Pres {
  Field fld{0};
  FinSpace ambient;
  std::vector<Step> steps;

  static Pres plain(Field f, const FinSpace& amb) { return Pres{f, amb, {}}; }

  const FinSpace& space() const { return steps.empty() ? ambient : steps.back().fwd.cod(); }
  int dim() const { return space().dim(); }

  // ambient -> space: composite of the step forward maps.
  LinMap to_space() const;
  // space -> ambient: composite of the step backward maps (a linear section).
  LinMap from_space() const;

  Pres extended(Step s) const;
  Pres transposed() const;
};

// Push a plain-ambient map through presentations: given plain : src.ambient ->
// tgt.ambient, produce the induced map src.space() -> tgt.space(). Folding a
// target Sub step checks the image lies in the subspace; folding a source Quot
// step checks the relations are killed. Throws DoesNotDescend (with `what`
// context) otherwise.
LinMap induce(const Pres& src, const Pres& tgt, const LinMap& plain, const std::string& what);

// Same check, but only reports instead of throwing.
bool descends(const Pres& src, const Pres& tgt, const LinMap& plain);

// The canonical comparison src.space() -> tgt.space() for two presentations of
// the same ambient (induced by the identity).
LinMap comparison(const Pres& src, const Pres& tgt, const std::string& what);

// Functorial lifts of a chain: apply V (x) -, - (x) V, or Hom(C, -) to every
// step. Step kinds are preserved.
Pres kron_left(const FinSpace& left, const Pres& p);
Pres kron_right(const Pres& p, const FinSpace& right);
Pres hom_lift(const FinSpace& c, const Pres& p);

// Concatenate: interpret q's ambient as p.space() and splice the chains.
Pres splice(const Pres& p, const Pres& q);

// An object of a working category: a presented carrier plus named structure
// maps on the realized space ("lact", "ract", "lcoact", "rcoact", "lctr",
// "rctr", "act", ...).
struct Realized {
  Pres pres;
  std::map<std::string, LinMap> maps;

  const FinSpace& space() const { return pres.space(); }
  const LinMap& map(const std::string& k) const;
  bool has(const std::string& k) const { return maps.count(k) != 0; }
};

}  // namespace paracyc
