#include "paracyc/presentation.hpp"

namespace paracyc {

Step Step::quot(const LinMap& rel) {
  auto [pi, sigma] = cokernel_pair(rel);
  return Step{Kind::Quot, rel, pi, sigma};
}

Step Step::sub(const LinMap& cons) {
  auto [incl, retr] = kernel_pair(cons);
  return Step{Kind::Sub, cons, retr, incl};
}

Step Step::transposed() const {
  // Quot (rel, pi, sigma) -> Sub (cons = rel^T, incl = pi^T, retr = sigma^T):
  // im(pi^T) = ker(rel^T) by rank counting, so the transposed data is again a
  // valid step. Dually for Sub.
  if (kind == Kind::Quot)
    return Step{Kind::Sub, witness.transpose(), bwd.transpose(), fwd.transpose()};
  return Step{Kind::Quot, witness.transpose(), bwd.transpose(), fwd.transpose()};
}

LinMap Pres::to_space() const {
  LinMap m = LinMap::identity(fld, ambient);
  for (const auto& s : steps) m = s.fwd * m;
  return m;
}

LinMap Pres::from_space() const {
  LinMap m = LinMap::identity(fld, space());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) m = it->bwd * m;
  return m;
}

Pres Pres::extended(Step s) const {
  Pres p = *this;
  if (s.fwd.dom().dim() != p.space().dim())
    throw ShapeMismatch("extended: step does not start at the current space");
  p.steps.push_back(std::move(s));
  return p;
}

Pres Pres::transposed() const {
  Pres p{fld, ambient, {}};
  p.steps.reserve(steps.size());
  for (const auto& s : steps) p.steps.push_back(s.transposed());
  return p;
}

LinMap induce(const Pres& src, const Pres& tgt, const LinMap& plain, const std::string& what) {
  if (plain.dom().dim() != src.ambient.dim() || plain.cod().dim() != tgt.ambient.dim())
    throw ShapeMismatch(what + ": plain map does not match ambients");
  // Restrict along the source chain first: well-definedness on a subobject only
  // constrains the map on the subobject, so target checks must see the
  // restricted map. Relation blocks of source quotients are stashed and must
  // die once the full target chain has been folded over them.
  LinMap g = plain;
  std::vector<LinMap> rels;
  for (const auto& s : src.steps) {
    if (s.kind == Step::Kind::Quot) rels.push_back(g * s.witness);
    g = g * s.bwd;
  }
  for (const auto& s : tgt.steps) {
    if (s.kind == Step::Kind::Sub) {
      // need im(g) inside ker(cons): cons * g == 0
      if (!(s.witness * g).is_zero())
        throw DoesNotDescend(what + ": image not contained in target subspace");
      for (const auto& r : rels)
        if (!(s.witness * r).is_zero())
          throw DoesNotDescend(what + ": map does not kill source relations");
    }
    g = s.fwd * g;
    for (auto& r : rels) r = s.fwd * r;
  }
  for (const auto& r : rels)
    if (!r.is_zero()) throw DoesNotDescend(what + ": map does not kill source relations");
  return g;
}

bool descends(const Pres& src, const Pres& tgt, const LinMap& plain) {
  try {
    induce(src, tgt, plain, "descends");
    return true;
  } catch (const DoesNotDescend&) {
    return false;
  }
}

LinMap comparison(const Pres& src, const Pres& tgt, const std::string& what) {
  if (src.ambient.dim() != tgt.ambient.dim())
    throw ShapeMismatch(what + ": presentations over different ambients");
  return induce(src, tgt, LinMap::identity(src.fld, src.ambient), what);
}

Pres kron_left(const FinSpace& left, const Pres& p) {
  Pres q{p.fld, tensor_space(left, p.ambient), {}};
  LinMap idl = LinMap::identity(p.fld, left);
  for (const auto& s : p.steps)
    q.steps.push_back(Step{s.kind, kron(idl, s.witness), kron(idl, s.fwd), kron(idl, s.bwd)});
  return q;
}

Pres kron_right(const Pres& p, const FinSpace& right) {
  Pres q{p.fld, tensor_space(p.ambient, right), {}};
  LinMap idr = LinMap::identity(p.fld, right);
  for (const auto& s : p.steps)
    q.steps.push_back(Step{s.kind, kron(s.witness, idr), kron(s.fwd, idr), kron(s.bwd, idr)});
  return q;
}

Pres hom_lift(const FinSpace& c, const Pres& p) {
  Pres q{p.fld, hom_space(c, p.ambient), {}};
  for (const auto& s : p.steps)
    q.steps.push_back(
        Step{s.kind, hom_post(s.witness, c), hom_post(s.fwd, c), hom_post(s.bwd, c)});
  return q;
}

Pres splice(const Pres& p, const Pres& q) {
  if (q.ambient.dim() != p.space().dim()) throw ShapeMismatch("splice: chains do not meet");
  Pres r = p;
  for (const auto& s : q.steps) r.steps.push_back(s);
  return r;
}

const LinMap& Realized::map(const std::string& k) const {
  auto it = maps.find(k);
  if (it == maps.end()) throw KindMismatch("missing structure map: " + k);
  return it->second;
}

}  // namespace paracyc
