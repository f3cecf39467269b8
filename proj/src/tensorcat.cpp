#include "paracyc/tensorcat.hpp"

#include <algorithm>

namespace paracyc {

std::string first_discrepancy(const LinMap& lhs, const LinMap& rhs) {
  LinMap d = lhs - rhs;
  for (int i = 0; i < d.rows(); ++i)
    if (!d.row(i).empty()) {
      int j = d.row(i)[0].first;
      return "entry (" + d.cod().labels[i] + " <- " + d.dom().labels[j] +
             ") differs by " + d.row(i)[0].second.str();
    }
  return "";
}

void check_eq(Report& r, const std::string& category, const std::string& name, const LinMap& lhs,
              const LinMap& rhs) {
  std::string w;
  bool ok = true;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    ok = false;
    w = "shape mismatch";
  } else if (!(lhs == rhs)) {
    ok = false;
    w = first_discrepancy(lhs, rhs);
  }
  r.add(category, name, ok, w);
}

BaseAlgebra BaseAlgebra::ground(Field f) {
  FinSpace one = FinSpace::line();
  return BaseAlgebra{f, one,
                     LinMap::identity(f, one).with_spaces(tensor_space(one, one), one),
                     LinMap::identity(f, one)};
}

bool BaseAlgebra::trivial() const {
  return carrier.dim() == 1 && unit.at(0, 0).is_one() && mult.at(0, 0).is_one();
}

Report validate_base_algebra(const BaseAlgebra& L) {
  Report r;
  Field f = L.fld;
  LinMap id = LinMap::identity(f, L.carrier);
  check_eq(r, "base.algebra", "assoc", L.mult * kron(L.mult, id), L.mult * kron(id, L.mult));
  check_eq(r, "base.algebra", "unit_left", L.mult * kron(L.unit, id), id);
  check_eq(r, "base.algebra", "unit_right", L.mult * kron(id, L.unit), id);
  return r;
}

Report validate_base_bimodule(const BaseAlgebra& L, const Realized& x, const std::string& tag) {
  Report r;
  Field f = L.fld;
  LinMap idx = LinMap::identity(f, x.space());
  LinMap idl = LinMap::identity(f, L.carrier);
  if (x.has("lact")) {
    const LinMap& a = x.map("lact");
    check_eq(r, "base.module", tag + ".lact_unit", a * kron(L.unit, idx), idx);
    check_eq(r, "base.module", tag + ".lact_assoc", a * kron(L.mult, idx), a * kron(idl, a));
  }
  if (x.has("ract")) {
    const LinMap& a = x.map("ract");
    check_eq(r, "base.module", tag + ".ract_unit", a * kron(idx, L.unit), idx);
    check_eq(r, "base.module", tag + ".ract_assoc", a * kron(a, idl), a * kron(idx, L.mult));
  }
  if (x.has("lact") && x.has("ract")) {
    const LinMap& la = x.map("lact");
    const LinMap& ra = x.map("ract");
    check_eq(r, "base.module", tag + ".bimodule", ra * kron(la, idl), la * kron(idl, ra));
  }
  return r;
}

Pres tensor_over_base(const BaseAlgebra& L, const Realized& x, const Realized& y) {
  Pres p = splice(kron_right(x.pres, y.pres.ambient), kron_left(x.space(), y.pres));
  if (L.trivial()) return p;
  LinMap rel = kron(x.map("ract"), LinMap::identity(L.fld, y.space())) -
               kron(LinMap::identity(L.fld, x.space()), y.map("lact"));
  return p.extended(Step::quot(rel));
}

Pres cyclic_tensor(const BaseAlgebra& L, const std::vector<const Realized*>& word) {
  Field f = L.fld;
  if (word.empty()) {
    // L / [L,L]
    Pres p = Pres::plain(f, L.carrier);
    if (L.trivial()) return p;
    LinMap sw = reorder(f, {L.carrier, L.carrier}, {1, 0});
    return p.extended(Step::quot(L.mult - L.mult * sw));
  }
  Pres p = word[0]->pres;
  for (size_t i = 1; i < word.size(); ++i)
    p = splice(kron_right(p, word[i]->pres.ambient), kron_left(p.space(), word[i]->pres));
  if (L.trivial()) return p;

  const int k = static_cast<int>(word.size());
  std::vector<FinSpace> sp(k);
  std::vector<LinMap> ids(k);
  for (int i = 0; i < k; ++i) {
    sp[i] = word[i]->space();
    ids[i] = LinMap::identity(f, sp[i]);
  }
  auto id_range = [&](int lo, int hi) {  // identity on sp[lo..hi)
    std::vector<FinSpace> fs(sp.begin() + lo, sp.begin() + hi);
    return LinMap::identity(f, tensor_space(fs));
  };

  std::vector<LinMap> rels;
  for (int i = 0; i + 1 < k; ++i) {
    // x_i.l (x) x_{i+1} - x_i (x) l.x_{i+1} inside the full word
    LinMap term = kron(word[i]->map("ract"), ids[i + 1]) - kron(ids[i], word[i + 1]->map("lact"));
    LinMap rel = term;
    if (i > 0) rel = kron(id_range(0, i), rel);
    if (i + 2 < k) rel = kron(rel, id_range(i + 2, k));
    rels.push_back(rel);
  }
  {
    // wrap-around: x_0 ... x_{k-1}.l - l.x_0 ... x_{k-1}
    LinMap last = word[k - 1]->map("ract");
    LinMap t1 = (k > 1) ? kron(id_range(0, k - 1), last) : last;
    std::vector<FinSpace> factors = sp;
    factors.push_back(L.carrier);
    std::vector<int> perm(k + 1);
    perm[0] = k;
    for (int i = 0; i < k; ++i) perm[i + 1] = i;
    LinMap rot = reorder(f, factors, perm);
    LinMap t2 = (k > 1) ? kron(word[0]->map("lact"), id_range(1, k)) : word[0]->map("lact");
    rels.push_back(t1 - t2 * rot);
  }
  return p.extended(Step::quot(hstack(rels)));
}

Pres hom_right_linear(const BaseAlgebra& L, const FinSpace& c, const LinMap& ract_c,
                      const Realized& x) {
  Pres p = hom_lift(c, x.pres);
  if (L.trivial()) return p;
  // f(c.l) - f(c).l as a map Hom(C, Xs) -> Hom(C (x) L, Xs)
  LinMap t1 = hom_pre(ract_c, x.space());
  LinMap t2 = hom_conj_r(LinMap::identity(L.fld, tensor_space(c, L.carrier)), x.map("ract"), c,
                         x.space(), L.carrier);
  return p.extended(Step::sub(t1 - t2));
}

Pres hom_left_linear(const BaseAlgebra& L, const FinSpace& c, const LinMap& lact_c,
                     const Realized& x) {
  Pres p = hom_lift(c, x.pres);
  if (L.trivial()) return p;
  // f(l.c) - l.f(c) as a map Hom(C, Xs) -> Hom(C (x) L, Xs)
  LinMap sw_cl = reorder(L.fld, {c, L.carrier}, {1, 0});
  LinMap t1 = hom_pre(lact_c * sw_cl, x.space());
  LinMap sw_xl = reorder(L.fld, {x.space(), L.carrier}, {1, 0});
  LinMap t2 = hom_conj_r(LinMap::identity(L.fld, tensor_space(c, L.carrier)),
                         x.map("lact") * sw_xl, c, x.space(), L.carrier);
  return p.extended(Step::sub(t1 - t2));
}

}  // namespace paracyc
