#include "paracyc/complex.hpp"

namespace paracyc {

namespace {

// Space-level map T_r T_l^m v -> T_l^m T_r v assembled from the distributive
// law, one crossing at a time.
LinMap phi_pow(const ARealization& a, const ObjP& v, int m) {
  if (m == 0) return LinMap::identity(a.fld, a.Tr.F.ob(v)->space());
  ObjP tlv = a.Tl.F.ob(v);
  LinMap rest = phi_pow(a, tlv, m - 1);
  LinMap step = a.Phi(v);
  ObjP src = a.Tr.F.ob(tlv);
  ObjP tgt = a.Tl.F.ob(a.Tr.F.ob(v));
  for (int j = 0; j < m - 1; ++j) {
    step = a.Tl.F.mor(src, tgt, step);
    src = a.Tl.F.ob(src);
    tgt = a.Tl.F.ob(tgt);
  }
  return step * rest;
}

// g : src -> tgt pushed through T_l^k; returns the map and advances the
// objects so the caller knows where it landed.
LinMap lift(const ARealization& a, ObjP src, ObjP tgt, LinMap g, int k) {
  for (int j = 0; j < k; ++j) {
    g = a.Tl.F.mor(src, tgt, g);
    src = a.Tl.F.ob(src);
    tgt = a.Tl.F.ob(tgt);
  }
  return g;
}

}  // namespace

ParaComplex build_cocyclic(const ARealization& a, int n, const std::string& name) {
  ParaComplex c;
  c.name = name.empty() ? a.name : name;
  c.cochain = true;
  c.fld = a.fld;

  // X[j] = T_l^j cup for j = 0..n+1; Z[m] presents the coinvariants of X[m+1].
  std::vector<ObjP> x{a.cup};
  for (int j = 0; j < n + 1; ++j) x.push_back(a.Tl.F.ob(x.back()));
  std::vector<Pres> pz;
  for (int m = 0; m <= n; ++m) pz.push_back(a.Pi(x[m + 1]));
  for (int m = 0; m <= n; ++m) c.Z.push_back(pz[m].space());

  c.d.resize(n + 1);
  c.s.resize(n);
  c.t.resize(n + 1);

  ObjP trcup = a.Tr.F.ob(a.cup);
  for (int m = 0; m <= n; ++m) {
    // twist: rotate into the right tower, walk the distributive law across,
    // then come home along w under T_l^m.
    ObjP trxm = a.Tr.F.ob(x[m]);
    LinMap im = a.i_iso(x[m]);
    ObjP mid = trcup;
    for (int j = 0; j < m; ++j) mid = a.Tl.F.ob(mid);
    LinMap crossing = induce(a.Pi(trxm), a.Pi(mid), phi_pow(a, a.cup, m), "tower twist");
    LinMap home = induce(a.Pi(mid), pz[m], lift(a, trcup, x[1], a.w, m), "tower twist");
    c.t[m] = home * crossing * im;
  }
  for (int m = 1; m <= n; ++m) {
    for (int k = 0; k <= m - 1; ++k) {
      LinMap g = lift(a, x[m - k], x[m - k + 1], a.Tl.unit(x[m - k]), k);
      c.d[m].push_back(induce(pz[m - 1], pz[m], g, "coface"));
    }
    c.d[m].push_back(c.t[m] * c.d[m][0]);
  }
  for (int m = 0; m <= n - 1; ++m)
    for (int k = 0; k <= m; ++k) {
      LinMap g = lift(a, x[m - k + 2], x[m - k + 1], a.Tl.mult(x[m - k]), k);
      c.s[m].push_back(induce(pz[m + 1], pz[m], g, "codegeneracy"));
    }
  return c;
}

ParaComplex transpose_complex(const ParaComplex& c) {
  ParaComplex r;
  r.name = c.name;
  r.cochain = !c.cochain;
  r.fld = c.fld;
  r.Z = c.Z;
  r.d.resize(c.d.size());
  r.s.resize(c.s.size());
  for (size_t i = 0; i < c.d.size(); ++i)
    for (const LinMap& m : c.d[i]) r.d[i].push_back(m.transpose());
  for (size_t i = 0; i < c.s.size(); ++i)
    for (const LinMap& m : c.s[i]) r.s[i].push_back(m.transpose());
  for (const LinMap& m : c.t) r.t.push_back(m.transpose());
  return r;
}

ParaComplex build_cyclic(const BRealization& b, int n, const std::string& name) {
  ParaComplex c = transpose_complex(build_cocyclic(dualize(b), n));
  c.name = name.empty() ? b.name : name;
  return c;
}

Report check_laws(const ParaComplex& c) {
  Report r;
  int top = c.top();
  auto nm = [](const std::string& what, int n, int i, int j) {
    return what + " n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
           std::to_string(j) + ")";
  };
  const auto& d = c.d;
  const auto& s = c.s;
  const auto& t = c.t;
  if (c.cochain) {
    for (int n = 2; n <= top; ++n)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          check_eq(r, "cosimplicial dd", nm("d d", n, i, j), d[n][j] * d[n - 1][i],
                   d[n][i] * d[n - 1][j - 1]);
    for (int n = 0; n + 2 <= top; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          check_eq(r, "cosimplicial ss", nm("s s", n, i, j), s[n][j] * s[n + 1][i],
                   s[n][i] * s[n + 1][j + 1]);
    for (int n = 0; n + 1 <= top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          LinMap lhs = s[n][j] * d[n + 1][i];
          if (i < j)
            check_eq(r, "cosimplicial sd", nm("s d", n, i, j), lhs,
                     d[n][i] * s[n - 1][j - 1]);
          else if (i == j || i == j + 1)
            check_eq(r, "cosimplicial sd", nm("s d", n, i, j), lhs,
                     LinMap::identity(c.fld, c.Z[n]));
          else
            check_eq(r, "cosimplicial sd", nm("s d", n, i, j), lhs,
                     d[n][i - 1] * s[n - 1][j]);
        }
    for (int n = 1; n <= top; ++n)
      for (int k = 1; k <= n; ++k)
        check_eq(r, "cocyclic", nm("t d", n, k, k - 1), t[n] * d[n][k],
                 d[n][k - 1] * t[n - 1]);
    for (int n = 0; n + 1 <= top; ++n) {
      for (int k = 1; k <= n; ++k)
        check_eq(r, "cocyclic", nm("t s", n, k, k - 1), t[n] * s[n][k],
                 s[n][k - 1] * t[n + 1]);
      check_eq(r, "cocyclic", nm("t s", n, 0, n), t[n] * s[n][0],
               s[n][n] * t[n + 1] * t[n + 1]);
    }
  } else {
    for (int n = 2; n <= top; ++n)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          check_eq(r, "simplicial dd", nm("d d", n, i, j), d[n - 1][i] * d[n][j],
                   d[n - 1][j - 1] * d[n][i]);
    for (int n = 0; n + 2 <= top; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          check_eq(r, "simplicial ss", nm("s s", n, i, j), s[n + 1][i] * s[n][j],
                   s[n + 1][j + 1] * s[n][i]);
    for (int n = 0; n + 1 <= top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          LinMap lhs = d[n + 1][i] * s[n][j];
          if (i < j)
            check_eq(r, "simplicial ds", nm("d s", n, i, j), lhs,
                     s[n - 1][j - 1] * d[n][i]);
          else if (i == j || i == j + 1)
            check_eq(r, "simplicial ds", nm("d s", n, i, j), lhs,
                     LinMap::identity(c.fld, c.Z[n]));
          else
            check_eq(r, "simplicial ds", nm("d s", n, i, j), lhs,
                     s[n - 1][j] * d[n][i - 1]);
        }
    for (int n = 1; n <= top; ++n) {
      for (int k = 1; k <= n; ++k)
        check_eq(r, "cyclic", nm("d t", n, k, k - 1), d[n][k] * t[n],
                 t[n - 1] * d[n][k - 1]);
      check_eq(r, "cyclic", nm("d t", n, n, 0), d[n][n], d[n][0] * t[n]);
    }
    for (int n = 0; n + 1 <= top; ++n) {
      for (int k = 1; k <= n; ++k)
        check_eq(r, "cyclic", nm("s t", n, k, k - 1), s[n][k] * t[n],
                 t[n + 1] * s[n][k - 1]);
      check_eq(r, "cyclic", nm("s t", n, 0, n), s[n][0] * t[n],
               t[n + 1] * t[n + 1] * s[n][n]);
    }
  }
  return r;
}

int t_order(const ParaComplex& c, int n, int bound) {
  LinMap id = LinMap::identity(c.fld, c.Z[n]);
  LinMap p = c.t[n];
  for (int e = 1; e <= bound; ++e) {
    if (p == id) return e;
    p = p * c.t[n];
  }
  return 0;
}

}  // namespace paracyc
