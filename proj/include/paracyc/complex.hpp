#pragma once

#include "paracyc/functor.hpp"
#include "paracyc/report.hpp"

namespace paracyc {

// A finite slab of a para-(co)cyclic module: spaces Z[0..N], the structure
// maps between consecutive degrees, and the twist in each degree.
//
// cochain (para-cocyclic):  d[n][k] : Z[n-1] -> Z[n]  for 0 <= k <= n,
//                           s[n][k] : Z[n+1] -> Z[n]  for 0 <= k <= n,
// chain   (para-cyclic):    d[n][k] : Z[n] -> Z[n-1],
//                           s[n][k] : Z[n] -> Z[n+1],
// and t[n] : Z[n] -> Z[n] in both cases.  d has one entry per degree
// 1..top, s one per degree 0..top-1, d[0] stays empty.
struct ParaComplex {
  std::string name;
  bool cochain = true;
  Field fld = QQ;
  std::vector<FinSpace> Z;
  std::vector<std::vector<LinMap>> d;
  std::vector<std::vector<LinMap>> s;
  std::vector<LinMap> t;
  int top() const { return static_cast<int>(Z.size()) - 1; }
};

// Degrees 0..n of the para-cocyclic module attached to a monad realization:
// Z[m] is the coinvariant space of the (m+1)-fold tower over the coefficient,
// cofaces insert units, codegeneracies multiply, the twist walks the
// distributive law across the tower and comes home through w.
ParaComplex build_cocyclic(const ARealization& a, int n, const std::string& name = "");

// Degrees 0..n of the para-cyclic module of a comonad realization, obtained
// by transposing the para-cocyclic module of the transposed realization.
ParaComplex build_cyclic(const BRealization& b, int n, const std::string& name = "");

// Entrywise transpose; swaps chain and cochain.
ParaComplex transpose_complex(const ParaComplex& c);

// Every (co)simplicial and para-(co)cyclic identity that fits inside the
// slab.  Deliberately never tests t^{n+1} = id: that is what "para" relaxes.
Report check_laws(const ParaComplex& c);

// Smallest e in 1..bound with t[n]^e = id, or 0 if there is none.
int t_order(const ParaComplex& c, int n, int bound);

}  // namespace paracyc
