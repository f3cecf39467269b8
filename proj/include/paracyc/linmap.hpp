#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paracyc/scalar.hpp"

namespace paracyc {

// A finite-dimensional space given by an ordered basis with distinct labels.
// Labels are cosmetic (witness printing, dumps); compatibility of maps is
// checked on dimensions.
struct FinSpace {
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(labels.size()); }

  static FinSpace named(const std::string& prefix, int n);
  static FinSpace of(std::vector<std::string> ls) { return FinSpace{std::move(ls)}; }
  static FinSpace line() { return FinSpace{{"1"}}; }  // the ground field
};

// Composite basis label conventions: tensor factors joined with "|", a hom
// coordinate "v@u" is the matrix unit u -> v. Hom(U,V) is ordered with the
// target index slow: (v,u) sits at v*dim U + u. Tensor U (x) V orders the left
// factor slow: (u,v) at u*dim V + v.
FinSpace tensor_space(const FinSpace& a, const FinSpace& b);
FinSpace tensor_space(const std::vector<FinSpace>& fs);
FinSpace hom_space(const FinSpace& u, const FinSpace& v);

// An exact linear map, dense in semantics (it *is* a cod.dim x dom.dim
// matrix) with sparse row storage. Rows hold (column, value) pairs sorted by
// column with no explicit zeros.
class LinMap {
 public:
  using Row = std::vector<std::pair<int, Scalar>>;

  LinMap() = default;
  LinMap(Field f, FinSpace dom, FinSpace cod);

  static LinMap identity(Field f, const FinSpace& s);
  static LinMap zero(Field f, const FinSpace& dom, const FinSpace& cod);
  // Entries as (row, col, value) triples; duplicates are summed.
  static LinMap from_entries(Field f, const FinSpace& dom, const FinSpace& cod,
                             const std::vector<std::tuple<int, int, Scalar>>& es);

  Field field() const { return fld_; }
  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }
  int rows() const { return cod_.dim(); }
  int cols() const { return dom_.dim(); }
  const Row& row(int i) const { return rows_[i]; }
  Scalar at(int i, int j) const;
  int nnz() const;
  bool is_zero() const;
  bool is_identity() const;

  void add_to(int i, int j, const Scalar& v);  // builder access, keeps rows sorted

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  LinMap operator*(const LinMap& o) const;  // composition: (*this) after o
  LinMap scale(const Scalar& c) const;
  LinMap transpose() const;
  bool operator==(const LinMap& o) const;

  // Apply to a coordinate vector (dense).
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  // Retag dom/cod labels without touching entries (dims must match).
  LinMap with_spaces(FinSpace dom, FinSpace cod) const;

 private:
  void check_same_shape(const LinMap& o) const;

  Field fld_{0};
  FinSpace dom_, cod_;
  std::vector<Row> rows_;
};

// Kronecker product, left factor slowest on both sides.
LinMap kron(const LinMap& a, const LinMap& b);
LinMap kron(const std::vector<LinMap>& ms);

// The permutation map  (x)_j factors[j]  ->  (x)_j factors[perm[j]]  sending a
// pure tensor to the same tensor with coordinates read off in the new order.
LinMap reorder(Field f, const std::vector<FinSpace>& factors, const std::vector<int>& perm);

// Side-by-side block matrix [m0 | m1 | ...]: all blocks share the codomain,
// domains concatenate.
LinMap hstack(const std::vector<LinMap>& ms);

// --- Canonical elimination (unique RREF) -----------------------------------

// rank of the matrix
int rank(const LinMap& f);

// Kernel of f as a canonical inclusion ker f -> dom f. Basis vectors are
// indexed by the free (non-pivot) columns of the RREF of f, each basis vector
// has a 1 at its free column; labels reuse the free columns' labels.
LinMap kernel(const LinMap& f);
// Same, plus the retraction r (reads off free coordinates, r * incl = id).
std::pair<LinMap, LinMap> kernel_pair(const LinMap& f);

// Cokernel of f: canonical projection p : cod f -> coker f together with the
// coordinate section s (p * s = id). Coker coordinates are the non-pivot rows
// of the column space of f (pivots of RREF of f^T), labels reused.
std::pair<LinMap, LinMap> cokernel_pair(const LinMap& f);

// Two-sided inverse; throws SingularMap if not bijective.
LinMap inverse(const LinMap& f);

// Solve f * x = rhs for one x (used for witness extraction); throws
// SingularMap when inconsistent.
std::vector<Scalar> solve(const LinMap& f, const std::vector<Scalar>& rhs);

// --- Hom coordinate games ---------------------------------------------------

// Hom(U,V) -> Hom(U',V): f |-> f * g for g : U' -> U.
LinMap hom_pre(const LinMap& g, const FinSpace& v);
// Hom(U,V) -> Hom(U,V'): f |-> h * f for h : V -> V'.
LinMap hom_post(const LinMap& h, const FinSpace& u);
// Hom(C, Hom(D,Q)) -> Hom(C (x) D, Q): h |-> (c (x) d |-> h(c)(d)).
LinMap hom_flatten_r(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q);
// Hom(C, Hom(D,Q)) -> Hom(D (x) C, Q): h |-> (d (x) c |-> h(c)(d)).
LinMap hom_flatten_l(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q);
// The flattenings are coordinate permutations; their inverses.
LinMap hom_unflatten_r(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q);
LinMap hom_unflatten_l(Field f, const FinSpace& c, const FinSpace& d, const FinSpace& q);
// Hom(U, Hom(W,V)) -> Hom(W, Hom(U,V)): h |-> (w |-> (u |-> h(u)(w))).
LinMap hom_arg_switch(Field f, const FinSpace& u, const FinSpace& w, const FinSpace& v);
// Hom(U,V) -> Hom(U',V'): f |-> Q * (f (x) id_W) * P  for P : U' -> U (x) W
// (W on the right) and Q : V (x) W -> V'.
LinMap hom_conj_r(const LinMap& P, const LinMap& Q, const FinSpace& u, const FinSpace& v,
                  const FinSpace& w);
// Same with W on the left: P : U' -> W (x) U, Q : W (x) V -> V'.
LinMap hom_conj_l(const LinMap& P, const LinMap& Q, const FinSpace& u, const FinSpace& v,
                  const FinSpace& w);
// Curry an action act : X (x) U -> Y into X -> Hom(U,Y).
LinMap curry_right(const LinMap& act, const FinSpace& x, const FinSpace& u, const FinSpace& y);
// Curry act : U (x) X -> Y into X -> Hom(U,Y).
LinMap curry_left(const LinMap& act, const FinSpace& u, const FinSpace& x, const FinSpace& y);

}  // namespace paracyc
